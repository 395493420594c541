//! Text form of field elements.
//!
//! Grammar (whitespace ignored everywhere, `z` denotes `zeta_m`):
//!
//! ```text
//! expr := term (('+'|'-') term)*
//! term := rat ('*' 'z' ('^' uint)?)? | 'z' ('^' uint)?
//! rat  := int ('/' uint)?
//! int  := '-'? digits          uint := digits
//! ```
//!
//! Serialization always emits a string this parser maps back to the same
//! element: terms in increasing powers of `z`, unit coefficients elided on
//! `z`-terms where the grammar allows it.

use num::{bigint::Sign, BigInt, BigRational, One, Signed, Zero};

use super::{CycloElem, FieldError};

const EXPONENT_LIMIT: u64 = 1_000_000;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn error(&self, message: impl Into<String>) -> FieldError {
        FieldError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt, FieldError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn uint_u64(&mut self) -> Result<u64, FieldError> {
        let start = self.pos;
        let n = self.digits()?;
        u64::try_from(&n).map_err(|_| FieldError::Parse {
            position: start,
            message: "integer out of range".into(),
        })
    }

    fn rat(&mut self) -> Result<BigRational, FieldError> {
        let negative = if self.peek() == Some(b'-') {
            self.bump();
            true
        } else {
            false
        };
        let mut numer = self.digits()?;
        if negative {
            numer = -numer;
        }
        if self.peek() == Some(b'/') {
            self.bump();
            let denom_pos = self.pos;
            let denom = self.digits()?;
            if denom.is_zero() {
                return Err(FieldError::Parse {
                    position: denom_pos,
                    message: "zero denominator".into(),
                });
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }

    /// Parses an optional `'^' uint` exponent after a `z`; bare `z` is
    /// exponent 1.
    fn exponent(&mut self) -> Result<u64, FieldError> {
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.uint_u64()?;
            if e > EXPONENT_LIMIT {
                return Err(FieldError::OrderError {
                    exponent: e,
                    limit: EXPONENT_LIMIT,
                });
            }
            Ok(e)
        } else {
            Ok(1)
        }
    }

    /// One term: rational coefficient times optional power of `z`, or a bare
    /// power of `z`.
    fn term(&mut self, order: u32) -> Result<CycloElem, FieldError> {
        match self.peek() {
            Some(b'z') => {
                self.bump();
                let e = self.exponent()?;
                Ok(CycloElem::from_power(order, e, BigRational::one()))
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                let coeff = self.rat()?;
                if self.peek() == Some(b'*') {
                    self.bump();
                    if self.peek() != Some(b'z') {
                        return Err(self.error("expected 'z' after '*'"));
                    }
                    self.bump();
                    let e = self.exponent()?;
                    Ok(CycloElem::from_power(order, e, coeff))
                } else {
                    Ok(CycloElem::from_rational(order, coeff))
                }
            }
            Some(_) => Err(self.error("expected a term")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses a field element of `Q(zeta_order)` from the coefficient grammar.
pub fn parse_cyclo(input: &str, order: u32) -> Result<CycloElem, FieldError> {
    if order == 0 {
        return Err(FieldError::InvalidOrder);
    }
    let mut cur = Cursor::new(input);
    let mut acc = cur.term(order)?;
    loop {
        match cur.peek() {
            Some(b'+') => {
                cur.bump();
                let t = cur.term(order)?;
                acc = &acc + &t;
            }
            Some(b'-') => {
                cur.bump();
                let t = cur.term(order)?;
                acc = &acc - &t;
            }
            Some(_) => return Err(cur.error("expected '+', '-' or end of input")),
            None => return Ok(acc),
        }
    }
}

/// Canonical text for a rational: `p` or `p/q` with `q > 1`.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text for a field element; round-trips through [`parse_cyclo`].
pub fn cyclo_to_string(e: &CycloElem) -> String {
    let mut out = String::new();
    for (k, c) in e.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let z_power = match k {
            0 => None,
            1 => Some("z".to_string()),
            _ => Some(format!("z^{k}")),
        };
        if out.is_empty() {
            // Leading term carries its own sign. A bare `z`-power cannot
            // take a sign in the grammar, so `-z^k` is written `-1*z^k`.
            match z_power {
                None => out.push_str(&rational_to_string(c)),
                Some(zp) => {
                    if c.is_one() {
                        out.push_str(&zp);
                    } else {
                        out.push_str(&rational_to_string(c));
                        out.push('*');
                        out.push_str(&zp);
                    }
                }
            }
        } else {
            out.push_str(if c.numer().sign() == Sign::Minus {
                " - "
            } else {
                " + "
            });
            let a = c.abs();
            match z_power {
                None => unreachable!("constant term is always first"),
                Some(zp) => {
                    if a.is_one() {
                        out.push_str(&zp);
                    } else {
                        out.push_str(&rational_to_string(&a));
                        out.push('*');
                        out.push_str(&zp);
                    }
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl std::fmt::Display for CycloElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&cyclo_to_string(self))
    }
}
