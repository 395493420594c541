//! Elements of the cyclotomic field `Q(zeta_m)` on the power basis
//! `1, z, ..., z^(phi(m)-1)` where `z = zeta_m`, with arbitrary-precision
//! rational coordinates. All arithmetic is exact.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigRational, One, Zero};

use super::poly::{self, cyclotomic_poly_q, euler_phi, QPoly};
use super::FieldError;

/// An element of `Q(zeta_m)`, reduced modulo the `m`-th cyclotomic
/// polynomial. Equality, hashing and ordering are coefficientwise on the
/// reduced representation, so they are well-defined on field elements (the
/// ordering is a canonical sort order, not compatible with arithmetic).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycloElem {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CycloElem {
    /// Dimension of `Q(zeta_m)` over `Q`.
    pub fn degree(order: u32) -> usize {
        euler_phi(order) as usize
    }

    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be at least 1");
        CycloElem {
            order,
            coeffs: vec![BigRational::zero(); Self::degree(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u32, r: BigRational) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[0] = r;
        e.reduce_in_place(vec![]);
        e
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(n.into()))
    }

    /// The primitive root `z = zeta_m` itself (equals `1` when `m = 1` and
    /// `-1` when `m = 2`, where the power basis has length one).
    pub fn root_of_unity(order: u32) -> Self {
        Self::from_power(order, 1, BigRational::one())
    }

    /// `c * z^e`, with the exponent folded modulo `m` before reduction.
    pub fn from_power(order: u32, exponent: u64, c: BigRational) -> Self {
        assert!(order >= 1, "cyclotomic order must be at least 1");
        let e = (exponent % order as u64) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = c;
        let mut out = CycloElem {
            order,
            coeffs: Vec::new(),
        };
        out.reduce_in_place(raw);
        out
    }

    fn reduce_in_place(&mut self, mut raw: QPoly) {
        let deg = Self::degree(self.order);
        if !self.coeffs.is_empty() {
            // fold existing representation into raw
            let mut cur = std::mem::take(&mut self.coeffs);
            if cur.len() < raw.len() {
                std::mem::swap(&mut cur, &mut raw);
            }
            for (i, c) in raw.into_iter().enumerate() {
                cur[i] += c;
            }
            raw = cur;
        }
        let modulus = cyclotomic_poly_q(self.order);
        let mut reduced = poly::rem(raw, &modulus);
        reduced.resize(deg, BigRational::zero());
        self.coeffs = reduced;
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coordinates on the power basis, length `phi(m)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_order(&self, other: &CycloElem) {
        assert_eq!(
            self.order, other.order,
            "mixed cyclotomic orders {} and {} in field arithmetic",
            self.order, other.order
        );
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the (irreducible) cyclotomic modulus.
    pub fn inv(&self) -> Result<CycloElem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let modulus = cyclotomic_poly_q(self.order);
        let (g, u) = poly::half_ext_gcd(&self.coeffs, &modulus);
        // gcd of a nonzero residue with an irreducible modulus is a nonzero
        // constant; divide it out of the Bezout coefficient.
        debug_assert_eq!(poly::degree(&g), Some(0));
        let scale = g[0].clone();
        let mut coeffs: QPoly = u.into_iter().map(|c| c / &scale).collect();
        coeffs.resize(Self::degree(self.order), BigRational::zero());
        let out = CycloElem {
            order: self.order,
            coeffs,
        };
        debug_assert!((&out * self).is_one());
        Ok(out)
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<CycloElem, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = CycloElem::one(self.order);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem(m={}, {})", self.order, self)
    }
}

impl Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        self.assert_same_order(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycloElem {
            order: self.order,
            coeffs,
        }
    }
}

impl Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        self.assert_same_order(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycloElem {
            order: self.order,
            coeffs,
        }
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        self.assert_same_order(rhs);
        let raw = poly::mul(&self.coeffs, &rhs.coeffs);
        let modulus = cyclotomic_poly_q(self.order);
        let mut coeffs = poly::rem(raw, &modulus);
        coeffs.resize(CycloElem::degree(self.order), BigRational::zero());
        CycloElem {
            order: self.order,
            coeffs,
        }
    }
}

impl Div for &CycloElem {
    type Output = CycloElem;
    /// Panics on a zero divisor; use [`CycloElem::inv`] or
    /// [`super::field_arith`] for a checked division.
    // In a field, division is multiplication by the inverse.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &CycloElem) -> CycloElem {
        self * &rhs.inv().expect("division by zero field element")
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for CycloElem {
            type Output = CycloElem;
            fn $method(self, rhs: CycloElem) -> CycloElem {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}
