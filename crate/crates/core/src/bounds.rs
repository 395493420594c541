//! Arbitrary-precision evaluation of the map-counting bounds: automorphism
//! bounds for hyperbolic curves, target counts for compact and punctured
//! curves, their combinations over the components of a census, and the
//! point-projection bounds.  All arithmetic is exact; the Riemann zeta
//! factors are replaced by rigorous rational upper bounds.

use num::bigint::ToBigInt;
use num::{BigInt, BigUint, One, Signed, Zero};
use thiserror::Error;

use crate::arrangement::{Arrangement, Lattice};
use crate::exactfield::Rational;
use crate::fibration::Census;

/// Exact nonnegative count; never a float.
pub type BigCount = BigUint;

/// Number of zeta series terms used by default inside [`t_bounds`].
pub const DEFAULT_ZETA_TERMS: u32 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("(g, r) = ({genus}, {punctures}) is not hyperbolic")]
    NonHyperbolic { genus: u32, punctures: u32 },
    #[error("genus {genus} is below two")]
    GenusTooSmall { genus: u32 },
    #[error("no hyperbolic pair satisfies 2g + r - 1 = {h}")]
    NoHyperbolicPair { h: u32 },
    #[error("missing invariant: {field}")]
    MissingInvariant { field: &'static str },
    #[error("invalid invariant: {field}")]
    InvalidInvariant { field: &'static str },
    #[error("the lattice has no point of multiplicity three or more")]
    NoMultiplePoint,
}

/// Numerical invariants of a surface (or quasi-projective complement) that
/// feed the theorem-level bounds.  Only the fields a given formula consumes
/// need to be present.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SurfaceInvariants {
    /// Number of positive-dimensional components, `n(X)`.
    pub n_components: Option<usize>,
    /// Dimensions of those components, each at least two.
    pub dims: Option<Vec<usize>>,
    /// Euler characteristic of the complement, nonnegative here.
    pub euler: Option<i64>,
    /// First Betti number.
    pub h1: Option<u32>,
    /// Ambient dimension.
    pub ambient_dim: Option<u32>,
    /// Index `s >= 1`.
    pub index_s: Option<Rational>,
    /// Top self-intersection of the canonical class.
    pub k_top: Option<i64>,
}

/// Which theorem-level bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremFormula {
    T1,
    T2,
    T3,
    T5,
    C1,
    T4Simple,
}

/// A computed bound with the inputs it consumed, for reproducible reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub formula_id: String,
    pub inputs: Vec<(String, String)>,
    pub value: BigCount,
    /// Rounding events and other caveats.
    pub notes: Vec<String>,
}

/// The two point-projection bounds on map counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixBounds {
    /// Minimum of `25 * n_{d-1}(S) * d * (n - d + 1)` over the multiple
    /// points, `d` their multiplicity.
    pub point_bound: BigCount,
    /// Lattice index of a point attaining the minimum.
    pub best_point: usize,
    /// `floor(25/4 * n(S) * (n + 1)^2)`.
    pub global_bound: BigCount,
}

fn upow(base: u64, exp: u32) -> BigCount {
    num::pow::pow(BigUint::from(base), exp as usize)
}

/// Ceiling of a nonnegative rational, as a count.
fn ceil_count(x: &Rational) -> BigCount {
    assert!(!x.is_negative(), "counts are nonnegative");
    x.ceil()
        .to_integer()
        .to_biguint()
        .expect("ceiling of a nonnegative rational is nonnegative")
}

fn is_hyperbolic(g: u32, r: u32) -> bool {
    2 - 2 * g as i64 - r as i64 <= -1
}

/// Upper bound for the automorphism count of a genus-`g` curve with `k`
/// punctures: `5k` for rational curves, `6(2g + k - 2)` for punctured
/// curves of positive genus, `84(g - 1)` for compact curves.
pub fn aut_curve_bound(g: u32, k: u32) -> Result<BigCount, BoundError> {
    if !is_hyperbolic(g, k) {
        return Err(BoundError::NonHyperbolic {
            genus: g,
            punctures: k,
        });
    }
    let value = if g == 0 {
        5 * k as u64
    } else if k == 0 {
        84 * (g as u64 - 1)
    } else {
        6 * (2 * g as u64 + k as u64 - 2)
    };
    Ok(BigCount::from(value))
}

/// Target count for dominant maps of a compact genus-`g` curve onto
/// hyperbolic curves: `(g - 1) * 2^(2g^2 - 2) * (2^(2g^2 - 1) - 1)`.
pub fn tc_bound(g: u32) -> Result<BigCount, BoundError> {
    if g < 2 {
        return Err(BoundError::GenusTooSmall { genus: g });
    }
    let gg = 2 * g * g;
    let value = BigUint::from(g as u64 - 1) * upow(2, gg - 2) * (upow(2, gg - 1) - BigUint::one());
    Ok(value)
}

/// Rigorous rational upper bound on the Riemann zeta value at integer
/// `s >= 2`: the partial sum through `terms` plus the integral tail
/// majorant `N^(1-s) / (s-1)`.  Strictly decreases toward the true value as
/// `terms` grows.
pub fn zeta_upper(s: u32, terms: u32) -> Rational {
    assert!(s >= 2, "the series requires s >= 2");
    assert!(terms >= 1, "at least one term is required");
    let mut sum = Rational::zero();
    for n in 1..=terms as u64 {
        sum += Rational::new(BigInt::one(), num::pow::pow(BigInt::from(n), s as usize));
    }
    let tail = Rational::new(
        BigInt::one(),
        num::pow::pow(BigInt::from(terms), s as usize - 1) * BigInt::from(s - 1),
    );
    sum + tail
}

/// Rational upper bound on `ln c` for rational `c >= 1`, via the series
/// `-ln(1 - y) = sum_j y^j / j` at `y = (c - 1) / c` truncated after 64
/// terms, plus the geometric tail majorant `y^65 / (65 (1 - y))`.
fn log_upper_unit(c: &Rational) -> Rational {
    assert!(*c >= Rational::one());
    let y = (c - Rational::one()) / c;
    if y.is_zero() {
        return Rational::zero();
    }
    const TERMS: usize = 64;
    let mut sum = Rational::zero();
    let mut power = Rational::one();
    for j in 1..=TERMS {
        power *= &y;
        sum += &power / Rational::from(BigInt::from(j));
    }
    let tail =
        &power * &y / (Rational::from(BigInt::from(TERMS as u64 + 1)) * (Rational::one() - &y));
    sum + tail
}

/// Rational upper bound on `ln r` for an integer `r >= 1`, exact at
/// `r = 1`: split off the largest power of two, so the series argument
/// always stays in `[1, 2]`.
pub fn ln_upper(r: u32) -> Rational {
    assert!(r >= 1, "the logarithm needs a positive argument");
    let a = 31 - r.leading_zeros();
    let ln2 = log_upper_unit(&Rational::from(BigInt::from(2)));
    let c = Rational::new(BigInt::from(r), BigInt::from(1u64 << a));
    Rational::from(BigInt::from(a)) * ln2 + log_upper_unit(&c)
}

/// The three parts `(T_c, T_1, T_0)` of the punctured-curve target count
/// for a hyperbolic `(g, r)`:
///
/// * `T_c` as in [`tc_bound`], clamped to zero for `g <= 1`;
/// * `T_1 = ceil(r * 2^(3g^2-1) * (2g+r)^(2g^2-2) * zeta(2g^2-2) * zeta(2g^2-3))`
///   for `g > 1` (zeta factors replaced by [`zeta_upper`] with
///   [`DEFAULT_ZETA_TERMS`]), `ceil(r^2 * ln r)` for `g = 1` via
///   [`ln_upper`], `0` for `g = 0`;
/// * `T_0 = [3(2g + r - 1)]^(2g + r)`.
pub fn t_components(g: u32, r: u32) -> Result<(BigCount, BigCount, BigCount), BoundError> {
    if !is_hyperbolic(g, r) {
        return Err(BoundError::NonHyperbolic {
            genus: g,
            punctures: r,
        });
    }
    let tc = if g >= 2 {
        tc_bound(g).expect("g >= 2")
    } else {
        BigCount::zero()
    };
    let t1 = match g {
        0 => BigCount::zero(),
        1 => {
            let bound = Rational::from(BigInt::from(r as u64 * r as u64)) * ln_upper(r);
            ceil_count(&bound)
        }
        _ => {
            if r == 0 {
                BigCount::zero()
            } else {
                let gg = 2 * g * g;
                let product = BigUint::from(r as u64)
                    * upow(2, 3 * g * g - 1)
                    * upow(2 * g as u64 + r as u64, gg - 2);
                let zz =
                    zeta_upper(gg - 2, DEFAULT_ZETA_TERMS) * zeta_upper(gg - 3, DEFAULT_ZETA_TERMS);
                let bound = Rational::from(product.to_bigint().expect("nonnegative")) * zz;
                ceil_count(&bound)
            }
        }
    };
    let t0 = upow(3 * (2 * g as u64 + r as u64 - 1), 2 * g + r);
    Ok((tc, t1, t0))
}

/// Target count `T(g, r) = T_c + T_1 + T_0` for dominant maps of a
/// genus-`g` curve with `r` punctures onto hyperbolic curves.
pub fn t_bounds(g: u32, r: u32) -> Result<BigCount, BoundError> {
    let (tc, t1, t0) = t_components(g, r)?;
    Ok(tc + t1 + t0)
}

/// `T'(h)`: maximum of `T(g, r)` over the hyperbolic pairs with
/// `2g + r - 1 = h`.
pub fn tprime(h: u32) -> Result<BigCount, BoundError> {
    let mut best: Option<BigCount> = None;
    for g in 0..=h.div_ceil(2) {
        let r = h + 1 - 2 * g;
        if !is_hyperbolic(g, r) {
            continue;
        }
        let value = t_bounds(g, r)?;
        best = Some(match best {
            Some(b) if b >= value => b,
            _ => value,
        });
    }
    best.ok_or(BoundError::NoHyperbolicPair { h })
}

/// Compact-curve target count read as a function of `h = 2g`:
/// `T_c(h / 2)`, with non-even or small arguments rounded up to the next
/// even integer that is at least four.  Returns the value and whether
/// rounding occurred.
pub fn tcap(h: &Rational) -> (BigCount, bool) {
    let ceil = h.ceil().to_integer();
    let mut n = if ceil < BigInt::from(4) {
        BigInt::from(4)
    } else {
        ceil
    };
    let odd = (&n % BigInt::from(2)) == BigInt::one();
    if odd {
        n += 1;
    }
    let rounded = Rational::from(n.clone()) != *h;
    let g = u32::try_from(&n / BigInt::from(2)).expect("argument within range");
    (tc_bound(g).expect("g >= 2 after rounding"), rounded)
}

/// Convenience form of [`tcap`] for integer arguments.
pub fn tcap_int(h: u32) -> (BigCount, bool) {
    tcap(&Rational::from(BigInt::from(h)))
}

fn require<T: Clone>(field: Option<&T>, name: &'static str) -> Result<T, BoundError> {
    field
        .cloned()
        .ok_or(BoundError::MissingInvariant { field: name })
}

fn dims_of(inv: &SurfaceInvariants) -> Result<Vec<usize>, BoundError> {
    let dims = require(inv.dims.as_ref(), "dims")?;
    if dims.iter().any(|&a| a < 2) {
        return Err(BoundError::InvalidInvariant { field: "dims" });
    }
    if let Some(n) = inv.n_components {
        if n != dims.len() {
            return Err(BoundError::InvalidInvariant {
                field: "n_components",
            });
        }
    }
    Ok(dims)
}

fn euler_of(inv: &SurfaceInvariants) -> Result<u64, BoundError> {
    let e = require(inv.euler.as_ref(), "euler")?;
    u64::try_from(e).map_err(|_| BoundError::InvalidInvariant { field: "euler" })
}

/// Evaluates one of the theorem-level bounds from surface invariants.
///
/// * `T1`: sum over components of `tcap(a_i) * tcap(ceil(e / (a_i - 1)) + 2)`;
/// * `T2`: `n * tcap(h_1) * tcap(5 s^n K^n + 38)`;
/// * `T3`: sum of `T'(a_i)`;
/// * `T5`: `n * T'(e + 1)`;
/// * `C1`: sum over components and over the pairs `2g + r - 1 = a_i` of
///   `T_0(g, r)`;
/// * `T4Simple`: minimum over the occurring dimensions `i` of
///   `252 * n_i * e`, where `n_i` counts components of dimension `i`.
pub fn theorem_bounds(
    inv: &SurfaceInvariants,
    which: TheoremFormula,
) -> Result<BoundReport, BoundError> {
    let mut inputs = Vec::new();
    let mut notes = Vec::new();
    let value = match which {
        TheoremFormula::T1 => {
            let dims = dims_of(inv)?;
            let e = euler_of(inv)?;
            inputs.push(("dims".into(), format!("{dims:?}")));
            inputs.push(("euler".into(), e.to_string()));
            let mut total = BigCount::zero();
            for &a in &dims {
                let (first, r1) = tcap_int(a as u32);
                let quotient = (e + a as u64 - 2) / (a as u64 - 1); // ceil(e / (a - 1))
                if quotient * (a as u64 - 1) != e {
                    notes.push(format!(
                        "euler division for dimension {a} rounded up to {quotient}"
                    ));
                }
                let (second, r2) = tcap_int(quotient as u32 + 2);
                if r1 || r2 {
                    notes.push(format!(
                        "compact target count argument rounded up to even for dimension {a}"
                    ));
                }
                total += first * second;
            }
            total
        }
        TheoremFormula::T2 => {
            let n = require(inv.n_components.as_ref(), "n_components")?;
            let h1 = require(inv.h1.as_ref(), "h1")?;
            let s = require(inv.index_s.as_ref(), "index_s")?;
            let dim = require(inv.ambient_dim.as_ref(), "ambient_dim")?;
            let k_top = require(inv.k_top.as_ref(), "k_top")?;
            if s < Rational::one() {
                return Err(BoundError::InvalidInvariant { field: "index_s" });
            }
            inputs.push(("n_components".into(), n.to_string()));
            inputs.push(("h1".into(), h1.to_string()));
            inputs.push(("index_s".into(), s.to_string()));
            inputs.push(("ambient_dim".into(), dim.to_string()));
            inputs.push(("k_top".into(), k_top.to_string()));
            let (first, r1) = tcap_int(h1);
            let mut s_pow = Rational::one();
            for _ in 0..dim {
                s_pow *= &s;
            }
            let arg = Rational::from(BigInt::from(5)) * s_pow * Rational::from(BigInt::from(k_top))
                + Rational::from(BigInt::from(38));
            if arg.is_negative() {
                return Err(BoundError::InvalidInvariant { field: "k_top" });
            }
            let (second, r2) = tcap(&arg);
            if r1 || r2 {
                notes.push("compact target count argument rounded up to even".into());
            }
            BigCount::from(n as u64) * first * second
        }
        TheoremFormula::T3 => {
            let dims = dims_of(inv)?;
            inputs.push(("dims".into(), format!("{dims:?}")));
            let mut total = BigCount::zero();
            for &a in &dims {
                total += tprime(a as u32)?;
            }
            total
        }
        TheoremFormula::T5 => {
            let n = require(inv.n_components.as_ref(), "n_components")?;
            let e = euler_of(inv)?;
            inputs.push(("n_components".into(), n.to_string()));
            inputs.push(("euler".into(), e.to_string()));
            BigCount::from(n as u64) * tprime(e as u32 + 1)?
        }
        TheoremFormula::C1 => {
            let dims = dims_of(inv)?;
            inputs.push(("dims".into(), format!("{dims:?}")));
            let mut total = BigCount::zero();
            for &a in &dims {
                for g in 0..=(a as u32).div_ceil(2) {
                    let r = a as u32 + 1 - 2 * g;
                    if is_hyperbolic(g, r) {
                        let (_, _, t0) = t_components(g, r)?;
                        total += t0;
                    }
                }
            }
            total
        }
        TheoremFormula::T4Simple => {
            let dims = dims_of(inv)?;
            let e = euler_of(inv)?;
            inputs.push(("dims".into(), format!("{dims:?}")));
            inputs.push(("euler".into(), e.to_string()));
            let mut best: Option<BigCount> = None;
            for dim in dims.iter().collect::<std::collections::BTreeSet<_>>() {
                let count = dims.iter().filter(|&&a| a == *dim).count() as u64;
                let candidate = BigCount::from(252u64) * BigCount::from(count) * BigCount::from(e);
                best = Some(match best {
                    Some(b) if b <= candidate => b,
                    _ => candidate,
                });
            }
            best.ok_or(BoundError::MissingInvariant { field: "dims" })?
        }
    };
    Ok(BoundReport {
        formula_id: formula_name(which).to_string(),
        inputs,
        value,
        notes,
    })
}

fn formula_name(which: TheoremFormula) -> &'static str {
    match which {
        TheoremFormula::T1 => "thm1",
        TheoremFormula::T2 => "thm2",
        TheoremFormula::T3 => "thm3",
        TheoremFormula::T5 => "thm5",
        TheoremFormula::C1 => "cor1",
        TheoremFormula::T4Simple => "thm4simple",
    }
}

/// The point-projection map bounds: for each lattice point of multiplicity
/// `d >= 3` the quantity `25 * n_{d-1}(S) * d * (n - d + 1)` (minimized over
/// points), and the global `floor(25/4 * n(S) * (n + 1)^2)`.
pub fn appendix_point_bound(
    arr: &Arrangement,
    lat: &Lattice,
    census: &Census,
) -> Result<AppendixBounds, BoundError> {
    let n = arr.n_lines() as u64;
    let by_dim = census.by_dimension();
    let mut best: Option<(BigCount, usize)> = None;
    for (pi, p) in lat.points().iter().enumerate() {
        let d = p.multiplicity() as u64;
        if d < 3 {
            continue;
        }
        let n_dim = by_dim.get(&(d as usize - 1)).copied().unwrap_or(0) as u64;
        let value = BigCount::from(25u64)
            * BigCount::from(n_dim)
            * BigCount::from(d)
            * BigCount::from(n - d + 1);
        best = Some(match best {
            Some((b, bp)) if b <= value => (b, bp),
            _ => (value, pi),
        });
    }
    let Some((point_bound, best_point)) = best else {
        return Err(BoundError::NoMultiplePoint);
    };
    let total = census.total() as u64;
    let global_bound = BigCount::from(25 * total * (n + 1) * (n + 1)) / BigCount::from(4u64);
    Ok(AppendixBounds {
        point_bound,
        best_point,
        global_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{
        builtin_arrangement, compute_lattice, euler_complement, line_from_strs,
    };
    use crate::fibration::{all_nets, census};
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn aut_curve_bound_cases() {
        assert_eq!(aut_curve_bound(0, 5).unwrap(), BigUint::from(25u32));
        assert_eq!(aut_curve_bound(0, 3).unwrap(), BigUint::from(15u32));
        assert_eq!(aut_curve_bound(1, 9).unwrap(), BigUint::from(54u32));
        assert_eq!(aut_curve_bound(2, 0).unwrap(), BigUint::from(84u32));
        assert_eq!(aut_curve_bound(1, 1).unwrap(), BigUint::from(6u32));
        assert_eq!(
            aut_curve_bound(0, 2),
            Err(BoundError::NonHyperbolic {
                genus: 0,
                punctures: 2
            })
        );
        assert_eq!(
            aut_curve_bound(1, 0),
            Err(BoundError::NonHyperbolic {
                genus: 1,
                punctures: 0
            })
        );
    }

    #[test]
    fn compact_target_counts() {
        assert_eq!(tc_bound(2).unwrap(), BigUint::from(8128u64));
        assert_eq!(
            tc_bound(3).unwrap(),
            BigUint::from(2u64) * upow(2, 16) * (upow(2, 17) - BigUint::one())
        );
        assert_eq!(tc_bound(3).unwrap(), BigUint::from(17179738112u64));
        assert_eq!(tc_bound(1), Err(BoundError::GenusTooSmall { genus: 1 }));
    }

    #[test]
    fn zeta_upper_examples() {
        assert_eq!(zeta_upper(2, 1), rat(2, 1));
        let z6 = zeta_upper(6, 16);
        // zeta(6) = pi^6 / 945 = 1.0173430619...
        assert!(z6 > rat(1_017_343, 1_000_000));
        assert!(z6 < rat(1_027_343, 1_000_000));
        assert!(zeta_upper(6, 32) < zeta_upper(6, 16));
    }

    #[test]
    fn log_upper_examples() {
        assert_eq!(ln_upper(1), Rational::zero());
        let l2 = ln_upper(2);
        assert!(l2 > rat(693_147, 1_000_000));
        assert!(l2 < rat(6_932, 10_000));
        let l3 = ln_upper(3);
        assert!(l3 > rat(1_098_612, 1_000_000));
        assert!(l3 < rat(1_099, 1_000));
    }

    #[test]
    fn punctured_target_counts() {
        assert_eq!(t_bounds(0, 3).unwrap(), BigUint::from(216u64));
        let (tc, t1, t0) = t_components(1, 1).unwrap();
        assert_eq!(tc, BigUint::zero());
        assert_eq!(t1, BigUint::zero());
        assert_eq!(t0, BigUint::from(216u64));
        let (tc, t1, t0) = t_components(2, 1).unwrap();
        assert_eq!(tc, BigUint::from(8128u64));
        assert!(t1 > BigUint::zero());
        assert_eq!(t0, upow(12, 5));
        // independent recomputation of the T_1 ceiling
        let zz = zeta_upper(6, DEFAULT_ZETA_TERMS) * zeta_upper(5, DEFAULT_ZETA_TERMS);
        let raw = Rational::from(BigInt::from(2048u64 * 15625)) * zz;
        assert_eq!(t1, ceil_count(&raw));
        assert_eq!(
            t_bounds(0, 2),
            Err(BoundError::NonHyperbolic {
                genus: 0,
                punctures: 2
            })
        );
    }

    #[test]
    fn maximal_target_counts() {
        assert_eq!(tprime(2).unwrap(), BigUint::from(216u64));
        assert_eq!(tprime(3).unwrap(), BigUint::from(14689u64));
        assert_eq!(tprime(1), Err(BoundError::NoHyperbolicPair { h: 1 }));
        // h = 3 cases by hand: (0,4) gives 9^4, (1,2) gives 3 + 9^4,
        // (2,0) gives 8128 + 9^4 = 14689
        assert_eq!(t_bounds(0, 4).unwrap(), BigUint::from(6561u64));
        assert_eq!(t_bounds(1, 2).unwrap(), BigUint::from(6564u64));
        assert_eq!(t_bounds(2, 0).unwrap(), BigUint::from(14689u64));
    }

    #[test]
    fn capped_compact_counts() {
        let (v, rounded) = tcap_int(4);
        assert_eq!(v, BigUint::from(8128u64));
        assert!(!rounded);
        let (v, rounded) = tcap_int(5);
        assert_eq!(v, tc_bound(3).unwrap());
        assert!(rounded);
        let (v, rounded) = tcap_int(2);
        assert_eq!(v, BigUint::from(8128u64));
        assert!(rounded);
        let (v, rounded) = tcap(&rat(9, 2));
        assert_eq!(v, tc_bound(3).unwrap());
        assert!(rounded);
        assert!(tcap_int(4).0 < tcap_int(6).0);
    }

    fn ceva_invariants() -> SurfaceInvariants {
        SurfaceInvariants {
            n_components: Some(5),
            dims: Some(vec![2, 2, 2, 2, 2]),
            euler: Some(2),
            ..Default::default()
        }
    }

    #[test]
    fn theorem_level_bounds() {
        let inv = ceva_invariants();
        let t4 = theorem_bounds(&inv, TheoremFormula::T4Simple).unwrap();
        assert_eq!(t4.value, BigUint::from(2520u64));
        assert_eq!(t4.formula_id, "thm4simple");

        let t3 = theorem_bounds(&inv, TheoremFormula::T3).unwrap();
        assert_eq!(t3.value, BigUint::from(5u64 * 216));

        let c1 = theorem_bounds(
            &SurfaceInvariants {
                dims: Some(vec![2]),
                ..Default::default()
            },
            TheoremFormula::C1,
        )
        .unwrap();
        assert_eq!(c1.value, BigUint::from(432u64));

        let t1 = theorem_bounds(&inv, TheoremFormula::T1).unwrap();
        assert_eq!(t1.value, BigUint::from(5u64 * 8128 * 8128));
        assert!(!t1.notes.is_empty(), "odd arguments were rounded");

        let t5 = theorem_bounds(&inv, TheoremFormula::T5).unwrap();
        assert_eq!(t5.value, BigUint::from(5u64 * 14689));

        let t2 = theorem_bounds(
            &SurfaceInvariants {
                n_components: Some(2),
                h1: Some(4),
                index_s: Some(rat(1, 1)),
                ambient_dim: Some(2),
                k_top: Some(2),
                ..Default::default()
            },
            TheoremFormula::T2,
        )
        .unwrap();
        // 2 * tcap(4) * tcap(5 * 1 * 2 + 38) = 2 * T_c(2) * T_c(24)
        assert_eq!(
            t2.value,
            BigUint::from(2u64) * tc_bound(2).unwrap() * tc_bound(24).unwrap()
        );

        assert_eq!(
            theorem_bounds(&SurfaceInvariants::default(), TheoremFormula::T1),
            Err(BoundError::MissingInvariant { field: "dims" })
        );
        assert_eq!(
            theorem_bounds(
                &SurfaceInvariants {
                    n_components: Some(3),
                    dims: Some(vec![2, 2]),
                    euler: Some(2),
                    ..Default::default()
                },
                TheoremFormula::T1
            ),
            Err(BoundError::InvalidInvariant {
                field: "n_components"
            })
        );
    }

    #[test]
    fn point_projection_bounds() {
        let arr = builtin_arrangement("ceva6").unwrap();
        let lat = compute_lattice(&arr);
        let nets = all_nets(&arr, &lat);
        let cen = census(&arr, &lat, &nets);
        let b = appendix_point_bound(&arr, &lat, &cen).unwrap();
        assert_eq!(b.point_bound, BigUint::from(1500u64));
        assert_eq!(b.global_bound, BigUint::from(1531u64));
        assert_eq!(lat.points()[b.best_point].multiplicity(), 3);
    }

    #[test]
    fn point_bound_below_global_bound_on_builtins() {
        for name in crate::arrangement::BUILTIN_NAMES {
            let arr = builtin_arrangement(name).unwrap();
            let lat = compute_lattice(&arr);
            let nets = all_nets(&arr, &lat);
            let cen = census(&arr, &lat, &nets);
            let b = appendix_point_bound(&arr, &lat, &cen).unwrap();
            assert!(
                b.point_bound <= b.global_bound,
                "{name}: {} > {}",
                b.point_bound,
                b.global_bound
            );
            // the simple multiplicative bound dominates the census size
            let e = euler_complement(&arr, &lat);
            let t4 = theorem_bounds(
                &SurfaceInvariants {
                    dims: Some(cen.components().iter().map(|c| c.dimension()).collect()),
                    euler: Some(e),
                    n_components: Some(cen.total()),
                    ..Default::default()
                },
                TheoremFormula::T4Simple,
            )
            .unwrap();
            assert!(t4.value > BigUint::zero());
        }
    }

    #[test]
    fn no_multiple_point_is_an_error() {
        let order = 1;
        let lines = vec![
            line_from_strs(order, ["1", "0", "0"]).unwrap(),
            line_from_strs(order, ["0", "1", "0"]).unwrap(),
            line_from_strs(order, ["0", "0", "1"]).unwrap(),
        ];
        let arr = Arrangement::new("triangle", order, lines).unwrap();
        let lat = compute_lattice(&arr);
        let cen = census(&arr, &lat, &[]);
        assert_eq!(
            appendix_point_bound(&arr, &lat, &cen),
            Err(BoundError::NoMultiplePoint)
        );
    }

    proptest! {
        #[test]
        fn zeta_strictly_decreases(s in 2u32..7, n in 1u32..40) {
            prop_assert!(zeta_upper(s, n + 1) < zeta_upper(s, n));
        }

        #[test]
        fn t_bounds_monotone_in_punctures(g in 0u32..3, r in 1u32..6) {
            let lo = 2 * g as i64 + r as i64;
            prop_assume!(lo > 2);
            let a = t_bounds(g, r).unwrap();
            let b = t_bounds(g, r + 1).unwrap();
            prop_assert!(a <= b);
        }

        #[test]
        fn t_bounds_monotone_in_genus(g in 0u32..3, r in 0u32..5) {
            prop_assume!(2 - 2 * (g as i64) - (r as i64) < 0);
            let a = t_bounds(g, r).unwrap();
            let b = t_bounds(g + 1, r).unwrap();
            prop_assert!(a <= b);
        }

        #[test]
        fn tprime_monotone(h in 2u32..8) {
            prop_assert!(tprime(h).unwrap() <= tprime(h + 1).unwrap());
        }

        #[test]
        fn tcap_monotone(h in 4u32..12) {
            prop_assert!(tcap_int(h).0 <= tcap_int(h + 1).0);
        }
    }
}
