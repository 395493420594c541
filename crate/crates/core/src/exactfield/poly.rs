//! Dense univariate polynomials with exact coefficients, little-endian
//! (index = exponent). Just enough machinery for cyclotomic arithmetic:
//! multiplication, remainder by a monic modulus, the extended Euclidean
//! algorithm over `Q[x]`, and the cyclotomic polynomials themselves.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Signed, Zero};

pub(crate) type QPoly = Vec<BigRational>;

pub(crate) fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigRational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo `m`; `m` must have an invertible (here: monic)
/// leading coefficient, which every cyclotomic polynomial has.
pub(crate) fn rem(mut a: QPoly, m: &[BigRational]) -> QPoly {
    let md = degree(m).expect("zero modulus");
    let lead = m[md].clone();
    while let Some(ad) = degree(&a) {
        if ad < md {
            break;
        }
        let factor = &a[ad] / &lead;
        for k in 0..md {
            let t = &factor * &m[k];
            a[ad - md + k] -= t;
        }
        a[ad] = BigRational::zero();
        trim(&mut a);
    }
    trim(&mut a);
    a
}

/// Extended Euclid over `Q[x]`: returns `(g, u)` with `u*a ≡ g (mod m)` and
/// `g = gcd(a, m)` up to a nonzero rational factor.
pub(crate) fn half_ext_gcd(a: &[BigRational], m: &[BigRational]) -> (QPoly, QPoly) {
    let mut r0: QPoly = m.to_vec();
    let mut r1: QPoly = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    // Bezout coefficients with respect to `a` only.
    let mut u0: QPoly = Vec::new();
    let mut u1: QPoly = vec![BigRational::one()];
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let qu = mul(&q, &u1);
        let mut u2 = u0.clone();
        sub_assign(&mut u2, &qu);
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
    }
    (r0, u0)
}

fn sub_assign(a: &mut QPoly, b: &[BigRational]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigRational::zero());
    }
    for (i, cb) in b.iter().enumerate() {
        a[i] -= cb;
    }
    trim(a);
}

/// Quotient and remainder; the divisor's leading coefficient is inverted
/// exactly, so this works for any nonzero divisor over `Q`.
pub(crate) fn divrem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let bd = degree(b).expect("division by zero polynomial");
    let lead = b[bd].clone();
    let mut r: QPoly = a.to_vec();
    trim(&mut r);
    let mut q: QPoly = Vec::new();
    while let Some(rd) = degree(&r) {
        if rd < bd {
            break;
        }
        let factor = &r[rd] / &lead;
        if q.len() < rd - bd + 1 {
            q.resize(rd - bd + 1, BigRational::zero());
        }
        q[rd - bd] = factor.clone();
        for k in 0..=bd {
            let t = &factor * &b[k];
            r[rd - bd + k] -= t;
        }
        trim(&mut r);
    }
    (q, r)
}

/// Exact division of integer polynomials (panics if not exact); used only to
/// build cyclotomic polynomials, where divisibility is guaranteed.
fn int_div_exact(mut num: Vec<BigInt>, den: &[BigInt]) -> Vec<BigInt> {
    let dd = den
        .iter()
        .rposition(|c| !c.is_zero())
        .expect("zero divisor");
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut q = vec![BigInt::zero(); num.len().saturating_sub(dd)];
    while let Some(nd) = num.iter().rposition(|c| !c.is_zero()) {
        assert!(nd >= dd, "non-exact polynomial division");
        let factor = num[nd].clone();
        q[nd - dd] = factor.clone();
        for k in 0..=dd {
            let t = &factor * &den[k];
            num[nd - dd + k] -= t;
        }
    }
    while q.last().is_some_and(Zero::is_zero) {
        q.pop();
    }
    q
}

/// Euler's totient; arguments here are tiny cyclotomic orders.
pub fn euler_phi(m: u32) -> u32 {
    assert!(m >= 1);
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `m`-th cyclotomic polynomial, little-endian integer coefficients:
/// `phi_m = (x^m - 1) / prod_{d | m, d < m} phi_d`, computed by exact
/// division (memoized).
pub fn cyclotomic_poly(m: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    assert!(m >= 1, "cyclotomic order must be at least 1");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&m) {
        return Arc::clone(hit);
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..m {
        if m.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            den = int_poly_mul(&den, &phi_d);
        }
    }
    let result = Arc::new(int_div_exact(num, &den));
    cache.lock().unwrap().insert(m, Arc::clone(&result));
    result
}

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

/// Cached rational-coefficient copy of `phi_m` for use as a reduction modulus.
pub(crate) fn cyclotomic_poly_q(m: u32) -> Arc<QPoly> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<QPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&m) {
        return Arc::clone(hit);
    }
    let ints = cyclotomic_poly(m);
    let q: QPoly = ints.iter().map(|c| BigRational::from(c.clone())).collect();
    let result = Arc::new(q);
    cache.lock().unwrap().insert(m, Arc::clone(&result));
    result
}

#[allow(dead_code)]
pub(crate) fn is_negative(r: &BigRational) -> bool {
    r.is_negative()
}
