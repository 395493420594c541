//! The pencil of degree-`d` curves attached to a net: the class products
//! `Q_j` all lie in the two-dimensional linear span of `Q_1` and `Q_2`, and
//! the induced map onto the projective parameter line fibers the complement
//! over the `k`-punctured line.

use std::collections::BTreeMap;

use super::net::Net;
use super::projection::{axis_line, chart_on_axis_line, direction_of, reference_axis};
use super::sample::enumerate_field_elements;
use super::FibError;
use crate::arrangement::{Arrangement, Lattice};
use crate::exactfield::CycloElem;
use crate::projgeom::{meet, P1Point, ProjLine, ProjPoint};

/// The fibration induced by the pencil of a `(k, d)`-net.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilFibration {
    pub k: usize,
    pub d: usize,
    /// Pencil parameters of the class products, in class order:
    /// `(1 : 0)`, `(0 : 1)`, then `(alpha_j : beta_j)` for the later classes.
    pub base_punctures: Vec<P1Point>,
    /// Euler characteristic of the punctured base, `2 - k`.
    pub e_base: i64,
    /// Genus of a smooth degree-`d` curve, `(d - 1)(d - 2) / 2`.
    pub fiber_genus: usize,
    /// Punctures of a generic fiber: the `d^2` base points of the pencil.
    pub fiber_puncture_count: usize,
    /// Euler characteristic of a generic fiber,
    /// `2 - 2 * fiber_genus - fiber_puncture_count`.
    pub e_fiber: i64,
}

/// Exponent triples of the degree-`d` monomials in three variables, in a
/// fixed deterministic order.
fn monomials(d: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=(d - a)).rev() {
            out.push((a, b, d - a - b));
        }
    }
    out
}

/// Dense coefficient vector of the product of the given arrangement lines,
/// over the [`monomials`] order for `d = lines.len()`.
fn class_product(arr: &Arrangement, class: &[usize]) -> Vec<CycloElem> {
    let order = arr.order();
    let mut acc: BTreeMap<(u32, u32, u32), CycloElem> = BTreeMap::new();
    acc.insert((0, 0, 0), CycloElem::one(order));
    for &li in class {
        let coeffs = arr.lines()[li].coeffs();
        let mut next: BTreeMap<(u32, u32, u32), CycloElem> = BTreeMap::new();
        for (&(a, b, c), gamma) in &acc {
            for (var, coeff) in coeffs.iter().enumerate() {
                let exp = match var {
                    0 => (a + 1, b, c),
                    1 => (a, b + 1, c),
                    _ => (a, b, c + 1),
                };
                let term = gamma * coeff;
                let entry = next.entry(exp).or_insert_with(|| CycloElem::zero(order));
                *entry = &*entry + &term;
            }
        }
        acc = next;
    }
    monomials(class.len() as u32)
        .into_iter()
        .map(|e| {
            acc.get(&e)
                .cloned()
                .unwrap_or_else(|| CycloElem::zero(order))
        })
        .collect()
}

/// Pencil parameters of the class products of a net candidate.
///
/// The first two products span the pencil; every further product must be a
/// linear combination of them, and all resulting parameters must be
/// pairwise distinct.  Fails with [`FibError::NotAPencil`] otherwise.
///
/// The basis of the pencil is rescaled so that the first three classes sit
/// at `(1 : 0)`, `(0 : 1)` and `(1 : 1)`; this makes the output independent
/// of how the individual line equations are scaled, and from the fourth
/// class on the parameters are genuine cross-ratio invariants.
pub fn pencil_base_punctures(
    arr: &Arrangement,
    classes: &[Vec<usize>],
) -> Result<Vec<P1Point>, FibError> {
    pencil_data(arr, classes).map(|(_, _, punctures)| punctures)
}

/// Normalized pencil basis `(F1, F2)` (the member at parameter
/// `(t : u)` is `t * F1 + u * F2`) together with the class parameters.
type PencilData = (Vec<CycloElem>, Vec<CycloElem>, Vec<P1Point>);

fn pencil_data(arr: &Arrangement, classes: &[Vec<usize>]) -> Result<PencilData, FibError> {
    let order = arr.order();
    let zero = CycloElem::zero(order);
    if classes.len() < 3 {
        return Err(FibError::NotAPencil);
    }
    let q1 = class_product(arr, &classes[0]);
    let q2 = class_product(arr, &classes[1]);
    let dim = q1.len();
    // two coordinate rows where (q1, q2) is invertible
    let mut pivot = None;
    'outer: for r1 in 0..dim {
        for r2 in (r1 + 1)..dim {
            let det = &(&q1[r1] * &q2[r2]) - &(&q1[r2] * &q2[r1]);
            if det != zero {
                pivot = Some((r1, r2, det));
                break 'outer;
            }
        }
    }
    let Some((r1, r2, det)) = pivot else {
        return Err(FibError::NotAPencil);
    };
    let mut weights = Vec::new();
    for class in &classes[2..] {
        let qj = class_product(arr, class);
        let alpha = &(&(&qj[r1] * &q2[r2]) - &(&qj[r2] * &q2[r1])) / &det;
        let beta = &(&(&q1[r1] * &qj[r2]) - &(&q1[r2] * &qj[r1])) / &det;
        let combination_matches = (0..dim).all(|r| &(&alpha * &q1[r]) + &(&beta * &q2[r]) == qj[r]);
        if !combination_matches || alpha == zero || beta == zero {
            return Err(FibError::NotAPencil);
        }
        weights.push((alpha, beta));
    }
    let mut punctures = vec![
        P1Point::new([CycloElem::one(order), zero.clone()]).expect("nonzero"),
        P1Point::new([zero.clone(), CycloElem::one(order)]).expect("nonzero"),
    ];
    let (a3, b3) = weights[0].clone();
    for (alpha, beta) in weights {
        punctures.push(P1Point::new([&alpha / &a3, &beta / &b3]).expect("nonzero"));
    }
    let mut sorted = punctures.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != punctures.len() {
        return Err(FibError::NotAPencil);
    }
    let f1 = q1.iter().map(|c| &a3 * c).collect();
    let f2 = q2.iter().map(|c| &b3 * c).collect();
    Ok((f1, f2, punctures))
}

/// Builds the pencil fibration of a net.
pub fn pencil_fibration(arr: &Arrangement, net: &Net) -> Result<PencilFibration, FibError> {
    let base_punctures = pencil_base_punctures(arr, &net.classes)?;
    let k = net.k;
    let d = net.d;
    assert_eq!(
        net.inter_points.len(),
        d * d,
        "the base locus of a net pencil consists of d^2 distinct points"
    );
    let fiber_genus = (d - 1) * (d - 2) / 2;
    let fiber_puncture_count = net.inter_points.len();
    Ok(PencilFibration {
        k,
        d,
        base_punctures,
        e_base: 2 - k as i64,
        fiber_genus,
        fiber_puncture_count,
        e_fiber: 2 - 2 * fiber_genus as i64 - fiber_puncture_count as i64,
    })
}

/// Punctures of a sampled smooth conic member of a `d = 2` net pencil, as
/// points of the member itself.
///
/// The member is identified with a projective line by projecting from the
/// first base point `p0`: every other base point maps to the direction of
/// its chord through `p0`, and `p0` itself to the direction of the tangent
/// at `p0`.  Parameters of arrangement members and of singular members are
/// excluded; `skip` further good parameters are passed over first.
pub fn sample_pencil_fiber(
    arr: &Arrangement,
    lat: &Lattice,
    net: &Net,
    skip: usize,
) -> Result<Vec<P1Point>, FibError> {
    assert_eq!(net.d, 2, "only conic members are sampled directly");
    let order = arr.order();
    let (f1, f2, excluded) = pencil_data(arr, &net.classes)?;
    let exps = monomials(2);
    let p0 = &lat.points()[net.inter_points[0]].point;
    let axis = reference_axis(p0);
    let mut remaining = skip;
    for t in enumerate_field_elements(order) {
        let candidate = P1Point::from_affine(t.clone());
        if excluded.contains(&candidate) {
            continue;
        }
        // member t * F1 + F2, in the same basis the excluded parameters use
        let member: Vec<CycloElem> = f1.iter().zip(&f2).map(|(c1, c2)| &(&t * c1) + c2).collect();
        if conic_is_singular(&member) {
            continue;
        }
        if remaining > 0 {
            remaining -= 1;
            continue;
        }
        let mut punctures = vec![chart_on_axis_line(
            axis,
            &meet(&tangent_line(&member, &exps, p0), &axis_line(order, axis))
                .expect("tangent at a point off the axis differs from the axis"),
        )];
        for &pi in &net.inter_points[1..] {
            punctures.push(direction_of(p0, axis, &lat.points()[pi].point));
        }
        punctures.sort();
        punctures.dedup();
        assert_eq!(
            punctures.len(),
            net.inter_points.len(),
            "base points project to distinct directions from a smooth member"
        );
        return Ok(punctures);
    }
    unreachable!("field enumeration is infinite and the excluded set is finite")
}

/// Whether the conic with the given degree-two coefficient vector (in
/// [`monomials`] order) is singular, via the determinant of twice its
/// symmetric matrix.
fn conic_is_singular(q: &[CycloElem]) -> bool {
    // monomial order: w1^2, w1w2, w1w3, w2^2, w2w3, w3^2
    let two = |i: usize| &q[i] + &q[i];
    let m = [
        [two(0), q[1].clone(), q[2].clone()],
        [q[1].clone(), two(3), q[4].clone()],
        [q[2].clone(), q[4].clone(), two(5)],
    ];
    let minor =
        |r: usize, s: usize, u: usize, v: usize| &(&m[r][u] * &m[s][v]) - &(&m[r][v] * &m[s][u]);
    let det = &(&(&m[0][0] * &minor(1, 2, 1, 2)) - &(&m[0][1] * &minor(1, 2, 0, 2)))
        + &(&m[0][2] * &minor(1, 2, 0, 1));
    det == CycloElem::zero(q[0].order())
}

/// Gradient line of a degree-`d` form at a point of its zero set: the
/// tangent line when the point is smooth.
fn tangent_line(q: &[CycloElem], exps: &[(u32, u32, u32)], p: &ProjPoint) -> ProjLine {
    let order = p.order();
    let mut grad = [
        CycloElem::zero(order),
        CycloElem::zero(order),
        CycloElem::zero(order),
    ];
    for (coeff, &(a, b, c)) in q.iter().zip(exps) {
        if *coeff == CycloElem::zero(order) {
            continue;
        }
        let partials = [
            (a, [a.wrapping_sub(1), b, c]),
            (b, [a, b.wrapping_sub(1), c]),
            (c, [a, b, c.wrapping_sub(1)]),
        ];
        for (var, (mult, e)) in partials.into_iter().enumerate() {
            if mult == 0 {
                continue;
            }
            let mut term = coeff * &CycloElem::from_int(order, mult as i64);
            for (coord, &exp) in p.coords().iter().zip(e.iter()) {
                term = &term
                    * &coord
                        .pow(exp as i64)
                        .expect("nonnegative powers never fail");
            }
            grad[var] = &grad[var] + &term;
        }
    }
    ProjLine::new(grad).expect("gradient at a smooth point is nonzero")
}
