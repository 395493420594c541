//! Projection of an arrangement complement from a point of multiplicity
//! `d >= 3` onto a `d`-punctured projective line.

use std::collections::BTreeMap;

use super::sample::enumerate_field_elements;
use super::FibError;
use crate::arrangement::{Arrangement, Lattice};
use crate::exactfield::CycloElem;
use crate::projgeom::{join, meet, P1Point, ProjLine, ProjPoint};

/// The fibration induced by projecting away from a lattice point.
///
/// The base is the pencil of lines through the center, identified with a
/// projective line via a fixed coordinate axis not containing the center;
/// its punctures are the directions of the arrangement lines through the
/// center.  A generic fiber is a line through the center minus the center
/// itself and its intersections with the remaining arrangement lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionFibration {
    /// Index of the center in the lattice.
    pub center: usize,
    /// Number of arrangement lines through the center.
    pub multiplicity: usize,
    /// Directions of the lines through the center: the punctures of the base.
    pub base_punctures: Vec<P1Point>,
    /// Euler characteristic of the punctured base, `2 - multiplicity`.
    pub e_base: i64,
    /// Punctures of a generic fiber: `n - multiplicity + 1`.
    pub fiber_puncture_count: usize,
    /// Euler characteristic of a generic fiber, `1 + multiplicity - n`.
    pub e_fiber: i64,
    pub(crate) axis: usize,
    pub(crate) center_point: ProjPoint,
    pub(crate) off_lines: Vec<usize>,
}

/// A fiber whose Euler characteristic exceeds the generic one: a line
/// through the center picking up lattice points none of whose lines pass
/// through the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialFiber {
    /// Direction of the fiber line on the base.
    pub base: P1Point,
    /// Euler characteristic of this fiber.
    pub euler: i64,
    /// Lattice points responsible for the excess, in lattice order.
    pub points: Vec<usize>,
}

/// First coordinate axis index `i` such that `{w_i = 0}` misses the point.
pub(crate) fn reference_axis(p: &ProjPoint) -> usize {
    let zero = CycloElem::zero(p.order());
    (0..3)
        .find(|&i| p.coords()[i] != zero)
        .expect("projective point has a nonzero coordinate")
}

/// The coordinate axis line `{w_axis = 0}`.
pub(crate) fn axis_line(order: u32, axis: usize) -> ProjLine {
    let mut coeffs = [
        CycloElem::zero(order),
        CycloElem::zero(order),
        CycloElem::zero(order),
    ];
    coeffs[axis] = CycloElem::one(order);
    ProjLine::new(coeffs).expect("axis line is nonzero")
}

/// Reads a point lying on `{w_axis = 0}` as a point of `P^1` in the two
/// remaining coordinates, in increasing index order.
pub(crate) fn chart_on_axis_line(axis: usize, q: &ProjPoint) -> P1Point {
    let [j, k] = match axis {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    debug_assert!(q.coords()[axis] == CycloElem::zero(q.order()));
    P1Point::new([q.coords()[j].clone(), q.coords()[k].clone()])
        .expect("point on the axis line has a nonzero remaining coordinate")
}

/// Direction of the line joining `center` to `q`, read on the reference axis.
pub(crate) fn direction_of(center: &ProjPoint, axis: usize, q: &ProjPoint) -> P1Point {
    let through = join(center, q).expect("distinct points span a line");
    let on_axis = meet(&through, &axis_line(center.order(), axis))
        .expect("line through the center is not the reference axis");
    chart_on_axis_line(axis, &on_axis)
}

/// Builds the projection fibration centered at lattice point `center`.
///
/// Fails with [`FibError::MultiplicityTooLow`] unless at least three
/// arrangement lines pass through the center.
pub fn projection_fibration(
    arr: &Arrangement,
    lat: &Lattice,
    center: usize,
) -> Result<ProjectionFibration, FibError> {
    let p = &lat.points()[center];
    let d = p.multiplicity();
    if d < 3 {
        return Err(FibError::MultiplicityTooLow {
            required: 3,
            found: d,
        });
    }
    let axis = reference_axis(&p.point);
    let reference = axis_line(arr.order(), axis);
    let mut base_punctures: Vec<P1Point> = p
        .lines
        .iter()
        .map(|&li| {
            let q = meet(&arr.lines()[li], &reference)
                .expect("a line through the center differs from the reference axis");
            chart_on_axis_line(axis, &q)
        })
        .collect();
    base_punctures.sort();
    base_punctures.dedup();
    assert_eq!(
        base_punctures.len(),
        d,
        "lines through a common point have pairwise distinct directions"
    );
    let n = arr.n_lines();
    let off_lines = (0..n).filter(|li| !p.lines.contains(li)).collect();
    Ok(ProjectionFibration {
        center,
        multiplicity: d,
        base_punctures,
        e_base: 2 - d as i64,
        fiber_puncture_count: n - d + 1,
        e_fiber: 1 + d as i64 - n as i64,
        axis,
        center_point: p.point.clone(),
        off_lines,
    })
}

/// Lists the special fibers of a projection fibration, sorted by base point.
///
/// A lattice point contributes to a special fiber exactly when no
/// arrangement line through it passes through the center; it then raises the
/// Euler characteristic of its fiber by `multiplicity - 1`.
pub fn special_fibers(
    _arr: &Arrangement,
    lat: &Lattice,
    fib: &ProjectionFibration,
) -> Vec<SpecialFiber> {
    let center = &lat.points()[fib.center];
    let mut by_base: BTreeMap<P1Point, (i64, Vec<usize>)> = BTreeMap::new();
    for (qi, q) in lat.points().iter().enumerate() {
        if qi == fib.center {
            continue;
        }
        if q.lines.iter().any(|li| center.lines.contains(li)) {
            continue;
        }
        let base = direction_of(&fib.center_point, fib.axis, &q.point);
        let entry = by_base.entry(base).or_insert((0, Vec::new()));
        entry.0 += q.multiplicity() as i64 - 1;
        entry.1.push(qi);
    }
    by_base
        .into_iter()
        .map(|(base, (excess, points))| SpecialFiber {
            base,
            euler: fib.e_fiber + excess,
            points,
        })
        .collect()
}

/// Checks that the Euler characteristic of the complement decomposes along
/// the fibration: `e = e_fiber * e_base + sum_i (e_i - e_fiber)` over the
/// special fibers.
pub fn euler_identity_holds(
    euler_complement: i64,
    fib: &ProjectionFibration,
    specials: &[SpecialFiber],
) -> bool {
    let excess: i64 = specials.iter().map(|s| s.euler - fib.e_fiber).sum();
    euler_complement == fib.e_fiber * fib.e_base + excess
}

/// Punctures of a sampled generic fiber, as points of the fiber line.
///
/// The fiber over base parameter `t` is the line spanned by the center `c`
/// and the reference-axis point `R_t`; the point `lambda c + mu R_t` has
/// coordinate `(lambda : mu)`.  The punctures are the center at `(1 : 0)`
/// and, for each arrangement line `L` missing the center, the intersection
/// at `(L(R_t) : -L(c))`.  Base parameters carrying arrangement lines or
/// special fibers are excluded; `skip` further generic parameters are
/// passed over before sampling, so distinct `skip` values yield distinct
/// generic fibers.
pub fn sample_projection_fiber(
    arr: &Arrangement,
    lat: &Lattice,
    fib: &ProjectionFibration,
    skip: usize,
) -> Vec<P1Point> {
    let order = arr.order();
    let mut excluded: Vec<P1Point> = fib.base_punctures.clone();
    excluded.extend(special_fibers(arr, lat, fib).into_iter().map(|s| s.base));
    excluded.sort();
    let mut remaining = skip;
    for t in enumerate_field_elements(order) {
        let candidate = P1Point::from_affine(t.clone());
        if excluded.binary_search(&candidate).is_ok() {
            continue;
        }
        if remaining > 0 {
            remaining -= 1;
            continue;
        }
        let r_t = axis_point(order, fib.axis, &t);
        let mut punctures = vec![P1Point::infinity(order)];
        for &li in &fib.off_lines {
            let line = &arr.lines()[li];
            let at_r = line.eval(&r_t);
            let at_c = line.eval(&fib.center_point);
            punctures.push(
                P1Point::new([at_r, -&at_c]).expect("line missing the center is nonzero on it"),
            );
        }
        punctures.sort();
        punctures.dedup();
        assert_eq!(
            punctures.len(),
            fib.fiber_puncture_count,
            "generic fiber meets residual lines in distinct points"
        );
        return punctures;
    }
    unreachable!("field enumeration is infinite and the excluded set is finite")
}

/// The point of `{w_axis = 0}` with affine chart coordinate `t`.
fn axis_point(order: u32, axis: usize, t: &CycloElem) -> ProjPoint {
    let [j, k] = match axis {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    let mut coords = [
        CycloElem::zero(order),
        CycloElem::zero(order),
        CycloElem::zero(order),
    ];
    coords[j] = t.clone();
    coords[k] = CycloElem::one(order);
    ProjPoint::new(coords).expect("chart point is nonzero")
}
