//! The group of projective-linear self-maps of the plane preserving an
//! arrangement, its action on the census components, and the exact
//! symmetry-count bound assembled from orbit sizes and fiber symmetries.
//!
//! The bound multiplies, for each profile class of census components, three
//! exactly computed quantities: the class size `nu` (a sound stand-in for
//! the orbit length, since any self-map of the complement preserves the
//! profile), the Möbius symmetry order `L_base` of the base punctures of a
//! class member, and a symmetry bound `L_fiber` for its generic fiber. The
//! minimum of `nu * L_base * L_fiber` over all classes bounds the number of
//! self-equivalences of the complement.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::arrangement::{compute_lattice, Arrangement, Lattice};
use crate::bounds::{aut_curve_bound, BigCount, BoundError, BoundReport};
use crate::exec;
use crate::fibration::{
    all_nets, census, pencil_fibration, projection_fibration, sample_pencil_fiber,
    sample_projection_fiber, Census, ComponentKind, FibError, FiberProfile, Net,
};
use crate::projgeom::{
    join, map_from_quadruples, meet, mobius_aut_group, GeomError, P1Point, ProjLine, ProjMap,
    ProjPoint,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutError {
    #[error("no quadruple of lattice points or lines in general position")]
    TooDegenerate,
    #[error("the census has no components, so no class bound applies")]
    EmptyCensus,
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Fib(#[from] FibError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

/// The full group of projective-linear maps sending the line set of an
/// arrangement onto itself, with the induced permutations of the lines and
/// of the lattice points cached per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearAutGroup {
    elements: Vec<ProjMap>,
    line_perms: Vec<Vec<usize>>,
    point_perms: Vec<Vec<usize>>,
}

impl LinearAutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Group elements in canonical sorted order.
    pub fn elements(&self) -> &[ProjMap] {
        &self.elements
    }

    pub fn contains(&self, m: &ProjMap) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    /// Line permutation of element `i`: line `j` maps to line `perm[j]`.
    pub fn line_permutation(&self, i: usize) -> &[usize] {
        &self.line_perms[i]
    }

    /// Lattice-point permutation of element `i`.
    pub fn point_permutation(&self, i: usize) -> &[usize] {
        &self.point_perms[i]
    }

    /// Exhaustive re-check of the group axioms and of the action: the
    /// identity is present, every composition and inverse of elements is an
    /// element, every element maps the line set onto itself (re-derived from
    /// scratch), and the induced lattice permutation preserves
    /// multiplicities.
    pub fn verify(&self, arr: &Arrangement, lat: &Lattice) -> bool {
        if self.elements.is_empty()
            || self.line_perms.len() != self.elements.len()
            || self.point_perms.len() != self.elements.len()
        {
            return false;
        }
        if !self.contains(&ProjMap::identity(arr.order())) {
            return false;
        }
        if self.elements.windows(2).any(|w| w[0] >= w[1]) {
            return false;
        }
        for a in &self.elements {
            if !self.contains(&a.inverse()) {
                return false;
            }
            for b in &self.elements {
                if !self.contains(&a.compose(b)) {
                    return false;
                }
            }
        }
        let line_index = line_index(arr);
        for (i, m) in self.elements.iter().enumerate() {
            match line_images(arr, &line_index, m) {
                Some(perm) if perm == self.line_perms[i] => {}
                _ => return false,
            }
            let points = lat.points();
            let perm = &self.point_perms[i];
            if perm.len() != points.len() {
                return false;
            }
            for (pi, p) in points.iter().enumerate() {
                let img = &points[perm[pi]];
                if m.apply_point(&p.point) != img.point || p.multiplicity() != img.multiplicity() {
                    return false;
                }
            }
        }
        true
    }
}

fn line_index(arr: &Arrangement) -> BTreeMap<ProjLine, usize> {
    arr.lines()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect()
}

/// Line permutation induced by `map`, or `None` if some image line is not in
/// the arrangement. Images of distinct lines are distinct (the map is
/// invertible), so a full image list is automatically a permutation.
fn line_images(
    arr: &Arrangement,
    index: &BTreeMap<ProjLine, usize>,
    map: &ProjMap,
) -> Option<Vec<usize>> {
    let mut perm = Vec::with_capacity(arr.n_lines());
    for l in arr.lines() {
        perm.push(*index.get(&map.apply_line(l))?);
    }
    Some(perm)
}

/// First (in index order) quadruple of the given points with no three
/// collinear.
fn general_position_quadruple(points: &[ProjPoint]) -> Option<[usize; 4]> {
    let n = points.len();
    let collinear = |a: usize, b: usize, c: usize| -> bool {
        let l = join(&points[a], &points[b]).expect("input points are pairwise distinct");
        l.eval(&points[c]).is_zero()
    };
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if collinear(i, j, k) {
                    continue;
                }
                for l in (k + 1)..n {
                    if !collinear(i, j, l) && !collinear(i, k, l) && !collinear(j, k, l) {
                        return Some([i, j, k, l]);
                    }
                }
            }
        }
    }
    None
}

/// Ordered 4-tuples of distinct indices in `0..n` matching the source
/// quadruple slot-by-slot under a unary feature and pairwise under a binary
/// feature. Both features are invariant under any line-preserving map, so no
/// valid image quadruple is pruned.
fn compatible_quadruples<U, P>(n: usize, src: &[usize; 4], unary: U, pairwise: P) -> Vec<[usize; 4]>
where
    U: Fn(usize, usize) -> bool,
    P: Fn((usize, usize), (usize, usize)) -> bool,
{
    let mut out = Vec::new();
    for a in 0..n {
        if !unary(src[0], a) {
            continue;
        }
        for b in 0..n {
            if b == a || !unary(src[1], b) || !pairwise((src[0], src[1]), (a, b)) {
                continue;
            }
            for c in 0..n {
                if c == a
                    || c == b
                    || !unary(src[2], c)
                    || !pairwise((src[0], src[2]), (a, c))
                    || !pairwise((src[1], src[2]), (b, c))
                {
                    continue;
                }
                for d in 0..n {
                    if d == a
                        || d == b
                        || d == c
                        || !unary(src[3], d)
                        || !pairwise((src[0], src[3]), (a, d))
                        || !pairwise((src[1], src[3]), (b, d))
                        || !pairwise((src[2], src[3]), (c, d))
                    {
                        continue;
                    }
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// All line-preserving maps found by fixing one general-position quadruple
/// of lattice points and solving for every compatible image quadruple.
fn point_quadruple_maps(
    arr: &Arrangement,
    lat: &Lattice,
    points: &[ProjPoint],
    src: [usize; 4],
) -> Vec<ProjMap> {
    let lattice_points = lat.points();
    let joint = |a: usize, b: usize| -> usize {
        // Number of arrangement lines through both points (0 or 1).
        let (la, lb) = (&lattice_points[a].lines, &lattice_points[b].lines);
        la.iter().filter(|x| lb.binary_search(x).is_ok()).count()
    };
    let candidates = compatible_quadruples(
        points.len(),
        &src,
        |s, c| lattice_points[s].multiplicity() == lattice_points[c].multiplicity(),
        |(sa, sb), (ca, cb)| joint(sa, sb) == joint(ca, cb),
    );
    let src_pts: [ProjPoint; 4] = src.map(|i| points[i].clone());
    let index = line_index(arr);
    exec::filter_map_collect(candidates, |dst| {
        let dst_pts: [ProjPoint; 4] = dst.map(|i| points[i].clone());
        let map = map_from_quadruples(&src_pts, &dst_pts).ok()?;
        line_images(arr, &index, &map).map(|_| map)
    })
}

/// Point map whose induced action on line coefficient vectors is the given
/// map of the dual plane: the inverse of its transpose.
fn dual_to_point_map(dual: &ProjMap) -> ProjMap {
    let r = dual.rows();
    let transposed = std::array::from_fn(|i| std::array::from_fn(|j| r[j][i].clone()));
    ProjMap::new(transposed)
        .expect("transpose of an invertible matrix is invertible")
        .inverse()
}

/// Fallback search fixing a general-position quadruple of lines (viewed as
/// points of the dual plane). Returns `None` when no such quadruple exists.
fn line_quadruple_maps(arr: &Arrangement, lat: &Lattice) -> Option<Vec<ProjMap>> {
    let duals: Vec<ProjPoint> = arr
        .lines()
        .iter()
        .map(|l| ProjPoint::new(l.coeffs().clone()).expect("line coefficients are nonzero"))
        .collect();
    let src = general_position_quadruple(&duals)?;
    // Unary feature of a line: sorted multiplicities of its lattice points.
    let profiles: Vec<Vec<usize>> = (0..arr.n_lines())
        .map(|li| {
            let mut v: Vec<usize> = lat
                .points_on_line(li)
                .iter()
                .map(|&pi| lat.points()[pi].multiplicity())
                .collect();
            v.sort_unstable();
            v
        })
        .collect();
    let meet_mult = |a: usize, b: usize| -> usize {
        let p = meet(&arr.lines()[a], &arr.lines()[b]).expect("arrangement lines are distinct");
        let pi = lat
            .point_index(&p)
            .expect("every pairwise meet is a lattice point");
        lat.points()[pi].multiplicity()
    };
    let candidates = compatible_quadruples(
        arr.n_lines(),
        &src,
        |s, c| profiles[s] == profiles[c],
        |(sa, sb), (ca, cb)| meet_mult(sa, sb) == meet_mult(ca, cb),
    );
    let src_pts: [ProjPoint; 4] = src.map(|i| duals[i].clone());
    let index = line_index(arr);
    Some(exec::filter_map_collect(candidates, |dst| {
        let dst_pts: [ProjPoint; 4] = dst.map(|i| duals[i].clone());
        let dual_map = map_from_quadruples(&src_pts, &dst_pts).ok()?;
        let map = dual_to_point_map(&dual_map);
        line_images(arr, &index, &map).map(|_| map)
    }))
}

fn assemble_group(
    arr: &Arrangement,
    lat: &Lattice,
    mut maps: Vec<ProjMap>,
) -> Result<LinearAutGroup, AutError> {
    maps.sort();
    maps.dedup();
    let index = line_index(arr);
    let line_perms: Vec<Vec<usize>> = maps
        .iter()
        .map(|m| line_images(arr, &index, m).expect("search only keeps line-preserving maps"))
        .collect();
    let point_perms: Vec<Vec<usize>> = maps
        .iter()
        .map(|m| {
            lat.points()
                .iter()
                .map(|p| {
                    lat.point_index(&m.apply_point(&p.point))
                        .expect("a line-preserving map permutes the lattice")
                })
                .collect()
        })
        .collect();
    let group = LinearAutGroup {
        elements: maps,
        line_perms,
        point_perms,
    };
    assert!(
        group.verify(arr, lat),
        "completed search must satisfy the group axioms"
    );
    Ok(group)
}

/// Computes the full group of projective-linear maps preserving the line
/// set.
///
/// The search fixes the first general-position quadruple of lattice points
/// and solves for every image quadruple compatible with it in multiplicity
/// (slot-by-slot) and in pairwise joint-line counts; each solution is kept
/// iff it permutes the lines. Every line-preserving map sends the fixed
/// quadruple to some compatible quadruple, so the search is exhaustive. If
/// the lattice has no such quadruple the same search runs in the dual plane
/// on a general-position quadruple of lines; if that also fails the
/// arrangement is rejected as [`AutError::TooDegenerate`]. The returned
/// group is verified exhaustively (closure, inverses, line preservation).
pub fn linear_aut_group(arr: &Arrangement, lat: &Lattice) -> Result<LinearAutGroup, AutError> {
    let points: Vec<ProjPoint> = lat.points().iter().map(|p| p.point.clone()).collect();
    let maps = if let Some(src) = general_position_quadruple(&points) {
        point_quadruple_maps(arr, lat, &points, src)
    } else if let Some(maps) = line_quadruple_maps(arr, lat) {
        maps
    } else {
        return Err(AutError::TooDegenerate);
    };
    assemble_group(arr, lat, maps)
}

/// Census components sharing a fiber profile, with the symmetry data that
/// enters the class bound `nu_upper * L_base * L_fiber`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClass {
    pub profile: FiberProfile,
    /// Census indices of the members, ascending.
    pub components: Vec<usize>,
    /// Class size: a sound upper bound for the orbit length of any member
    /// under all self-equivalences of the complement (which need not be
    /// linear, but always preserve the profile).
    pub nu_upper: usize,
    /// Actual orbit lengths under the linear group, ascending. Supplementary
    /// information: these partition the class and divide the group order.
    pub nu_linear: Vec<usize>,
    /// Möbius symmetry order of the base punctures of the member minimizing
    /// `L_base * L_fiber`.
    pub l_base: usize,
    /// Fiber symmetry bound of that same member: the Möbius order of a
    /// sampled generic fiber (genus zero) or the curve symmetry bound
    /// (positive genus).
    pub l_fiber: BigCount,
    /// The `(L_base, L_fiber)` pair of every member.
    pub member_bounds: Vec<MemberBound>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberBound {
    /// Census index of the component.
    pub component: usize,
    pub l_base: usize,
    pub l_fiber: BigCount,
}

const FIBER_SAMPLES_MIN: usize = 4;
const FIBER_SAMPLES_MAX: usize = 12;

/// Möbius symmetry order of a generic fiber, from deterministically sampled
/// fibers.
///
/// The symmetry order of a punctured fiber, as a function of the base
/// parameter, exceeds its generic value only on a finite special set, so
/// every sample gives an upper bound for the generic order and the minimum
/// over samples reaches it as soon as any sample is generic. Sampling stops
/// once the current minimum has been observed twice (two independent samples
/// agreeing on the reported value) and at least [`FIBER_SAMPLES_MIN`] fibers
/// were drawn; if [`FIBER_SAMPLES_MAX`] samples never repeat their minimum,
/// that minimum is still returned — it is a sound (if possibly non-sharp)
/// upper bound.
fn generic_fiber_symmetry<F>(mut sample: F) -> Result<usize, AutError>
where
    F: FnMut(usize) -> Result<Vec<P1Point>, AutError>,
{
    let mut orders: Vec<usize> = Vec::new();
    for skip in 0..FIBER_SAMPLES_MAX {
        let punctures = sample(skip)?;
        orders.push(mobius_aut_group(&punctures)?.order());
        if orders.len() >= FIBER_SAMPLES_MIN {
            let min = *orders.iter().min().expect("at least one sample");
            if orders.iter().filter(|&&o| o == min).count() >= 2 {
                return Ok(min);
            }
        }
    }
    Ok(*orders.iter().min().expect("at least one sample"))
}

/// `(L_base, L_fiber)` of a single census component.
fn member_symmetries(
    arr: &Arrangement,
    lat: &Lattice,
    nets: &[Net],
    kind: ComponentKind,
) -> Result<(usize, BigCount), AutError> {
    match kind {
        ComponentKind::LocalPoint(pi) => {
            let fib = projection_fibration(arr, lat, pi)?;
            let l_base = mobius_aut_group(&fib.base_punctures)?.order();
            let l_fiber =
                generic_fiber_symmetry(|skip| Ok(sample_projection_fiber(arr, lat, &fib, skip)))?;
            Ok((l_base, BigCount::from(l_fiber as u64)))
        }
        ComponentKind::NetPencil(ni) => {
            let net = &nets[ni];
            let fib = pencil_fibration(arr, net)?;
            let l_base = mobius_aut_group(&fib.base_punctures)?.order();
            let l_fiber = if fib.fiber_genus == 0 {
                let order = generic_fiber_symmetry(|skip| {
                    sample_pencil_fiber(arr, lat, net, skip).map_err(AutError::from)
                })?;
                BigCount::from(order as u64)
            } else {
                aut_curve_bound(fib.fiber_genus as u32, fib.fiber_puncture_count as u32)?
            };
            Ok((l_base, l_fiber))
        }
    }
}

/// Groups the census components into profile classes, computes the orbit
/// lengths of the linear group acting on them (through its permutations of
/// lattice points and of nets), and attaches the symmetry data `L_base` and
/// `L_fiber` of every member.
pub fn component_orbits(
    arr: &Arrangement,
    lat: &Lattice,
    nets: &[Net],
    cens: &Census,
    group: &LinearAutGroup,
) -> Result<Vec<OrbitClass>, AutError> {
    let comps = cens.components();
    let slot_of: BTreeMap<ComponentKind, usize> =
        comps.iter().enumerate().map(|(i, c)| (c.kind, i)).collect();
    let net_slot: BTreeMap<Vec<Vec<usize>>, usize> = nets
        .iter()
        .enumerate()
        .map(|(i, n)| (n.classes.clone(), i))
        .collect();
    // Permutation of census indices induced by each group element.
    let comp_perms: Vec<Vec<usize>> = (0..group.order())
        .map(|e| {
            let lp = group.line_permutation(e);
            let pp = group.point_permutation(e);
            comps
                .iter()
                .map(|c| {
                    let image = match c.kind {
                        ComponentKind::LocalPoint(pi) => ComponentKind::LocalPoint(pp[pi]),
                        ComponentKind::NetPencil(ni) => {
                            let mut classes: Vec<Vec<usize>> = nets[ni]
                                .classes
                                .iter()
                                .map(|cl| {
                                    let mut img: Vec<usize> = cl.iter().map(|&l| lp[l]).collect();
                                    img.sort_unstable();
                                    img
                                })
                                .collect();
                            classes.sort();
                            let ni_img = *net_slot
                                .get(&classes)
                                .expect("the image of a net under the group is a net");
                            ComponentKind::NetPencil(ni_img)
                        }
                    };
                    *slot_of
                        .get(&image)
                        .expect("the group permutes the census components")
                })
                .collect()
        })
        .collect();
    let mut member: Vec<(usize, BigCount)> = Vec::with_capacity(comps.len());
    for c in comps {
        member.push(member_symmetries(arr, lat, nets, c.kind)?);
    }
    let mut out = Vec::new();
    for (profile, indices) in cens.profile_classes() {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut nu_linear = Vec::new();
        for &start in &indices {
            if seen.contains(&start) {
                continue;
            }
            let mut orbit: BTreeSet<usize> = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(c) = stack.pop() {
                if orbit.insert(c) {
                    for perm in &comp_perms {
                        stack.push(perm[c]);
                    }
                }
            }
            debug_assert!(
                orbit.iter().all(|c| indices.contains(c)),
                "orbits stay inside the profile class"
            );
            nu_linear.push(orbit.len());
            seen.extend(orbit);
        }
        nu_linear.sort_unstable();
        assert_eq!(
            nu_linear.iter().sum::<usize>(),
            indices.len(),
            "orbits partition the class"
        );
        assert!(
            nu_linear.iter().all(|&l| group.order().is_multiple_of(l)),
            "orbit lengths divide the group order"
        );
        let member_bounds: Vec<MemberBound> = indices
            .iter()
            .map(|&i| MemberBound {
                component: i,
                l_base: member[i].0,
                l_fiber: member[i].1.clone(),
            })
            .collect();
        let best = member_bounds
            .iter()
            .min_by_key(|m| BigCount::from(m.l_base as u64) * &m.l_fiber)
            .expect("profile classes are nonempty");
        out.push(OrbitClass {
            profile,
            nu_upper: indices.len(),
            nu_linear,
            l_base: best.l_base,
            l_fiber: best.l_fiber.clone(),
            member_bounds,
            components: indices,
        });
    }
    Ok(out)
}

/// Assembles the symmetry-count bound from precomputed classes: the minimum
/// over classes of `nu_upper * L_base * L_fiber`, with one product reported
/// per class. An override replaces `L_fiber` for every member of its class.
pub fn theorem4_report(
    classes: &[OrbitClass],
    overrides: &BTreeMap<usize, BigCount>,
) -> Result<BoundReport, AutError> {
    if classes.is_empty() {
        return Err(AutError::EmptyCensus);
    }
    let mut inputs = Vec::new();
    let mut notes = Vec::new();
    let mut best: Option<BigCount> = None;
    for (ci, class) in classes.iter().enumerate() {
        let (l_base, l_fiber, overridden) = match overrides.get(&ci) {
            Some(v) => {
                let l_base = class
                    .member_bounds
                    .iter()
                    .map(|m| m.l_base)
                    .min()
                    .expect("classes are nonempty");
                (l_base, v.clone(), true)
            }
            None => (class.l_base, class.l_fiber.clone(), false),
        };
        let product =
            BigCount::from(class.nu_upper as u64) * BigCount::from(l_base as u64) * &l_fiber;
        inputs.push((
            format!("class{ci}"),
            format!(
                "{} * {} * {} = {}",
                class.nu_upper, l_base, l_fiber, product
            ),
        ));
        if overridden {
            notes.push(format!(
                "class{ci}: fiber symmetry bound overridden to {l_fiber}"
            ));
        } else if class.profile.fiber_genus >= 1 {
            notes.push(format!(
                "class{ci}: positive-genus fiber uses the curve symmetry bound A({}, {})",
                class.profile.fiber_genus, class.profile.fiber_punctures
            ));
        }
        best = Some(match best {
            None => product,
            Some(b) => b.min(product),
        });
    }
    for (&ci, _) in overrides.range(classes.len()..) {
        notes.push(format!("override for unknown class{ci} ignored"));
    }
    Ok(BoundReport {
        formula_id: "thm4".into(),
        inputs,
        value: best.expect("at least one class"),
        notes,
    })
}

/// End-to-end symmetry-count bound for an arrangement: lattice, nets,
/// census, linear group, orbit classes, then the minimum class product.
pub fn theorem4_exact(
    arr: &Arrangement,
    overrides: &BTreeMap<usize, BigCount>,
) -> Result<BoundReport, AutError> {
    let lat = compute_lattice(arr);
    let nets = all_nets(arr, &lat);
    let cens = census(arr, &lat, &nets);
    if cens.total() == 0 {
        return Err(AutError::EmptyCensus);
    }
    let group = linear_aut_group(arr, &lat)?;
    let classes = component_orbits(arr, &lat, &nets, &cens, &group)?;
    theorem4_report(&classes, overrides)
}
