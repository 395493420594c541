//! The projective line over `Q(zeta_m)` and its Möbius transformations,
//! including the exact symmetry group of a finite puncture set.

use std::collections::BTreeSet;

use crate::exactfield::CycloElem;
use crate::exec;

use super::GeomError;

/// A point of `P^1`, canonicalized so its first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct P1Point {
    coords: [CycloElem; 2],
}

impl P1Point {
    pub fn new(coords: [CycloElem; 2]) -> Result<Self, GeomError> {
        let order = coords[0].order();
        if coords[1].order() != order {
            return Err(GeomError::OrderMismatch(order, coords[1].order()));
        }
        let mut c = coords;
        let lead = c
            .iter()
            .position(|x| !x.is_zero())
            .ok_or(GeomError::ZeroVector)?;
        let scale = c[lead].inv().expect("nonzero entry");
        for x in c.iter_mut() {
            *x = &*x * &scale;
        }
        Ok(P1Point { coords: c })
    }

    /// The affine point `(t : 1)`.
    pub fn from_affine(t: CycloElem) -> Self {
        let one = CycloElem::one(t.order());
        P1Point::new([t, one]).expect("affine point")
    }

    pub fn from_int(order: u32, t: i64) -> Self {
        Self::from_affine(CycloElem::from_int(order, t))
    }

    /// The point at infinity `(1 : 0)`.
    pub fn infinity(order: u32) -> Self {
        P1Point {
            coords: [CycloElem::one(order), CycloElem::zero(order)],
        }
    }

    pub fn coords(&self) -> &[CycloElem; 2] {
        &self.coords
    }

    pub fn order(&self) -> u32 {
        self.coords[0].order()
    }
}

/// `x0*y1 - x1*y0`; zero iff the two points coincide.
fn bracket(x: &P1Point, y: &P1Point) -> CycloElem {
    &(&x.coords[0] * &y.coords[1]) - &(&x.coords[1] * &y.coords[0])
}

/// An invertible Möbius transformation (2x2 matrix up to scale, canonical
/// form scales the first nonzero entry to 1).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MobiusMap {
    m: [[CycloElem; 2]; 2],
}

impl MobiusMap {
    pub fn new(m: [[CycloElem; 2]; 2]) -> Result<Self, GeomError> {
        let order = m[0][0].order();
        for r in &m {
            for c in r {
                if c.order() != order {
                    return Err(GeomError::OrderMismatch(order, c.order()));
                }
            }
        }
        let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
        if det.is_zero() {
            return Err(GeomError::SingularMatrix);
        }
        Ok(MobiusMap { m: Self::scale(m) })
    }

    fn scale(mut m: [[CycloElem; 2]; 2]) -> [[CycloElem; 2]; 2] {
        let lead = m
            .iter()
            .flatten()
            .find(|c| !c.is_zero())
            .expect("nonzero matrix")
            .inv()
            .expect("nonzero entry");
        for r in m.iter_mut() {
            for c in r.iter_mut() {
                *c = &*c * &lead;
            }
        }
        m
    }

    pub fn identity(order: u32) -> Self {
        MobiusMap {
            m: [
                [CycloElem::one(order), CycloElem::zero(order)],
                [CycloElem::zero(order), CycloElem::one(order)],
            ],
        }
    }

    pub fn order_of_field(&self) -> u32 {
        self.m[0][0].order()
    }

    pub fn entries(&self) -> &[[CycloElem; 2]; 2] {
        &self.m
    }

    pub fn apply(&self, p: &P1Point) -> P1Point {
        let u = &(&self.m[0][0] * &p.coords[0]) + &(&self.m[0][1] * &p.coords[1]);
        let v = &(&self.m[1][0] * &p.coords[0]) + &(&self.m[1][1] * &p.coords[1]);
        P1Point::new([u, v]).expect("invertible map")
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        let a = &self.m;
        let b = &other.m;
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]))
        });
        MobiusMap { m: Self::scale(m) }
    }

    pub fn inverse(&self) -> MobiusMap {
        let m = &self.m;
        MobiusMap {
            m: Self::scale([[m[1][1].clone(), -&m[0][1]], [-&m[1][0], m[0][0].clone()]]),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == MobiusMap::identity(self.order_of_field())
    }
}

/// Matrix sending `(a, b, c)` to `(0, 1, infinity)`; the three points must be
/// pairwise distinct.
fn to_standard_triple(a: &P1Point, b: &P1Point, c: &P1Point) -> Result<MobiusMap, GeomError> {
    let bc = bracket(b, c);
    let ba = bracket(b, a);
    if bc.is_zero() || ba.is_zero() || bracket(a, c).is_zero() {
        return Err(GeomError::CoincidentPoints);
    }
    MobiusMap::new([
        [&bc * &a.coords[1], -&(&bc * &a.coords[0])],
        [&ba * &c.coords[1], -&(&ba * &c.coords[0])],
    ])
}

/// The unique Möbius transformation sending one ordered triple of distinct
/// points to another.
pub fn mobius_from_triples(src: &[P1Point; 3], dst: &[P1Point; 3]) -> Result<MobiusMap, GeomError> {
    let order = src[0].order();
    for p in src.iter().chain(dst.iter()) {
        if p.order() != order {
            return Err(GeomError::OrderMismatch(order, p.order()));
        }
    }
    let ms = to_standard_triple(&src[0], &src[1], &src[2])?;
    let md = to_standard_triple(&dst[0], &dst[1], &dst[2])?;
    let map = md.inverse().compose(&ms);
    debug_assert!((0..3).all(|i| map.apply(&src[i]) == dst[i]));
    Ok(map)
}

/// The full group of Möbius transformations permuting a finite puncture set,
/// as a canonically sorted list of maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusGroup {
    elements: Vec<MobiusMap>,
}

impl MobiusGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[MobiusMap] {
        &self.elements
    }

    pub fn contains(&self, m: &MobiusMap) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    /// Exhaustively checks the group axioms on the element list: identity,
    /// inverses, closure under composition.
    pub fn verify(&self) -> bool {
        let order = match self.elements.first() {
            Some(m) => m.order_of_field(),
            None => return false,
        };
        if !self.contains(&MobiusMap::identity(order)) {
            return false;
        }
        self.elements.iter().all(|g| self.contains(&g.inverse()))
            && self
                .elements
                .iter()
                .all(|g| self.elements.iter().all(|h| self.contains(&g.compose(h))))
    }
}

/// Computes the symmetry group of a set of at least three pairwise distinct
/// punctures on `P^1`.
///
/// Every symmetry is determined by the images of the first three punctures
/// (in input order), so all ordered triples of punctures are tried as images
/// and the maps that permute the whole set are kept. The result is sorted
/// canonically and its group axioms are verified exhaustively.
pub fn mobius_aut_group(punctures: &[P1Point]) -> Result<MobiusGroup, GeomError> {
    if punctures.len() < 3 {
        return Err(GeomError::TooFewPoints);
    }
    let order = punctures[0].order();
    for p in punctures {
        if p.order() != order {
            return Err(GeomError::OrderMismatch(order, p.order()));
        }
    }
    let set: BTreeSet<&P1Point> = punctures.iter().collect();
    if set.len() != punctures.len() {
        return Err(GeomError::DuplicatePoint);
    }
    let src = [
        punctures[0].clone(),
        punctures[1].clone(),
        punctures[2].clone(),
    ];
    let n = punctures.len();
    let mut triples = Vec::with_capacity(n * (n - 1) * (n - 2));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i != j && j != k && i != k {
                    triples.push((i, j, k));
                }
            }
        }
    }
    let found = exec::filter_map_collect(triples, |(i, j, k)| {
        let dst = [
            punctures[i].clone(),
            punctures[j].clone(),
            punctures[k].clone(),
        ];
        let map = mobius_from_triples(&src, &dst).expect("distinct triples");
        let permutes = punctures.iter().all(|p| {
            let q = map.apply(p);
            punctures.contains(&q)
        });
        permutes.then_some(map)
    });
    let mut elements: Vec<MobiusMap> = found
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    elements.sort();
    let group = MobiusGroup { elements };
    assert!(group.verify(), "puncture symmetries failed group axioms");
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::parse_cyclo;

    fn p(order: u32, t: i64) -> P1Point {
        P1Point::from_int(order, t)
    }

    fn pz(order: u32, s: &str) -> P1Point {
        P1Point::from_affine(parse_cyclo(s, order).unwrap())
    }

    #[test]
    fn canonicalization_on_the_line() {
        let two = CycloElem::from_int(1, 2);
        let four = CycloElem::from_int(1, 4);
        assert_eq!(
            P1Point::new([two, four]).unwrap(),
            P1Point::new([CycloElem::one(1), CycloElem::from_int(1, 2)]).unwrap()
        );
        assert_eq!(
            P1Point::new([CycloElem::from_int(1, 3), CycloElem::zero(1)]).unwrap(),
            P1Point::infinity(1)
        );
    }

    #[test]
    fn triple_map_is_exact() {
        let src = [p(1, 0), p(1, 1), P1Point::infinity(1)];
        let dst = [p(1, 3), p(1, 5), p(1, -2)];
        let m = mobius_from_triples(&src, &dst).unwrap();
        for i in 0..3 {
            assert_eq!(m.apply(&src[i]), dst[i]);
        }
        assert!(m.compose(&m.inverse()).is_identity());
    }

    #[test]
    fn standard_triple_has_full_symmetry() {
        // {0, 1, infinity} is permuted by all six anharmonic maps.
        let g = mobius_aut_group(&[p(1, 0), p(1, 1), P1Point::infinity(1)]).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn generic_quadruple_has_klein_symmetry() {
        let g = mobius_aut_group(&[p(1, 0), p(1, 1), p(1, 5), P1Point::infinity(1)]).unwrap();
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn equianharmonic_quadruple_has_twelve_symmetries() {
        // {1, 0, z, z^2} over Q(zeta_3) is the equianharmonic orbit.
        let pts = [pz(3, "1"), pz(3, "0"), pz(3, "z"), pz(3, "z^2")];
        let g = mobius_aut_group(&pts).unwrap();
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn group_is_invariant_under_input_rotation() {
        let pts = [p(1, 0), p(1, 1), p(1, 5), P1Point::infinity(1)];
        let rotated = [P1Point::infinity(1), p(1, 0), p(1, 1), p(1, 5)];
        let a = mobius_aut_group(&pts).unwrap();
        let b = mobius_aut_group(&rotated).unwrap();
        assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn conjugation_preserves_group_order() {
        let pts = [pz(3, "1"), pz(3, "0"), pz(3, "z"), pz(3, "z^2")];
        let t = MobiusMap::new([
            [parse_cyclo("1", 3).unwrap(), parse_cyclo("2", 3).unwrap()],
            [parse_cyclo("z", 3).unwrap(), parse_cyclo("1", 3).unwrap()],
        ])
        .unwrap();
        let moved: Vec<P1Point> = pts.iter().map(|q| t.apply(q)).collect();
        let a = mobius_aut_group(&pts).unwrap();
        let b = mobius_aut_group(&moved).unwrap();
        assert_eq!(a.order(), b.order());
        // The two groups are conjugate by t.
        for g in a.elements() {
            let conj = t.compose(g).compose(&t.inverse());
            assert!(b.contains(&conj));
        }
    }

    #[test]
    fn small_or_duplicated_inputs_are_rejected() {
        assert!(matches!(
            mobius_aut_group(&[p(1, 0), p(1, 1)]),
            Err(GeomError::TooFewPoints)
        ));
        assert!(matches!(
            mobius_aut_group(&[p(1, 0), p(1, 1), p(1, 1)]),
            Err(GeomError::DuplicatePoint)
        ));
        let mixed = [p(1, 0), p(1, 1), P1Point::from_int(3, 2)];
        assert!(matches!(
            mobius_aut_group(&mixed),
            Err(GeomError::OrderMismatch(1, 3))
        ));
    }
}
