//! Points, lines and linear maps of the projective plane over `Q(zeta_m)`.
//!
//! Coordinates are stored in canonical form: scaled so that the first
//! nonzero entry is `1`. Equality, hashing and the (arbitrary but fixed)
//! sort order are therefore well-defined on projective classes.

use crate::exactfield::CycloElem;

use super::GeomError;

/// A point of `P^2`, canonicalized up to scale.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjPoint {
    coords: [CycloElem; 3],
}

/// A line of `P^2` given by its coefficient vector, canonicalized up to
/// scale.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjLine {
    coeffs: [CycloElem; 3],
}

fn check_same_order<const N: usize>(v: &[CycloElem; N]) -> Result<u32, GeomError> {
    let order = v[0].order();
    for c in &v[1..] {
        if c.order() != order {
            return Err(GeomError::OrderMismatch(order, c.order()));
        }
    }
    Ok(order)
}

/// Scales a coordinate vector so its first nonzero entry becomes 1.
fn canonicalize<const N: usize>(mut v: [CycloElem; N]) -> Result<[CycloElem; N], GeomError> {
    check_same_order(&v)?;
    let lead = v
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(GeomError::ZeroVector)?;
    let scale = v[lead].inv().expect("nonzero entry");
    for c in v.iter_mut() {
        *c = &*c * &scale;
    }
    Ok(v)
}

fn cross(a: &[CycloElem; 3], b: &[CycloElem; 3]) -> [CycloElem; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn dot(a: &[CycloElem; 3], b: &[CycloElem; 3]) -> CycloElem {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

impl ProjPoint {
    pub fn new(coords: [CycloElem; 3]) -> Result<Self, GeomError> {
        Ok(ProjPoint {
            coords: canonicalize(coords)?,
        })
    }

    pub fn coords(&self) -> &[CycloElem; 3] {
        &self.coords
    }

    pub fn order(&self) -> u32 {
        self.coords[0].order()
    }
}

impl ProjLine {
    pub fn new(coeffs: [CycloElem; 3]) -> Result<Self, GeomError> {
        Ok(ProjLine {
            coeffs: canonicalize(coeffs)?,
        })
    }

    pub fn coeffs(&self) -> &[CycloElem; 3] {
        &self.coeffs
    }

    pub fn order(&self) -> u32 {
        self.coeffs[0].order()
    }

    /// Evaluates the defining linear form at arbitrary coordinates.
    pub fn eval(&self, p: &ProjPoint) -> CycloElem {
        dot(&self.coeffs, p.coords())
    }
}

/// Whether the point lies on the line (exact evaluation of the form).
pub fn incident(p: &ProjPoint, l: &ProjLine) -> Result<bool, GeomError> {
    if p.order() != l.order() {
        return Err(GeomError::OrderMismatch(p.order(), l.order()));
    }
    Ok(l.eval(p).is_zero())
}

/// Intersection point of two distinct lines (cross product of coefficient
/// vectors).
pub fn meet(l1: &ProjLine, l2: &ProjLine) -> Result<ProjPoint, GeomError> {
    if l1.order() != l2.order() {
        return Err(GeomError::OrderMismatch(l1.order(), l2.order()));
    }
    if l1 == l2 {
        return Err(GeomError::CoincidentLines);
    }
    ProjPoint::new(cross(&l1.coeffs, &l2.coeffs))
}

/// Line through two distinct points.
pub fn join(p1: &ProjPoint, p2: &ProjPoint) -> Result<ProjLine, GeomError> {
    if p1.order() != p2.order() {
        return Err(GeomError::OrderMismatch(p1.order(), p2.order()));
    }
    if p1 == p2 {
        return Err(GeomError::CoincidentPoints);
    }
    ProjLine::new(cross(&p1.coords, &p2.coords))
}

/// An invertible projective-linear map of `P^2`, canonicalized up to scale.
/// Acts on points by the matrix and on lines by the transposed adjugate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ProjMap {
    m: [[CycloElem; 3]; 3],
}

fn det3(m: &[[CycloElem; 3]; 3]) -> CycloElem {
    let c = cross(&m[1], &m[2]);
    dot(&m[0], &c)
}

/// Adjugate of a 3x3 matrix: `adj(M) * M = det(M) * I`.
fn adjugate(m: &[[CycloElem; 3]; 3]) -> [[CycloElem; 3]; 3] {
    // Rows of the adjugate are cross products of the columns of M.
    let col = |j: usize| -> [CycloElem; 3] { [m[0][j].clone(), m[1][j].clone(), m[2][j].clone()] };
    let (c0, c1, c2) = (col(0), col(1), col(2));
    [cross(&c1, &c2), cross(&c2, &c0), cross(&c0, &c1)]
}

fn mat_apply(m: &[[CycloElem; 3]; 3], v: &[CycloElem; 3]) -> [CycloElem; 3] {
    [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)]
}

fn mat_mul(a: &[[CycloElem; 3]; 3], b: &[[CycloElem; 3]; 3]) -> [[CycloElem; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = &a[i][0] * &b[0][j];
            acc = &acc + &(&a[i][1] * &b[1][j]);
            &acc + &(&a[i][2] * &b[2][j])
        })
    })
}

impl ProjMap {
    pub fn new(rows: [[CycloElem; 3]; 3]) -> Result<Self, GeomError> {
        let flat: [CycloElem; 9] = {
            let mut it = rows.iter().flatten().cloned();
            std::array::from_fn(|_| it.next().unwrap())
        };
        check_same_order(&flat)?;
        if det3(&rows).is_zero() {
            return Err(GeomError::SingularMatrix);
        }
        Ok(ProjMap {
            m: Self::scale_rows(rows),
        })
    }

    fn scale_rows(mut rows: [[CycloElem; 3]; 3]) -> [[CycloElem; 3]; 3] {
        let lead = rows
            .iter()
            .flatten()
            .find(|c| !c.is_zero())
            .expect("nonsingular matrix")
            .inv()
            .expect("nonzero entry");
        for r in rows.iter_mut() {
            for c in r.iter_mut() {
                *c = &*c * &lead;
            }
        }
        rows
    }

    pub fn identity(order: u32) -> Self {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if i == j {
                    CycloElem::one(order)
                } else {
                    CycloElem::zero(order)
                }
            })
        });
        ProjMap { m }
    }

    pub fn order(&self) -> u32 {
        self.m[0][0].order()
    }

    pub fn rows(&self) -> &[[CycloElem; 3]; 3] {
        &self.m
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(mat_apply(&self.m, p.coords())).expect("invertible map")
    }

    /// Image of a line: coefficient vectors transform by the transposed
    /// adjugate, so that incidence is preserved.
    pub fn apply_line(&self, l: &ProjLine) -> ProjLine {
        let adj = adjugate(&self.m);
        // (adj^T) * l  ==  l applied to columns of adj.
        let v = [
            dot(
                &[adj[0][0].clone(), adj[1][0].clone(), adj[2][0].clone()],
                &l.coeffs,
            ),
            dot(
                &[adj[0][1].clone(), adj[1][1].clone(), adj[2][1].clone()],
                &l.coeffs,
            ),
            dot(
                &[adj[0][2].clone(), adj[1][2].clone(), adj[2][2].clone()],
                &l.coeffs,
            ),
        ];
        ProjLine::new(v).expect("invertible map")
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &ProjMap) -> ProjMap {
        ProjMap {
            m: Self::scale_rows(mat_mul(&self.m, &other.m)),
        }
    }

    pub fn inverse(&self) -> ProjMap {
        ProjMap {
            m: Self::scale_rows(adjugate(&self.m)),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == ProjMap::identity(self.order())
    }
}

/// The unique projective-linear map sending one ordered quadruple of points
/// in general position (no three collinear) to another.
pub fn map_from_quadruples(
    src: &[ProjPoint; 4],
    dst: &[ProjPoint; 4],
) -> Result<ProjMap, GeomError> {
    let order = src[0].order();
    for p in src.iter().chain(dst.iter()) {
        if p.order() != order {
            return Err(GeomError::OrderMismatch(order, p.order()));
        }
    }
    let a = simplex_to_quadruple(src)?;
    let b = simplex_to_quadruple(dst)?;
    // dst <- simplex <- src; the inverse is the adjugate up to scale.
    let m = mat_mul(&b, &adjugate(&a));
    let map = ProjMap::new(m)?;
    debug_assert!((0..4).all(|i| map.apply_point(&src[i]) == dst[i]));
    Ok(map)
}

/// Matrix taking the standard simplex `e1, e2, e3, (1:1:1)` to the given
/// quadruple; columns are the first three points scaled so they sum to the
/// fourth. Fails iff some three of the points are collinear.
fn simplex_to_quadruple(q: &[ProjPoint; 4]) -> Result<[[CycloElem; 3]; 3], GeomError> {
    let cols: Vec<&[CycloElem; 3]> = (0..3).map(|i| q[i].coords()).collect();
    let m: [[CycloElem; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone()));
    let d = det3(&[
        [m[0][0].clone(), m[0][1].clone(), m[0][2].clone()],
        [m[1][0].clone(), m[1][1].clone(), m[1][2].clone()],
        [m[2][0].clone(), m[2][1].clone(), m[2][2].clone()],
    ]);
    if d.is_zero() {
        return Err(GeomError::DegenerateQuadruple);
    }
    // Solve [q1 q2 q3] * lambda = q4 by the adjugate (exact, up to det).
    let adj = adjugate(&m);
    let lambda = mat_apply(&adj, q[3].coords());
    if lambda.iter().any(CycloElem::is_zero) {
        return Err(GeomError::DegenerateQuadruple);
    }
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| &m[i][j] * &lambda[j])
    }))
}
