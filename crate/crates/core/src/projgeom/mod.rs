//! Exact projective geometry over a cyclotomic field: the plane `P^2` (with
//! points, lines, and projective-linear maps) and the line `P^1` (with
//! Möbius transformations and puncture-set symmetry groups).

mod mobius;
mod plane;

pub use mobius::{mobius_aut_group, mobius_from_triples, MobiusGroup, MobiusMap, P1Point};
pub use plane::{incident, join, map_from_quadruples, meet, ProjLine, ProjMap, ProjPoint};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("mixed cyclotomic orders {0} and {1}")]
    OrderMismatch(u32, u32),
    #[error("zero coordinate vector does not define a projective object")]
    ZeroVector,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("the two lines coincide")]
    CoincidentLines,
    #[error("coincident points")]
    CoincidentPoints,
    #[error("quadruple has three collinear points")]
    DegenerateQuadruple,
    #[error("need at least three points")]
    TooFewPoints,
    #[error("duplicate point in input")]
    DuplicatePoint,
}
