//! Fibrations of an arrangement complement onto punctured curves, and the
//! census of positive-dimensional translated components of the
//! characteristic variety that they induce.
//!
//! Two sources of components are covered:
//!
//! * **local**: projection from a point of multiplicity `d >= 3` maps the
//!   complement onto `P^1` minus the `d` directions of the lines through the
//!   point;
//! * **pencil**: a `(k, d)`-net (a partition of the lines into `k` classes
//!   of size `d` such that every point joining different classes lies on one
//!   line of each class) makes the class products `Q_j` members of a pencil
//!   of degree-`d` curves, mapping the complement onto `P^1` minus `k`
//!   points.

mod census;
mod net;
mod pencil;
mod projection;
mod sample;

pub use census::{census, Census, CharComponent, ComponentKind, FiberProfile};
pub use net::{all_nets, net_search, verify_net, Net};
pub use pencil::{pencil_base_punctures, pencil_fibration, sample_pencil_fiber, PencilFibration};
pub use projection::{
    euler_identity_holds, projection_fibration, sample_projection_fiber, special_fibers,
    ProjectionFibration, SpecialFiber,
};
pub use sample::enumerate_field_elements;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FibError {
    #[error("projection center must have multiplicity at least {required}, found {found}")]
    MultiplicityTooLow { required: usize, found: usize },
    #[error("class products do not span a pencil")]
    NotAPencil,
    #[error("base curve is not hyperbolic (euler characteristic must be negative)")]
    NonHyperbolicBase,
}

/// Largest admissible absolute fiber Euler characteristic of a fibration
/// over a hyperbolic base: `floor(e_S / |e_base|)`.
pub fn lemma2_bound(e_s: i64, e_base: i64) -> Result<i64, FibError> {
    if e_base >= 0 {
        return Err(FibError::NonHyperbolicBase);
    }
    debug_assert!(e_s >= 0, "complement euler characteristic must be >= 0");
    Ok(e_s.div_euclid(-e_base))
}
