//! Exact-arithmetic analysis of complements of line arrangements in the
//! complex projective plane.
//!
//! Everything is computed over a cyclotomic number field `Q(zeta_m)` with
//! arbitrary-precision rational coordinates; no floating point enters any
//! result. The crate computes:
//!
//! * intersection lattices and Euler characteristics of complements,
//! * fibrations onto punctured curves (point projections and net pencils),
//! * the census of positive-dimensional translated components of the
//!   characteristic variety through the identity character,
//! * linear automorphism groups of arrangements, and
//! * effective upper bounds for the number of dominant maps onto such
//!   complements, down to exact sharp values for the builtin examples.
//!
//! The `parallel` feature (on by default) runs the embarrassingly parallel
//! inner loops on a rayon pool; results are canonically sorted afterwards, so
//! output is identical with and without it.

pub mod analysis;
pub mod arrangement;
pub mod autgroup;
pub mod bounds;
pub mod exactfield;
pub mod fibration;
pub mod projgeom;

mod exec;
