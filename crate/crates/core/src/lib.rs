//! Exact computer algebra for the enhanced mirror quintic with a pair of
//! Deligne conics.
//!
//! The crate derives the Gauss-Manin connection of the relative cohomology
//! in the nine moduli coordinates `s0..s8`, solves for the modular vector
//! field together with the Yukawa coupling `Y` and the disk function `F`,
//! integrates the vector field as a Puiseux series in `q`, and reads off
//! closed and open instanton numbers.
//!
//! Modules, bottom-up:
//!
//! * [`numfield`]: the coefficient field ℚ(√5)
//! * [`series`]: truncated Puiseux series, θ-derivation, Lambert inversion
//! * [`symca`]: polynomials and rational functions in the moduli coordinates,
//!   matrices, one-forms and vector fields
//! * [`gmconn`]: Picard-Fuchs data and the connection chain `B1 → B2 → A`
//! * [`perioddom`]: the gauge group `G`, its action, τ-normalization
//! * [`modsolver`]: seeds, order-by-order integration, invariants, φ
//! * [`cache`]: on-disk solution bundles
//! * [`report`]: PASS/FAIL verification reports

pub mod cache;
pub mod error;
pub mod gmconn;
pub mod modsolver;
pub mod numfield;
pub mod perioddom;
pub mod report;
pub mod series;
pub mod symca;

pub use error::{Error, Result};
pub use numfield::{Field, QuadRat};
