//! q-rook and q-hit polynomials of Ferrers boards.
//!
//! The crate computes rook and hit polynomials by several independent routes,
//! counts board-supported matrices of fixed rank over prime fields, evaluates
//! the permutation statistics those polynomials induce, and checks the
//! symmetry and unimodality properties of the hit polynomials.

pub mod boards;
pub mod error;
pub mod ffmat;
pub mod permstat;
pub mod placements;
pub mod qpoly;
pub mod verify;

pub use boards::{BoardSpec, FerrersBoard, Step, StepSpec};
pub use error::{Error, Result};
pub use ffmat::FfMatrix;
pub use permstat::{Family, Word};
pub use placements::{HitMethod, Placement};
pub use qpoly::{BivariatePoly, LaurentPoly};
pub use verify::{StepMethod, Suite, TruncatedSeries};
