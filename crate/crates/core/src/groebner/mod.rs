//! Division, Buchberger's algorithm and the ideal operations built on it:
//! sums, elimination, intersections and minimal generator degrees.

mod buchberger;
mod golden;
mod ideal;
mod reduce;

pub use buchberger::{groebner_basis, is_groebner_basis};
pub use golden::{read_golden, write_golden};
pub use ideal::{eliminate, ideal_intersection, ideal_sum, min_generator_degrees, Ideal};
pub use reduce::{normal_form, s_polynomial};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("malformed golden file: {0}")]
    Golden(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
