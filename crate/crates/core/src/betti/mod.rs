//! Graded Betti tables: exact computation by Koszul homology over `F_p`,
//! the complete-intersection and tensor-product formulas, purity, and a
//! Hilbert-function cross-check.

mod grading;
mod hilbert;
mod koszul;
mod monomial_ideal;
mod rank;
mod table;

pub use hilbert::{hilbert_consistency, quotient_basis_in_degree};
pub use koszul::{
    koszul_betti, koszul_betti_with, BettiOptions, DEFAULT_MAX_COLUMNS, DEFAULT_MAX_VARIABLES,
};
pub use table::{ci_betti, is_pure, tensor_betti, BettiTable, PurityVerdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BettiError {
    #[error("homological degree {i_max} exceeds the {nvars} variables")]
    WindowTooLarge { i_max: usize, nvars: usize },
    #[error("window j_max = {j_max} is below i_max = {i_max}")]
    BadWindow { i_max: usize, j_max: usize },
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("{0} variables exceed the cap of {1}")]
    TooManyVariables(usize, usize),
    #[error("{what} is {size}, above the cap of {cap}")]
    ResourceCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("entry ({0}, {1}) lies outside the window")]
    OutsideWindow(usize, usize),
    #[error("window does not determine all entries with j <= {d_max}")]
    WindowTooSmall { d_max: usize },
    #[error("invalid Betti table JSON: {0}")]
    Json(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl BettiError {
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            BettiError::ResourceCap { .. } | BettiError::TooManyVariables(..)
        )
    }
}
