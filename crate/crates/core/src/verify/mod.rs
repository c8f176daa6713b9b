//! Replays the zero/nonzero Betti claims behind the purity classification,
//! the exact-sequence identities for the case graphs, and exhaustive sweeps
//! comparing the classifier against computed tables.

mod claims;
pub mod fixtures;
mod sweep;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::PrimeField;
use crate::betti::{koszul_betti_with, BettiError, BettiOptions, BettiTable};
use crate::graphs::{Graph, GraphError};
use crate::groebner::{GroebnerError, Ideal};
use crate::ideals::parity_binomial_edge_ideal;

pub use claims::{verify_case_graphs, verify_disconnected, verify_exact_sequences, verify_lemmas};
pub use sweep::{sweep, Computed, SweepRecord, SweepReport, SweepSummary, WindowBounded};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Betti(#[from] BettiError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl VerifyError {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, VerifyError::Betti(e) if e.is_resource_cap())
    }
}

/// Settings shared by all verification routines.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub field: PrimeField,
    /// Worker threads for Betti computations; see [`BettiOptions::jobs`].
    pub jobs: usize,
}

impl VerifyOptions {
    fn betti(&self) -> BettiOptions {
        BettiOptions {
            jobs: self.jobs,
            ..BettiOptions::default()
        }
    }

    /// Betti table of `R/I` with `i_max` cut to the number of variables.
    pub(crate) fn table(
        &self,
        ideal: &Ideal,
        i_max: usize,
        j_max: usize,
    ) -> Result<BettiTable, VerifyError> {
        let i_max = i_max.min(ideal.ring().nvars());
        Ok(koszul_betti_with(
            ideal,
            i_max,
            j_max.max(i_max),
            &self.betti(),
        )?)
    }

    pub(crate) fn graph_table(
        &self,
        g: &Graph,
        i_max: usize,
        j_max: usize,
    ) -> Result<BettiTable, VerifyError> {
        let j = parity_binomial_edge_ideal(g, self.field).map_err(GroebnerError::from)?;
        self.table(&j, i_max, j_max)
    }
}

/// One checked statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
}

impl Claim {
    pub fn new(
        name: impl Into<String>,
        expected: impl Into<String>,
        observed: impl ToString,
        passed: bool,
    ) -> Claim {
        Claim {
            name: name.into(),
            expected: expected.into(),
            observed: observed.to_string(),
            passed,
        }
    }
}

/// A titled list of claims.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report {
            title: title.into(),
            claims: Vec::new(),
        }
    }

    pub fn push(&mut self, claim: Claim) {
        self.claims.push(claim);
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        for c in &self.claims {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{tag}  {}: expected {}, observed {}",
                c.name, c.expected, c.observed
            )?;
        }
        let ok = self.claims.iter().filter(|c| c.passed).count();
        write!(f, "{ok}/{} claims hold", self.claims.len())
    }
}
