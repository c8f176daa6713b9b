use std::fmt;

use serde::{Deserialize, Serialize};

use crate::betti::{is_pure, BettiTable};
use crate::graphs::{classify_pure, enumerate_connected};

use super::{VerifyError, VerifyOptions};

/// Computed purity of one graph. Serializes as `true`, `false` or
/// `"window-bounded"` (no impurity inside the window, but the table was
/// not certified complete).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Computed {
    Decided(bool),
    Bounded(WindowBounded),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WindowBounded {
    #[serde(rename = "window-bounded")]
    WindowBounded,
}

impl Computed {
    /// Purity as observed inside the window.
    pub fn pure_in_window(self) -> bool {
        !matches!(self, Computed::Decided(false))
    }
}

impl fmt::Display for Computed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Computed::Decided(true) => "pure",
            Computed::Decided(false) => "impure",
            Computed::Bounded(_) => "pure in window",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    /// Graph descriptor.
    pub graph: String,
    pub predicted: bool,
    pub computed: Computed,
    pub window: (usize, usize),
    pub witnesses: Vec<((usize, usize), (usize, usize))>,
    pub agrees: bool,
    /// Full table, kept only for disagreements.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<BettiTable>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub graphs: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub predicted_pure: usize,
    pub window_bounded: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub n_max: usize,
    pub window: (usize, usize),
    pub records: Vec<SweepRecord>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.summary.disagreements == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "== sweep: connected graphs on <= {} vertices, window {:?} ==",
            self.n_max, self.window
        )?;
        let width = self
            .records
            .iter()
            .map(|r| r.graph.len())
            .max()
            .unwrap_or(0);
        for r in &self.records {
            let tag = if r.agrees { "ok  " } else { "FAIL" };
            write!(
                f,
                "{tag}  {:<width$}  predicted {:<6} computed {}",
                r.graph,
                if r.predicted { "pure" } else { "impure" },
                r.computed
            )?;
            if let Some(w) = r.witnesses.first() {
                write!(f, "  witness {:?} {:?}", w.0, w.1)?;
            }
            writeln!(f)?;
            if let Some(t) = &r.table {
                writeln!(f, "{t}")?;
            }
        }
        let s = &self.summary;
        write!(
            f,
            "agreement {}/{} ({} predicted pure, {} window-bounded)",
            s.agreements, s.graphs, s.predicted_pure, s.window_bounded
        )
    }
}

/// Classifier against computed purity for every connected isomorphism
/// class on `1..=n_max` vertices. `i_max` is cut to the number of
/// variables of each ring. Records follow the enumeration order.
pub fn sweep(
    n_max: usize,
    window: (usize, usize),
    opts: &VerifyOptions,
) -> Result<SweepReport, VerifyError> {
    let mut records = Vec::new();
    for n in 1..=n_max {
        for g in enumerate_connected(n)? {
            let graph = g.to_descriptor();
            log::info!("sweep: {graph}");
            let t = opts.graph_table(&g, window.0, window.1)?;
            let predicted = classify_pure(&g).pure;
            let v = is_pure(&t);
            let computed = match (v.pure, t.is_complete()) {
                (true, false) => Computed::Bounded(WindowBounded::WindowBounded),
                (pure, _) => Computed::Decided(pure),
            };
            let agrees = predicted == computed.pure_in_window();
            records.push(SweepRecord {
                graph,
                predicted,
                computed,
                window: t.window(),
                witnesses: v.witnesses,
                agrees,
                table: (!agrees).then_some(t),
            });
        }
    }
    let summary = SweepSummary {
        graphs: records.len(),
        agreements: records.iter().filter(|r| r.agrees).count(),
        disagreements: records.iter().filter(|r| !r.agrees).count(),
        predicted_pure: records.iter().filter(|r| r.predicted).count(),
        window_bounded: records
            .iter()
            .filter(|r| matches!(r.computed, Computed::Bounded(_)))
            .count(),
    };
    Ok(SweepReport {
        n_max,
        window,
        records,
        summary,
    })
}
