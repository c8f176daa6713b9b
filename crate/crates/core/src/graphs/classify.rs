use std::fmt;

use serde::{Deserialize, Serialize};

use super::shape::{detect_shape, GraphShape};
use super::Graph;

/// Which half of the characterization a pure graph satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PureClause {
    /// Edgeless after stripping isolated vertices: the ideal is zero.
    ZeroIdeal,
    CompleteBipartite,
    PathsAndOddCycles,
}

impl fmt::Display for PureClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PureClause::ZeroIdeal => "no edges (zero ideal)",
            PureClause::CompleteBipartite => "complete bipartite graph",
            PureClause::PathsAndOddCycles => "disjoint union of paths and odd cycles",
        })
    }
}

/// Predicted purity of the minimal free resolution of `R/J_G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub pure: bool,
    /// Satisfied clause when `pure`.
    pub clause: Option<PureClause>,
    pub reason: String,
    /// Isolated vertices removed before classifying.
    pub stripped_isolated: usize,
}

/// Classifies a graph by the complete-bipartite / paths-and-odd-cycles
/// characterization. Isolated vertices are stripped first since they do not
/// change `J_G`.
pub fn classify_pure(g: &Graph) -> Classification {
    let isolated = g.isolated_vertices();
    let keep: Vec<usize> = (1..=g.n()).filter(|v| !isolated.contains(v)).collect();
    let note = |s: String| {
        if isolated.is_empty() {
            s
        } else {
            format!("{s}; stripped {} isolated vertices", isolated.len())
        }
    };
    if keep.is_empty() {
        return Classification {
            pure: true,
            clause: Some(PureClause::ZeroIdeal),
            reason: note(PureClause::ZeroIdeal.to_string()),
            stripped_isolated: isolated.len(),
        };
    }
    let core = g
        .induced_subgraph(&keep)
        .expect("kept vertices are in range");
    let components = core.connected_components();
    let shapes: Vec<GraphShape> = components
        .iter()
        .map(|c| detect_shape(c).expect("components are connected"))
        .collect();

    let pure = |clause: PureClause| Classification {
        pure: true,
        clause: Some(clause),
        reason: note(clause.to_string()),
        stripped_isolated: isolated.len(),
    };
    let impure = |why: String| Classification {
        pure: false,
        clause: None,
        reason: note(why),
        stripped_isolated: isolated.len(),
    };

    if matches!(shapes.as_slice(), [GraphShape::CompleteBipartite { .. }]) {
        return pure(PureClause::CompleteBipartite);
    }
    let offending = shapes
        .iter()
        .zip(&components)
        .find(|(s, _)| !matches!(s, GraphShape::Path { .. } | GraphShape::OddCycle { .. }));
    match offending {
        None => pure(PureClause::PathsAndOddCycles),
        Some((s @ GraphShape::CompleteBipartite { .. }, _)) => impure(format!(
            "component {s} is complete bipartite but not the only component"
        )),
        Some((GraphShape::Other, c)) => impure(format!(
            "component {} is neither a path, an odd cycle nor a complete bipartite graph",
            c.to_descriptor()
        )),
        Some((s, _)) => impure(format!(
            "component {s} ({}) is neither a path, an odd cycle nor a complete bipartite graph",
            s.tag()
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(s: &str) -> Classification {
        classify_pure(&s.parse::<Graph>().unwrap())
    }

    #[test]
    fn classifier_examples() {
        let c = verdict("kbip:2,3");
        assert!(c.pure);
        assert_eq!(c.clause, Some(PureClause::CompleteBipartite));

        let c = verdict("union:(path:2)+(cycle:3)");
        assert!(c.pure);
        assert_eq!(c.reason, "disjoint union of paths and odd cycles");

        let c = verdict("union:(kbip:2,3)+(path:2)");
        assert!(!c.pure);
        assert!(c.reason.contains("not the only component"));

        let c = verdict("cycle:6");
        assert!(!c.pure);
        assert!(c.reason.contains("even cycle"));

        assert!(!verdict("edges:1-2,2-3,2-4,1-3").pure);
        assert!(verdict("union:(path:3)+(cycle:5)").pure);
    }

    #[test]
    fn isolated_vertices_are_stripped() {
        let c = verdict("edges:1-3,1-4,3-4");
        assert!(c.pure);
        assert_eq!(c.stripped_isolated, 1);
        assert!(c.reason.contains("stripped 1 isolated"));

        let c = verdict("union:(path:1)+(path:1)");
        assert!(c.pure);
        assert_eq!(c.clause, Some(PureClause::ZeroIdeal));
    }

    #[test]
    fn agrees_with_shape_on_connected_graphs() {
        for n in 1..=5 {
            for g in crate::graphs::enumerate_connected(n).unwrap() {
                let shape = detect_shape(&g).unwrap();
                let expected = matches!(
                    shape,
                    GraphShape::Path { .. }
                        | GraphShape::OddCycle { .. }
                        | GraphShape::CompleteBipartite { .. }
                );
                assert_eq!(classify_pure(&g).pure, expected, "{}", g.to_descriptor());
            }
        }
    }
}
