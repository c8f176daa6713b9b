//! Named graphs used by the verification harness.
//!
//! Case graphs share one labelling: the vertex `v` added to a smaller graph
//! is `4` for `G_1..G_4` and `5` for `G_5..G_7`.

use crate::graphs::Graph;

fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("fixture graphs are valid")
}

/// Case graph `G_k`, `1 <= k <= 7`.
pub fn case_graph(k: usize) -> Graph {
    match k {
        1 => g(4, &[(1, 2), (2, 3), (2, 4)]),
        2 => g(4, &[(1, 2), (2, 3), (2, 4), (1, 4), (1, 3), (3, 4)]),
        3 => g(4, &[(1, 2), (2, 3), (2, 4), (1, 4), (3, 4)]),
        4 => g(4, &[(1, 2), (2, 3), (2, 4), (1, 3)]),
        5 => g(5, &[(1, 2), (2, 3), (3, 4), (2, 5)]),
        6 => g(5, &[(1, 2), (2, 3), (3, 4), (2, 5), (4, 5)]),
        7 => g(5, &[(1, 2), (2, 3), (3, 4), (2, 5), (4, 5), (1, 4)]),
        _ => panic!("case graphs are numbered 1..=7"),
    }
}

/// A case graph split into two edge-disjoint subgraphs on the same four
/// vertices, with `J_part + J_star = J_whole`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub name: &'static str,
    pub whole: Graph,
    /// Name of the first part as it appears in claims.
    pub part_name: &'static str,
    pub part: Graph,
    /// The claw centred at `2`.
    pub star: Graph,
}

/// The three decompositions of `G_2`, `G_3`, `G_4` used by the exact
/// sequence argument.
pub fn decompositions() -> Vec<Decomposition> {
    let star = g(4, &[(1, 2), (2, 3), (2, 4)]);
    vec![
        Decomposition {
            name: "G2",
            whole: case_graph(2),
            part_name: "C3",
            part: g(4, &[(1, 3), (1, 4), (3, 4)]),
            star: star.clone(),
        },
        Decomposition {
            name: "G3",
            whole: case_graph(3),
            part_name: "P3",
            part: g(4, &[(1, 4), (3, 4)]),
            star: star.clone(),
        },
        Decomposition {
            name: "G4",
            whole: case_graph(4),
            part_name: "P2",
            part: g(4, &[(1, 3)]),
            star,
        },
    ]
}

/// The small graphs whose Betti numbers the lemmas quote, on their own
/// vertex sets.
pub fn lemma_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("P2", Graph::path(2).unwrap()),
        ("P3", Graph::path(3).unwrap()),
        ("P4", Graph::path(4).unwrap()),
        ("C3", Graph::cycle(3).unwrap()),
        ("K13", Graph::complete_bipartite(1, 3).unwrap()),
        ("K22", Graph::complete_bipartite(2, 2).unwrap()),
    ]
}

/// Every graph the harness computes with: lemma graphs, case graphs and
/// the parts of the decompositions.
pub fn all_fixtures() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = lemma_graphs()
        .into_iter()
        .map(|(s, g)| (s.to_string(), g))
        .collect();
    out.extend((1..=7).map(|k| (format!("G{k}"), case_graph(k))));
    for d in decompositions() {
        out.push((format!("{}:{}", d.name, d.part_name), d.part));
    }
    out.push((
        "K13 centred at 2".to_string(),
        decompositions()[0].star.clone(),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{detect_shape, is_isomorphic, GraphShape};

    #[test]
    fn parts_are_edge_disjoint_and_cover() {
        for d in decompositions() {
            let mut edges: Vec<_> = d.part.edges().chain(d.star.edges()).collect();
            let before = edges.len();
            edges.sort();
            edges.dedup();
            assert_eq!(edges.len(), before, "{}", d.name);
            assert_eq!(edges, d.whole.edges().collect::<Vec<_>>(), "{}", d.name);
        }
    }

    #[test]
    fn recognisable_shapes() {
        assert!(is_isomorphic(&case_graph(1), &Graph::complete_bipartite(1, 3).unwrap()).unwrap());
        assert!(is_isomorphic(&case_graph(2), &Graph::complete(4).unwrap()).unwrap());
        assert_eq!(case_graph(3).edge_count(), 5);
        assert_eq!(detect_shape(&case_graph(4)).unwrap(), GraphShape::Other);
        assert!(is_isomorphic(&case_graph(7), &Graph::complete_bipartite(2, 3).unwrap()).unwrap());
    }
}
