use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Recognized shape of a connected graph.
///
/// When several shapes apply, the first in the order path, cycle, complete
/// bipartite, complete wins. The one exception is `C_4`, which is reported
/// as `K_{2,2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum GraphShape {
    /// Vertices listed in path order.
    Path {
        order: Vec<usize>,
    },
    OddCycle {
        length: usize,
    },
    EvenCycle {
        length: usize,
    },
    /// Parts with `left.len() <= right.len()`.
    CompleteBipartite {
        left: Vec<usize>,
        right: Vec<usize>,
    },
    Complete {
        n: usize,
    },
    Other,
}

impl GraphShape {
    pub fn tag(&self) -> &'static str {
        match self {
            GraphShape::Path { .. } => "path",
            GraphShape::OddCycle { .. } => "odd cycle",
            GraphShape::EvenCycle { .. } => "even cycle",
            GraphShape::CompleteBipartite { .. } => "complete bipartite",
            GraphShape::Complete { .. } => "complete",
            GraphShape::Other => "other",
        }
    }
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphShape::Path { order } => write!(f, "P_{}", order.len()),
            GraphShape::OddCycle { length } | GraphShape::EvenCycle { length } => {
                write!(f, "C_{length}")
            }
            GraphShape::CompleteBipartite { left, right } => {
                write!(f, "K_{{{},{}}}", left.len(), right.len())
            }
            GraphShape::Complete { n } => write!(f, "K_{n}"),
            GraphShape::Other => f.write_str("other"),
        }
    }
}

fn path_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 1 {
        return Some(vec![1]);
    }
    if g.edge_count() != n - 1 || (1..=n).any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = (1..=n).find(|&v| g.degree(v) == 1)?;
    let mut order = vec![start];
    let mut prev = 0;
    let mut cur = start;
    while let Some(next) = g.neighbors(cur).into_iter().find(|&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    (order.len() == n).then_some(order)
}

fn complete_bipartite_parts(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let (a, b) = g.bipartition()?;
    if a.is_empty() || b.is_empty() || a.len() * b.len() != g.edge_count() {
        return None;
    }
    Some(if a.len() <= b.len() { (a, b) } else { (b, a) })
}

/// Shape of a connected graph. Precedence: path, then cycles (except
/// `C_4`, which is reported as `K_{2,2}`), then complete bipartite, then
/// complete.
pub fn detect_shape(g: &Graph) -> Result<GraphShape, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if let Some(order) = path_order(g) {
        return Ok(GraphShape::Path { order });
    }
    let n = g.n();
    let is_cycle = n >= 3 && g.edge_count() == n && (1..=n).all(|v| g.degree(v) == 2);
    if is_cycle && n != 4 {
        return Ok(if n % 2 == 1 {
            GraphShape::OddCycle { length: n }
        } else {
            GraphShape::EvenCycle { length: n }
        });
    }
    if let Some((left, right)) = complete_bipartite_parts(g) {
        return Ok(GraphShape::CompleteBipartite { left, right });
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return Ok(GraphShape::Complete { n });
    }
    Ok(GraphShape::Other)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(
            detect_shape(&Graph::cycle(5).unwrap()).unwrap(),
            GraphShape::OddCycle { length: 5 }
        );
        assert_eq!(
            detect_shape(&Graph::cycle(4).unwrap()).unwrap(),
            GraphShape::CompleteBipartite {
                left: vec![1, 3],
                right: vec![2, 4]
            }
        );
        assert_eq!(
            detect_shape(&Graph::cycle(6).unwrap()).unwrap(),
            GraphShape::EvenCycle { length: 6 }
        );
        let paw: Graph = "edges:1-2,2-3,2-4,1-3".parse().unwrap();
        assert_eq!(detect_shape(&paw).unwrap(), GraphShape::Other);
        assert_eq!(
            detect_shape(&Graph::complete(4).unwrap()).unwrap(),
            GraphShape::Complete { n: 4 }
        );
        assert_eq!(
            detect_shape(&Graph::complete(3).unwrap()).unwrap(),
            GraphShape::OddCycle { length: 3 }
        );
    }

    #[test]
    fn small_complete_bipartite_are_paths() {
        for (m, n) in [(1, 1), (1, 2)] {
            let g = Graph::complete_bipartite(m, n).unwrap();
            assert!(matches!(detect_shape(&g).unwrap(), GraphShape::Path { .. }));
        }
        let star = Graph::complete_bipartite(1, 3).unwrap();
        assert_eq!(
            detect_shape(&star).unwrap(),
            GraphShape::CompleteBipartite {
                left: vec![1],
                right: vec![2, 3, 4]
            }
        );
    }

    #[test]
    fn path_order_follows_edges() {
        let g: Graph = "edges:2-3,1-3".parse().unwrap();
        assert_eq!(
            detect_shape(&g).unwrap(),
            GraphShape::Path {
                order: vec![1, 3, 2]
            }
        );
        assert_eq!(
            detect_shape(&Graph::path(1).unwrap()).unwrap(),
            GraphShape::Path { order: vec![1] }
        );
    }

    #[test]
    fn disconnected_rejected() {
        let g: Graph = "union:(path:2)+(path:2)".parse().unwrap();
        assert_eq!(detect_shape(&g), Err(GraphError::Disconnected));
    }
}
