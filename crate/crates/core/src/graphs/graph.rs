use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::GraphError;

/// A simple undirected graph on vertices `1..=n`.
///
/// Edges are stored as ordered pairs `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// The JSON shape `{"n": 4, "edges": [[1, 2], ...]}`.
#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, GraphError> {
        Graph::new(raw.n, raw.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl Graph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            if a < 1 || b < 1 || a > n || b > n {
                let bad = if a < 1 || a > n { a } else { b };
                return Err(GraphError::VertexOutOfRange(bad, n));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(GraphError::DuplicateEdge(a.min(b), a.max(b)));
            }
        }
        Ok(Graph { n, edges: set })
    }

    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::TooFewVertices("path", 1));
        }
        Graph::new(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooFewVertices("cycle", 3));
        }
        Graph::new(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)]))
    }

    /// `K_{m,n}` with parts `1..=m` and `m+1..=m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self, GraphError> {
        if m < 1 || n < 1 {
            return Err(GraphError::TooFewVertices("complete bipartite part", 1));
        }
        Graph::new(
            m + n,
            (1..=m).flat_map(|a| (m + 1..=m + n).map(move |b| (a, b))),
        )
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::TooFewVertices("complete graph", 1));
        }
        Graph::new(n, (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))))
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let k = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + k, b + k)));
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| match v {
                _ if a == v => Some(b),
                _ if b == v => Some(a),
                _ => None,
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Restriction to `vertices`, relabeled `1..=|S|` in increasing order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let set: BTreeSet<usize> = vertices.iter().copied().collect();
        if set.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if let Some(&v) = set.iter().find(|&&v| v < 1 || v > self.n) {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        let label: Vec<usize> = set.iter().copied().collect();
        let pos = |v: usize| label.binary_search(&v).ok().map(|p| p + 1);
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((pos(a)?, pos(b)?)));
        Graph::new(label.len(), edges)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                for w in self.neighbors(comp[k]) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components, each relabeled `1..=k`.
    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_vertex_sets()
            .iter()
            .map(|vs| {
                self.induced_subgraph(vs)
                    .expect("component vertices are valid")
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_vertex_sets().len() == 1
    }

    /// A 2-coloring of a connected or disconnected graph, if one exists.
    /// Returns the vertex sets colored 0 and 1; the lowest vertex of each
    /// component gets color 0.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![None; self.n + 1];
        for comp in self.component_vertex_sets() {
            color[comp[0]] = Some(false);
            let mut stack = vec![comp[0]];
            while let Some(v) = stack.pop() {
                let c = color[v].expect("colored before push");
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let left = (1..=self.n).filter(|&v| color[v] == Some(false)).collect();
        let right = (1..=self.n).filter(|&v| color[v] == Some(true)).collect();
        Some((left, right))
    }

    /// Same graph with vertex `v` renamed to `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation);
        }
        let mut check: Vec<usize> = perm.to_vec();
        check.sort_unstable();
        if check != (1..=self.n).collect::<Vec<_>>() {
            return Err(GraphError::BadPermutation);
        }
        Graph::new(
            self.n,
            self.edges.iter().map(|&(a, b)| (perm[a - 1], perm[b - 1])),
        )
    }

    /// Descriptor string in the `edges:`/`union:` grammar that parses back to
    /// this graph.
    pub fn to_descriptor(&self) -> String {
        let top = self.edges.iter().map(|&(_, b)| b).max().unwrap_or(0);
        let listed = if self.edges.is_empty() {
            "path:1".to_string()
        } else {
            let body: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            format!("edges:{}", body.join(","))
        };
        let covered = top.max(1);
        if covered >= self.n {
            return listed;
        }
        let mut s = format!("union:({listed})");
        for _ in covered..self.n {
            s.push_str("+(path:1)");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_path() {
        let p = Graph::path(2).unwrap();
        assert_eq!(p.n(), 2);
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn invalid_graphs() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::new(3, [(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge(1, 2))
        );
        assert!(matches!(
            Graph::new(3, [(1, 4)]),
            Err(GraphError::VertexOutOfRange(4, 3))
        ));
        assert!(Graph::path(0).is_err());
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn union_offsets_right_operand() {
        let g = Graph::path(2)
            .unwrap()
            .disjoint_union(&Graph::cycle(3).unwrap());
        assert_eq!(g.n(), 5);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(1, 2), (3, 4), (3, 5), (4, 5)]
        );
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.induced_subgraph(&[1, 2, 4]).unwrap(),
            Graph::cycle(3).unwrap()
        );
        // diamond of the case analysis restricted to {1,3,4}
        let g3 = Graph::new(4, [(1, 2), (2, 3), (2, 4), (1, 4), (3, 4)]).unwrap();
        assert_eq!(
            g3.induced_subgraph(&[1, 3, 4]).unwrap(),
            Graph::new(3, [(1, 3), (2, 3)]).unwrap()
        );
        // paw restricted to its triangle
        let paw = Graph::new(4, [(1, 2), (2, 3), (2, 4), (1, 3)]).unwrap();
        assert_eq!(
            paw.induced_subgraph(&[1, 2, 3]).unwrap(),
            Graph::cycle(3).unwrap()
        );

        assert_eq!(k4.induced_subgraph(&[]), Err(GraphError::EmptyVertexSet));
        assert_eq!(
            k4.induced_subgraph(&[5]),
            Err(GraphError::VertexOutOfRange(5, 4))
        );
        assert_eq!(k4.induced_subgraph(&[1, 2, 3, 4]).unwrap(), k4);
    }

    #[test]
    fn components() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.connected_components(), vec![c5.clone()]);
        let g = Graph::path(2)
            .unwrap()
            .disjoint_union(&Graph::cycle(3).unwrap());
        assert_eq!(
            g.connected_components(),
            vec![Graph::path(2).unwrap(), Graph::cycle(3).unwrap()]
        );
        let e = Graph::empty(3);
        assert_eq!(e.connected_components(), vec![Graph::empty(1); 3]);
    }

    #[test]
    fn bipartitions() {
        let (a, b) = Graph::complete_bipartite(2, 3)
            .unwrap()
            .bipartition()
            .unwrap();
        assert_eq!((a, b), (vec![1, 2], vec![3, 4, 5]));
        assert!(Graph::cycle(5).unwrap().bipartition().is_none());
    }

    #[test]
    fn json_shape() {
        let g = Graph::cycle(3).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[1,2],[1,3],[2,3]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }
}
