use std::collections::HashSet;

use super::{Graph, GraphError};

/// Largest vertex count for which canonical forms are computed.
pub const MAX_CANONICAL_VERTICES: usize = 8;

/// Largest vertex count accepted by [`enumerate_connected`].
pub const MAX_ENUMERATION_VERTICES: usize = 6;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Adjacency bitstring with pair `(0,1)` as the most significant bit.
fn code_under(adj: &[u32], perm: &[usize], pairs: &[(usize, usize)]) -> u64 {
    // perm maps new position -> old vertex
    let mut code = 0u64;
    for &(a, b) in pairs {
        code = code << 1 | (adj[perm[a]] >> perm[b] & 1) as u64;
    }
    code
}

fn adjacency(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.n()];
    for (a, b) in g.edges() {
        adj[a - 1] |= 1 << (b - 1);
        adj[b - 1] |= 1 << (a - 1);
    }
    adj
}

struct Canonizer {
    pairs: Vec<(usize, usize)>,
    perms: Vec<Vec<usize>>,
}

impl Canonizer {
    fn new(n: usize) -> Self {
        Canonizer {
            pairs: pairs(n),
            perms: permutations(n),
        }
    }

    fn code(&self, adj: &[u32]) -> u64 {
        self.perms
            .iter()
            .map(|p| code_under(adj, p, &self.pairs))
            .min()
            .unwrap_or(0)
    }

    fn graph_from_code(&self, n: usize, code: u64) -> Graph {
        let m = self.pairs.len();
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| code >> (m - 1 - k) & 1 == 1)
            .map(|(_, &(a, b))| (a + 1, b + 1));
        Graph::new(n, edges).expect("pairs are valid edges")
    }
}

/// Lexicographically smallest adjacency bitstring over all relabelings.
/// Two graphs on the same vertex count are isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph) -> Result<u64, GraphError> {
    if g.n() > MAX_CANONICAL_VERTICES {
        return Err(GraphError::TooLarge(g.n(), MAX_CANONICAL_VERTICES));
    }
    Ok(Canonizer::new(g.n()).code(&adjacency(g)))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    Ok(a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_code(a)? == canonical_code(b)?)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Graph, GraphError> {
    if g.n() > MAX_CANONICAL_VERTICES {
        return Err(GraphError::TooLarge(g.n(), MAX_CANONICAL_VERTICES));
    }
    let c = Canonizer::new(g.n());
    Ok(c.graph_from_code(g.n(), c.code(&adjacency(g))))
}

/// One canonical representative per isomorphism class of connected simple
/// graphs on `n` vertices, ordered by edge count and then by code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    if !(1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return Err(GraphError::EnumerationRange(n));
    }
    let canon = Canonizer::new(n);
    let m = canon.pairs.len();
    let mut seen = HashSet::new();
    let mut found: Vec<(usize, u64)> = Vec::new();
    for mask in 0u64..(1 << m) {
        if (mask.count_ones() as usize) < n - 1 {
            continue;
        }
        let g = canon.graph_from_code(n, mask);
        if !g.is_connected() {
            continue;
        }
        let code = canon.code(&adjacency(&g));
        if seen.insert(code) {
            found.push((g.edge_count(), code));
        }
    }
    found.sort_unstable();
    Ok(found
        .into_iter()
        .map(|(_, code)| canon.graph_from_code(n, code))
        .collect())
}
