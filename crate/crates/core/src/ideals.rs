//! Edge ideals of graphs: the parity binomial edge ideal
//! `J_G = (x_i x_j - y_i y_j)`, the binomial edge ideal
//! `(x_i y_j - x_j y_i)`, and the swap `x_i <-> y_i` on one side of a
//! bipartition that carries the second to the first.

use crate::algebra::{AlgebraError, Polynomial, PrimeField, Ring};
use crate::graphs::Graph;
use crate::groebner::Ideal;

/// Which edge ideal to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeIdealKind {
    Parity,
    Binomial,
}

/// The ring `F_p[x_1..x_n, y_1..y_n]` for a graph on `n` vertices.
pub fn graph_ring(g: &Graph, field: PrimeField) -> Result<Ring, AlgebraError> {
    Ring::new(g.n(), field)
}

fn edge_ideal(
    g: &Graph,
    field: PrimeField,
    generator: impl Fn(Ring, usize, usize) -> Polynomial,
) -> Result<Ideal, AlgebraError> {
    let ring = graph_ring(g, field)?;
    let gens = g.edges().map(|(i, j)| generator(ring, i, j)).collect();
    Ok(Ideal::new(ring, gens).expect("generators built in the ring"))
}

/// `J_G`, one generator `x_i x_j - y_i y_j` per edge with `i < j`.
pub fn parity_binomial_edge_ideal(g: &Graph, field: PrimeField) -> Result<Ideal, AlgebraError> {
    edge_ideal(g, field, |r, i, j| {
        let x = r.var_monomial(r.x(i)).mul_var(r.x(j));
        let y = r.var_monomial(r.y(i)).mul_var(r.y(j));
        Polynomial::binomial(r, x, y)
    })
}

/// The binomial edge ideal, one generator `x_i y_j - x_j y_i` per edge
/// with `i < j`.
pub fn binomial_edge_ideal(g: &Graph, field: PrimeField) -> Result<Ideal, AlgebraError> {
    edge_ideal(g, field, |r, i, j| {
        let a = r.var_monomial(r.x(i)).mul_var(r.y(j));
        let b = r.var_monomial(r.x(j)).mul_var(r.y(i));
        Polynomial::binomial(r, a, b)
    })
}

pub fn edge_ideal_of_kind(
    g: &Graph,
    kind: EdgeIdealKind,
    field: PrimeField,
) -> Result<Ideal, AlgebraError> {
    match kind {
        EdgeIdealKind::Parity => parity_binomial_edge_ideal(g, field),
        EdgeIdealKind::Binomial => binomial_edge_ideal(g, field),
    }
}

/// Image of `ideal` under the automorphism exchanging `x_i` and `y_i` for
/// every vertex `i` in `part`. Vertices outside the ring are ignored.
pub fn bipartite_swap(ideal: &Ideal, part: &[usize]) -> Ideal {
    let ring = ideal.ring();
    let mut perm: Vec<usize> = (0..ring.nvars()).collect();
    for &v in part.iter().filter(|&&v| (1..=ring.vertices()).contains(&v)) {
        perm.swap(ring.x(v), ring.y(v));
    }
    ideal.permute_variables(&perm)
}
