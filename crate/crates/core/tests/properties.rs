use std::collections::BTreeMap;

use proptest::prelude::*;

use pbei::algebra::{Monomial, Polynomial, PrimeField, Ring};
use pbei::betti::{
    ci_betti, hilbert_consistency, is_pure, koszul_betti, quotient_basis_in_degree, tensor_betti,
    BettiTable,
};
use pbei::graphs::{classify_pure, detect_shape, enumerate_connected, Graph, GraphShape};
use pbei::groebner::{
    ideal_intersection, ideal_sum, min_generator_degrees, normal_form, s_polynomial, Ideal,
};
use pbei::ideals::{binomial_edge_ideal, bipartite_swap, parity_binomial_edge_ideal};
use pbei::verify::fixtures::all_fixtures;

fn field() -> PrimeField {
    PrimeField::default()
}

fn j(g: &Graph) -> Ideal {
    parity_binomial_edge_ideal(g, field()).unwrap()
}

fn full_table(g: &Graph) -> BettiTable {
    let n = 2 * g.n();
    koszul_betti(&j(g), n, n + 4).unwrap()
}

fn graph_on(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            if mask >> k & 1 == 1 {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

#[test]
fn s_pairs_of_fixture_bases_reduce_to_zero() {
    for (name, g) in all_fixtures() {
        let basis = j(&g).groebner_basis().to_vec();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let s = s_polynomial(&basis[a], &basis[b]);
                assert!(normal_form(&s, &basis).is_zero(), "{name}: S({a},{b})");
            }
        }
    }
}

fn random_polynomial(ring: Ring, seed: &[(Vec<u16>, u32)]) -> Polynomial {
    let terms = seed
        .iter()
        .map(|(e, c)| (Monomial::from_exponents(&e[..ring.nvars()]), *c % 32003))
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn term_strategy() -> impl Strategy<Value = Vec<(Vec<u16>, u32)>> {
    prop::collection::vec((prop::collection::vec(0u16..3, 10), any::<u32>()), 0..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    // standardness of the remainder is checked directly against the leading
    // monomials, and linearity against a second random polynomial
    #[test]
    fn normal_form_is_idempotent_and_standard(
        graph in 0usize..4,
        f in term_strategy(),
        g in term_strategy(),
    ) {
        let gr = [
            Graph::complete(4).unwrap(),
            Graph::cycle(5).unwrap(),
            "edges:1-2,2-3,2-4,1-3".parse().unwrap(),
            Graph::complete_bipartite(2, 3).unwrap(),
        ][graph].clone();
        let ideal = j(&gr);
        let basis = ideal.groebner_basis();
        let f = random_polynomial(ideal.ring(), &f);
        let g = random_polynomial(ideal.ring(), &g);
        let r = normal_form(&f, basis);
        prop_assert_eq!(normal_form(&r, basis), r.clone());
        for (m, _) in r.terms() {
            prop_assert!(basis.iter().all(|b| !b.leading_monomial().unwrap().divides(m)));
        }
        prop_assert_eq!(normal_form(&f.add(&g), basis), r.add(&normal_form(&g, basis)));
    }
}

#[test]
fn hilbert_consistency_for_complete_intersections() {
    let fixtures = [
        "path:2",
        "path:3",
        "path:4",
        "path:5",
        "cycle:3",
        "cycle:5",
        "union:(path:2)+(cycle:3)",
        "union:(path:2)+(path:2)",
        "union:(path:3)+(path:2)",
    ];
    for s in fixtures {
        let g: Graph = s.parse().unwrap();
        let ideal = j(&g);
        let k = g.edge_count();
        let ci = ci_betti(k);
        assert_eq!(hilbert_consistency(&ideal, &ci, 8).unwrap(), None, "{s}");
        let t = full_table(&g);
        assert!(t.nonzero().eq(ci.nonzero()), "{s}");
    }
}

/// Connected graphs on at most four vertices paired with induced subgraphs
/// that still have an edge, twenty in a fixed order.
fn induced_pairs() -> Vec<(Graph, Graph)> {
    let mut out = Vec::new();
    for n in (3..=4).rev() {
        for g in enumerate_connected(n).unwrap() {
            for mask in 1u32..(1 << n) - 1 {
                let set: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                let h = g.induced_subgraph(&set).unwrap();
                if h.edge_count() > 0 && out.len() < 20 {
                    out.push((g.clone(), h));
                }
            }
        }
    }
    out
}

#[test]
fn induced_subgraphs_have_smaller_betti_numbers() {
    let pairs = induced_pairs();
    assert_eq!(pairs.len(), 20);
    for (g, h) in pairs {
        let tg = full_table(&g);
        let th = full_table(&h);
        assert!(tg.is_complete() && th.is_complete());
        for ((i, jj), b) in th.nonzero() {
            assert!(
                b <= tg.get(i, jj).unwrap(),
                "{} in {} at ({i},{jj})",
                h.to_descriptor(),
                g.to_descriptor()
            );
        }
    }
}

#[test]
fn tables_do_not_depend_on_the_prime() {
    let small = PrimeField::new(101).unwrap();
    for (name, g) in all_fixtures() {
        let n = 2 * g.n();
        let a = koszul_betti(&j(&g), n.min(8), 12).unwrap();
        let b = koszul_betti(&j(&g).with_field(small), n.min(8), 12).unwrap();
        assert_eq!(a, b, "{name}");
    }
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabeling_preserves_tables(mask in 0u64..1024, perm in permutation(5)) {
        let g = graph_on(5, mask);
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(full_table(&g), full_table(&h));
    }

    #[test]
    fn bipartite_graphs_match_their_binomial_edge_ideal(mask in 0u64..64) {
        // subgraphs of K_{2,3} with parts {1,2} and {3,4,5}
        let cross: Vec<(usize, usize)> = (1..=2)
            .flat_map(|a| (3..=5).map(move |b| (a, b)))
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        let g = Graph::new(5, cross).unwrap();
        let bei = binomial_edge_ideal(&g, field()).unwrap();
        let parity = j(&g);
        let swapped = bipartite_swap(&bei, &[1, 2]);
        prop_assert_eq!(swapped.groebner_basis(), parity.groebner_basis());
        prop_assert_eq!(koszul_betti(&bei, 10, 14).unwrap(), koszul_betti(&parity, 10, 14).unwrap());
    }

    #[test]
    fn disjoint_unions_follow_the_tensor_formula(a in 1u64..8, b in 1u64..8) {
        let (g, h) = (graph_on(3, a), graph_on(3, b));
        let direct = full_table(&g.disjoint_union(&h));
        let tensor = tensor_betti(&full_table(&g), &full_table(&h));
        prop_assert!(direct.is_complete());
        prop_assert!(direct.nonzero().eq(tensor.nonzero()));
    }

    #[test]
    fn classifier_matches_shape_on_connected_graphs(mask in 0u64..(1 << 15)) {
        let g = graph_on(6, mask);
        if g.is_connected() {
            let shape = detect_shape(&g).unwrap();
            let expected = matches!(
                shape,
                GraphShape::Path { .. } | GraphShape::OddCycle { .. } | GraphShape::CompleteBipartite { .. }
            );
            prop_assert_eq!(classify_pure(&g).pure, expected);
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every relabeling, independent of the library's
/// canonical codes.
fn brute_isomorphic(a: &Graph, b: &Graph, perms: &[Vec<usize>]) -> bool {
    a.edge_count() == b.edge_count()
        && perms
            .iter()
            .any(|p| a.edges().all(|(x, y)| b.has_edge(p[x - 1], p[y - 1])))
}

#[test]
fn enumeration_counts_match_brute_force() {
    for n in 1..=5 {
        let perms = permutations(n);
        let mut classes: Vec<Graph> = Vec::new();
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = graph_on(n, mask);
            if g.is_connected() && !classes.iter().any(|c| brute_isomorphic(c, &g, &perms)) {
                classes.push(g);
            }
        }
        let listed = enumerate_connected(n).unwrap();
        assert_eq!(listed.len(), classes.len(), "n = {n}");
        for g in &listed {
            assert_eq!(
                classes
                    .iter()
                    .filter(|c| brute_isomorphic(c, g, &perms))
                    .count(),
                1
            );
        }
    }
}

#[test]
fn minimal_generator_degrees_are_the_first_betti_row() {
    let mut ideals: Vec<(String, Ideal)> = all_fixtures()
        .into_iter()
        .map(|(name, g)| (name, j(&g)))
        .collect();
    for d in pbei::verify::fixtures::decompositions() {
        ideals.push((
            format!("{} intersection", d.name),
            ideal_intersection(&j(&d.part), &j(&d.star)).unwrap(),
        ));
    }
    for (name, ideal) in ideals {
        let n = ideal.ring().nvars();
        let t = koszul_betti(&ideal, 2.min(n), 12).unwrap();
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for d in min_generator_degrees(&ideal).unwrap() {
            *counts.entry(d as usize).or_default() += 1;
        }
        let row: BTreeMap<usize, u64> = t
            .nonzero()
            .filter(|&((i, _), _)| i == 1)
            .map(|((_, jj), b)| (jj, b))
            .collect();
        assert_eq!(counts, row, "{name}");
    }
}

/// `dim (I ∩ J)_d = dim I_d + dim J_d - dim (I + J)_d`, with each dimension
/// counted from standard monomials.
#[test]
fn intersections_have_the_right_hilbert_function() {
    for d in pbei::verify::fixtures::decompositions() {
        let (a, b) = (j(&d.part), j(&d.star));
        let meet = ideal_intersection(&a, &b).unwrap();
        let sum = ideal_sum(&a, &b).unwrap();
        for g in meet.generators() {
            assert!(a.contains(g) && b.contains(g));
        }
        let n = a.ring().nvars();
        for deg in 0..=6 {
            let dim = |i: &Ideal| {
                binom(deg + n - 1, n - 1) - quotient_basis_in_degree(i, deg).unwrap().len()
            };
            assert_eq!(
                dim(&meet) + dim(&sum),
                dim(&a) + dim(&b),
                "{} degree {deg}",
                d.name
            );
        }
    }
}

#[test]
fn impure_verdicts_carry_witnesses_and_pure_ones_a_degree_sequence() {
    for n in 1..=4 {
        for g in enumerate_connected(n).unwrap() {
            let v = is_pure(&full_table(&g));
            assert_eq!(v.pure, v.witnesses.is_empty());
            assert_eq!(v.pure, !v.degree_sequence.is_empty() || g.edge_count() == 0);
        }
    }
}

#[test]
fn json_tables_round_trip() {
    for (_, g) in all_fixtures() {
        let t = koszul_betti(&j(&g), 4, 8).unwrap();
        assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
    }
}
