//! Multigraded Betti numbers of a monomial quotient `R/M`, used as upper
//! bounds for `R/I` when `M` is the initial ideal of `I`.

use std::collections::HashSet;

use crate::algebra::{Monomial, PrimeField};

use super::rank::{rank_mod_p, SparseRow};

pub(crate) struct MonomialIdeal {
    gens: Vec<Monomial>,
}

/// Nonzero `beta_{i,b}(R/M)` at one lattice point.
pub(crate) struct FineBetti {
    pub b: Monomial,
    pub i: usize,
    pub value: u64,
}

impl MonomialIdeal {
    pub(crate) fn new(gens: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal { gens }
    }

    pub(crate) fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Lcms of all subsets of the generators (the empty lcm is `1`), keeping
    /// only elements of degree at most `max_degree`. Returns `None` if more
    /// than `limit` elements would be produced.
    pub(crate) fn lcm_lattice(
        &self,
        nvars: usize,
        max_degree: Option<u32>,
        limit: usize,
    ) -> Option<Vec<Monomial>> {
        let one = Monomial::one(nvars);
        let mut seen: HashSet<Monomial> = HashSet::from([one]);
        let mut frontier = vec![one];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for b in &frontier {
                for g in &self.gens {
                    let l = b.lcm(g);
                    if max_degree.is_some_and(|d| l.degree() > d) {
                        continue;
                    }
                    if seen.insert(l) {
                        if seen.len() > limit {
                            return None;
                        }
                        next.push(l);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Monomial> = seen.into_iter().collect();
        out.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then(a.exponents().cmp(b.exponents()))
        });
        Some(out)
    }

    /// `beta_{i,b}(R/M)` for all `i`, from the Koszul complex in multidegree
    /// `b`: basis `e_F` for squarefree `F` dividing `b` with `x^{b-F}`
    /// outside `M`.
    pub(crate) fn betti_at(&self, b: &Monomial, field: PrimeField) -> Vec<FineBetti> {
        let support: Vec<usize> = (0..b.nvars()).filter(|&v| b.exponent(v) > 0).collect();
        let s = support.len();
        let as_monomial = |mask: u32| {
            let mut e = b.exponents().to_vec();
            for (k, &v) in support.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    e[v] -= 1;
                }
            }
            Monomial::from_exponents(&e)
        };
        // cells[i] lists the masks F of size i that survive
        let mut cells: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
        let mut index = vec![u32::MAX; 1 << s];
        for mask in 0..(1u32 << s) {
            if !self.contains(&as_monomial(mask)) {
                let i = mask.count_ones() as usize;
                index[mask as usize] = cells[i].len() as u32;
                cells[i].push(mask);
            }
        }
        let neg_one = field.neg(1);
        // rank of d_i : C_i -> C_{i-1}
        let mut ranks = vec![0usize; s + 2];
        for i in 1..=s {
            if cells[i].is_empty() || cells[i - 1].is_empty() {
                continue;
            }
            let rows: Vec<SparseRow> = cells[i]
                .iter()
                .map(|&f| {
                    let mut row: SparseRow = Vec::new();
                    let mut pos = 0;
                    for k in 0..s {
                        if f >> k & 1 == 1 {
                            let g = f & !(1 << k);
                            if index[g as usize] != u32::MAX {
                                let sign = if pos % 2 == 0 { 1 } else { neg_one };
                                row.push((index[g as usize], sign));
                            }
                            pos += 1;
                        }
                    }
                    row
                })
                .collect();
            ranks[i] = rank_mod_p(rows, cells[i - 1].len(), field);
        }
        (0..=s)
            .filter_map(|i| {
                let value = cells[i].len() - ranks[i] - ranks[i + 1];
                (value > 0).then_some(FineBetti {
                    b: *b,
                    i,
                    value: value as u64,
                })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn all_betti(ideal: &MonomialIdeal, n: usize) -> Vec<(usize, u32, u64)> {
        let field = PrimeField::default();
        let mut sums = std::collections::BTreeMap::new();
        for b in ideal.lcm_lattice(n, None, 10_000).unwrap() {
            for f in ideal.betti_at(&b, field) {
                *sums.entry((f.i, f.b.degree())).or_insert(0) += f.value;
            }
        }
        sums.into_iter().map(|((i, d), v)| (i, d, v)).collect()
    }

    #[test]
    fn complete_intersection_of_monomials() {
        // (ab, cd): Koszul complex on two quadrics
        let i = MonomialIdeal::new(vec![m(&[1, 1, 0, 0]), m(&[0, 0, 1, 1])]);
        assert_eq!(all_betti(&i, 4), vec![(0, 0, 1), (1, 2, 2), (2, 4, 1)]);
    }

    #[test]
    fn three_points_on_a_line() {
        // (a^2, ab, b^2): Eagon-Northcott, betti 1, 3, 2 in degrees 0, 2, 3
        let i = MonomialIdeal::new(vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        assert_eq!(all_betti(&i, 2), vec![(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
    }

    #[test]
    fn lattice_limits() {
        let i = MonomialIdeal::new(vec![m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])]);
        assert_eq!(i.lcm_lattice(3, None, 100).unwrap().len(), 8);
        assert_eq!(i.lcm_lattice(3, Some(1), 100).unwrap().len(), 4);
        assert!(i.lcm_lattice(3, None, 5).is_none());
    }
}
