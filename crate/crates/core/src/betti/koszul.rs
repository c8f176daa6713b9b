//! Graded Betti numbers of `R/I` as the homology of the Koszul complex on
//! all variables tensored with `R/I`.
//!
//! The complex has basis `e_S ⊗ m` (`S` a set of variables, `m` a standard
//! monomial) and differential
//! `∂(e_S ⊗ m) = Σ_k (-1)^k e_{S \ s_k} ⊗ NF(x_{s_k} m)`. It splits into
//! finite blocks by the finest grading on which `I` is homogeneous, and
//! `beta_{i,a} = dim C_i(a) - rank ∂_i(a) - rank ∂_{i+1}(a)` per block.
//!
//! With pruning on, blocks are skipped unless the initial ideal `in(I)` has
//! a nonzero multigraded Betti number in that degree: Betti numbers only
//! drop along a Groebner degeneration. Inside a block, only homological
//! degrees with a nonzero bound can carry homology, so most ranks follow
//! from `rank ∂_{i+1} = dim C_i - rank ∂_i` and only one rank per gap
//! between such degrees is computed.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use crate::algebra::{Monomial, Polynomial, PrimeField};
use crate::groebner::Ideal;

use super::grading::{key_degree, DegreeKey, Grading};
use super::monomial_ideal::MonomialIdeal;
use super::rank::{rank_mod_p, SparseRow};
use super::table::BettiTable;
use super::BettiError;

/// Largest polynomial ring accepted by default.
pub const DEFAULT_MAX_VARIABLES: usize = 14;

/// Largest matrix dimension accepted by default.
pub const DEFAULT_MAX_COLUMNS: usize = 200_000;

#[derive(Clone, Debug)]
pub struct BettiOptions {
    /// Skip blocks that the initial ideal proves acyclic.
    pub prune: bool,
    pub max_variables: usize,
    /// Cap on either dimension of any boundary matrix.
    pub max_columns: usize,
    /// Worker threads; 0 uses every available core, 1 runs serially.
    pub jobs: usize,
    /// Largest lcm lattice enumerated in full; beyond it the lattice is cut
    /// at the window's degree and the table cannot be certified complete.
    pub lattice_limit: usize,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            prune: true,
            max_variables: DEFAULT_MAX_VARIABLES,
            max_columns: DEFAULT_MAX_COLUMNS,
            jobs: 0,
            lattice_limit: 50_000,
        }
    }
}

/// Nonzero Betti numbers found in one graded piece.
type Cells = Vec<((usize, usize), u64)>;

type Terms = Arc<Vec<(Monomial, u32)>>;

/// Normal forms of monomials modulo a reduced Groebner basis, memoized.
pub(crate) struct NormalForms<'a> {
    basis: &'a [Polynomial],
    memo: RwLock<HashMap<Monomial, Terms>>,
    field: PrimeField,
}

impl<'a> NormalForms<'a> {
    pub(crate) fn new(basis: &'a [Polynomial], field: PrimeField) -> Self {
        NormalForms {
            basis,
            memo: RwLock::new(HashMap::new()),
            field,
        }
    }

    fn divisor(&self, u: &Monomial) -> Option<&'a Polynomial> {
        self.basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|l| l.divides(u)))
    }

    /// `NF(u)` as terms; the basis is monic, so `u ≡ -q * tail(g)` for
    /// the first `g` whose leading monomial divides `u = q * lm(g)`.
    pub(crate) fn of(&self, u: &Monomial) -> Terms {
        let Some(g) = self.divisor(u) else {
            return Arc::new(vec![(*u, 1)]);
        };
        if let Some(hit) = self.memo.read().expect("memo lock").get(u) {
            return Arc::clone(hit);
        }
        let q = g
            .leading_monomial()
            .and_then(|l| l.quotient_of(u))
            .expect("leading monomial divides u");
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (t, c) in &g.terms()[1..] {
            let scale = self.field.neg(*c);
            for (m, d) in self.of(&t.mul(&q)).iter() {
                let e = acc.entry(*m).or_insert(0);
                *e = self.field.add(*e, self.field.mul(scale, *d));
            }
        }
        let mut terms: Vec<(Monomial, u32)> = acc.into_iter().filter(|t| t.1 != 0).collect();
        terms.sort_by(|a, b| a.0.exponents().cmp(b.0.exponents()));
        let terms = Arc::new(terms);
        self.memo
            .write()
            .expect("memo lock")
            .insert(*u, Arc::clone(&terms));
        terms
    }
}

/// Standard monomials of degrees `0..=max_degree`, by degree. Each degree-
/// `d+1` monomial is produced once, from its quotient by its last variable.
pub(crate) fn standard_levels(
    leads: &MonomialIdeal,
    nvars: usize,
    max_degree: usize,
    cap: usize,
) -> Result<Vec<Vec<Monomial>>, BettiError> {
    let one = Monomial::one(nvars);
    let mut levels = vec![if leads.contains(&one) {
        vec![]
    } else {
        vec![one]
    }];
    for _ in 0..max_degree {
        let prev = levels.last().expect("nonempty");
        let mut next = Vec::new();
        for m in prev {
            let last = (0..nvars).rev().find(|&v| m.exponent(v) > 0).unwrap_or(0);
            for v in last..nvars {
                let u = m.mul_var(v);
                if !leads.contains(&u) {
                    next.push(u);
                }
            }
            if next.len() > cap {
                return Err(BettiError::ResourceCap {
                    what: "standard monomials in one degree",
                    size: next.len(),
                    cap,
                });
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

/// One graded piece of the Koszul complex.
#[derive(Default)]
struct Block {
    /// `cells[i]` is the basis of `C_i`: pairs `(S, m)`.
    cells: Vec<Vec<(u32, Monomial)>>,
}

struct Engine<'a> {
    nvars: usize,
    field: PrimeField,
    nf: NormalForms<'a>,
    max_columns: usize,
}

impl Engine<'_> {
    /// Rank of `∂_k : C_k -> C_{k-1}` in one block.
    fn boundary_rank(&self, block: &Block, k: usize) -> Result<usize, BettiError> {
        let (rows_basis, cols_basis) = (&block.cells[k], &block.cells[k - 1]);
        if rows_basis.is_empty() || cols_basis.is_empty() {
            return Ok(0);
        }
        let size = rows_basis.len().max(cols_basis.len());
        if size > self.max_columns {
            return Err(BettiError::ResourceCap {
                what: "boundary matrix dimension",
                size,
                cap: self.max_columns,
            });
        }
        let index: HashMap<(u32, Monomial), u32> = cols_basis
            .iter()
            .enumerate()
            .map(|(c, &cell)| (cell, c as u32))
            .collect();
        let neg_one = self.field.neg(1);
        let mut rows: Vec<SparseRow> = Vec::with_capacity(rows_basis.len());
        for &(s, m) in rows_basis {
            let mut row = SparseRow::new();
            let mut pos = 0;
            for v in 0..self.nvars {
                if s >> v & 1 == 0 {
                    continue;
                }
                let sign = if pos % 2 == 0 { 1 } else { neg_one };
                pos += 1;
                let face = s & !(1 << v);
                for (t, c) in self.nf.of(&m.mul_var(v)).iter() {
                    let col = *index.get(&(face, *t)).ok_or_else(|| {
                        BettiError::Inconsistent("boundary leaves its graded piece".into())
                    })?;
                    row.push((col, self.field.mul(sign, *c)));
                }
            }
            row.sort_unstable_by_key(|e| e.0);
            rows.push(row);
        }
        Ok(rank_mod_p(rows, cols_basis.len(), self.field))
    }

    /// `beta_i` of a block for every `i` in `carriers` not above `i_max`.
    /// `carriers` must contain every `i` where homology can be nonzero.
    fn solve(
        &self,
        block: &Block,
        carriers: &[usize],
        i_max: usize,
    ) -> Result<Vec<(usize, u64)>, BettiError> {
        let n = self.nvars;
        let dims: Vec<i64> = (0..=n).map(|i| block.cells[i].len() as i64).collect();
        let Some((&first, &last)) = carriers.first().zip(carriers.last()) else {
            return Ok(Vec::new());
        };
        let mut r: Vec<Option<i64>> = vec![None; n + 2];
        r[0] = Some(0);
        r[n + 1] = Some(0);
        for k in 0..first {
            r[k + 1] = Some(dims[k] - r[k].expect("chain from below"));
        }
        for k in (last + 1..=n).rev() {
            r[k] = Some(dims[k] - r[k + 1].expect("chain from above"));
        }
        for w in carriers.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            if lo > i_max {
                break;
            }
            let k = (lo + 1..=hi)
                .min_by_key(|&k| {
                    let (a, b) = (dims[k], dims[k - 1]);
                    if a == 0 || b == 0 {
                        0
                    } else {
                        a * b
                    }
                })
                .expect("nonempty gap");
            r[k] = Some(self.boundary_rank(block, k)? as i64);
            for k2 in k..hi {
                r[k2 + 1] = Some(dims[k2] - r[k2].expect("propagated"));
            }
            for k2 in (lo + 1..k).rev() {
                r[k2] = Some(dims[k2] - r[k2 + 1].expect("propagated"));
            }
        }
        let mut out = Vec::new();
        for &p in carriers.iter().filter(|&&p| p <= i_max) {
            let (Some(a), Some(b)) = (r[p], r[p + 1]) else {
                return Err(BettiError::Inconsistent("undetermined rank".into()));
            };
            let beta = dims[p] - a - b;
            if beta < 0 || a < 0 || b < 0 {
                return Err(BettiError::Inconsistent(format!(
                    "negative homology in degree {p}"
                )));
            }
            if beta > 0 {
                out.push((p, beta as u64));
            }
        }
        Ok(out)
    }
}

fn check_window(nvars: usize, i_max: usize, j_max: usize) -> Result<(), BettiError> {
    if i_max > nvars {
        return Err(BettiError::WindowTooLarge { i_max, nvars });
    }
    if j_max < i_max {
        return Err(BettiError::BadWindow { i_max, j_max });
    }
    Ok(())
}

/// Exact graded Betti numbers of `R/I` for `i <= i_max`, `j <= j_max`,
/// with default options.
pub fn koszul_betti(ideal: &Ideal, i_max: usize, j_max: usize) -> Result<BettiTable, BettiError> {
    koszul_betti_with(ideal, i_max, j_max, &BettiOptions::default())
}

pub fn koszul_betti_with(
    ideal: &Ideal,
    i_max: usize,
    j_max: usize,
    opts: &BettiOptions,
) -> Result<BettiTable, BettiError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if n > opts.max_variables {
        return Err(BettiError::TooManyVariables(n, opts.max_variables));
    }
    check_window(n, i_max, j_max)?;
    if !ideal.is_homogeneous() {
        return Err(BettiError::NotHomogeneous);
    }
    let basis = ideal.groebner_basis();
    let leads = MonomialIdeal::new(
        basis
            .iter()
            .filter_map(|g| g.leading_monomial().copied())
            .collect(),
    );
    let grading = Grading::new(ideal.generators(), n);

    // homological degrees that may carry homology, per graded piece
    let mut carriers: HashMap<DegreeKey, Vec<usize>> = HashMap::new();
    let mut complete = false;
    if opts.prune {
        let (lattice, full) = match leads.lcm_lattice(n, None, opts.lattice_limit) {
            Some(l) => (l, true),
            None => (
                leads
                    .lcm_lattice(n, Some(j_max as u32), usize::MAX)
                    .expect("no limit"),
                false,
            ),
        };
        let mut inside = true;
        let mut bounds: HashMap<DegreeKey, BTreeMap<usize, u64>> = HashMap::new();
        for b in &lattice {
            for fine in leads.betti_at(b, ring.field()) {
                let j = fine.b.degree() as usize;
                inside &= fine.i <= i_max && j <= j_max;
                if j <= j_max {
                    *bounds
                        .entry(grading.key(&fine.b, 0))
                        .or_default()
                        .entry(fine.i)
                        .or_default() += fine.value;
                }
            }
        }
        complete = full && inside;
        for (key, ub) in bounds {
            if ub.keys().any(|&i| i <= i_max) {
                carriers.insert(key, ub.into_keys().collect());
            }
        }
        log::debug!(
            "lcm lattice of {} elements leaves {} graded pieces",
            lattice.len(),
            carriers.len()
        );
    }

    let degrees: HashSet<usize> = if opts.prune {
        carriers.keys().map(|k| key_degree(k) as usize).collect()
    } else {
        (0..=j_max).collect()
    };
    let top = degrees.iter().copied().max().unwrap_or(0);
    let levels = standard_levels(&leads, n, top, opts.max_columns.saturating_mul(10))?;

    let mut blocks: HashMap<DegreeKey, Block> = HashMap::new();
    for s in 0u32..(1 << n) {
        let size = s.count_ones() as usize;
        for &j in &degrees {
            if j < size {
                continue;
            }
            for m in &levels[j - size] {
                let key = grading.key(m, s);
                if opts.prune && !carriers.contains_key(&key) {
                    continue;
                }
                let block = blocks.entry(key).or_insert_with(|| Block {
                    cells: vec![Vec::new(); n + 1],
                });
                block.cells[size].push((s, *m));
            }
        }
    }
    let mut work: Vec<(DegreeKey, Block)> = blocks.into_iter().collect();
    work.sort_by_key(|a| (key_degree(&a.0), a.0));
    log::debug!("{} graded pieces to solve", work.len());

    let engine = Engine {
        nvars: n,
        field: ring.field(),
        nf: NormalForms::new(basis, ring.field()),
        max_columns: opts.max_columns,
    };
    let all: Vec<usize> = (0..=n).collect();
    let solve = |(key, block): &(DegreeKey, Block)| -> Result<Cells, BettiError> {
        let j = key_degree(key) as usize;
        let ps = if opts.prune { &carriers[key] } else { &all };
        Ok(engine
            .solve(block, ps, i_max)?
            .into_iter()
            .map(|(i, b)| ((i, j), b))
            .collect())
    };
    let results: Vec<Result<Cells, BettiError>> = if opts.jobs == 1 {
        work.iter().map(solve).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| BettiError::Inconsistent(e.to_string()))?;
        pool.install(|| work.par_iter().map(solve).collect())
    };
    let mut entries = Vec::new();
    for r in results {
        entries.extend(r?);
    }
    BettiTable::new((i_max, j_max), entries, complete)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{ci_betti, is_pure};
    use crate::graphs::Graph;
    use crate::ideals::parity_binomial_edge_ideal;

    fn ideal(s: &str) -> Ideal {
        parity_binomial_edge_ideal(&s.parse::<Graph>().unwrap(), PrimeField::default()).unwrap()
    }

    fn plain() -> BettiOptions {
        BettiOptions {
            prune: false,
            jobs: 1,
            ..BettiOptions::default()
        }
    }

    fn cells(t: &BettiTable) -> Vec<(usize, usize, u64)> {
        t.nonzero().map(|((i, j), b)| (i, j, b)).collect()
    }

    #[test]
    fn single_edge_and_zero_ideal() {
        let t = koszul_betti(&ideal("path:2"), 2, 6).unwrap();
        assert_eq!(cells(&t), vec![(0, 0, 1), (1, 2, 1)]);
        let z = koszul_betti(&ideal("union:(path:1)+(path:1)"), 4, 6).unwrap();
        assert_eq!(cells(&z), vec![(0, 0, 1)]);
        assert!(z.is_complete());
    }

    #[test]
    fn triangle_is_a_complete_intersection() {
        let t = koszul_betti(&ideal("cycle:3"), 6, 10).unwrap();
        assert!(t.agrees_with(&ci_betti(3)));
        assert!(t.is_complete());
    }

    #[test]
    fn pruned_and_plain_routes_agree() {
        for g in ["kbip:1,3", "edges:1-2,2-3,2-4,1-3", "path:3"] {
            let a = koszul_betti(&ideal(g), 5, 8).unwrap();
            let b = koszul_betti_with(&ideal(g), 5, 8, &plain()).unwrap();
            assert_eq!(cells(&a), cells(&b), "{g}");
            assert!(!b.is_complete());
        }
    }

    #[test]
    fn star_pattern() {
        let t = koszul_betti(&ideal("kbip:1,3"), 4, 8).unwrap();
        let support: Vec<(usize, usize)> = t.nonzero().map(|(c, _)| c).collect();
        assert_eq!(support, vec![(0, 0), (1, 2), (2, 4), (3, 5)]);
        assert_eq!(t.get(1, 2), Some(3));
        assert_eq!(is_pure(&t).degree_sequence, vec![2, 4, 5]);
    }

    #[test]
    fn window_errors() {
        let j = ideal("path:2");
        assert_eq!(
            koszul_betti(&j, 5, 8).unwrap_err(),
            BettiError::WindowTooLarge { i_max: 5, nvars: 4 }
        );
        assert_eq!(
            koszul_betti(&j, 3, 2).unwrap_err(),
            BettiError::BadWindow { i_max: 3, j_max: 2 }
        );
        let capped = BettiOptions {
            max_variables: 2,
            ..BettiOptions::default()
        };
        assert!(koszul_betti_with(&j, 1, 2, &capped)
            .unwrap_err()
            .is_resource_cap());
    }

    #[test]
    fn column_cap_is_reported() {
        let tiny = BettiOptions {
            max_columns: 3,
            ..plain()
        };
        let err = koszul_betti_with(&ideal("kbip:1,3"), 4, 8, &tiny).unwrap_err();
        assert!(err.is_resource_cap(), "{err}");
    }

    #[test]
    fn inhomogeneous_ideal_rejected() {
        let r = crate::algebra::Ring::new(1, PrimeField::default()).unwrap();
        let i = Ideal::new(r, vec![Polynomial::parse(r, "x1 - y1^2").unwrap()]).unwrap();
        assert_eq!(
            koszul_betti(&i, 1, 2).unwrap_err(),
            BettiError::NotHomogeneous
        );
    }
}
