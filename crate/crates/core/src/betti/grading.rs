//! The finest grading on which an ideal is homogeneous: `Z^N / L`, where
//! `L` is spanned by the exponent differences between terms of each
//! generator. Cosets are named by a canonical representative obtained by
//! reducing against an integer echelon basis of `L`.

use crate::algebra::{Monomial, Polynomial, MAX_VARS};

/// Canonical coset representative.
pub(crate) type DegreeKey = [i32; MAX_VARS];

#[derive(Clone, Debug)]
pub(crate) struct Grading {
    /// Echelon rows `(pivot column, row)` with positive pivots, sorted by
    /// pivot column.
    rows: Vec<(usize, Vec<i64>)>,
    nvars: usize,
}

fn exps(m: &Monomial) -> Vec<i64> {
    m.exponents().iter().map(|&e| e as i64).collect()
}

/// Integer row echelon form by repeated Euclidean reduction per column.
fn echelon(mut vecs: Vec<Vec<i64>>, nvars: usize) -> Vec<(usize, Vec<i64>)> {
    let mut out = Vec::new();
    for c in 0..nvars {
        loop {
            vecs.retain(|v| v.iter().any(|&x| x != 0));
            let Some(k) = (0..vecs.len())
                .filter(|&k| vecs[k][c] != 0)
                .min_by_key(|&k| vecs[k][c].abs())
            else {
                break;
            };
            let pivot = vecs.swap_remove(k);
            let pc = pivot[c];
            let mut done = true;
            for v in vecs.iter_mut() {
                if v[c] != 0 {
                    let q = v[c].div_euclid(pc);
                    for (x, &y) in v.iter_mut().zip(&pivot) {
                        *x -= q * y;
                    }
                    if v[c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                let sign = pc.signum();
                out.push((c, pivot.into_iter().map(|x| x * sign).collect()));
                break;
            }
            vecs.push(pivot);
        }
    }
    out
}

impl Grading {
    pub(crate) fn new(generators: &[Polynomial], nvars: usize) -> Grading {
        let mut diffs = Vec::new();
        for g in generators {
            let terms = g.terms();
            if let Some((first, _)) = terms.first() {
                let a = exps(first);
                for (m, _) in &terms[1..] {
                    let b = exps(m);
                    diffs.push(a.iter().zip(&b).map(|(x, y)| x - y).collect());
                }
            }
        }
        Grading {
            rows: echelon(diffs, nvars),
            nvars,
        }
    }

    /// Rank of the lattice `L`.
    #[cfg(test)]
    pub(crate) fn lattice_rank(&self) -> usize {
        self.rows.len()
    }

    /// Key of the exponent vector of `m` plus the indicator of `extra`
    /// (a variable bitmask).
    pub(crate) fn key(&self, m: &Monomial, extra: u32) -> DegreeKey {
        let mut v = [0i64; MAX_VARS];
        for (i, slot) in v.iter_mut().enumerate().take(self.nvars) {
            *slot = m.exponent(i) as i64 + (extra >> i & 1) as i64;
        }
        for (c, row) in &self.rows {
            let q = v[*c].div_euclid(row[*c]);
            if q != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x -= q * y;
                }
            }
        }
        let mut key = [0i32; MAX_VARS];
        for (k, x) in key.iter_mut().zip(v) {
            *k = x as i32;
        }
        key
    }
}

/// Total degree of a coset; lattice vectors have coordinate sum zero for
/// homogeneous ideals.
pub(crate) fn key_degree(k: &DegreeKey) -> i64 {
    k.iter().map(|&x| x as i64).sum()
}
