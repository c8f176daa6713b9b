use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::algebra::PrimeField;

/// A sparse row: `(column, value)` with distinct columns and nonzero values.
pub(crate) type SparseRow = Vec<(u32, u32)>;

/// Rank over `F_p` of the matrix with the given rows.
///
/// Rows are eliminated one at a time against the pivots found so far,
/// sparsest first, using a dense accumulator and a heap of touched columns.
pub(crate) fn rank_mod_p(mut rows: Vec<SparseRow>, ncols: usize, field: PrimeField) -> usize {
    let p = field.modulus() as u64;
    rows.retain(|r| !r.is_empty());
    rows.sort_by_key(|r| r.len());
    let mut pivot_of: Vec<Option<u32>> = vec![None; ncols];
    let mut pivots: Vec<SparseRow> = Vec::new();
    let mut acc = vec![0u32; ncols];
    let mut touched = vec![false; ncols];
    let mut heap: BinaryHeap<Reverse<u32>> = BinaryHeap::new();

    for row in rows {
        if pivots.len() == ncols {
            break;
        }
        for &(c, v) in &row {
            acc[c as usize] = v;
            touched[c as usize] = true;
            heap.push(Reverse(c));
        }
        let mut new_pivot = None;
        while let Some(Reverse(c)) = heap.pop() {
            let ci = c as usize;
            let v = acc[ci];
            if v == 0 {
                touched[ci] = false;
                continue;
            }
            match pivot_of[ci] {
                Some(k) => {
                    // pivot rows are monic, so subtract v times the row
                    let neg = p - v as u64;
                    for &(c2, w) in &pivots[k as usize] {
                        let c2 = c2 as usize;
                        acc[c2] = ((acc[c2] as u64 + neg * w as u64) % p) as u32;
                        if !touched[c2] {
                            touched[c2] = true;
                            heap.push(Reverse(c2 as u32));
                        }
                    }
                    touched[ci] = false;
                }
                None => {
                    let inv = field.inv(v) as u64;
                    let mut out: SparseRow = vec![(c, 1)];
                    acc[ci] = 0;
                    touched[ci] = false;
                    let mut rest: Vec<u32> = heap.drain().map(|Reverse(c)| c).collect();
                    rest.sort_unstable();
                    rest.dedup();
                    for c2 in rest {
                        let c2u = c2 as usize;
                        if acc[c2u] != 0 {
                            out.push((c2, ((acc[c2u] as u64 * inv) % p) as u32));
                            acc[c2u] = 0;
                        }
                        touched[c2u] = false;
                    }
                    new_pivot = Some((ci, out));
                    break;
                }
            }
        }
        if let Some((c, out)) = new_pivot {
            pivot_of[c] = Some(pivots.len() as u32);
            pivots.push(out);
        }
    }
    pivots.len()
}
