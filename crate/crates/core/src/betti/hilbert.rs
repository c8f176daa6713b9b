use crate::algebra::Monomial;
use crate::groebner::Ideal;

use super::koszul::{standard_levels, DEFAULT_MAX_COLUMNS};
use super::monomial_ideal::MonomialIdeal;
use super::table::BettiTable;
use super::BettiError;

fn leads(ideal: &Ideal) -> MonomialIdeal {
    MonomialIdeal::new(
        ideal
            .groebner_basis()
            .iter()
            .filter_map(|g| g.leading_monomial().copied())
            .collect(),
    )
}

fn levels(ideal: &Ideal, d: usize) -> Result<Vec<Vec<Monomial>>, BettiError> {
    standard_levels(
        &leads(ideal),
        ideal.ring().nvars(),
        d,
        10 * DEFAULT_MAX_COLUMNS,
    )
}

/// The degree-`d` standard monomials of `I`, a basis of `(R/I)_d`, in
/// descending order.
pub fn quotient_basis_in_degree(ideal: &Ideal, d: usize) -> Result<Vec<Monomial>, BettiError> {
    let order = ideal.ring().order();
    let mut out = levels(ideal, d)?.pop().expect("degree d is present");
    out.sort_by(|a, b| order.cmp(b, a));
    Ok(out)
}

fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k as i128).fold(1, |acc, t| acc * (n as i128 - t) / (t + 1))
}

/// Checks `dim (R/I)_d = Σ (-1)^i beta_{i,j} C(d - j + N - 1, N - 1)` for
/// `d = 0..=d_max`. Returns the first failing `d`, or `None` if all agree.
///
/// The table must determine every entry with `j <= d_max`: it is either
/// complete or its window reaches `j = d_max` and `i = min(N, d_max)`.
pub fn hilbert_consistency(
    ideal: &Ideal,
    table: &BettiTable,
    d_max: usize,
) -> Result<Option<usize>, BettiError> {
    let n = ideal.ring().nvars();
    let (i_max, j_max) = table.window();
    if !table.is_complete() && (j_max < d_max || i_max < n.min(d_max)) {
        return Err(BettiError::WindowTooSmall { d_max });
    }
    let levels = levels(ideal, d_max)?;
    for (d, level) in levels.iter().enumerate() {
        let alternating: i128 = table
            .nonzero()
            .filter(|&((_, j), _)| j <= d)
            .map(|((i, j), b)| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                sign * b as i128 * binomial((d - j + n) as i64 - 1, n as i64 - 1)
            })
            .sum();
        if alternating != level.len() as i128 {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;
    use crate::betti::ci_betti;
    use crate::graphs::Graph;
    use crate::ideals::parity_binomial_edge_ideal;

    fn ideal(s: &str) -> Ideal {
        parity_binomial_edge_ideal(&s.parse::<Graph>().unwrap(), PrimeField::default()).unwrap()
    }

    #[test]
    fn quotient_bases() {
        let zero = ideal("union:(path:1)+(path:1)");
        assert_eq!(quotient_basis_in_degree(&zero, 1).unwrap().len(), 4);
        let p2 = ideal("path:2");
        assert_eq!(quotient_basis_in_degree(&p2, 2).unwrap().len(), 9);
        assert_eq!(quotient_basis_in_degree(&p2, 0).unwrap().len(), 1);
    }

    #[test]
    fn consistent_tables() {
        assert_eq!(
            hilbert_consistency(&ideal("path:2"), &ci_betti(1), 2).unwrap(),
            None
        );
        let zero = ideal("union:(path:1)+(path:1)");
        assert_eq!(hilbert_consistency(&zero, &ci_betti(0), 6).unwrap(), None);
        assert_eq!(
            hilbert_consistency(&ideal("cycle:3"), &ci_betti(3), 4).unwrap(),
            None
        );
    }

    #[test]
    fn wrong_table_fails_at_first_degree() {
        assert_eq!(
            hilbert_consistency(&ideal("cycle:3"), &ci_betti(2), 6).unwrap(),
            Some(2)
        );
    }

    #[test]
    fn bounded_window_must_cover_d_max() {
        let t = BettiTable::new((2, 4), [((0, 0), 1), ((1, 2), 3)], false).unwrap();
        assert_eq!(
            hilbert_consistency(&ideal("cycle:3"), &t, 6).unwrap_err(),
            BettiError::WindowTooSmall { d_max: 6 }
        );
    }
}
