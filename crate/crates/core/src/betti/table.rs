use std::collections::BTreeMap;
use std::fmt::{self, Write};

use serde::{Deserialize, Serialize};

use super::BettiError;

/// Graded Betti numbers `beta_{i,j}` of a quotient `R/I`, known inside the
/// window `i <= i_max, j <= j_max`.
///
/// A table is `complete` when every nonzero entry is known to lie inside
/// the window; outside queries then answer zero instead of "uncomputed".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTable", into = "RawTable")]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
    i_max: usize,
    j_max: usize,
    complete: bool,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawTable {
    window: [usize; 2],
    entries: Vec<[u64; 3]>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    complete: bool,
}

impl TryFrom<RawTable> for BettiTable {
    type Error = BettiError;

    fn try_from(raw: RawTable) -> Result<Self, BettiError> {
        BettiTable::new(
            (raw.window[0], raw.window[1]),
            raw.entries
                .into_iter()
                .map(|[i, j, b]| ((i as usize, j as usize), b)),
            raw.complete,
        )
    }
}

impl From<BettiTable> for RawTable {
    fn from(t: BettiTable) -> Self {
        t.raw()
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k as u64).fold(1, |acc, t| acc * (n as u64 - t) / (t + 1))
}

impl BettiTable {
    /// Zero entries are dropped; entries outside the window are rejected.
    pub fn new(
        window: (usize, usize),
        entries: impl IntoIterator<Item = ((usize, usize), u64)>,
        complete: bool,
    ) -> Result<BettiTable, BettiError> {
        let (i_max, j_max) = window;
        let mut map = BTreeMap::new();
        for ((i, j), b) in entries {
            if i > i_max || j > j_max {
                return Err(BettiError::OutsideWindow(i, j));
            }
            if b > 0 {
                *map.entry((i, j)).or_insert(0) += b;
            }
        }
        Ok(BettiTable {
            entries: map,
            i_max,
            j_max,
            complete,
        })
    }

    pub fn window(&self) -> (usize, usize) {
        (self.i_max, self.j_max)
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn in_window(&self, i: usize, j: usize) -> bool {
        i <= self.i_max && j <= self.j_max
    }

    /// `beta_{i,j}`, or `None` when the cell was not computed.
    pub fn get(&self, i: usize, j: usize) -> Option<u64> {
        if self.in_window(i, j) || self.complete {
            Some(self.entries.get(&(i, j)).copied().unwrap_or(0))
        } else {
            None
        }
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest `i` with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// The same entries cut down to a smaller window. The result is
    /// complete only if `self` is and nothing was cut.
    pub fn restrict(&self, i_max: usize, j_max: usize) -> BettiTable {
        let i_max = i_max.min(self.i_max);
        let j_max = j_max.min(self.j_max);
        let entries: BTreeMap<_, _> = self
            .entries
            .iter()
            .filter(|(&(i, j), _)| i <= i_max && j <= j_max)
            .map(|(&k, &v)| (k, v))
            .collect();
        let complete = self.complete && entries.len() == self.entries.len();
        BettiTable {
            entries,
            i_max,
            j_max,
            complete,
        }
    }

    /// Entrywise equality on the intersection of both windows.
    pub fn agrees_with(&self, other: &BettiTable) -> bool {
        let (i, j) = (self.i_max.min(other.i_max), self.j_max.min(other.j_max));
        self.restrict(i, j).entries == other.restrict(i, j).entries
    }

    /// Column sums `sum_j beta_{i,j}` over the known entries.
    pub fn totals(&self) -> Vec<u64> {
        let width = self.projective_dimension().map_or(0, |p| p + 1);
        let mut t = vec![0; width];
        for (&(i, _), &b) in &self.entries {
            t[i] += b;
        }
        t
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.raw()).expect("tables serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.raw()).expect("tables serialize")
    }

    pub fn from_json(s: &str) -> Result<BettiTable, BettiError> {
        serde_json::from_str(s).map_err(|e| BettiError::Json(e.to_string()))
    }

    fn raw(&self) -> RawTable {
        RawTable {
            window: [self.i_max, self.j_max],
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), &b)| [i as u64, j as u64, b])
                .collect(),
            complete: self.complete,
        }
    }

    /// Betti diagram with rows `j - i` and columns `i`. Zeros print as `.`
    /// and cells outside the window as `?`.
    pub fn render(&self) -> String {
        let cols = self.projective_dimension().unwrap_or(0);
        let rows = self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
        let cell = |i: usize, r: usize| match self.get(i, i + r) {
            None => "?".to_string(),
            Some(0) => ".".to_string(),
            Some(b) => b.to_string(),
        };
        let totals = self.totals();
        let mut width = 1;
        for i in 0..=cols {
            width = width.max(i.to_string().len());
            width = width.max(totals.get(i).copied().unwrap_or(0).to_string().len());
        }
        let mut out = String::new();
        let label = 6;
        write!(out, "{:label$}", "").unwrap();
        for i in 0..=cols {
            write!(out, " {i:>width$}").unwrap();
        }
        out.push('\n');
        write!(out, "{:>label$}", "total:").unwrap();
        for i in 0..=cols {
            write!(out, " {:>width$}", totals.get(i).copied().unwrap_or(0)).unwrap();
        }
        out.push('\n');
        for r in 0..=rows {
            write!(out, "{:>label$}", format!("{r}:")).unwrap();
            for i in 0..=cols {
                write!(out, " {:>width$}", cell(i, r)).unwrap();
            }
            out.push('\n');
        }
        if !self.complete {
            writeln!(out, "window: i <= {}, j <= {}", self.i_max, self.j_max).unwrap();
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Betti table of a complete intersection of `k` quadrics: the Koszul
/// complex gives `beta_{i,2i} = C(k, i)`.
pub fn ci_betti(k: usize) -> BettiTable {
    BettiTable::new(
        (k, 2 * k),
        (0..=k).map(|i| ((i, 2 * i), binomial(k, i))),
        true,
    )
    .expect("entries lie in the window")
}

/// Betti table of `S/(IS + JS)` for ideals in disjoint sets of variables:
/// the convolution `sum beta_{t,k}(A) beta_{t',k'}(B)` over `t + t' = i`,
/// `k + k' = j`.
///
/// The output window is the sum of the inputs' windows when both are
/// complete, and otherwise the componentwise minimum over the incomplete
/// inputs, which is where every contributing cell is known.
pub fn tensor_betti(a: &BettiTable, b: &BettiTable) -> BettiTable {
    let (window, complete) = match (a.complete, b.complete) {
        (true, true) => ((a.i_max + b.i_max, a.j_max + b.j_max), true),
        (true, false) => (b.window(), false),
        (false, true) => (a.window(), false),
        (false, false) => ((a.i_max.min(b.i_max), a.j_max.min(b.j_max)), false),
    };
    let mut entries = BTreeMap::new();
    for (&(t, k), &x) in &a.entries {
        for (&(t2, k2), &y) in &b.entries {
            let (i, j) = (t + t2, k + k2);
            if i <= window.0 && j <= window.1 {
                *entries.entry((i, j)).or_insert(0) += x * y;
            }
        }
    }
    BettiTable::new(window, entries, complete).expect("entries lie in the window")
}

/// Purity of a Betti table within its window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PurityVerdict {
    pub pure: bool,
    /// `d_i` for each `i >= 1` with a nonzero column, when pure.
    pub degree_sequence: Vec<usize>,
    /// Pairs of nonzero cells sharing a column, when impure.
    pub witnesses: Vec<((usize, usize), (usize, usize))>,
    /// False when the table is complete and the verdict is unconditional.
    pub window_bounded: bool,
}

/// Pure iff each column `i >= 1` holds at most one nonzero entry.
pub fn is_pure(t: &BettiTable) -> PurityVerdict {
    let mut columns: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(i, j) in t.entries.keys().filter(|&&(i, _)| i >= 1) {
        columns.entry(i).or_default().push(j);
    }
    let mut witnesses = Vec::new();
    for (&i, js) in &columns {
        for w in js.windows(2) {
            witnesses.push(((i, w[0]), (i, w[1])));
        }
    }
    let pure = witnesses.is_empty();
    PurityVerdict {
        pure,
        degree_sequence: if pure {
            columns.values().map(|js| js[0]).collect()
        } else {
            Vec::new()
        },
        witnesses,
        window_bounded: !t.complete,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(window: (usize, usize), e: &[(usize, usize, u64)]) -> BettiTable {
        BettiTable::new(window, e.iter().map(|&(i, j, b)| ((i, j), b)), false).unwrap()
    }

    #[test]
    fn complete_intersections() {
        let t = ci_betti(3);
        assert_eq!(
            t.nonzero().collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 2), 3), ((2, 4), 3), ((3, 6), 1)]
        );
        assert_eq!(ci_betti(0).nonzero().collect::<Vec<_>>(), vec![((0, 0), 1)]);
        assert_eq!(
            ci_betti(1).nonzero().collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 2), 1)]
        );
        assert_eq!(t.get(7, 20), Some(0));
    }

    #[test]
    fn uncomputed_cells() {
        let t = table((2, 4), &[(0, 0, 1), (1, 2, 3)]);
        assert_eq!(t.get(1, 3), Some(0));
        assert_eq!(t.get(3, 5), None);
        assert_eq!(t.get(1, 5), None);
        assert!(BettiTable::new((1, 1), [((1, 2), 1)], false).is_err());
    }

    #[test]
    fn tensor_identity_and_convolution() {
        let a = ci_betti(2);
        assert_eq!(tensor_betti(&a, &ci_betti(0)), a);
        let t = tensor_betti(&ci_betti(1), &ci_betti(3));
        assert_eq!(t.get(3, 6), Some(4));
        assert_eq!(t, ci_betti(4));

        let bounded = table((3, 6), &[(0, 0, 1), (1, 2, 4), (2, 4, 5), (3, 5, 2)]);
        let u = tensor_betti(&ci_betti(1), &bounded);
        assert_eq!(u.window(), (3, 6));
        assert_eq!(u.get(3, 6), Some(5));
        assert_eq!(u.get(3, 7), None);
    }

    #[test]
    fn purity() {
        let star = table((4, 8), &[(0, 0, 1), (1, 2, 3), (2, 4, 3), (3, 5, 1)]);
        let v = is_pure(&star);
        assert!(v.pure && v.window_bounded);
        assert_eq!(v.degree_sequence, vec![2, 4, 5]);

        let paw = table(
            (4, 8),
            &[(0, 0, 1), (1, 2, 4), (2, 4, 5), (3, 5, 1), (3, 6, 1)],
        );
        let v = is_pure(&paw);
        assert!(!v.pure);
        assert_eq!(v.witnesses, vec![((3, 5), (3, 6))]);

        let v = is_pure(&ci_betti(0));
        assert!(v.pure && !v.window_bounded);
        assert!(v.degree_sequence.is_empty());
    }

    #[test]
    fn json_round_trip() {
        let t = table((4, 8), &[(0, 0, 1), (1, 2, 3)]);
        assert_eq!(
            t.to_json(),
            r#"{"window":[4,8],"entries":[[0,0,1],[1,2,3]]}"#
        );
        assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
        let c = ci_betti(2);
        assert!(c.to_json().ends_with(r#""complete":true}"#));
        assert_eq!(BettiTable::from_json(&c.to_json()).unwrap(), c);
    }

    #[test]
    fn diagram_layout() {
        let expected = concat!(
            "       0 1 2 3\n",
            "total: 1 3 3 1\n",
            "    0: 1 . . .\n",
            "    1: . 3 . .\n",
            "    2: . . 3 .\n",
            "    3: . . . 1\n",
        );
        assert_eq!(ci_betti(3).render(), expected);
        let t = table((1, 2), &[(0, 0, 1), (1, 2, 1)]);
        assert!(t.render().ends_with("window: i <= 1, j <= 2\n"));
    }
}
