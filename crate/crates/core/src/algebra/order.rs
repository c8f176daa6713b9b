use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, MAX_VARS};

/// A monomial order. Variables are ranked by index: index 0 is the largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    Degrevlex,
    /// Pure lexicographic.
    Lex,
    /// Block order: degrevlex on the variables in `block` (a bitmask),
    /// ties broken by degrevlex on the remaining variables. Any monomial
    /// involving a block variable beats every monomial free of them.
    Elimination { block: u32 },
}

const ALL: u32 = u32::MAX;

#[inline]
fn masked_degree(m: &Monomial, mask: u32) -> u32 {
    let mut d = 0;
    for i in 0..m.nvars() {
        if mask >> i & 1 == 1 {
            d += m.exponent(i) as u32;
        }
    }
    d
}

#[inline]
fn degrevlex_masked(a: &Monomial, b: &Monomial, mask: u32) -> Ordering {
    let (da, db) = if mask == ALL {
        (a.degree(), b.degree())
    } else {
        (masked_degree(a, mask), masked_degree(b, mask))
    };
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.nvars().min(MAX_VARS)).rev() {
        if mask >> i & 1 == 0 {
            continue;
        }
        let (ea, eb) = (a.exponent(i), b.exponent(i));
        if ea != eb {
            // smaller exponent in the last differing variable wins
            return eb.cmp(&ea);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Degrevlex => degrevlex_masked(a, b, ALL),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Elimination { block } => {
                degrevlex_masked(a, b, block).then_with(|| degrevlex_masked(a, b, !block))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Degrevlex => "degrevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination { block } => format!("elim:{block:#x}"),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "degrevlex" => Some(MonomialOrder::Degrevlex),
            "lex" => Some(MonomialOrder::Lex),
            _ => {
                let hex = s.strip_prefix("elim:0x")?;
                u32::from_str_radix(hex, 16)
                    .ok()
                    .map(|block| MonomialOrder::Elimination { block })
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::Degrevlex;
        // vars x1 x2 y1 y2
        assert_eq!(
            o.cmp(&mono(&[1, 1, 0, 0]), &mono(&[0, 0, 1, 1])),
            Ordering::Greater
        );
        assert_eq!(
            o.cmp(&mono(&[0, 0, 0, 1]), &mono(&[1, 1, 0, 0])),
            Ordering::Less
        );
        // x1 y2 y3 < x3 y1 y2 style tie-break on the last variable
        assert_eq!(
            o.cmp(&mono(&[2, 0, 0, 0]), &mono(&[1, 1, 0, 0])),
            Ordering::Greater
        );
        assert_eq!(
            o.cmp(&mono(&[1, 0, 0, 1]), &mono(&[0, 1, 1, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn elimination_order_dominates_block() {
        // block = variable 2 (think "t")
        let o = MonomialOrder::Elimination { block: 0b100 };
        assert_eq!(
            o.cmp(&mono(&[0, 0, 1]), &mono(&[5, 5, 0])),
            Ordering::Greater
        );
        assert_eq!(
            o.cmp(&mono(&[1, 0, 1]), &mono(&[0, 1, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn parse_round_trip() {
        for o in [
            MonomialOrder::Degrevlex,
            MonomialOrder::Lex,
            MonomialOrder::Elimination { block: 0x100 },
        ] {
            assert_eq!(MonomialOrder::parse(&o.name()), Some(o));
        }
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u16..4, 5).prop_map(|v| Monomial::from_exponents(&v))
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Degrevlex),
            Just(MonomialOrder::Lex),
            (1u32..31).prop_map(|block| MonomialOrder::Elimination { block }),
        ]
    }

    proptest! {
        #[test]
        fn order_axioms(o in arb_order(), a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
            // multiplicative
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
            // unit is the minimum
            prop_assert_ne!(o.cmp(&Monomial::one(5), &a), Ordering::Greater);
            // transitivity
            if ab == Ordering::Less && o.cmp(&b, &c) == Ordering::Less {
                prop_assert_eq!(o.cmp(&a, &c), Ordering::Less);
            }
        }
    }
}
