//! Plain-text polynomial format: `3*x1*x2^2*y3 - y1*y2`.
//!
//! Coefficients print as their symmetric representative modulo `p`, so
//! printing then parsing in the same ring is the identity.

use std::fmt;

use super::polynomial::Polynomial;
use super::ring::Ring;
use super::AlgebraError;

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.ring();
        let field = ring.field();
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let signed = field.to_signed(*c);
            let mag = signed.unsigned_abs();
            match (k, signed < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if mag != 1 || m.is_one() {
                factors.push(mag.to_string());
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(ring.var_name(v)),
                    _ => factors.push(format!("{}^{}", ring.var_name(v), e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Polynomial {
    /// Parses the text format in `ring`.
    pub fn parse(ring: Ring, s: &str) -> Result<Polynomial, AlgebraError> {
        let field = ring.field();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(AlgebraError::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let negative = match rest.as_bytes()[0] {
                b'-' => {
                    rest = &rest[1..];
                    true
                }
                b'+' => {
                    rest = &rest[1..];
                    false
                }
                _ if terms.is_empty() => false,
                _ => return Err(AlgebraError::Parse(format!("expected sign at '{rest}'"))),
            };
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let body = &rest[..end];
            rest = &rest[end..];
            if body.is_empty() {
                return Err(AlgebraError::Parse("dangling sign".into()));
            }
            let mut coeff = 1u32;
            let mut mono = ring.one_monomial();
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(AlgebraError::Parse(format!("empty factor in '{body}'")));
                }
                if factor.as_bytes()[0].is_ascii_digit() {
                    let v: u64 = factor
                        .parse()
                        .map_err(|_| AlgebraError::Parse(format!("bad coefficient '{factor}'")))?;
                    coeff = field.mul(coeff, (v % field.modulus() as u64) as u32);
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e: u16 = e
                            .parse()
                            .map_err(|_| AlgebraError::Parse(format!("bad exponent '{e}'")))?;
                        (n, e)
                    }
                    None => (factor, 1),
                };
                let var = ring
                    .var_index(name)
                    .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
                let mut power = ring.one_monomial();
                power.set_exponent(var, exp);
                mono = mono.checked_mul(&power)?;
            }
            if negative {
                coeff = field.neg(coeff);
            }
            terms.push((mono, coeff));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MonomialOrder, PrimeField};
    use proptest::prelude::*;

    fn ring() -> Ring {
        Ring::with_aux(
            3,
            1,
            PrimeField::new(101).unwrap(),
            MonomialOrder::Degrevlex,
        )
        .unwrap()
    }

    #[test]
    fn prints_signs_and_powers() {
        let r = ring();
        let f = Polynomial::parse(r, "3*x1*x2^2*y3 - y1*y2").unwrap();
        assert_eq!(f.to_string(), "3*x1*x2^2*y3 - y1*y2");
        assert_eq!(
            Polynomial::parse(r, "-t + 5").unwrap().to_string(),
            "-t + 5"
        );
        assert_eq!(Polynomial::parse(r, "x1 - x1").unwrap().to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        let r = ring();
        assert!(matches!(
            Polynomial::parse(r, "x9"),
            Err(AlgebraError::UnknownVariable(_))
        ));
        assert!(Polynomial::parse(r, "x1 +").is_err());
        assert!(Polynomial::parse(r, "").is_err());
        assert!(Polynomial::parse(r, "x1**x2").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        let r = ring();
        prop::collection::vec((prop::collection::vec(0u16..3, r.nvars()), 0u32..101), 0..6)
            .prop_map(move |terms| {
                Polynomial::from_terms(
                    r,
                    terms
                        .into_iter()
                        .map(|(e, c)| (crate::algebra::Monomial::from_exponents(&e), c))
                        .collect(),
                )
            })
    }

    proptest! {
        #[test]
        fn text_round_trip(f in arb_poly()) {
            let back = Polynomial::parse(f.ring(), &f.to_string()).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
