use crate::algebra::Polynomial;

/// Full reduction of `f` by `basis` under the ring's order.
///
/// The largest reducible term is always reduced first, by the first basis
/// element whose leading monomial divides it, so the result is
/// deterministic for a fixed basis order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some(&(m, c)) = p.leading_term() {
        let divisor = basis.iter().find_map(|g| {
            let (lm, lc) = g.leading_term()?;
            lm.quotient_of(&m).map(|q| (g, q, *lc))
        });
        match divisor {
            Some((g, q, lc)) => {
                let scale = field.neg(field.mul(c, field.inv(lc)));
                p = p.add_scaled_shifted(g, scale, Some(&q));
            }
            None => {
                rem.push((m, c));
                p.pop_leading();
            }
        }
    }
    Polynomial::from_terms(ring, rem)
}

/// `(L / lt f) f - (L / lt g) g` for the monic versions of `f` and `g`,
/// where `L` is the lcm of their leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (f, g) = (f.monic(), g.monic());
    let (Some(a), Some(b)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Polynomial::zero(f.ring());
    };
    let l = a.lcm(b);
    let fa = f.mul_term(&a.quotient_of(&l).expect("lcm is a multiple"), 1);
    let neg_one = f.ring().field().neg(1);
    fa.add_scaled_shifted(
        &g,
        neg_one,
        Some(&b.quotient_of(&l).expect("lcm is a multiple")),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, Ring};

    fn ring(n: usize) -> Ring {
        Ring::new(n, PrimeField::default()).unwrap()
    }

    fn p(r: Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn single_division_steps() {
        let r = ring(3);
        let f = p(r, "x1*x2 - y1*y2");
        assert!(normal_form(&f, std::slice::from_ref(&f)).is_zero());
        assert_eq!(
            normal_form(&p(r, "x1*x2"), std::slice::from_ref(&f)),
            p(r, "y1*y2")
        );
        let quadrics = [f, p(r, "x2*x3 - y2*y3")];
        assert_eq!(normal_form(&p(r, "y1"), &quadrics), p(r, "y1"));
    }

    #[test]
    fn s_polynomials() {
        let r = ring(3);
        let f = p(r, "x1*x2 - y1*y2");
        let g = p(r, "x2*x3 - y2*y3");
        assert!(s_polynomial(&f, &f).is_zero());
        assert_eq!(s_polynomial(&f, &g), p(r, "x1*y2*y3 - x3*y1*y2"));

        let r4 = ring(4);
        let a = p(r4, "x1*x2 - y1*y2");
        let b = p(r4, "x3*x4 - y3*y4");
        let s = s_polynomial(&a, &b);
        assert!(normal_form(&s, &[a, b]).is_zero());
    }
}
