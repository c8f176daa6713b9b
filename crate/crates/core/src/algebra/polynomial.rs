use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use super::monomial::Monomial;
use super::ring::Ring;
use super::AlgebraError;

/// A polynomial over a [`Ring`]: terms sorted strictly descending under the
/// ring's order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, c: u32) -> Self {
        Polynomial::term(ring, ring.one_monomial(), c)
    }

    pub fn term(ring: Ring, m: Monomial, c: u32) -> Self {
        let c = c % ring.field().modulus();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring, terms }
    }

    pub fn var(ring: Ring, var: usize) -> Self {
        Polynomial::term(ring, ring.var_monomial(var), 1)
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(ring: Ring, mut terms: Vec<(Monomial, u32)>) -> Self {
        let f = ring.field();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % f.modulus();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial { ring, terms: out }
    }

    /// `x^a - x^b` with unit coefficients.
    pub fn binomial(ring: Ring, a: Monomial, b: Monomial) -> Self {
        let f = ring.field();
        Polynomial::from_terms(ring, vec![(a, 1), (b, f.neg(1))])
    }

    #[inline]
    pub fn ring(&self) -> Ring {
        self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn leading_term(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    #[inline]
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, u32)> {
        (!self.terms.is_empty()).then(|| self.terms.remove(0))
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    /// Largest total degree among the terms; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// The shared `N^n` multidegree of all terms.
    pub fn multidegree(&self) -> Result<Vec<u32>, AlgebraError> {
        let (first, _) = self.terms.first().ok_or(AlgebraError::ZeroPolynomial)?;
        let d = self.ring.multidegree(first);
        if self
            .terms
            .iter()
            .all(|(m, _)| self.ring.multidegree(m) == d)
        {
            Ok(d)
        } else {
            Err(AlgebraError::NotMultiHomogeneous)
        }
    }

    pub fn is_multihomogeneous(&self) -> bool {
        self.is_zero() || self.multidegree().is_ok()
    }

    /// Union over terms of the vertices whose `x_i` or `y_i` appears.
    pub fn vsupport(&self) -> Result<BTreeSet<usize>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        Ok(self
            .terms
            .iter()
            .flat_map(|(m, _)| self.ring.vsupport(m))
            .collect())
    }

    /// Bitmask of every variable that occurs in some term.
    pub fn variable_mask(&self) -> u32 {
        self.terms
            .iter()
            .fold(0, |acc, (m, _)| acc | m.support_mask())
    }

    fn check_ring(&self, other: &Polynomial) {
        assert_eq!(
            self.ring, other.ring,
            "polynomial arithmetic across different rings"
        );
    }

    /// `self + scale * other`, the workhorse behind add/sub and reduction.
    pub fn add_scaled(&self, other: &Polynomial, scale: u32) -> Polynomial {
        self.check_ring(other);
        self.add_scaled_shifted(other, scale, None)
    }

    /// `self + scale * shift * other`.
    pub fn add_scaled_shifted(
        &self,
        other: &Polynomial,
        scale: u32,
        shift: Option<&Monomial>,
    ) -> Polynomial {
        let f = self.ring.field();
        let order = self.ring.order();
        if scale == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(m, c)| {
            let m = match shift {
                Some(s) => m.mul(s),
                None => *m,
            };
            (m, f.mul(*c, scale))
        });
        let mut next_b = b.next();
        loop {
            match (a.peek(), next_b) {
                (None, None) => break,
                (Some(&&ta), None) => {
                    out.push(ta);
                    a.next();
                }
                (None, Some(tb)) => {
                    out.push(tb);
                    next_b = b.next();
                }
                (Some(&&ta), Some(tb)) => match order.cmp(&ta.0, &tb.0) {
                    Ordering::Greater => {
                        out.push(ta);
                        a.next();
                    }
                    Ordering::Less => {
                        out.push(tb);
                        next_b = b.next();
                    }
                    Ordering::Equal => {
                        let c = f.add(ta.1, tb.1);
                        if c != 0 {
                            out.push((ta.0, c));
                        }
                        a.next();
                        next_b = b.next();
                    }
                },
            }
        }
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(other, 1)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(other, self.ring.field().neg(1))
    }

    pub fn neg(&self) -> Polynomial {
        self.scalar_mul(self.ring.field().neg(1))
    }

    pub fn scalar_mul(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.modulus();
        if c == 0 {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|&(m, a)| (m, f.mul(a, c))).collect(),
        }
    }

    /// Multiplication by `c * m`; monomial orders are multiplicative so the
    /// term order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.modulus();
        if c == 0 {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|&(t, a)| (t.mul(m), f.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let mut acc = Polynomial::zero(self.ring);
        for (m, c) in &other.terms {
            acc = acc.add_scaled_shifted(self, *c, Some(m));
        }
        acc
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scalar_mul(self.ring.field().inv(c)),
        }
    }

    /// The same polynomial re-sorted under another order.
    pub fn with_order(&self, order: super::MonomialOrder) -> Polynomial {
        Polynomial::from_terms(self.ring.with_order(order), self.terms.clone())
    }

    /// Moves the polynomial into `ring`, which must have the same variable
    /// count or drop only variables that do not occur.
    pub fn to_ring(&self, ring: Ring) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                m.resized(ring.nvars())
                    .map(|m| (m, c % ring.field().modulus()))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Polynomial::from_terms(ring, terms))
    }

    /// Applies a variable permutation (`perm[old] = new`).
    pub fn permute_variables(&self, perm: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::one(m.nvars());
                for (v, &e) in m.exponents().iter().enumerate() {
                    out.set_exponent(perm[v], e);
                }
                (out, *c)
            })
            .collect();
        Polynomial::from_terms(self.ring, terms)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
