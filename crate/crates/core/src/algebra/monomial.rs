use std::fmt;

use super::AlgebraError;

/// Hard ceiling on the number of ring variables a monomial can carry.
pub const MAX_VARS: usize = 16;

/// An exponent vector over at most [`MAX_VARS`] variables.
///
/// Slots past `nvars` are always zero, so derived equality and hashing are
/// exact.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        assert!(index < nvars);
        m.exps[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut m = Monomial::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Bitmask of the variables that occur.
    pub fn support_mask(&self) -> u32 {
        self.exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        if self.nvars != other.nvars {
            return Err(AlgebraError::VariableCountMismatch(
                self.nvars(),
                other.nvars(),
            ));
        }
        let mut out = *self;
        for i in 0..self.nvars() {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .ok_or(AlgebraError::ExponentOverflow)?;
        }
        Ok(out)
    }

    /// Product of two monomials over the same variables.
    ///
    /// Panics on mismatched variable counts or exponent overflow; use
    /// [`Monomial::checked_mul`] when either is possible.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] += other.exps[i];
        }
        out
    }

    #[inline]
    pub fn mul_var(&self, index: usize) -> Monomial {
        let mut out = *self;
        out.exps[index] += 1;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] -= self.exps[i];
        }
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// The same exponents viewed in a ring with a different variable count.
    /// Dropped variables must have exponent zero.
    pub fn resized(&self, nvars: usize) -> Option<Monomial> {
        if self.exps[nvars.min(MAX_VARS)..].iter().any(|&e| e > 0) {
            return None;
        }
        let mut out = *self;
        out.nvars = nvars as u8;
        Some(out)
    }

    pub(crate) fn set_exponent(&mut self, index: usize, e: u16) {
        self.exps[index] = e;
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}
