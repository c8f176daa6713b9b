use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use super::AlgebraError;

/// The polynomial ring `F_p[x_1..x_n, y_1..y_n]`, optionally extended by
/// auxiliary variables `t, t2, ...` that sit after all `y`s.
///
/// Variable layout: index `i < n` is `x_{i+1}`, `n <= i < 2n` is
/// `y_{i-n+1}`, and `2n + k` is the `k`-th auxiliary variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    vertices: u8,
    aux: u8,
    field: PrimeField,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(vertices: usize, field: PrimeField) -> Result<Self, AlgebraError> {
        Ring::with_aux(vertices, 0, field, MonomialOrder::Degrevlex)
    }

    pub fn with_aux(
        vertices: usize,
        aux: usize,
        field: PrimeField,
        order: MonomialOrder,
    ) -> Result<Self, AlgebraError> {
        let nvars = 2 * vertices + aux;
        if nvars > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(nvars));
        }
        Ok(Ring {
            vertices: vertices as u8,
            aux: aux as u8,
            field,
            order,
        })
    }

    #[inline]
    pub fn vertices(&self) -> usize {
        self.vertices as usize
    }

    #[inline]
    pub fn aux_count(&self) -> usize {
        self.aux as usize
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        2 * self.vertices as usize + self.aux as usize
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(self, order: MonomialOrder) -> Ring {
        Ring { order, ..self }
    }

    pub fn with_field(self, field: PrimeField) -> Ring {
        Ring { field, ..self }
    }

    /// Same ring plus `extra` auxiliary variables.
    pub fn extended(self, extra: usize) -> Result<Ring, AlgebraError> {
        Ring::with_aux(
            self.vertices(),
            self.aux_count() + extra,
            self.field,
            self.order,
        )
    }

    pub fn x(&self, vertex: usize) -> usize {
        assert!((1..=self.vertices()).contains(&vertex));
        vertex - 1
    }

    pub fn y(&self, vertex: usize) -> usize {
        assert!((1..=self.vertices()).contains(&vertex));
        self.vertices() + vertex - 1
    }

    pub fn aux(&self, k: usize) -> usize {
        assert!(k < self.aux_count());
        2 * self.vertices() + k
    }

    /// Vertex owning a variable, `None` for auxiliary variables.
    pub fn vertex_of(&self, var: usize) -> Option<usize> {
        let n = self.vertices();
        if var < n {
            Some(var + 1)
        } else if var < 2 * n {
            Some(var - n + 1)
        } else {
            None
        }
    }

    /// Bitmask of the auxiliary variables.
    pub fn aux_mask(&self) -> u32 {
        (0..self.aux_count()).fold(0, |m, k| m | 1 << self.aux(k))
    }

    pub fn var_name(&self, var: usize) -> String {
        let n = self.vertices();
        if var < n {
            format!("x{}", var + 1)
        } else if var < 2 * n {
            format!("y{}", var - n + 1)
        } else if var == 2 * n {
            "t".into()
        } else {
            format!("t{}", var - 2 * n + 1)
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        let n = self.vertices();
        if name == "t" {
            return (self.aux_count() > 0).then_some(2 * n);
        }
        let (head, num) = name.split_at(1.min(name.len()));
        let k: usize = num.parse().ok()?;
        match head {
            "x" if (1..=n).contains(&k) => Some(k - 1),
            "y" if (1..=n).contains(&k) => Some(n + k - 1),
            "t" if (2..=self.aux_count()).contains(&k) => Some(2 * n + k - 1),
            _ => None,
        }
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var_monomial(&self, var: usize) -> Monomial {
        Monomial::var(self.nvars(), var)
    }

    /// The `N^n` multidegree: coordinate `i` counts `x_i` and `y_i`.
    /// Auxiliary variables are not graded.
    pub fn multidegree(&self, m: &Monomial) -> Vec<u32> {
        let n = self.vertices();
        (0..n)
            .map(|i| m.exponent(i) as u32 + m.exponent(n + i) as u32)
            .collect()
    }

    /// Vertices `i` such that `x_i` or `y_i` divides `m`.
    pub fn vsupport(&self, m: &Monomial) -> Vec<usize> {
        let n = self.vertices();
        (0..n)
            .filter(|&i| m.exponent(i) > 0 || m.exponent(n + i) > 0)
            .map(|i| i + 1)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naming_round_trip() {
        let r = Ring::with_aux(3, 1, PrimeField::default(), MonomialOrder::Degrevlex).unwrap();
        for v in 0..r.nvars() {
            assert_eq!(r.var_index(&r.var_name(v)), Some(v));
        }
        assert_eq!(r.var_index("x4"), None);
        assert_eq!(r.var_index("z1"), None);
    }

    #[test]
    fn too_many_variables() {
        assert_eq!(
            Ring::new(9, PrimeField::default()),
            Err(AlgebraError::TooManyVariables(18))
        );
    }
}
