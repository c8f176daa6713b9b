use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{MonomialOrder, Polynomial, PrimeField, Ring};

use super::buchberger::groebner_basis;
use super::reduce::normal_form;
use super::GroebnerError;

/// An ideal given by generators, with its reduced Groebner basis under the
/// ring's own order computed on first use and cached.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    basis: OnceLock<Arc<Vec<Polynomial>>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Ideal, GroebnerError> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(GroebnerError::RingMismatch);
        }
        Ok(Ideal {
            ring,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        })
    }

    pub fn zero(ring: Ring) -> Ideal {
        Ideal {
            ring,
            generators: Vec::new(),
            basis: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The reduced Groebner basis under the ring's order.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.basis
            .get_or_init(|| Arc::new(groebner_basis(&self.generators)))
    }

    /// Whether the basis has already been computed.
    pub fn has_cached_basis(&self) -> bool {
        self.basis.get().is_some()
    }

    /// Reduced basis under another order; not cached.
    pub fn groebner_basis_under(&self, order: MonomialOrder) -> Vec<Polynomial> {
        if order == self.ring.order() {
            return self.groebner_basis().to_vec();
        }
        let gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.with_order(order))
            .collect();
        groebner_basis(&gens)
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, self.groebner_basis())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Equality of ideals, decided by comparing reduced bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.groebner_basis() == other.groebner_basis()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_multihomogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_multihomogeneous)
    }

    /// The ideal generated by the same integer polynomials over another
    /// prime, reading coefficients through their symmetric representatives.
    pub fn with_field(&self, field: PrimeField) -> Ideal {
        let ring = self.ring.with_field(field);
        let old = self.ring.field();
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let terms = g
                    .terms()
                    .iter()
                    .map(|&(m, c)| (m, field.from_i64(old.to_signed(c))))
                    .collect();
                Polynomial::from_terms(ring, terms)
            })
            .collect();
        Ideal::new(ring, gens).expect("generators moved into the new ring")
    }

    /// The image under a variable permutation (`perm[old] = new`).
    pub fn permute_variables(&self, perm: &[usize]) -> Ideal {
        let gens = self
            .generators
            .iter()
            .map(|g| g.permute_variables(perm))
            .collect();
        Ideal::new(self.ring, gens).expect("same ring")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.generators.iter().map(|g| g.to_string()))
            .finish()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// `I + J`: the concatenated generators.
pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal, GroebnerError> {
    if i.ring != j.ring {
        return Err(GroebnerError::RingMismatch);
    }
    let gens = i.generators.iter().chain(&j.generators).cloned().collect();
    Ideal::new(i.ring, gens)
}

/// `I` intersected with the subring free of the variables in `drop`
/// (a bitmask). Computed with the block order that puts `drop` first; the
/// result keeps `I`'s ring.
pub fn eliminate(i: &Ideal, drop: u32) -> Ideal {
    if drop == 0 {
        return Ideal::new(i.ring, i.groebner_basis().to_vec()).expect("same ring");
    }
    let basis = i.groebner_basis_under(MonomialOrder::Elimination { block: drop });
    let gens = basis
        .into_iter()
        .filter(|g| g.variable_mask() & drop == 0)
        .map(|g| g.with_order(i.ring.order()))
        .collect();
    Ideal::new(i.ring, gens).expect("same ring")
}

/// `I ∩ J` as the elimination of `t` from `t I + (1 - t) J` in the ring
/// extended by one auxiliary variable. The generators of the result are
/// its reduced basis under the ring's order.
pub fn ideal_intersection(i: &Ideal, j: &Ideal) -> Result<Ideal, GroebnerError> {
    if i.ring != j.ring {
        return Err(GroebnerError::RingMismatch);
    }
    let ring = i.ring;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let big = ring.extended(1)?;
    let t = big.aux(big.aux_count() - 1);
    let tp = Polynomial::var(big, t);
    let one_minus_t = Polynomial::constant(big, 1).sub(&tp);
    let lift = |g: &Polynomial| g.to_ring(big).expect("adding a variable always fits");
    let gens = i
        .generators
        .iter()
        .map(|g| lift(g).mul(&tp))
        .chain(j.generators.iter().map(|g| lift(g).mul(&one_minus_t)))
        .collect();
    let eliminated = eliminate(&Ideal::new(big, gens)?, 1 << t);
    let back = eliminated
        .generators
        .iter()
        .map(|g| g.to_ring(ring).expect("t was eliminated"))
        .collect();
    let out = Ideal::new(ring, back)?;
    Ideal::new(ring, out.groebner_basis().to_vec())
}

/// Degrees of a minimal homogeneous generating set, ascending.
///
/// Basis elements are scanned by increasing degree and kept when they do
/// not lie in the ideal of the ones kept so far.
pub fn min_generator_degrees(i: &Ideal) -> Result<Vec<u32>, GroebnerError> {
    if !i.is_homogeneous() {
        return Err(GroebnerError::NotHomogeneous);
    }
    let mut candidates = i.groebner_basis().to_vec();
    candidates.sort_by_key(|g| g.total_degree());
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut kept_basis: Vec<Polynomial> = Vec::new();
    let mut degrees = Vec::new();
    for g in candidates {
        if normal_form(&g, &kept_basis).is_zero() {
            continue;
        }
        degrees.push(g.total_degree().expect("nonzero"));
        kept.push(g);
        kept_basis = groebner_basis(&kept);
    }
    Ok(degrees)
}
