use std::cmp::Ordering;

use crate::algebra::{Monomial, MonomialOrder, Polynomial};

use super::reduce::{normal_form, s_polynomial};

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl Pair {
    fn new(i: usize, j: usize, polys: &[Polynomial]) -> Pair {
        let lcm = lead(&polys[i]).lcm(lead(&polys[j]));
        Pair { i, j, lcm }
    }
}

fn lead(f: &Polynomial) -> &Monomial {
    f.leading_monomial().expect("basis elements are nonzero")
}

/// Normal selection strategy: smallest lcm degree, then smallest lcm under
/// the order, then insertion order.
fn select(pairs: &[Pair], order: MonomialOrder) -> usize {
    let mut best = 0;
    for (k, p) in pairs.iter().enumerate().skip(1) {
        let b = &pairs[best];
        let by_degree = p.lcm.degree().cmp(&b.lcm.degree());
        let cmp = by_degree
            .then_with(|| order.cmp(&p.lcm, &b.lcm))
            .then_with(|| (p.i, p.j).cmp(&(b.i, b.j)));
        if cmp == Ordering::Less {
            best = k;
        }
    }
    best
}

/// Gebauer-Moeller installation of a new element `h` (index into `polys`):
/// prunes new pairs by the chain and coprime criteria, drops old pairs
/// made redundant by `h`, and retires basis elements whose leading
/// monomials `h` divides.
fn update(polys: &[Polynomial], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = *lead(&polys[h]);
    let mut fresh: Vec<(Pair, bool)> = active
        .iter()
        .map(|&g| {
            let p = Pair::new(g, h, polys);
            (p, lh.is_coprime(lead(&polys[g])))
        })
        .collect();

    // keep a pair if coprime or if no other new pair's lcm properly divides it
    let mut kept: Vec<(Pair, bool)> = Vec::new();
    for k in 0..fresh.len() {
        let (p, coprime) = fresh[k];
        let dominated = fresh[k + 1..]
            .iter()
            .chain(kept.iter())
            .any(|(q, _)| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push((p, coprime));
        }
    }
    fresh.clear();
    // among pairs with equal lcm keep one; drop coprime ones
    let mut new_pairs: Vec<Pair> = Vec::new();
    for (p, coprime) in kept {
        if !coprime && !new_pairs.iter().any(|q| q.lcm == p.lcm) {
            new_pairs.push(p);
        }
    }

    pairs.retain(|p| {
        let li = lead(&polys[p.i]).lcm(&lh);
        let lj = lead(&polys[p.j]).lcm(&lh);
        !(lh.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
    });
    pairs.extend(new_pairs);

    active.retain(|&g| !lh.divides(lead(&polys[g])));
    active.push(h);
}

/// Reduced Groebner basis of the ideal generated by `gens` under the order
/// of their ring: monic, inter-reduced and sorted ascending by leading
/// monomial. The zero ideal yields an empty basis.
pub fn groebner_basis(gens: &[Polynomial]) -> Vec<Polynomial> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let order = first.ring().order();
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut seeds: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic())
        .collect();
    seeds.sort_by(|a, b| order.cmp(lead(a), lead(b)));
    for g in seeds {
        let basis: Vec<Polynomial> = active.iter().map(|&k| polys[k].clone()).collect();
        let h = normal_form(&g, &basis);
        if h.is_zero() {
            continue;
        }
        polys.push(h.monic());
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }

    while !pairs.is_empty() {
        let pair = pairs.swap_remove(select(&pairs, order));
        let s = s_polynomial(&polys[pair.i], &polys[pair.j]);
        let basis: Vec<Polynomial> = active.iter().map(|&k| polys[k].clone()).collect();
        let h = normal_form(&s, &basis);
        if h.is_zero() {
            continue;
        }
        polys.push(h.monic());
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
        log::trace!(
            "basis size {} with {} pairs pending",
            active.len(),
            pairs.len()
        );
    }

    let minimal: Vec<Polynomial> = active.iter().map(|&k| polys[k].clone()).collect();
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(o, _)| o != k)
                .map(|(_, g)| g.clone())
                .collect();
            normal_form(&minimal[k], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| order.cmp(lead(a), lead(b)));
    reduced
}

/// Checks Buchberger's criterion directly: every S-polynomial of `basis`
/// reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    (0..basis.len()).all(|i| {
        (i + 1..basis.len())
            .all(|j| normal_form(&s_polynomial(&basis[i], &basis[j]), basis).is_zero())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, Ring};

    fn polys(r: Ring, ss: &[&str]) -> Vec<Polynomial> {
        ss.iter()
            .map(|s| Polynomial::parse(r, s).unwrap())
            .collect()
    }

    #[test]
    fn principal_ideal() {
        let r = Ring::new(2, PrimeField::default()).unwrap();
        let f = polys(r, &["3*x1*x2 - 3*y1*y2"]);
        assert_eq!(groebner_basis(&f), vec![f[0].monic()]);
        assert!(groebner_basis(&[]).is_empty());
    }

    #[test]
    fn triangle_on_134() {
        let r = Ring::new(4, PrimeField::default()).unwrap();
        let gens = polys(r, &["x1*x3 - y1*y3", "x1*x4 - y1*y4", "x3*x4 - y3*y4"]);
        let gb = groebner_basis(&gens);
        assert!(is_groebner_basis(&gb));
        for g in &gens {
            assert!(normal_form(g, &gb).is_zero());
        }
        for f in &gb {
            assert_eq!(f.leading_coeff(), Some(1));
            assert!(f.is_multihomogeneous());
        }
        assert!(gb
            .windows(2)
            .all(|w| r.order().cmp(lead(&w[0]), lead(&w[1])) == Ordering::Less));
    }

    #[test]
    fn generator_order_does_not_matter() {
        let r = Ring::new(4, PrimeField::default()).unwrap();
        let mut gens = polys(
            r,
            &[
                "x1*x2 - y1*y2",
                "x2*x3 - y2*y3",
                "x2*x4 - y2*y4",
                "x1*x3 - y1*y3",
            ],
        );
        let a = groebner_basis(&gens);
        gens.reverse();
        assert_eq!(a, groebner_basis(&gens));
    }

    #[test]
    fn unit_ideal() {
        let r = Ring::new(1, PrimeField::default()).unwrap();
        let gb = groebner_basis(&polys(r, &["x1 + 1", "x1"]));
        assert_eq!(gb, polys(r, &["1"]));
    }
}
