//! Pseudo standard bases through a block order on ℚ[x, y]: a Buchberger
//! completion of ⟨G₁ ∪ G₂⟩ that carries, next to each basis element g̃, a
//! representative g ∈ ⟨G₁⟩ with g̃ − g ∈ ⟨G₂⟩.

use num_traits::One;

use crate::classical::minimize;
use crate::error::{Error, Result};
use crate::mora::lead_mod;
use crate::param_poly::ParamPolynomial;
use crate::param_ring::ParamIdeal;
use crate::poly::{s_polynomial, Coeff, Exponent, MonomialOrder, OrderRef, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedBasisElement {
    pub g_tilde: Polynomial,
    pub g: Polynomial,
}

impl PairedBasisElement {
    fn lead(&self) -> &Exponent {
        self.g_tilde.lead_exponent().expect("basis elements are nonzero")
    }
}

/// Full reduction of `p` by the first components, applying every step to
/// the second components as well.
fn reduce_paired(mut p: PairedBasisElement, basis: &[PairedBasisElement]) -> PairedBasisElement {
    let mut cursor = 0;
    while cursor < p.g_tilde.len() {
        let (e, c) = p.g_tilde.terms()[cursor].clone();
        match basis.iter().find(|b| b.lead().divides(&e)) {
            Some(b) => {
                let shift = e.sub(b.lead());
                let q = -(c / b.g_tilde.lead_coeff().unwrap());
                p.g_tilde = p.g_tilde.combine(&Coeff::one(), &b.g_tilde, &q, &shift);
                p.g = p.g.combine(&Coeff::one(), &b.g, &q, &shift);
            }
            None => cursor += 1,
        }
    }
    p
}

fn normalize(p: PairedBasisElement) -> PairedBasisElement {
    let k = p.g_tilde.content_factor();
    PairedBasisElement { g_tilde: p.g_tilde.scale(&k), g: p.g.scale(&k) }
}

/// Standard basis {g̃} of ⟨G₁ ∪ G₂⟩ under the global order attached to the
/// inputs, with g ∈ ⟨G₁⟩ and g̃ − g ∈ ⟨G₂⟩ for every returned pair.
pub fn modified_standard(g1: &[Polynomial], g2: &[Polynomial]) -> Result<Vec<PairedBasisElement>> {
    let Some(first) = g1.iter().chain(g2).next() else {
        return Ok(Vec::new());
    };
    let order = first.order().clone();
    if !order.is_global() {
        return Err(Error::NotGlobal(order.name().to_string()));
    }
    let zero = Polynomial::zero(&order);
    let mut basis: Vec<PairedBasisElement> = Vec::new();
    for g in g1.iter().filter(|g| !g.is_zero()) {
        let g = g.with_order(&order);
        basis.push(PairedBasisElement { g_tilde: g.clone(), g });
    }
    for g in g2.iter().filter(|g| !g.is_zero()) {
        basis.push(PairedBasisElement { g_tilde: g.with_order(&order), g: zero.clone() });
    }
    let mut pairs: Vec<(usize, usize, Exponent)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j, basis[i].lead().lcm(basis[j].lead())));
        }
    }
    while !pairs.is_empty() {
        let mut best = 0;
        for k in 1..pairs.len() {
            if order.cmp(&pairs[k].2, &pairs[best].2).is_lt() {
                best = k;
            }
        }
        let (i, j, gamma) = pairs.remove(best);
        let (a, b) = (&basis[i], &basis[j]);
        if a.lead().coprime(b.lead()) {
            continue;
        }
        let pending = |x: usize, y: usize| pairs.iter().any(|p| (p.0, p.1) == (x.min(y), x.max(y)));
        if (0..basis.len()).any(|k| {
            k != i && k != j && basis[k].lead().divides(&gamma) && !pending(i, k) && !pending(j, k)
        }) {
            continue;
        }
        let (ca, cb) = (a.g_tilde.lead_coeff().unwrap().clone(), b.g_tilde.lead_coeff().unwrap().clone());
        let (sa, sb) = (gamma.sub(a.lead()), gamma.sub(b.lead()));
        let s = PairedBasisElement {
            g_tilde: s_polynomial(&a.g_tilde, &b.g_tilde)?,
            g: a.g.mul_monomial(&cb, &sa).combine(&Coeff::one(), &b.g, &-ca, &sb),
        };
        let h = reduce_paired(s, &basis);
        if !h.g_tilde.is_zero() {
            let h = normalize(h);
            let k = basis.len();
            for (i, b) in basis.iter().enumerate() {
                pairs.push((i, k, b.lead().lcm(h.lead())));
            }
            basis.push(h);
        }
    }
    Ok(basis)
}

/// Keeps the pairs whose g̃ has a leading exponent not divisible by that of
/// an earlier kept element (the first among equal leads survives).
pub fn minimal_pairs(basis: Vec<PairedBasisElement>) -> Vec<PairedBasisElement> {
    let leads: Vec<Polynomial> = basis.iter().map(|b| b.g_tilde.clone()).collect();
    let keep = minimize(leads);
    let mut out = Vec::new();
    let mut used = vec![false; basis.len()];
    for k in keep {
        if let Some(i) = (0..basis.len()).find(|&i| !used[i] && basis[i].g_tilde == k) {
            used[i] = true;
            out.push(basis[i].clone());
        }
    }
    out
}

/// Flat ring layout used by [`psb_mod_prime`]: x variables first, then the
/// homogenizing variable when the x order is not global, then y.
struct Layout {
    order: OrderRef,
    x_idx: Vec<usize>,
    y_idx: Vec<usize>,
    z: Option<usize>,
}

impl Layout {
    fn new(x_order: &MonomialOrder, y_order: &MonomialOrder) -> Self {
        let (n, m) = (x_order.nvars(), y_order.nvars());
        if x_order.is_global() {
            let order = MonomialOrder::block(x_order, y_order).into_ref();
            Layout { order, x_idx: (0..n).collect(), y_idx: (n..n + m).collect(), z: None }
        } else {
            let order = MonomialOrder::block(&x_order.homogenizing(), y_order).into_ref();
            Layout { order, x_idx: (0..n).collect(), y_idx: (n + 1..n + 1 + m).collect(), z: Some(n) }
        }
    }

    fn flatten(&self, f: &ParamPolynomial) -> Polynomial {
        let flat_terms = match self.z {
            None => return f.to_flat(&self.order, &self.x_idx, &self.y_idx),
            Some(z) => {
                let d = f.x_degree();
                let mut terms = Vec::new();
                for (ex, c) in f.terms() {
                    for (ey, a) in c.terms() {
                        let mut e = Exponent::zero(self.order.nvars());
                        for (k, &i) in self.x_idx.iter().enumerate() {
                            e.set(i, ex.get(k));
                        }
                        e.set(z, u32::try_from(d - ex.degree()).expect("degree fits"));
                        for (k, &j) in self.y_idx.iter().enumerate() {
                            e.set(j, ey.get(k));
                        }
                        terms.push((e, a.clone()));
                    }
                }
                terms
            }
        };
        Polynomial::from_terms(&self.order, flat_terms)
    }

    fn unflatten(&self, p: &Polynomial, x_order: &OrderRef, y_order: &OrderRef) -> ParamPolynomial {
        ParamPolynomial::from_flat(p, x_order, y_order, &self.x_idx, &self.y_idx)
    }
}

/// Pseudo standard basis of ⟨gens⟩ modulo `q` through [`modified_standard`]
/// on the block order (⪯, ≤₀), homogenizing first when ⪯ is not global.
pub fn psb_mod_prime(gens: &[ParamPolynomial], q: &ParamIdeal) -> Result<(Vec<ParamPolynomial>, Vec<Polynomial>)> {
    let Some(first) = gens.first() else {
        return Ok((Vec::new(), Vec::new()));
    };
    if gens.iter().all(|g| g.is_in(q)) {
        return Ok((Vec::new(), Vec::new()));
    }
    let (x_order, y_order) = (first.x_order().clone(), q.order().clone());
    let layout = Layout::new(&x_order, &y_order);
    let g1: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| layout.flatten(g)).collect();
    let g2: Vec<Polynomial> = q
        .groebner()
        .iter()
        .map(|c| layout.flatten(&ParamPolynomial::constant(&x_order, c.clone())))
        .collect();
    let pairs = minimal_pairs(modified_standard(&g1, &g2)?);
    let mut basis = Vec::new();
    let mut h = Vec::new();
    for pair in pairs {
        let g = layout.unflatten(&pair.g, &x_order, &y_order);
        if let Some(l) = lead_mod(&g, q) {
            h.push(l.lc);
            basis.push(g.scale(&g.content_factor()));
        }
    }
    Ok((basis, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial, taylor_shift};

    #[test]
    fn seeds_without_second_ideal() {
        let o = MonomialOrder::deglex(2).into_ref();
        let names = default_names("x", 2);
        let f = parse_polynomial("x1^2 - x2", &names, &o).unwrap();
        let g = parse_polynomial("x1*x2 - 1", &names, &o).unwrap();
        let out = modified_standard(&[f, g], &[]).unwrap();
        assert!(out.iter().all(|p| p.g_tilde == p.g));
    }

    #[test]
    fn coprime_pair() {
        let o = MonomialOrder::block(&MonomialOrder::deglex(1), &MonomialOrder::deglex(1)).into_ref();
        let names = vec!["x1".to_string(), "y1".to_string()];
        let x1 = parse_polynomial("x1", &names, &o).unwrap();
        let y1 = parse_polynomial("y1", &names, &o).unwrap();
        let out = modified_standard(&[x1.clone()], &[y1.clone()]).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out[0], PairedBasisElement { g_tilde: x1.clone(), g: x1 });
        assert_eq!(out[1], PairedBasisElement { g_tilde: y1, g: Polynomial::zero(&o) });
    }

    #[test]
    fn cusp_on_curve_has_two_lead_coefficients() {
        let xo = MonomialOrder::valuation_compatible(2).into_ref();
        let yo = MonomialOrder::deglex(2).into_ref();
        let f = parse_polynomial("x1^2+x2^3", &default_names("x", 2), &xo).unwrap();
        let g = taylor_shift(&f, &xo, &yo);
        let ys = default_names("y", 2);
        let q = ParamIdeal::new(&yo, vec![parse_polynomial("y1^2+y2^3", &ys, &yo).unwrap()]).unwrap();
        let (basis, h) = psb_mod_prime(&[g], &q).unwrap();
        assert_eq!(basis.len(), 2);
        let h: Vec<Polynomial> = h.iter().map(|p| p.primitive()).collect();
        assert_eq!(h, vec![parse_polynomial("y2^2", &ys, &yo).unwrap(), parse_polynomial("y1^2", &ys, &yo).unwrap()]);
        for b in &basis {
            assert_eq!(lead_mod(b, &q).unwrap().exp.as_slice(), &[0, 1]);
        }
    }
}
