//! Pseudo standard bases modulo an ideal Q of the parameter ring: leading
//! data mod Q, S-polynomials mod Q, Mora's normal form mod Q and the pair
//! completion built on it.

use num_traits::One;

use crate::error::{Error, Result};
use crate::param_poly::ParamPolynomial;
use crate::param_ring::ParamIdeal;
use crate::poly::{Exponent, Polynomial};

const STEP_LIMIT: usize = 200_000;

/// Leading data of `f mod Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModQLeadData {
    pub exp: Exponent,
    /// Normal form modulo Q of the coefficient of `x^exp`.
    pub lc: Polynomial,
    pub ecart: u64,
}

/// Leading data of `f` after reducing its coefficients modulo `q`, or
/// `None` when every coefficient lies in `q`.
pub fn lead_mod(f: &ParamPolynomial, q: &ParamIdeal) -> Option<ModQLeadData> {
    let mut lead: Option<(Exponent, Polynomial)> = None;
    let mut degree = 0;
    for (e, c) in f.terms() {
        if lead.is_some() && e.degree() <= degree {
            continue;
        }
        let r = q.normal_form(c);
        if r.is_zero() {
            continue;
        }
        degree = degree.max(e.degree());
        if lead.is_none() {
            lead = Some((e.clone(), r));
        }
    }
    lead.map(|(exp, lc)| {
        let ecart = degree - exp.degree();
        ModQLeadData { exp, lc, ecart }
    })
}

/// `lc(g) x^{γ−α} f − lc(f) x^{γ−β} g` with leading data taken mod `q`.
pub fn s_poly_mod(f: &ParamPolynomial, g: &ParamPolynomial, q: &ParamIdeal) -> Result<ParamPolynomial> {
    let lf = lead_mod(f, q).ok_or_else(|| Error::Precondition("S-polynomial of an element of Q[x]".into()))?;
    let lg = lead_mod(g, q).ok_or_else(|| Error::Precondition("S-polynomial of an element of Q[x]".into()))?;
    Ok(s_poly_with(f, &lf, g, &lg))
}

fn s_poly_with(f: &ParamPolynomial, lf: &ModQLeadData, g: &ParamPolynomial, lg: &ModQLeadData) -> ParamPolynomial {
    let gamma = lf.exp.lcm(&lg.exp);
    f.mul_monomial(&lg.lc, &gamma.sub(&lf.exp)).combine(
        &Polynomial::one(f.y_order()),
        g,
        &-&lf.lc,
        &gamma.sub(&lg.exp),
    )
}

/// Witness of `u·f = Σ a_g·g + q_part + remainder`.
#[derive(Clone, Debug)]
pub struct DivisionCertificate {
    pub unit: ParamPolynomial,
    /// One quotient per divisor, in the order the divisors were given.
    pub quotients: Vec<ParamPolynomial>,
    /// Lies in ℚ[y][x]·Q.
    pub q_part: ParamPolynomial,
    pub remainder: ParamPolynomial,
}

impl DivisionCertificate {
    /// Re-expands both sides of the identity and compares them.
    pub fn verify(&self, f: &ParamPolynomial, divisors: &[ParamPolynomial], q: &ParamIdeal) -> bool {
        let lhs = self.unit.mul(f);
        let mut rhs = self.q_part.add(&self.remainder);
        for (a, g) in self.quotients.iter().zip(divisors) {
            rhs = rhs.add(&a.mul(g));
        }
        lhs == rhs && self.q_part.is_in(q)
    }
}

struct Tracked {
    p: ParamPolynomial,
    lead: Option<ModQLeadData>,
    unit: Option<ParamPolynomial>,
    coeffs: Vec<ParamPolynomial>,
}

impl Tracked {
    fn normalize(&mut self) {
        let k = self.p.content_factor();
        if k.is_one() {
            return;
        }
        self.p = self.p.scale(&k);
        if let Some(l) = self.lead.as_mut() {
            l.lc = l.lc.scale(&k);
        }
        if let Some(u) = self.unit.as_mut() {
            *u = u.scale(&k);
        }
        for c in &mut self.coeffs {
            *c = c.scale(&k);
        }
    }
}

/// `a·h − b·x^shift·t` applied to the polynomial and its cofactors.
fn reduce_step(h: &Tracked, t: &Tracked, shift: &Exponent, track: bool) -> (ParamPolynomial, Option<ParamPolynomial>, Vec<ParamPolynomial>) {
    let lh = h.lead.as_ref().unwrap();
    let lt = t.lead.as_ref().unwrap();
    let a = &lt.lc;
    let b = -&lh.lc;
    let p = h.p.combine(a, &t.p, &b, shift);
    if !track {
        return (p, None, Vec::new());
    }
    let unit = match (&h.unit, &t.unit) {
        (Some(uh), Some(ut)) => Some(uh.combine(a, ut, &b, shift)),
        (Some(uh), None) => Some(uh.mul_monomial(a, &Exponent::zero(h.p.nvars_x()))),
        (None, Some(ut)) => Some(ut.mul_monomial(&b, shift)),
        (None, None) => None,
    };
    let coeffs = h.coeffs.iter().zip(&t.coeffs).map(|(ch, ct)| ch.combine(a, ct, &b, shift)).collect();
    (p, unit, coeffs)
}

fn nf_inner(
    f: &ParamPolynomial,
    divisors: &[ParamPolynomial],
    q: &ParamIdeal,
    track: bool,
) -> Result<(ParamPolynomial, Option<DivisionCertificate>)> {
    let zero = ParamPolynomial::zero(f.x_order(), f.y_order());
    let k = divisors.len();
    let mut t: Vec<Tracked> = Vec::new();
    for (i, g) in divisors.iter().enumerate() {
        let lead = lead_mod(g, q);
        if lead.is_none() {
            continue;
        }
        let coeffs = if track {
            (0..k)
                .map(|j| if j == i { ParamPolynomial::constant(f.x_order(), Polynomial::one(f.y_order())) } else { zero.clone() })
                .collect()
        } else {
            Vec::new()
        };
        t.push(Tracked { p: g.clone(), lead, unit: None, coeffs });
    }
    let mut h = Tracked {
        p: f.clone(),
        lead: lead_mod(f, q),
        unit: track.then(|| ParamPolynomial::constant(f.x_order(), Polynomial::one(f.y_order()))),
        coeffs: if track { vec![zero.clone(); k] } else { Vec::new() },
    };
    let order = f.x_order().clone();
    let mut steps = 0;
    while let Some(lh) = h.lead.clone() {
        let mut best: Option<usize> = None;
        for (i, cand) in t.iter().enumerate() {
            let lc = cand.lead.as_ref().unwrap();
            if !lc.exp.divides(&lh.exp) {
                continue;
            }
            best = match best {
                None => Some(i),
                Some(b) => {
                    let lb = t[b].lead.as_ref().unwrap();
                    let better = lc.ecart < lb.ecart || (lc.ecart == lb.ecart && order.cmp(&lc.exp, &lb.exp).is_lt());
                    Some(if better { i } else { b })
                }
            };
        }
        let Some(bi) = best else { break };
        steps += 1;
        if steps > STEP_LIMIT {
            return Err(Error::IterationLimit("normal form modulo Q"));
        }
        let shift = lh.exp.sub(&t[bi].lead.as_ref().unwrap().exp);
        let (p, unit, coeffs) = reduce_step(&h, &t[bi], &shift, track);
        if t[bi].lead.as_ref().unwrap().ecart > lh.ecart {
            t.push(Tracked { p: h.p.clone(), lead: h.lead.clone(), unit: h.unit.clone(), coeffs: h.coeffs.clone() });
        }
        h = Tracked { lead: lead_mod(&p, q), p, unit, coeffs };
        h.normalize();
    }
    if !track {
        let out = if h.lead.is_none() { zero } else { h.p };
        return Ok((out, None));
    }
    let quotients: Vec<ParamPolynomial> = h.coeffs.iter().map(|c| c.scale(&-num_rational::BigRational::one())).collect();
    let (q_part, remainder) = if h.lead.is_none() { (h.p, zero.clone()) } else { (zero.clone(), h.p.clone()) };
    let remainder_out = remainder.clone();
    let unit = h.unit.unwrap();
    Ok((remainder_out, Some(DivisionCertificate { unit, quotients, q_part, remainder })))
}

/// Mora's normal form of `f` by `divisors` modulo `q`. The result is zero
/// when the reduction ends inside ℚ[y][x]·Q.
pub fn nf_mora_mod(f: &ParamPolynomial, divisors: &[ParamPolynomial], q: &ParamIdeal) -> Result<ParamPolynomial> {
    nf_inner(f, divisors, q, false).map(|r| r.0)
}

/// As [`nf_mora_mod`], also returning the division certificate.
pub fn nf_mora_mod_certified(
    f: &ParamPolynomial,
    divisors: &[ParamPolynomial],
    q: &ParamIdeal,
) -> Result<(ParamPolynomial, DivisionCertificate)> {
    nf_inner(f, divisors, q, true).map(|(r, c)| (r, c.expect("tracked")))
}

fn normalized(p: &ParamPolynomial) -> ParamPolynomial {
    p.scale(&p.content_factor())
}

/// Pair completion with the mod-Q normal form. Elements lying in
/// ℚ[y][x]·Q are kept but never paired; callers filter them.
pub fn standard_mod(gens: &[ParamPolynomial], q: &ParamIdeal) -> Result<Vec<ParamPolynomial>> {
    let mut basis: Vec<ParamPolynomial> = Vec::new();
    let mut leads: Vec<Option<ModQLeadData>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        basis.push(normalized(g));
        leads.push(lead_mod(g, q));
    }
    let mut pairs: Vec<(usize, usize, Exponent)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            if let (Some(a), Some(b)) = (&leads[i], &leads[j]) {
                pairs.push((i, j, a.exp.lcm(&b.exp)));
            }
        }
    }
    let order = match gens.first() {
        Some(g) => g.x_order().clone(),
        None => return Ok(basis),
    };
    let mut steps = 0;
    while !pairs.is_empty() {
        steps += 1;
        if steps > STEP_LIMIT {
            return Err(Error::IterationLimit("standard basis modulo Q"));
        }
        let mut best = 0;
        for k in 1..pairs.len() {
            if order.cmp(&pairs[k].2, &pairs[best].2).is_lt() {
                best = k;
            }
        }
        let (i, j, _) = pairs.remove(best);
        let (li, lj) = (leads[i].clone().unwrap(), leads[j].clone().unwrap());
        if li.exp.coprime(&lj.exp) && li.lc.is_constant() && lj.lc.is_constant() {
            continue;
        }
        let s = s_poly_with(&basis[i], &li, &basis[j], &lj);
        let h = nf_mora_mod(&s, &basis, q)?;
        if let Some(lh) = lead_mod(&h, q) {
            let k = basis.len();
            for (i, l) in leads.iter().enumerate() {
                if let Some(l) = l {
                    pairs.push((i, k, l.exp.lcm(&lh.exp)));
                }
            }
            basis.push(normalized(&h));
            leads.push(Some(lh));
        }
    }
    Ok(basis)
}

/// Pseudo standard basis of ⟨gens⟩ modulo `q` with the leading coefficients
/// mod Q of its elements. Returns empty sets when every generator lies in
/// ℚ[y][x]·Q.
pub fn psb_mod(gens: &[ParamPolynomial], q: &ParamIdeal) -> Result<(Vec<ParamPolynomial>, Vec<Polynomial>)> {
    if gens.iter().all(|g| g.is_in(q)) {
        return Ok((Vec::new(), Vec::new()));
    }
    let full = standard_mod(gens, q)?;
    let mut basis = Vec::new();
    let mut h = Vec::new();
    for g in full {
        if let Some(l) = lead_mod(&g, q) {
            h.push(l.lc);
            basis.push(g);
        }
    }
    Ok((basis, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial, taylor_shift, MonomialOrder, OrderRef};

    fn setup() -> (OrderRef, OrderRef, ParamPolynomial) {
        let xo = MonomialOrder::valuation_compatible(2).into_ref();
        let yo = MonomialOrder::deglex(2).into_ref();
        let f = parse_polynomial("x1^2+x2^3", &default_names("x", 2), &xo).unwrap();
        let g = taylor_shift(&f, &xo, &yo);
        (xo, yo, g)
    }

    fn ideal(src: &str, yo: &OrderRef) -> ParamIdeal {
        let names = default_names("y", yo.nvars());
        let gens = crate::poly::parse_polynomial_list(src, &names, yo).unwrap();
        ParamIdeal::new(yo, gens).unwrap()
    }

    #[test]
    fn lead_mod_on_cusp() {
        let (_, yo, g) = setup();
        let l = lead_mod(&g, &ParamIdeal::zero(&yo)).unwrap();
        assert_eq!(l.exp.as_slice(), &[0, 0]);
        let l = lead_mod(&g, &ideal("y1^2+y2^3", &yo)).unwrap();
        assert_eq!(l.exp.as_slice(), &[0, 1]);
        assert_eq!(l.lc, parse_polynomial("3*y2^2", &default_names("y", 2), &yo).unwrap());
        let l = lead_mod(&g, &ideal("y1, y2", &yo)).unwrap();
        assert_eq!(l.exp.as_slice(), &[2, 0]);
        assert!(l.lc.is_one());
        assert!(lead_mod(&g, &ParamIdeal::unit(&yo)).is_none());
    }

    #[test]
    fn psb_on_cusp() {
        let (_, yo, g) = setup();
        let (basis, h) = psb_mod(&[g.clone()], &ParamIdeal::zero(&yo)).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(h, vec![parse_polynomial("y1^2+y2^3", &default_names("y", 2), &yo).unwrap()]);
        let (basis, h) = psb_mod(&[g.clone()], &ideal("y1, y2", &yo)).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(h[0].is_one());
        let zero = ParamPolynomial::zero(g.x_order(), &yo);
        assert_eq!(psb_mod(&[zero], &ParamIdeal::zero(&yo)).unwrap().0.len(), 0);
    }

    #[test]
    fn certificate_identity() {
        let (_, yo, g) = setup();
        let q = ideal("y1^2+y2^3", &yo);
        let (r, cert) = nf_mora_mod_certified(&g, std::slice::from_ref(&g), &q).unwrap();
        assert!(r.is_zero());
        assert!(cert.verify(&g, &[g.clone()], &q));
    }
}
