//! Standard bases over ℚ: Buchberger for global orders, Mora's tangent cone
//! normal form and the Standard completion for arbitrary orders.

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{s_polynomial, Coeff, Exponent, Polynomial};

/// Full reduction of `f` by `basis` under a global order. Every term of the
/// result is irreducible by the leading terms of `basis`.
pub fn reduce_full(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut cursor = 0;
    while cursor < p.len() {
        let (e, c) = p.terms()[cursor].clone();
        let divisor = basis.iter().find(|g| g.lead_exponent().is_some_and(|l| l.divides(&e)));
        match divisor {
            Some(g) => {
                let shift = e.sub(g.lead_exponent().unwrap());
                let q = c / g.lead_coeff().unwrap();
                p = p.combine(&Coeff::one(), g, &-q, &shift);
            }
            None => cursor += 1,
        }
    }
    p
}

/// Reduces only the leading term repeatedly (global order).
pub fn reduce_lead(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut p = f.clone();
    while let Some(e) = p.lead_exponent().cloned() {
        let Some(g) = basis.iter().find(|g| g.lead_exponent().is_some_and(|l| l.divides(&e))) else {
            break;
        };
        let shift = e.sub(g.lead_exponent().unwrap());
        let q = p.lead_coeff().unwrap() / g.lead_coeff().unwrap();
        p = p.combine(&Coeff::one(), g, &-q, &shift);
    }
    p
}

struct PairQueue {
    pending: Vec<(usize, usize, Exponent)>,
}

impl PairQueue {
    fn contains(&self, i: usize, j: usize) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        self.pending.iter().any(|&(x, y, _)| x == a && y == b)
    }

    /// Removes the pair with the smallest lcm (first inserted on ties).
    fn pop_min(&mut self, basis: &[Polynomial]) -> Option<(usize, usize, Exponent)> {
        let order = basis.first()?.order();
        let mut best = 0;
        for k in 1..self.pending.len() {
            if order.cmp(&self.pending[k].2, &self.pending[best].2).is_lt() {
                best = k;
            }
        }
        if self.pending.is_empty() {
            None
        } else {
            Some(self.pending.remove(best))
        }
    }
}

/// Reduced Gröbner basis under the (global) order attached to the inputs.
/// Elements are monic and sorted by descending leading exponent.
pub fn groebner(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let order = first.order().clone();
    if !order.is_global() {
        return Err(Error::NotGlobal(order.name().to_string()));
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut queue = PairQueue { pending: Vec::new() };
    let add = |h: Polynomial, basis: &mut Vec<Polynomial>, queue: &mut PairQueue| {
        let h = h.monic();
        let k = basis.len();
        let lh = h.lead_exponent().unwrap().clone();
        basis.push(h);
        for i in 0..k {
            let li = basis[i].lead_exponent().unwrap();
            queue.pending.push((i, k, li.lcm(&lh)));
        }
    };
    for g in gens {
        let g = g.with_order(&order);
        let r = reduce_full(&g, &basis);
        if !r.is_zero() {
            if r.is_constant() {
                return Ok(vec![Polynomial::one(&order)]);
            }
            add(r, &mut basis, &mut queue);
        }
    }
    while let Some((i, j, lcm)) = queue.pop_min(&basis) {
        let (li, lj) = (basis[i].lead_exponent().unwrap(), basis[j].lead_exponent().unwrap());
        if li.coprime(lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead_exponent().unwrap().divides(&lcm)
                && !queue.contains(i, k)
                && !queue.contains(j, k)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = reduce_full(&s, &basis);
        if !r.is_zero() {
            if r.is_constant() {
                return Ok(vec![Polynomial::one(&order)]);
            }
            add(r, &mut basis, &mut queue);
        }
    }
    Ok(interreduce(minimize(basis)))
}

/// Drops elements whose leading exponent is divisible by another's.
pub fn minimize(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lg = g.lead_exponent().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let lh = h.lead_exponent().unwrap();
            j != i && lh.divides(lg) && (lh != lg || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    keep
}

fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let others: Vec<Polynomial> =
            basis.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let lead = Polynomial::from_terms(basis[i].order(), vec![basis[i].terms()[0].clone()]);
        let tail = &basis[i] - &lead;
        out.push((&lead + &reduce_full(&tail, &others)).monic());
    }
    if let Some(first) = out.first() {
        let order = first.order().clone();
        out.sort_by(|a, b| order.cmp(b.lead_exponent().unwrap(), a.lead_exponent().unwrap()));
    }
    out
}

/// Mora's normal form for an arbitrary order. Returns a weak normal form:
/// zero iff `f` lies in the ideal generated by `basis` in the localization
/// attached to the order.
pub fn mora_nf(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut h = f.clone();
    let mut t: Vec<Polynomial> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    while let Some(lh) = h.lead_exponent().cloned() {
        let order = h.order().clone();
        let mut best: Option<usize> = None;
        for (k, g) in t.iter().enumerate() {
            let lg = g.lead_exponent().unwrap();
            if !lg.divides(&lh) {
                continue;
            }
            best = match best {
                None => Some(k),
                Some(b) => {
                    let (eb, ek) = (t[b].ecart(), g.ecart());
                    if ek < eb || (ek == eb && order.cmp(lg, t[b].lead_exponent().unwrap()).is_lt()) {
                        Some(k)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        let Some(k) = best else { break };
        let g = t[k].clone();
        if g.ecart() > h.ecart() {
            t.push(h.clone());
        }
        let shift = lh.sub(g.lead_exponent().unwrap());
        let q = h.lead_coeff().unwrap() / g.lead_coeff().unwrap();
        h = h.combine(&Coeff::one(), &g, &-q, &shift);
    }
    h
}

/// Standard basis for an arbitrary order by pair completion with Mora's
/// normal form; the result is minimal (no redundant leading exponents).
pub fn standard_basis(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| g.primitive()).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while let Some(k) = select_pair(&basis, &pairs) {
        let (i, j) = pairs.remove(k);
        let (li, lj) = (basis[i].lead_exponent().unwrap(), basis[j].lead_exponent().unwrap());
        if li.coprime(lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let h = mora_nf(&s, &basis);
        if !h.is_zero() {
            let n = basis.len();
            basis.push(h.primitive());
            pairs.extend((0..n).map(|i| (i, n)));
        }
    }
    Ok(minimize(basis))
}

fn select_pair(basis: &[Polynomial], pairs: &[(usize, usize)]) -> Option<usize> {
    let order = basis.first()?.order();
    let lcm = |&(i, j): &(usize, usize)| {
        basis[i].lead_exponent().unwrap().lcm(basis[j].lead_exponent().unwrap())
    };
    let mut best: Option<(usize, Exponent)> = None;
    for (k, p) in pairs.iter().enumerate() {
        let l = lcm(p);
        if best.as_ref().is_none_or(|(_, b)| order.cmp(&l, b).is_lt()) {
            best = Some((k, l));
        }
    }
    best.map(|b| b.0)
}

/// Buchberger's criterion via Mora normal forms: every S-polynomial of the
/// set reduces to zero.
pub fn is_standard_basis(basis: &[Polynomial]) -> Result<bool> {
    for j in 0..basis.len() {
        for i in 0..j {
            let s = s_polynomial(&basis[i], &basis[j])?;
            if !mora_nf(&s, basis).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Minimal generators of the leading-exponent set of a standard basis.
pub fn leading_exponents(basis: &[Polynomial]) -> Vec<Exponent> {
    basis.iter().filter_map(|g| g.lead_exponent().cloned()).collect()
}
