//! Stratification of parameter space into constructible sets V(Q)∖V(h) on
//! which a pseudo standard basis specializes to a standard basis with a
//! fixed staircase.

use std::cmp::Ordering;
use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hilbert::Staircase;
use crate::modified::psb_mod_prime;
use crate::mora::{lead_mod, psb_mod};
use crate::param_poly::ParamPolynomial;
use crate::param_ring::{squarefree_part, ParamIdeal};
use crate::poly::{OrderRef, Polynomial};

pub const DEFAULT_MAX_DEPTH: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    #[default]
    Mora,
    Modified,
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mora" => Ok(Engine::Mora),
            "modified" => Ok(Engine::Modified),
            _ => Err(Error::Input(format!("unknown engine `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StratifyOptions {
    pub engine: Engine,
    /// Worker threads for the branch queue; 1 runs everything inline.
    pub workers: usize,
    pub max_depth: usize,
}

impl Default for StratifyOptions {
    fn default() -> Self {
        StratifyOptions { engine: Engine::Mora, workers: 1, max_depth: DEFAULT_MAX_DEPTH }
    }
}

#[derive(Clone, Debug)]
pub struct Stratum {
    pub q: ParamIdeal,
    /// Squarefree, primitive, pairwise distinct factors; h is their product
    /// (1 when empty).
    pub h_factors: Vec<Polynomial>,
    pub basis: Vec<ParamPolynomial>,
    pub staircase: Staircase,
}

impl Stratum {
    pub fn h(&self) -> Polynomial {
        self.h_factors.iter().fold(Polynomial::one(self.q.order()), |acc, f| &acc * f)
    }

    /// Whether `point` lies in V(Q)∖V(h).
    pub fn contains_point(&self, point: &[crate::poly::Coeff]) -> bool {
        use num_traits::Zero;
        self.q.generators().iter().all(|g| g.evaluate(point).is_zero())
            && self.h_factors.iter().all(|f| !f.evaluate(point).is_zero())
    }
}

#[derive(Clone, Debug)]
pub struct StratificationResult {
    pub strata: Vec<Stratum>,
    pub vanishing_ideal: ParamIdeal,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Variant {
    Plain,
    Pruned,
}

enum Outcome {
    /// Every generator lies in ℚ[y][x]·Q.
    Vanishing,
    Branch { stratum: Option<Stratum>, children: Vec<ParamIdeal> },
}

/// Canonical factor list of the leading coefficients `h` modulo `q`.
pub fn h_factors(h: &[Polynomial], q: &ParamIdeal) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for lc in h {
        let r = q.normal_form(lc);
        if r.is_zero() {
            continue;
        }
        let s = squarefree_part(&r);
        if !s.is_constant() && !out.contains(&s) {
            out.push(s);
        }
    }
    out.sort_by(cmp_poly);
    out
}

/// Total order on polynomials: term by term, exponents under the
/// polynomial's order (larger first), then coefficients; shorter prefix first.
pub fn cmp_poly(a: &Polynomial, b: &Polynomial) -> Ordering {
    for (x, y) in a.terms().iter().zip(b.terms()) {
        let c = a.order().cmp(&x.0, &y.0).reverse().then_with(|| x.1.cmp(&y.1));
        if c != Ordering::Equal {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

fn cmp_poly_lists(a: &[Polynomial], b: &[Polynomial]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        a.iter().zip(b).map(|(x, y)| cmp_poly(x, y)).find(|c| *c != Ordering::Equal).unwrap_or(Ordering::Equal)
    })
}

fn pseudo_basis(
    gens: &[ParamPolynomial],
    q: &ParamIdeal,
    engine: Engine,
) -> Result<(Vec<ParamPolynomial>, Vec<Polynomial>)> {
    match engine {
        Engine::Mora => psb_mod(gens, q),
        Engine::Modified => psb_mod_prime(gens, q),
    }
}

fn staircase_of(basis: &[ParamPolynomial], q: &ParamIdeal, nvars: usize) -> Staircase {
    Staircase::new(nvars, basis.iter().filter_map(|g| lead_mod(g, q)).map(|l| l.exp))
}

fn process(gens: &[ParamPolynomial], q: &ParamIdeal, nvars: usize, engine: Engine, variant: Variant) -> Result<Outcome> {
    if gens.iter().all(|g| g.is_in(q)) {
        return Ok(Outcome::Vanishing);
    }
    let (basis, h) = pseudo_basis(gens, q, engine)?;
    let factors = h_factors(&h, q);
    let staircase = staircase_of(&basis, q, nvars);
    let make = |factors: Vec<Polynomial>| Stratum { q: q.clone(), h_factors: factors, basis: basis.clone(), staircase: staircase.clone() };
    match variant {
        Variant::Plain => {
            let children = factors.iter().map(|f| q.extend(std::slice::from_ref(f))).collect();
            Ok(Outcome::Branch { stratum: Some(make(factors)), children })
        }
        Variant::Pruned => {
            let radical: Vec<Polynomial> = factors.iter().filter(|f| q.in_radical(f)).cloned().collect();
            if !radical.is_empty() {
                // V(Q) ⊂ V(h'): the stratum is empty and V(Q) is covered by the enlarged ideal.
                return Ok(Outcome::Branch { stratum: None, children: vec![q.extend(&radical).squarefree_reduce()] });
            }
            let product = factors.iter().fold(Polynomial::one(q.order()), |acc, f| &acc * f);
            let children = factors.iter().map(|f| q.extend(std::slice::from_ref(f)).squarefree_reduce()).collect();
            let stratum = (!q.in_radical(&product)).then(|| make(factors));
            Ok(Outcome::Branch { stratum, children })
        }
    }
}

fn run(gens: &[ParamPolynomial], y_order: &OrderRef, opts: &StratifyOptions, variant: Variant) -> Result<StratificationResult> {
    let gens: Vec<ParamPolynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut vanishing = ParamIdeal::unit(y_order);
    let mut strata = Vec::new();
    let Some(first) = gens.first() else {
        return Ok(StratificationResult { strata, vanishing_ideal: ParamIdeal::zero(y_order) });
    };
    let nvars = first.nvars_x();
    let pool = if opts.workers > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.workers)
                .build()
                .map_err(|e| Error::Input(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };
    let mut seen: Vec<ParamIdeal> = vec![ParamIdeal::zero(y_order)];
    let mut queue: VecDeque<(ParamIdeal, usize)> = VecDeque::from([(ParamIdeal::zero(y_order), 0)]);
    while !queue.is_empty() {
        let level: Vec<(ParamIdeal, usize)> = queue.drain(..).collect();
        let work = |(q, _): &(ParamIdeal, usize)| process(&gens, q, nvars, opts.engine, variant);
        let outcomes: Vec<Result<Outcome>> = match &pool {
            Some(p) => p.install(|| level.par_iter().map(work).collect()),
            None => level.iter().map(work).collect(),
        };
        for ((q, depth), outcome) in level.into_iter().zip(outcomes) {
            match outcome? {
                Outcome::Vanishing => vanishing = vanishing.intersect(&q),
                Outcome::Branch { stratum, children } => {
                    strata.extend(stratum);
                    for child in children {
                        assert!(child.contains_ideal(&q) && !q.contains_ideal(&child), "branch ideals grow strictly");
                        if depth + 1 > opts.max_depth {
                            return Err(Error::SizeCap { what: "branch depth", value: depth as u64 + 1, cap: opts.max_depth as u64 });
                        }
                        let duplicate = match variant {
                            Variant::Plain => queue.iter().any(|(p, _)| *p == child),
                            Variant::Pruned => seen.contains(&child),
                        };
                        if !duplicate {
                            seen.push(child.clone());
                            queue.push_back((child, depth + 1));
                        }
                    }
                }
            }
        }
    }
    Ok(StratificationResult { strata, vanishing_ideal: vanishing })
}

/// The general loop: every visited Q yields a stratum, possibly empty.
pub fn strat_exp1(gens: &[ParamPolynomial], y_order: &OrderRef, opts: &StratifyOptions) -> Result<StratificationResult> {
    run(gens, y_order, opts, Variant::Plain)
}

/// The pruned loop: strata with V(Q)∖V(h) = ∅ are suppressed and branches
/// that do not shrink the variety are collapsed.
pub fn strat_exp2(gens: &[ParamPolynomial], y_order: &OrderRef, opts: &StratifyOptions) -> Result<StratificationResult> {
    run(gens, y_order, opts, Variant::Pruned)
}

/// Sorts strata by the Gröbner basis of Q, then by h, and drops repeated
/// (staircase, Q, h) triples.
pub fn canonicalize(mut result: StratificationResult) -> StratificationResult {
    result.strata.sort_by(|a, b| {
        cmp_poly_lists(&a.q.canonical_generators(), &b.q.canonical_generators())
            .then_with(|| cmp_poly_lists(&a.h_factors, &b.h_factors))
            .then_with(|| a.staircase.cmp(&b.staircase))
    });
    let mut out: Vec<Stratum> = Vec::new();
    for s in result.strata {
        if !out.iter().any(|t| t.staircase == s.staircase && t.q == s.q && t.h_factors == s.h_factors) {
            out.push(s);
        }
    }
    result.strata = out;
    result
}

/// Union of all strata bases without repetitions.
pub fn comprehensive_basis(result: &StratificationResult) -> Vec<ParamPolynomial> {
    let mut out: Vec<ParamPolynomial> = Vec::new();
    for s in &result.strata {
        for g in &s.basis {
            if !out.contains(g) {
                out.push(g.clone());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial, parse_polynomial_list, taylor_shift, MonomialOrder};

    fn cusp() -> (OrderRef, ParamPolynomial) {
        let xo = MonomialOrder::valuation_compatible(2).into_ref();
        let yo = MonomialOrder::deglex(2).into_ref();
        let f = parse_polynomial("x1^2+x2^3", &default_names("x", 2), &xo).unwrap();
        (yo.clone(), taylor_shift(&f, &xo, &yo))
    }

    fn ideal(src: &str, yo: &OrderRef) -> ParamIdeal {
        ParamIdeal::new(yo, parse_polynomial_list(src, &default_names("y", yo.nvars()), yo).unwrap()).unwrap()
    }

    #[test]
    fn cusp_three_strata() {
        let (yo, g) = cusp();
        for engine in [Engine::Mora, Engine::Modified] {
            let opts = StratifyOptions { engine, ..Default::default() };
            let r = canonicalize(strat_exp2(&[g.clone()], &yo, &opts).unwrap());
            assert!(r.vanishing_ideal.is_unit());
            let qs: Vec<ParamIdeal> = r.strata.iter().map(|s| s.q.clone()).collect();
            assert_eq!(qs, vec![ParamIdeal::zero(&yo), ideal("y1^2+y2^3", &yo), ideal("y1, y2", &yo)]);
            let st: Vec<Vec<u32>> = r.strata.iter().map(|s| s.staircase.generators()[0].as_slice().to_vec()).collect();
            assert_eq!(st, vec![vec![0, 0], vec![0, 1], vec![2, 0]]);
        }
    }

    #[test]
    fn vanishing_branch() {
        let xo = MonomialOrder::deglex(1).into_ref();
        let yo = MonomialOrder::deglex(1).into_ref();
        let y1 = parse_polynomial("y1", &default_names("y", 1), &yo).unwrap();
        let g = ParamPolynomial::from_terms(&xo, &yo, vec![(crate::poly::Exponent::from_slice(&[1]), y1)]);
        let r = strat_exp1(&[g], &yo, &StratifyOptions::default()).unwrap();
        assert_eq!(r.strata.len(), 1);
        assert_eq!(r.vanishing_ideal, ideal("y1", &yo));
    }

    #[test]
    fn parallel_matches_serial() {
        let (yo, g) = cusp();
        let a = canonicalize(strat_exp2(&[g.clone()], &yo, &StratifyOptions::default()).unwrap());
        let b = canonicalize(strat_exp2(&[g], &yo, &StratifyOptions { workers: 3, ..Default::default() }).unwrap());
        assert_eq!(a.strata.len(), b.strata.len());
        for (x, y) in a.strata.iter().zip(&b.strata) {
            assert_eq!((&x.q, &x.h_factors, &x.staircase), (&y.q, &y.h_factors, &y.staircase));
        }
    }
}
