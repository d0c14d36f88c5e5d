#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use psbasis::hs_strat::{default_orders, hs_stratify, HsOptions, HsStratification};
use psbasis::param_ring::ParamIdeal;
use psbasis::poly::{default_names, parse_polynomial_list, Coeff, OrderRef, Polynomial};
use psbasis::render::{parse_golden, GoldenStratum};
use psbasis::stratify::{Engine, Stratum, StratifyOptions};

pub struct Fixture {
    pub name: &'static str,
    pub n: usize,
    pub input: &'static str,
    pub golden: &'static str,
}

pub const FIXTURES: [Fixture; 4] = [
    Fixture { name: "cusp", n: 2, input: "x1^2+x2^3", golden: include_str!("../golden/cusp.txt") },
    Fixture { name: "quartic_a", n: 3, input: "x1^4+x2^4+x3*x1^2*x2", golden: include_str!("../golden/quartic_a.txt") },
    Fixture { name: "quartic_b", n: 3, input: "x1^4+x2^4+x3*x1*x2", golden: include_str!("../golden/quartic_b.txt") },
    Fixture {
        name: "two_generators",
        n: 3,
        input: "x1-x2, x1*(x2^2+x3^3)",
        golden: include_str!("../golden/two_generators.txt"),
    },
];

impl Fixture {
    pub fn orders(&self) -> (OrderRef, OrderRef) {
        default_orders(self.n)
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        let (xo, _) = self.orders();
        parse_polynomial_list(self.input, &default_names("x", self.n), &xo).unwrap()
    }

    pub fn input_degree(&self) -> u64 {
        self.polys().iter().map(|p| p.total_degree()).max().unwrap()
    }

    pub fn run(&self, engine: Engine) -> HsStratification {
        let (xo, yo) = self.orders();
        let opts = HsOptions { stratify: StratifyOptions { engine, ..Default::default() }, ..Default::default() };
        hs_stratify(&self.polys(), &xo, &yo, &opts).unwrap()
    }

    pub fn golden(&self) -> Vec<GoldenStratum> {
        let (_, yo) = self.orders();
        parse_golden(self.golden, self.n, &default_names("x", self.n), &yo).unwrap()
    }
}

/// Golden lines with repeated (staircase, Q, H) removed.
pub fn distinct(lines: Vec<GoldenStratum>) -> Vec<GoldenStratum> {
    let mut out: Vec<GoldenStratum> = Vec::new();
    for g in lines {
        if !out.iter().any(|o| o.staircase == g.staircase && o.q == g.q && o.h_factors == g.h_factors) {
            out.push(g);
        }
    }
    out
}

fn product(q: &ParamIdeal, fs: &[Polynomial]) -> Polynomial {
    fs.iter().fold(Polynomial::one(q.order()), |acc, f| &acc * f)
}

/// V(Q)∖V(h₁) = V(Q)∖V(h₂) over the algebraic closure.
pub fn same_region(q: &ParamIdeal, h1: &[Polynomial], h2: &[Polynomial]) -> bool {
    let (p1, p2) = (product(q, h1), product(q, h2));
    q.extend(std::slice::from_ref(&p1)).in_radical(&p2) && q.extend(std::slice::from_ref(&p2)).in_radical(&p1)
}

#[derive(Debug, PartialEq, Eq, Clone, Copy)]
pub enum Match {
    Exact,
    Region,
    None,
}

pub fn match_line(g: &GoldenStratum, strata: &[Stratum]) -> Match {
    let mut best = Match::None;
    for s in strata.iter().filter(|s| s.staircase == g.staircase && s.q == g.q) {
        if s.h_factors == g.h_factors {
            return Match::Exact;
        }
        if same_region(&s.q, &s.h_factors, &g.h_factors) {
            best = Match::Region;
        }
    }
    best
}

/// Naive Buchberger over ℚ with deglex (x1 ≻ … ≻ xn): all pairs, no
/// criteria, full reduction. Independent of the library's polynomial type.
pub mod oracle {
    use super::*;

    pub type Mono = Vec<u32>;
    pub type OPoly = BTreeMap<Mono, BigRational>;

    pub fn cmp(a: &Mono, b: &Mono) -> std::cmp::Ordering {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        da.cmp(&db).then_with(|| a.cmp(b))
    }

    pub fn lead(p: &OPoly) -> Option<(&Mono, &BigRational)> {
        p.iter().max_by(|a, b| cmp(a.0, b.0))
    }

    pub fn from_lib(p: &Polynomial) -> OPoly {
        p.terms().iter().map(|(e, c)| (e.as_slice().to_vec(), c.clone())).collect()
    }

    fn add_scaled(p: &mut OPoly, q: &OPoly, c: &BigRational, shift: &Mono) {
        for (m, a) in q {
            let k: Mono = m.iter().zip(shift).map(|(x, y)| x + y).collect();
            let v = p.remove(&k).unwrap_or_else(BigRational::zero) + c * a;
            if !v.is_zero() {
                p.insert(k, v);
            }
        }
    }

    fn divides(a: &Mono, b: &Mono) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }

    pub fn reduce(p: &OPoly, basis: &[OPoly]) -> OPoly {
        let mut p = p.clone();
        let mut rest = OPoly::new();
        while let Some((m, c)) = lead(&p).map(|(m, c)| (m.clone(), c.clone())) {
            match basis.iter().find(|g| divides(lead(g).unwrap().0, &m)) {
                Some(g) => {
                    let (gm, gc) = lead(g).unwrap();
                    let shift: Mono = m.iter().zip(gm).map(|(x, y)| x - y).collect();
                    add_scaled(&mut p, g, &(-(c / gc)), &shift);
                }
                None => {
                    p.remove(&m);
                    rest.insert(m, c);
                }
            }
        }
        rest
    }

    pub fn groebner(gens: &[OPoly]) -> Vec<OPoly> {
        let mut basis: Vec<OPoly> = gens.iter().filter(|g| !g.is_empty()).cloned().collect();
        let mut done = 0;
        loop {
            let mut added = false;
            let len = basis.len();
            for j in 0..len {
                for i in 0..j {
                    if j < done {
                        continue;
                    }
                    let (mi, ci) = lead(&basis[i]).unwrap();
                    let (mj, cj) = lead(&basis[j]).unwrap();
                    let l: Mono = mi.iter().zip(mj).map(|(a, b)| *a.max(b)).collect();
                    let si: Mono = l.iter().zip(mi).map(|(a, b)| a - b).collect();
                    let sj: Mono = l.iter().zip(mj).map(|(a, b)| a - b).collect();
                    let mut s = OPoly::new();
                    add_scaled(&mut s, &basis[i], &(BigRational::one() / ci), &si);
                    add_scaled(&mut s, &basis[j], &(-BigRational::one() / cj), &sj);
                    let r = reduce(&s, &basis);
                    if !r.is_empty() {
                        basis.push(r);
                        added = true;
                    }
                }
            }
            done = len;
            if !added {
                return basis;
            }
        }
    }

    pub fn total_degree(p: &OPoly) -> u32 {
        p.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }
}

/// Specializes a stratum basis at a parameter point.
pub fn specialize_basis(s: &Stratum, point: &[Coeff]) -> Vec<Polynomial> {
    s.basis.iter().map(|g| g.specialize(point)).filter(|p| !p.is_zero()).collect()
}
