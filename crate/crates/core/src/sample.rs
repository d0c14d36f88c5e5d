//! Rational points on constructible sets V(Q)∖V(h), found by lexicographic
//! back-substitution with random values for unconstrained coordinates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::param_ring::ParamIdeal;
use crate::poly::{Coeff, MonomialOrder, OrderRef, Polynomial};

const DIVISOR_LIMIT: u64 = 1_000_000;

/// Up to `count` distinct rational points of V(q)∖V(∏avoid), trying at most
/// `attempts` random back-substitutions. May return fewer points.
pub fn sample_points(q: &ParamIdeal, avoid: &[Polynomial], count: usize, attempts: usize, seed: u64) -> Vec<Vec<Coeff>> {
    let m = q.nvars();
    let lex: OrderRef = MonomialOrder::lex(m).into_ref();
    let gb: Vec<Polynomial> = ParamIdeal::new(&lex, q.generators().to_vec()).expect("lex is global").groebner().to_vec();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out: Vec<Vec<Coeff>> = Vec::new();
    if gb.first().is_some_and(|g| g.is_constant()) {
        return out;
    }
    for _ in 0..attempts {
        if out.len() >= count {
            break;
        }
        let Some(p) = try_point(&gb, m, &mut rng) else { continue };
        if avoid.iter().any(|h| h.evaluate(&p).is_zero()) || out.contains(&p) {
            continue;
        }
        debug_assert!(q.generators().iter().all(|g| g.evaluate(&p).is_zero()));
        out.push(p);
    }
    out
}

fn try_point(gb: &[Polynomial], m: usize, rng: &mut StdRng) -> Option<Vec<Coeff>> {
    let mut values: Vec<Option<Coeff>> = vec![None; m];
    for k in (0..m).rev() {
        let mut g: Vec<Coeff> = Vec::new();
        for p in gb.iter().filter(|p| p.support_vars().first() == Some(&k)) {
            let u = univariate(&p.partial_evaluate(&values), k);
            g = univariate_gcd(&g, &u);
        }
        let v = if g.is_empty() {
            Coeff::from_integer(BigInt::from(rng.gen_range(-6i64..=6)))
        } else {
            let roots = rational_roots(&g);
            if roots.is_empty() {
                return None;
            }
            roots[rng.gen_range(0..roots.len())].clone()
        };
        values[k] = Some(v);
    }
    let p: Vec<Coeff> = values.into_iter().map(|v| v.unwrap()).collect();
    gb.iter().all(|g| g.evaluate(&p).is_zero()).then_some(p)
}

/// Ascending coefficients of a polynomial involving only variable `k`.
fn univariate(p: &Polynomial, k: usize) -> Vec<Coeff> {
    let mut c = vec![Coeff::zero(); p.terms().iter().map(|(e, _)| e.get(k) as usize + 1).max().unwrap_or(0)];
    for (e, a) in p.terms() {
        c[e.get(k) as usize] += a;
    }
    trim(c)
}

fn trim(mut c: Vec<Coeff>) -> Vec<Coeff> {
    while c.last().is_some_and(|a| a.is_zero()) {
        c.pop();
    }
    c
}

fn rem(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap();
    while r.len() >= b.len() && !r.is_empty() {
        let f = r.last().unwrap() / lb;
        let s = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[s + i] -= &f * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn univariate_gcd(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

fn eval(c: &[Coeff], x: &Coeff) -> Coeff {
    c.iter().rev().fold(Coeff::zero(), |acc, a| acc * x + a)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > DIVISOR_LIMIT * DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
        if d > DIVISOR_LIMIT {
            return None;
        }
    }
    Some(out)
}

/// Rational roots by the rational root theorem; empty when the constant
/// or leading coefficient is too large to factor by trial division.
pub fn rational_roots(c: &[Coeff]) -> Vec<Coeff> {
    let c = trim(c.to_vec());
    if c.len() <= 1 {
        return Vec::new();
    }
    let den = c.iter().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
    let ints: Vec<BigInt> = c.iter().map(|a| (a * Coeff::from_integer(den.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|a| !a.is_zero()).unwrap();
    if low > 0 {
        roots.push(Coeff::zero());
    }
    let (Some(ps), Some(qs)) = (divisors(&ints[low]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    for p in &ps {
        for q in &qs {
            for s in [1, -1] {
                let r = Coeff::new(p * s, q.clone());
                if !roots.contains(&r) && eval(&c, &r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial_list, rat};

    #[test]
    fn roots() {
        let c = vec![rat(-2), rat(1), rat(1)];
        assert_eq!(rational_roots(&c), vec![rat(-2), rat(1)]);
        assert!(rational_roots(&[rat(1), rat(0), rat(1)]).is_empty());
    }

    #[test]
    fn points_on_cusp_curve() {
        let o = MonomialOrder::deglex(2).into_ref();
        let names = default_names("y", 2);
        let q = ParamIdeal::new(&o, parse_polynomial_list("y1^2+y2^3", &names, &o).unwrap()).unwrap();
        let avoid = parse_polynomial_list("y1, y2", &names, &o).unwrap();
        let pts = sample_points(&q, &avoid, 3, 500, 7);
        assert_eq!(pts.len(), 3);
        for p in pts {
            assert!(q.generators()[0].evaluate(&p).is_zero());
            assert!(!p[0].is_zero());
        }
    }
}
