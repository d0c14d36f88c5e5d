//! Staircases, their Hilbert-Samuel functions and polynomials, and the
//! closed-form degree and counting bounds.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Exponent;

/// Default cap on the number of staircase generators for the 2^q
/// inclusion-exclusion.
pub const DEFAULT_SUBSET_CAP: usize = 20;
/// Default cap on n·D(n,d) for the product in the function count.
pub const DEFAULT_HF_CAP: u64 = 100_000;

/// An upward-closed subset of ℕⁿ given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Staircase {
    nvars: usize,
    gens: Vec<Exponent>,
}

impl Staircase {
    /// Minimizes `gens` to an antichain and sorts it lexicographically.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Exponent>) -> Self {
        let mut all: Vec<Exponent> = gens.into_iter().collect();
        assert!(all.iter().all(|g| g.len() == nvars), "staircase generator dimension");
        all.sort();
        all.dedup();
        let minimal: Vec<Exponent> = all
            .iter()
            .filter(|g| !all.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        Staircase { nvars, gens: minimal }
    }

    /// The staircase with no generators (the zero ideal).
    pub fn empty(nvars: usize) -> Self {
        Staircase { nvars, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.gens.iter().any(|g| g.divides(e))
    }

    /// Largest generator degree δ (zero without generators).
    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }
}

impl fmt::Debug for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

fn for_each_exponent(n: usize, max_deg: u64, mut f: impl FnMut(&Exponent)) {
    fn rec(e: &mut Exponent, i: usize, left: u64, f: &mut dyn FnMut(&Exponent)) {
        if i == e.len() {
            f(e);
            return;
        }
        for k in 0..=left {
            e.set(i, k as u32);
            rec(e, i + 1, left - k, f);
        }
        e.set(i, 0);
    }
    let mut e = Exponent::zero(n);
    rec(&mut e, 0, max_deg, &mut f);
}

/// Number of α ∉ E with |α| ≤ r, by enumeration.
pub fn hs_function(e: &Staircase, r: u64) -> u64 {
    let mut count = 0;
    for_each_exponent(e.nvars, r, |a| {
        if !e.contains(a) {
            count += 1;
        }
    });
    count
}

/// Homogeneous Hilbert function r ↦ HSf(r) − HSf(r−1).
pub fn homogeneous_hilbert(e: &Staircase, r: u64) -> u64 {
    if r == 0 {
        hs_function(e, 0)
    } else {
        hs_function(e, r) - hs_function(e, r - 1)
    }
}

/// Univariate polynomial with rational coefficients (ascending powers),
/// together with the least r₀ from which it agrees with its function.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct NumericalPolynomial {
    #[serde(serialize_with = "ser_rationals")]
    pub coefficients: Vec<BigRational>,
    pub stability_threshold: u64,
}

fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        seq.serialize_element(&crate::poly::parse::format_coeff(c))?;
    }
    seq.end()
}

impl NumericalPolynomial {
    pub fn eval(&self, r: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(r));
        self.coefficients.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.iter().rposition(|c| !c.is_zero())
    }
}

impl fmt::Display for NumericalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coefficients.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()) {
            let mag = crate::poly::parse::format_coeff(&c.abs());
            let mono = match i {
                0 => mag,
                _ => {
                    let r = if i == 1 { "r".to_string() } else { format!("r^{i}") };
                    if c.abs().is_one() { r } else { format!("{mag}*{r}") }
                }
            };
            if out.is_empty() {
                out = if c.is_negative() { format!("-{mono}") } else { mono };
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                out.push_str(&mono);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for NumericalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (r >= {})", self, self.stability_threshold)
    }
}

/// C(r − e + n, n) as a polynomial in r, ascending coefficients.
fn shifted_binomial(n: usize, e: i64) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for i in 1..=n as i64 {
        // multiply by (r + i − e)
        let c = BigRational::from_integer(BigInt::from(i - e));
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (k, a) in poly.iter().enumerate() {
            next[k] += a * &c;
            next[k + 1] += a;
        }
        poly = next;
    }
    let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    let fact = BigRational::from_integer(fact);
    poly.into_iter().map(|a| a / &fact).collect()
}

pub fn subset_cap() -> usize {
    std::env::var("PSB_SUBSET_CAP").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_SUBSET_CAP)
}

pub fn hf_cap() -> u64 {
    std::env::var("PSB_HF_CAP").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_HF_CAP)
}

/// The affine Hilbert polynomial of the complement of `e`, by
/// inclusion-exclusion over subsets of generators, with its exact
/// stability threshold.
pub fn affine_hilbert_poly(e: &Staircase) -> Result<NumericalPolynomial> {
    affine_hilbert_poly_capped(e, subset_cap())
}

pub fn affine_hilbert_poly_capped(e: &Staircase, cap: usize) -> Result<NumericalPolynomial> {
    let n = e.nvars;
    let q = e.gens.len();
    if q > cap {
        return Err(Error::SizeCap { what: "staircase generators", value: q as u64, cap: cap as u64 });
    }
    let mut coeffs = vec![BigRational::zero(); n + 1];
    let mut max_lcm = 0u64;
    for mask in 0u64..(1u64 << q) {
        let mut l = Exponent::zero(n);
        for (i, g) in e.gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                l = l.lcm(g);
            }
        }
        let deg = l.degree();
        max_lcm = max_lcm.max(deg);
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        for (k, c) in shifted_binomial(n, deg as i64).into_iter().enumerate() {
            coeffs[k] += c * BigRational::from_integer(BigInt::from(sign));
        }
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    let mut p = NumericalPolynomial { coefficients: coeffs, stability_threshold: 0 };
    // Each binomial term is exact once r ≥ e_T − n.
    let mut r0 = max_lcm.saturating_sub(n as u64);
    while r0 > 0 {
        let v = p.eval(r0 as i64 - 1);
        if v != BigRational::from_integer(BigInt::from(hs_function(e, r0 - 1))) {
            break;
        }
        r0 -= 1;
    }
    p.stability_threshold = r0;
    Ok(p)
}

/// C(a, b), zero when b < 0 or a < b.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(a), BigInt::from(b))
}

fn binomial_big(a: &BigInt, b: u64) -> BigInt {
    if a < &BigInt::from(b) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * (a - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// D(n, d) = 2·((d² + 2d)/2)^{2^{n−1}} as an exact rational.
pub fn degree_bound_exact(n: u32, d: u32) -> Result<BigRational> {
    if n == 0 || d == 0 {
        return Err(Error::Input("n and d must be positive".into()));
    }
    if n > 20 {
        return Err(Error::SizeCap { what: "degree bound variable count", value: n as u64, cap: 20 });
    }
    let base = BigRational::new(BigInt::from(d as u64 * d as u64 + 2 * d as u64), BigInt::from(2));
    let k = 1usize << (n - 1);
    Ok(num_traits::pow(base, k) * BigRational::from_integer(BigInt::from(2)))
}

/// ⌊D(n, d)⌋: the largest integer degree allowed by the bound.
pub fn degree_bound(n: u32, d: u32) -> Result<BigInt> {
    Ok(degree_bound_exact(n, d)?.floor().to_integer())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountBounds {
    pub hp_count: BigInt,
    /// `None` when n·D(n,d) exceeds the product cap.
    pub hf_count: Option<BigInt>,
}

/// C(N + n, n) and C(N + n, n)·∏_{k=0}^{N} (1 + C(k + n − 1, n − 1)) with
/// N = ⌊n·D(n, d)⌋.
pub fn hs_count_bounds(n: u32, d: u32) -> Result<CountBounds> {
    hs_count_bounds_capped(n, d, hf_cap())
}

pub fn hs_count_bounds_capped(n: u32, d: u32, cap: u64) -> Result<CountBounds> {
    let nd = (degree_bound_exact(n, d)? * BigRational::from_integer(BigInt::from(n))).floor().to_integer();
    let hp = binomial_big(&(&nd + BigInt::from(n)), n as u64);
    let hf = match nd.to_u64() {
        Some(top) if top <= cap => {
            let mut prod = hp.clone();
            for k in 0..=top as i64 {
                prod *= binomial(k + n as i64 - 1, n as i64 - 1) + BigInt::one();
            }
            Some(prod)
        }
        _ => None,
    };
    Ok(CountBounds { hp_count: hp, hf_count: hf })
}

/// hf_count, or a size error when the product is over the cap.
pub fn hf_count(n: u32, d: u32) -> Result<BigInt> {
    let b = hs_count_bounds(n, d)?;
    let nd = (degree_bound_exact(n, d)? * BigRational::from_integer(BigInt::from(n))).floor().to_integer();
    b.hf_count.ok_or(Error::SizeCap { what: "n*D(n,d)", value: nd.to_u64().unwrap_or(u64::MAX), cap: hf_cap() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(n: usize, gens: &[&[u32]]) -> Staircase {
        Staircase::new(n, gens.iter().map(|g| Exponent::from_slice(g)))
    }

    #[test]
    fn hs_examples() {
        let e = Staircase::empty(2);
        for r in 0..6 {
            assert_eq!(BigInt::from(hs_function(&e, r)), binomial(r as i64 + 2, 2));
        }
        let e = st(2, &[&[1, 0]]);
        for r in 0..6 {
            assert_eq!(hs_function(&e, r), r + 1);
        }
        let e = st(2, &[&[2, 0]]);
        for r in 1..6 {
            assert_eq!(hs_function(&e, r), 2 * r + 1);
        }
    }

    #[test]
    fn polynomial_examples() {
        let p = affine_hilbert_poly(&st(2, &[&[1, 0]])).unwrap();
        assert_eq!(p.eval(10), BigRational::from_integer(11.into()));
        assert!(p.stability_threshold <= 2);
        let p = affine_hilbert_poly(&st(2, &[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(p.coefficients, vec![BigRational::from_integer(4.into())]);
        assert!(p.stability_threshold <= 2);
        let big = Staircase::new(2, (0..5).map(|i| Exponent::from_slice(&[i, 4 - i])));
        assert!(matches!(affine_hilbert_poly_capped(&big, 3), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn minimizes_generators() {
        let e = st(2, &[&[0, 1], &[0, 1], &[3, 0], &[3, 1]]);
        assert_eq!(e.generators(), &[Exponent::from_slice(&[0, 1]), Exponent::from_slice(&[3, 0])]);
    }

    #[test]
    fn bounds() {
        assert_eq!(degree_bound(1, 1).unwrap(), BigInt::from(3));
        assert_eq!(degree_bound(1, 2).unwrap(), BigInt::from(8));
        assert_eq!(degree_bound(2, 2).unwrap(), BigInt::from(32));
        assert_eq!(degree_bound(3, 2).unwrap(), BigInt::from(512));
        let b = hs_count_bounds(1, 1).unwrap();
        assert_eq!(b.hp_count, BigInt::from(4));
        assert_eq!(b.hf_count, Some(BigInt::from(64)));
        assert_eq!(hs_count_bounds(1, 2).unwrap().hp_count, BigInt::from(9));
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(2, 4), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
    }
}
