use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Exponent, MonomialOrder, OrderRef};
use crate::error::{Error, Result};

pub type Coeff = BigRational;

pub fn rat(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Leading exponent, term, coefficient and monomial of a nonzero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadData {
    pub exp: Exponent,
    pub coeff: Coeff,
}

impl LeadData {
    /// The leading monomial `coeff · x^exp` as a polynomial.
    pub fn monomial(&self, order: &OrderRef) -> Polynomial {
        Polynomial::monomial(order, self.coeff.clone(), self.exp.clone())
    }

    /// The leading term `x^exp` (coefficient one).
    pub fn term(&self, order: &OrderRef) -> Polynomial {
        Polynomial::monomial(order, Coeff::one(), self.exp.clone())
    }
}

/// Sparse polynomial over ℚ. Terms are kept strictly descending under the
/// attached order, with pairwise distinct exponents and no zero coefficient.
#[derive(Clone)]
pub struct Polynomial {
    order: OrderRef,
    terms: Vec<(Exponent, Coeff)>,
}

impl Polynomial {
    pub fn zero(order: &OrderRef) -> Self {
        Polynomial { order: order.clone(), terms: Vec::new() }
    }

    pub fn one(order: &OrderRef) -> Self {
        Self::constant(order, Coeff::one())
    }

    pub fn constant(order: &OrderRef, c: Coeff) -> Self {
        Self::monomial(order, c, Exponent::zero(order.nvars()))
    }

    pub fn monomial(order: &OrderRef, c: Coeff, exp: Exponent) -> Self {
        debug_assert_eq!(exp.len(), order.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(exp, c)] };
        Polynomial { order: order.clone(), terms }
    }

    pub fn var(order: &OrderRef, i: usize) -> Self {
        Self::monomial(order, Coeff::one(), Exponent::unit(order.nvars(), i))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// exponents and drops zeros.
    pub fn from_terms(order: &OrderRef, mut terms: Vec<(Exponent, Coeff)>) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Exponent, Coeff)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial { order: order.clone(), terms: out }
    }

    pub fn from_int_terms(order: &OrderRef, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(order, terms.iter().map(|(c, e)| (Exponent::from_slice(e), rat(*c))).collect())
    }

    pub fn order(&self) -> &OrderRef {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn terms(&self) -> &[(Exponent, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Exponent, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_zero() && self.terms[0].1.is_one()
    }

    /// Coefficient of x^exp (zero when absent).
    pub fn coeff_of(&self, exp: &Exponent) -> Coeff {
        self.terms.iter().find(|(e, _)| e == exp).map(|t| t.1.clone()).unwrap_or_else(Coeff::zero)
    }

    pub fn lead_exponent(&self) -> Option<&Exponent> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_data(&self) -> Result<LeadData> {
        let (exp, coeff) = self.terms.first().ok_or(Error::ZeroLead)?;
        Ok(LeadData { exp: exp.clone(), coeff: coeff.clone() })
    }

    /// Total degree; zero for the zero polynomial.
    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(e, _)| e.degree()).max().unwrap_or(0)
    }

    /// deg(f) − deg(lt(f)).
    pub fn ecart(&self) -> u64 {
        match self.terms.first() {
            Some((e, _)) => self.total_degree() - e.degree(),
            None => 0,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(e, _)| e.degree());
        match degs.next() {
            Some(d) => degs.all(|x| x == d),
            None => true,
        }
    }

    /// Same polynomial with terms re-sorted under another order on the same
    /// variables.
    pub fn with_order(&self, order: &OrderRef) -> Polynomial {
        assert_eq!(order.nvars(), self.nvars(), "order dimension mismatch");
        if Arc::ptr_eq(order, &self.order) || **order == *self.order {
            return Polynomial { order: order.clone(), terms: self.terms.clone() };
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { order: order.clone(), terms }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.order);
        }
        Polynomial {
            order: self.order.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// `c · x^shift · self`; multiplication by a monomial preserves the order.
    pub fn mul_monomial(&self, c: &Coeff, shift: &Exponent) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.order);
        }
        Polynomial {
            order: self.order.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.add(shift), a * c)).collect(),
        }
    }

    /// `a · self + b · x^shift · other`, by a single merge pass.
    pub fn combine(&self, a: &Coeff, other: &Polynomial, b: &Coeff, shift: &Exponent) -> Polynomial {
        let order = &self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = self.terms.iter().peekable();
        let mut j = other.terms.iter().map(|(e, c)| (e.add(shift), c)).peekable();
        loop {
            let step = match (i.peek(), j.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match step {
                Ordering::Greater => {
                    let (e, c) = i.next().unwrap();
                    let v = a * c;
                    if !v.is_zero() {
                        out.push((e.clone(), v));
                    }
                }
                Ordering::Less => {
                    let (e, c) = j.next().unwrap();
                    let v = b * c;
                    if !v.is_zero() {
                        out.push((e, v));
                    }
                }
                Ordering::Equal => {
                    let (e, c1) = i.next().unwrap();
                    let (_, c2) = j.next().unwrap();
                    let v = a * c1 + b * c2;
                    if !v.is_zero() {
                        out.push((e.clone(), v));
                    }
                }
            }
        }
        Polynomial { order: order.clone(), terms: out }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.nvars(), "evaluation point dimension");
        let mut acc = Coeff::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in point.iter().zip(e.iter()) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `values[i]` for variable i whenever `values[i]` is set and
    /// keeps the other variables; the result lives in the same ring.
    pub fn partial_evaluate(&self, values: &[Option<Coeff>]) -> Polynomial {
        assert_eq!(values.len(), self.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut c = c.clone();
                let mut e2 = e.clone();
                for (i, v) in values.iter().enumerate() {
                    if let Some(v) = v {
                        let k = e.get(i);
                        if k > 0 {
                            c *= num_traits::pow(v.clone(), k as usize);
                            e2.set(i, 0);
                        }
                    }
                }
                (e2, c)
            })
            .collect();
        Polynomial::from_terms(&self.order, terms)
    }

    /// Re-embeds the polynomial into another ring; variable i goes to
    /// `map[i]` in the target.
    pub fn embed(&self, order: &OrderRef, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.nvars());
        let n = order.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut t = Exponent::zero(n);
                for (i, &j) in map.iter().enumerate() {
                    t.set(j, t.get(j) + e.get(i));
                }
                (t, c.clone())
            })
            .collect();
        Polynomial::from_terms(order, terms)
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.get(var) > 0)
            .map(|(e, c)| {
                let k = e.get(var);
                let mut e2 = e.clone();
                e2.set(var, k - 1);
                (e2, c * rat(k as i64))
            })
            .collect();
        Polynomial::from_terms(&self.order, terms)
    }

    /// Variables occurring in the support.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.terms.iter().any(|(e, _)| e.get(i) > 0)).collect()
    }

    /// Integral, content-free representative with positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den / c.denom());
            num_gcd = num_gcd.gcd(&v);
        }
        let mut factor = BigRational::new(den, num_gcd);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Multiplies by a common denominator so every coefficient is an integer
    /// whose content is one. Returns the scaling factor applied.
    pub fn content_factor(&self) -> Coeff {
        match self.terms.first() {
            Some(_) => {
                let p = self.primitive();
                &p.terms[0].1 / &self.terms[0].1
            }
            None => Coeff::one(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    /// Uses a lexicographic order internally so division terminates.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let lex: OrderRef = MonomialOrder::lex(self.nvars()).into_ref();
        let d_lex = d.with_order(&lex);
        let mut rem = self.with_order(&lex);
        let (de, dc) = (d_lex.terms[0].0.clone(), d_lex.terms[0].1.clone());
        let mut quotient = Vec::new();
        while let Some((e, c)) = rem.terms.first() {
            if !de.divides(e) {
                return None;
            }
            let shift = e.sub(&de);
            let q = c / &dc;
            rem = rem.combine(&Coeff::one(), &d_lex, &-q.clone(), &shift);
            quotient.push((shift, q));
        }
        Some(Polynomial::from_terms(&self.order, quotient))
    }

    /// Homogenizes with a new last variable z: each term x^α becomes
    /// x^α z^{d−|α|} where d is `target` or the total degree.
    pub fn homogenize(&self, target: Option<u64>, order: &OrderRef) -> Result<Polynomial> {
        if order.nvars() != self.nvars() + 1 {
            return Err(Error::Dimension { expected: self.nvars() + 1, found: order.nvars() });
        }
        if self.is_zero() {
            return Err(Error::ZeroLead);
        }
        let deg = self.total_degree();
        let d = target.unwrap_or(deg);
        if d < deg {
            return Err(Error::Degree { target: d, degree: deg });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let z = u32::try_from(d - e.degree()).expect("degree fits in u32");
                (e.concat(&Exponent::from_slice(&[z])), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(order, terms))
    }

    /// Sets the last variable to one and drops it.
    pub fn dehomogenize(&self, order: &OrderRef) -> Result<Polynomial> {
        if order.nvars() + 1 != self.nvars() {
            return Err(Error::Dimension { expected: self.nvars() - 1, found: order.nvars() });
        }
        let n = order.nvars();
        let terms = self.terms.iter().map(|(e, c)| (e.slice(0..n), c.clone())).collect();
        Ok(Polynomial::from_terms(order, terms))
    }
}

/// S-polynomial `lc(g) x^{γ−α} f − lc(f) x^{γ−β} g` with γ = lcm(α, β).
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let lf = f.leading_data()?;
    let lg = g.leading_data()?;
    let gamma = lf.exp.lcm(&lg.exp);
    let left = f.mul_monomial(&lg.coeff, &gamma.sub(&lf.exp));
    Ok(left.combine(&Coeff::one(), g, &-lf.coeff, &gamma.sub(&lg.exp)))
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.nvars() != other.nvars() || self.terms.len() != other.terms.len() {
            return false;
        }
        if *self.order == *other.order {
            return self.terms == other.terms;
        }
        let mut a = self.terms.clone();
        let mut b = other.terms.clone();
        a.sort_by(|x, y| x.0.cmp(&y.0));
        b.sort_by(|x, y| x.0.cmp(&y.0));
        a == b
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        let mut t = self.terms.clone();
        t.sort_by(|x, y| x.0.cmp(&y.0));
        t.hash(state);
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let rhs = rhs.with_order(&self.order);
        self.combine(&Coeff::one(), &rhs, &Coeff::one(), &Exponent::zero(self.nvars()))
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let rhs = rhs.with_order(&self.order);
        self.combine(&Coeff::one(), &rhs, &-Coeff::one(), &Exponent::zero(self.nvars()))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        assert_eq!(self.nvars(), rhs.nvars(), "multiplying polynomials of different rings");
        let (small, big) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut acc = Polynomial::zero(&self.order);
        let big = big.with_order(&self.order);
        for (e, c) in &small.terms {
            acc = acc.combine(&Coeff::one(), &big, c, e);
        }
        acc
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = super::parse::default_names("x", self.nvars());
        write!(f, "{}", super::parse::format_polynomial(self, &names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deglex(n: usize) -> OrderRef {
        MonomialOrder::deglex(n).into_ref()
    }

    #[test]
    fn lead_examples() {
        let o = deglex(2);
        let f = Polynomial::from_int_terms(&o, &[(1, &[2, 0]), (1, &[0, 3])]);
        assert_eq!(f.leading_data().unwrap().exp.as_slice(), &[0, 3]);
        let c = Polynomial::constant(&o, rat(7));
        let l = c.leading_data().unwrap();
        assert_eq!(l.exp.as_slice(), &[0, 0]);
        assert_eq!(l.coeff, rat(7));
        assert_eq!(Polynomial::zero(&o).leading_data(), Err(Error::ZeroLead));
        let v = MonomialOrder::valuation_compatible(2).into_ref();
        assert_eq!(f.with_order(&v).leading_data().unwrap().exp.as_slice(), &[2, 0]);
    }

    #[test]
    fn s_polynomial_examples() {
        let o = deglex(2);
        let f = Polynomial::from_int_terms(&o, &[(1, &[2, 0]), (1, &[0, 1])]);
        let g = Polynomial::from_int_terms(&o, &[(1, &[1, 1]), (1, &[0, 0])]);
        let expected = Polynomial::from_int_terms(&o, &[(1, &[0, 2]), (-1, &[1, 0])]);
        assert_eq!(s_polynomial(&f, &g).unwrap(), expected);
        assert!(s_polynomial(&f, &f).unwrap().is_zero());
        let x1 = Polynomial::var(&o, 0);
        let x2 = Polynomial::var(&o, 1);
        assert!(s_polynomial(&x1, &x2).unwrap().is_zero());
        assert_eq!(s_polynomial(&f, &Polynomial::zero(&o)), Err(Error::ZeroLead));
    }

    #[test]
    fn homogenize_round_trip() {
        let o = deglex(2);
        let oz: OrderRef = o.homogenizing().into_ref();
        let f = Polynomial::from_int_terms(&o, &[(1, &[2, 0]), (1, &[0, 3])]);
        let h = f.homogenize(None, &oz).unwrap();
        let expected = Polynomial::from_int_terms(&oz, &[(1, &[2, 0, 1]), (1, &[0, 3, 0])]);
        assert_eq!(h, expected);
        assert!(h.is_homogeneous());
        assert_eq!(h.dehomogenize(&o).unwrap(), f);
        assert!(matches!(f.homogenize(Some(2), &oz), Err(Error::Degree { .. })));
        let hom = Polynomial::from_int_terms(&o, &[(1, &[2, 0]), (3, &[1, 1])]);
        assert_eq!(hom.homogenize(Some(2), &oz).unwrap().dehomogenize(&o).unwrap(), hom);
        assert!(hom.homogenize(Some(2), &oz).unwrap().terms().iter().all(|(e, _)| e.get(2) == 0));
    }

    #[test]
    fn arithmetic_and_division() {
        let o = deglex(2);
        let a = Polynomial::from_int_terms(&o, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let b = Polynomial::from_int_terms(&o, &[(1, &[1, 0]), (1, &[0, 1])]);
        let p = &a * &b;
        assert_eq!(p, Polynomial::from_int_terms(&o, &[(1, &[2, 0]), (-1, &[0, 2])]));
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(p.div_exact(&Polynomial::var(&o, 0)).is_none());
        assert!((&p - &p).is_zero());
        let q = Polynomial::from_terms(&o, vec![(Exponent::from_slice(&[1, 0]), BigRational::new(2.into(), 3.into()))]);
        assert_eq!(q.primitive(), Polynomial::var(&o, 0));
        assert_eq!((-&q).primitive(), Polynomial::var(&o, 0));
    }
}
