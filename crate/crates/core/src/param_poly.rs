//! Polynomials in x whose coefficients are polynomials in the parameters y.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::param_ring::ParamIdeal;
use crate::poly::{Coeff, Exponent, OrderRef, Polynomial};

/// Element of ℚ[y][x]. Terms are sorted strictly descending under the x
/// order; no coefficient is the zero polynomial.
#[derive(Clone)]
pub struct ParamPolynomial {
    x_order: OrderRef,
    y_order: OrderRef,
    terms: Vec<(Exponent, Polynomial)>,
}

impl ParamPolynomial {
    pub fn zero(x_order: &OrderRef, y_order: &OrderRef) -> Self {
        ParamPolynomial { x_order: x_order.clone(), y_order: y_order.clone(), terms: Vec::new() }
    }

    pub fn constant(x_order: &OrderRef, c: Polynomial) -> Self {
        let y_order = c.order().clone();
        Self::from_terms(x_order, &y_order, vec![(Exponent::zero(x_order.nvars()), c)])
    }

    pub fn from_terms(x_order: &OrderRef, y_order: &OrderRef, terms: Vec<(Exponent, Polynomial)>) -> Self {
        let mut terms: Vec<(Exponent, Polynomial)> =
            terms.into_iter().map(|(e, c)| (e, c.with_order(y_order))).collect();
        terms.sort_by(|a, b| x_order.cmp(&b.0, &a.0));
        let mut out: Vec<(Exponent, Polynomial)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = &last.1 + &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        ParamPolynomial { x_order: x_order.clone(), y_order: y_order.clone(), terms: out }
    }

    /// Lifts a polynomial in x with constant coefficients.
    pub fn from_x(f: &Polynomial, x_order: &OrderRef, y_order: &OrderRef) -> Self {
        let terms = f
            .terms()
            .iter()
            .map(|(e, c)| (e.clone(), Polynomial::constant(y_order, c.clone())))
            .collect();
        Self::from_terms(x_order, y_order, terms)
    }

    /// Splits a polynomial over the concatenated variables into x and y
    /// parts; `x_idx[i]` / `y_idx[j]` give the positions in `f`.
    pub fn from_flat(
        f: &Polynomial,
        x_order: &OrderRef,
        y_order: &OrderRef,
        x_idx: &[usize],
        y_idx: &[usize],
    ) -> Self {
        let mut terms = Vec::with_capacity(f.len());
        for (e, c) in f.terms() {
            let ex = Exponent::from(x_idx.iter().map(|&i| e.get(i)).collect::<Vec<_>>());
            let ey = Exponent::from(y_idx.iter().map(|&i| e.get(i)).collect::<Vec<_>>());
            terms.push((ex, Polynomial::monomial(y_order, c.clone(), ey)));
        }
        Self::from_terms(x_order, y_order, terms)
    }

    /// The inverse of [`from_flat`](Self::from_flat).
    pub fn to_flat(&self, order: &OrderRef, x_idx: &[usize], y_idx: &[usize]) -> Polynomial {
        let n = order.nvars();
        let mut terms = Vec::new();
        for (ex, c) in &self.terms {
            for (ey, a) in c.terms() {
                let mut e = Exponent::zero(n);
                for (k, &i) in x_idx.iter().enumerate() {
                    e.set(i, ex.get(k));
                }
                for (k, &j) in y_idx.iter().enumerate() {
                    e.set(j, ey.get(k));
                }
                terms.push((e, a.clone()));
            }
        }
        Polynomial::from_terms(order, terms)
    }

    pub fn x_order(&self) -> &OrderRef {
        &self.x_order
    }

    pub fn y_order(&self) -> &OrderRef {
        &self.y_order
    }

    pub fn nvars_x(&self) -> usize {
        self.x_order.nvars()
    }

    pub fn nvars_y(&self) -> usize {
        self.y_order.nvars()
    }

    pub fn terms(&self) -> &[(Exponent, Polynomial)] {
        &self.terms
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

    pub fn lead(&self) -> Option<(&Exponent, &Polynomial)> {
        self.terms.first().map(|(e, c)| (e, c))
    }

    pub fn coeff_of(&self, e: &Exponent) -> Polynomial {
        self.terms
            .iter()
            .find(|(x, _)| x == e)
            .map(|t| t.1.clone())
            .unwrap_or_else(|| Polynomial::zero(&self.y_order))
    }

    /// Largest total x-degree of a term.
    pub fn x_degree(&self) -> u64 {
        self.terms.iter().map(|(e, _)| e.degree()).max().unwrap_or(0)
    }

    /// Largest total degree in x and y jointly.
    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(e, c)| e.degree() + c.total_degree()).max().unwrap_or(0)
    }

    pub fn with_x_order(&self, x_order: &OrderRef) -> Self {
        Self::from_terms(x_order, &self.y_order, self.terms.clone())
    }

    /// `a · self + b · x^shift · other`.
    pub fn combine(&self, a: &Polynomial, other: &ParamPolynomial, b: &Polynomial, shift: &Exponent) -> Self {
        let order = &self.x_order;
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
            let (e, v) = match step {
                Ordering::Greater => {
                    let (e, c) = i.next().unwrap();
                    (e.clone(), a * c)
                }
                Ordering::Less => {
                    let (e, c) = j.next().unwrap();
                    (e, b * c)
                }
                Ordering::Equal => {
                    let (e, c1) = i.next().unwrap();
                    let (_, c2) = j.next().unwrap();
                    (e.clone(), &(a * c1) + &(b * c2))
                }
            };
            if !v.is_zero() {
                out.push((e, v));
            }
        }
        ParamPolynomial { x_order: order.clone(), y_order: self.y_order.clone(), terms: out }
    }

    /// `c · x^shift · self`.
    pub fn mul_monomial(&self, c: &Polynomial, shift: &Exponent) -> Self {
        if c.is_zero() {
            return Self::zero(&self.x_order, &self.y_order);
        }
        let terms = self.terms.iter().map(|(e, a)| (e.add(shift), a * c)).collect();
        ParamPolynomial { x_order: self.x_order.clone(), y_order: self.y_order.clone(), terms }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(&self.x_order, &self.y_order);
        }
        let terms = self.terms.iter().map(|(e, a)| (e.clone(), a.scale(c))).collect();
        ParamPolynomial { x_order: self.x_order.clone(), y_order: self.y_order.clone(), terms }
    }

    pub fn add(&self, other: &ParamPolynomial) -> Self {
        let one = Polynomial::one(&self.y_order);
        self.combine(&one, other, &one, &Exponent::zero(self.nvars_x()))
    }

    pub fn sub(&self, other: &ParamPolynomial) -> Self {
        let one = Polynomial::one(&self.y_order);
        self.combine(&one, other, &-&one, &Exponent::zero(self.nvars_x()))
    }

    pub fn mul(&self, other: &ParamPolynomial) -> Self {
        let mut acc = Self::zero(&self.x_order, &self.y_order);
        let one = Polynomial::one(&self.y_order);
        for (e, c) in &self.terms {
            acc = acc.combine(&one, other, c, e);
        }
        acc
    }

    /// Factor `k` making every rational coefficient integral with overall
    /// content one and a positive leading coefficient; `self · k` is that
    /// normalized form.
    pub fn content_factor(&self) -> Coeff {
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            for (_, a) in c.terms() {
                den = den.lcm(a.denom());
            }
        }
        for (_, c) in &self.terms {
            for (_, a) in c.terms() {
                num = num.gcd(&(a.numer() * (&den / a.denom())));
            }
        }
        if num.is_zero() {
            return Coeff::one();
        }
        let mut k = Coeff::new(den, num);
        if let Some((_, c)) = self.lead() {
            if c.lead_coeff().is_some_and(|a| a.is_negative()) {
                k = -k;
            }
        }
        k
    }

    /// Every coefficient replaced by its normal form modulo `q`.
    pub fn reduce_mod(&self, q: &ParamIdeal) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), q.normal_form(c))).collect();
        Self::from_terms(&self.x_order, &self.y_order, terms)
    }

    /// Whether every coefficient lies in `q`, i.e. `self ∈ ℚ[y][x]·q`.
    pub fn is_in(&self, q: &ParamIdeal) -> bool {
        self.terms.iter().all(|(_, c)| q.contains(c))
    }

    /// Substitutes y := point.
    pub fn specialize(&self, point: &[Coeff]) -> Polynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c.evaluate(point))).collect();
        Polynomial::from_terms(&self.x_order, terms)
    }
}

impl PartialEq for ParamPolynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let mut a: Vec<_> = self.terms.iter().collect();
        let mut b: Vec<_> = other.terms.iter().collect();
        a.sort_by(|x, y| x.0.cmp(&y.0));
        b.sort_by(|x, y| x.0.cmp(&y.0));
        a.iter().zip(&b).all(|(x, y)| x.0 == y.0 && x.1 == y.1)
    }
}

impl Eq for ParamPolynomial {}

impl fmt::Debug for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xn = crate::poly::default_names("x", self.nvars_x());
        let yn = crate::poly::default_names("y", self.nvars_y());
        write!(f, "{}", crate::render::format_param(self, &xn, &yn))
    }
}
