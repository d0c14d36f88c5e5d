//! Ideals of the parameter ring ℚ[y]: Gröbner bases, normal forms,
//! membership, radical membership, intersection, gcd and squarefree parts.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::classical::{groebner, reduce_full};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, OrderRef, Polynomial};

/// An ideal of ℚ[y] with its reduced Gröbner basis computed on first use.
#[derive(Clone)]
pub struct ParamIdeal {
    order: OrderRef,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl ParamIdeal {
    /// The ideal generated by `gens` under the global order `order`.
    pub fn new(order: &OrderRef, gens: Vec<Polynomial>) -> Result<Self> {
        if !order.is_global() {
            return Err(Error::NotGlobal(order.name().to_string()));
        }
        let mut canon: Vec<Polynomial> = Vec::new();
        for g in gens {
            if g.nvars() != order.nvars() {
                return Err(Error::Dimension { expected: order.nvars(), found: g.nvars() });
            }
            let g = g.with_order(order).primitive();
            if !g.is_zero() && !canon.contains(&g) {
                canon.push(g);
            }
        }
        Ok(ParamIdeal { order: order.clone(), gens: canon, gb: OnceLock::new() })
    }

    pub fn zero(order: &OrderRef) -> Self {
        ParamIdeal::new(order, Vec::new()).expect("zero ideal")
    }

    pub fn unit(order: &OrderRef) -> Self {
        ParamIdeal::new(order, vec![Polynomial::one(order)]).expect("unit ideal")
    }

    pub fn order(&self) -> &OrderRef {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced, monic Gröbner basis under the ideal's order.
    pub fn groebner(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| groebner(&self.gens).expect("order checked global at construction"))
    }

    /// Gröbner basis elements in primitive integral form.
    pub fn canonical_generators(&self) -> Vec<Polynomial> {
        self.groebner().iter().map(|g| g.primitive()).collect()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.groebner().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().first().is_some_and(|g| g.is_constant())
    }

    /// Unique normal form of `c` modulo the ideal.
    pub fn normal_form(&self, c: &Polynomial) -> Polynomial {
        reduce_full(&c.with_order(&self.order), self.groebner())
    }

    pub fn contains(&self, c: &Polynomial) -> bool {
        self.normal_form(c).is_zero()
    }

    pub fn contains_ideal(&self, other: &ParamIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `self + ⟨extra⟩`.
    pub fn extend(&self, extra: &[Polynomial]) -> ParamIdeal {
        let mut gens = self.canonical_generators();
        gens.extend(extra.iter().cloned());
        ParamIdeal::new(&self.order, gens).expect("same order")
    }

    /// Whether some power of `h` lies in the ideal, by testing
    /// 1 ∈ Q + ⟨1 − t·h⟩ in ℚ[y, t].
    pub fn in_radical(&self, h: &Polynomial) -> bool {
        if self.contains(h) {
            return true;
        }
        if h.is_constant() {
            return self.is_unit();
        }
        let m = self.nvars();
        let ot: OrderRef = MonomialOrder::deglex(m + 1).into_ref();
        let map: Vec<usize> = (0..m).collect();
        let mut gens: Vec<Polynomial> = self.groebner().iter().map(|g| g.embed(&ot, &map)).collect();
        let t = Polynomial::var(&ot, m);
        gens.push(&Polynomial::one(&ot) - &(&t * &h.embed(&ot, &map)));
        let gb = groebner(&gens).expect("deglex is global");
        gb.first().is_some_and(|g| g.is_constant())
    }

    /// A ∩ B by eliminating t from t·A + (1 − t)·B.
    pub fn intersect(&self, other: &ParamIdeal) -> ParamIdeal {
        if self.is_unit() || other.is_zero_ideal() {
            return other.clone();
        }
        if other.is_unit() || self.is_zero_ideal() {
            return self.clone();
        }
        if self == other {
            return self.clone();
        }
        let m = self.nvars();
        let elim: OrderRef = self.order.eliminate_last().into_ref();
        let map: Vec<usize> = (0..m).collect();
        let t = Polynomial::var(&elim, m);
        let one_minus_t = &Polynomial::one(&elim) - &t;
        let mut gens = Vec::new();
        for a in self.groebner() {
            gens.push(&t * &a.embed(&elim, &map));
        }
        for b in other.groebner() {
            gens.push(&one_minus_t * &b.embed(&elim, &map));
        }
        let gb = groebner(&gens).expect("elimination order is global");
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|g| g.terms().iter().all(|(e, _)| e.get(m) == 0))
            .map(|g| {
                let terms = g.terms().iter().map(|(e, c)| (e.slice(0..m), c.clone())).collect();
                Polynomial::from_terms(&self.order, terms)
            })
            .collect();
        ParamIdeal::new(&self.order, kept).expect("same order")
    }

    /// Replaces every Gröbner basis element by its squarefree part until
    /// nothing changes. The variety is unchanged; the ideal moves towards
    /// its radical.
    pub fn squarefree_reduce(&self) -> ParamIdeal {
        let mut cur = self.clone();
        loop {
            let gb = cur.canonical_generators();
            let next: Vec<Polynomial> = gb.iter().map(squarefree_part).collect();
            if next == gb {
                return cur;
            }
            cur = ParamIdeal::new(&self.order, next).expect("same order");
        }
    }
}

impl PartialEq for ParamIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.groebner() == other.groebner()
    }
}

impl Eq for ParamIdeal {}

impl Hash for ParamIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for g in self.groebner() {
            g.hash(state);
        }
    }
}

impl fmt::Debug for ParamIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = crate::poly::default_names("y", self.nvars());
        let gens: Vec<String> =
            self.canonical_generators().iter().map(|g| crate::poly::format_polynomial(g, &names)).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// Least common multiple: the generator of ⟨a⟩ ∩ ⟨b⟩.
pub fn lcm(a: &Polynomial, b: &Polynomial, order: &OrderRef) -> Polynomial {
    let ia = ParamIdeal::new(order, vec![a.clone()]).expect("global order");
    let ib = ParamIdeal::new(order, vec![b.clone()]).expect("global order");
    let meet = ia.intersect(&ib);
    let gb = meet.groebner();
    debug_assert_eq!(gb.len(), 1, "intersection of principal ideals is principal");
    gb[0].primitive()
}

/// Greatest common divisor in ℚ[y], primitive with positive leading
/// coefficient. gcd(0, 0) = 0.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.order());
    }
    let order = a.order().clone();
    let b = b.with_order(&order);
    if a.nvars() == 1 {
        return univariate_gcd(a, &b);
    }
    let l = lcm(a, &b, &order);
    let prod = a * &b;
    prod.div_exact(&l).expect("lcm divides the product").primitive()
}

fn univariate_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let lex: OrderRef = MonomialOrder::lex(1).into_ref();
    let (mut r0, mut r1) = (a.with_order(&lex), b.with_order(&lex));
    while !r1.is_zero() {
        let r = reduce_full(&r0, std::slice::from_ref(&r1));
        r0 = r1;
        r1 = r;
    }
    r0.with_order(a.order()).primitive()
}

/// Squarefree part p / gcd(p, ∂p/∂y_1, …, ∂p/∂y_m), primitive.
pub fn squarefree_part(p: &Polynomial) -> Polynomial {
    if p.is_constant() {
        return p.primitive();
    }
    let mut g = p.clone();
    for v in p.support_vars() {
        g = gcd(&g, &p.derivative(v));
        if g.is_constant() {
            return p.primitive();
        }
    }
    p.div_exact(&g).expect("gcd divides").primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial, parse_polynomial_list};

    fn ring(m: usize) -> OrderRef {
        MonomialOrder::deglex(m).into_ref()
    }

    fn p(src: &str, o: &OrderRef) -> Polynomial {
        parse_polynomial(src, &default_names("y", o.nvars()), o).unwrap()
    }

    fn ideal(src: &str, o: &OrderRef) -> ParamIdeal {
        ParamIdeal::new(o, parse_polynomial_list(src, &default_names("y", o.nvars()), o).unwrap()).unwrap()
    }

    #[test]
    fn normal_forms_and_membership() {
        let o = ring(2);
        let q = ideal("y1^2+y2^3", &o);
        assert_eq!(q.normal_form(&p("y1^2+y2^3+y1", &o)), p("y1", &o));
        assert_eq!(q.normal_form(&p("1", &o)), p("1", &o));
        assert!(q.contains(&Polynomial::zero(&o)));
        assert!(!q.contains(&p("y1", &o)));
        assert!(ideal("y1, y2", &o).contains(&p("y1+y2", &o)));
        assert!(ideal("0", &o).is_zero_ideal());
    }

    #[test]
    fn radical_membership() {
        let o = ring(2);
        assert!(ideal("y1^2", &o).in_radical(&p("y1", &o)));
        assert!(!ideal("y1^2", &o).in_radical(&p("1", &o)));
        assert!(!ideal("y1^2+y2^3", &o).in_radical(&p("y2", &o)));
        assert!(ideal("y1^2+y2^3, y2", &o).in_radical(&p("y1", &o)));
    }

    #[test]
    fn intersections() {
        let o = ring(2);
        let a = ideal("y1", &o);
        let b = ideal("y2", &o);
        assert_eq!(a.intersect(&b), ideal("y1*y2", &o));
        assert_eq!(a.intersect(&a), a);
        assert_eq!(ParamIdeal::unit(&o).intersect(&b), b);
        let c = ideal("y1, y2", &o).intersect(&ideal("y1-1", &o));
        assert!(c.contains(&p("y1^2-y1", &o)));
        assert!(c.contains(&p("y1*y2-y2", &o)));
    }

    #[test]
    fn gcd_and_squarefree() {
        let o = ring(2);
        assert_eq!(gcd(&p("y1^2-y2^2", &o), &p("y1^2+2*y1*y2+y2^2", &o)), p("y1+y2", &o));
        assert_eq!(squarefree_part(&p("3*y1^2*y2", &o)), p("y1*y2", &o));
        assert_eq!(squarefree_part(&p("(y1^2+y2^3)^2*(y1-y2)", &o)), p("(y1^2+y2^3)*(y1-y2)", &o));
        let o1 = ring(1);
        assert_eq!(gcd(&p("y1^3-y1", &o1), &p("y1^2-2*y1+1", &o1)), p("y1-1", &o1));
        assert_eq!(ideal("y1^2+y2^3, y2", &o).squarefree_reduce(), ideal("y1, y2", &o));
    }
}
