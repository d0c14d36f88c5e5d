//! Monomial orders represented by integer weight matrices.
//!
//! Two exponents are compared by applying the rows top-down and letting the
//! first nonzero weighted difference decide. Every order the stratifier needs
//! (degree orders, valuation-compatible orders, block orders and the
//! homogenizing order) is built as such a matrix, so one comparison kernel
//! serves global, local and mixed orders alike.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use super::Exponent;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderClass {
    Global,
    Local,
    Mixed,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    nvars: usize,
    rows: Vec<Vec<i64>>,
    name: String,
}

/// Shared handle; polynomials keep one to sort their terms.
pub type OrderRef = Arc<MonomialOrder>;

impl MonomialOrder {
    /// Builds an order from explicit weight rows, checking dimensions and rank.
    pub fn from_matrix(nvars: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::named(nvars, rows, "matrix".to_string())
    }

    fn named(nvars: usize, rows: Vec<Vec<i64>>, name: String) -> Result<Self> {
        for row in &rows {
            if row.len() != nvars {
                return Err(Error::Dimension { expected: nvars, found: row.len() });
            }
        }
        if rank(&rows) != nvars {
            return Err(Error::RankDeficient);
        }
        Ok(MonomialOrder { nvars, rows, name })
    }

    /// Degree-lexicographic order with x1 ≻ x2 ≻ … ≻ xn.
    pub fn deglex(n: usize) -> Self {
        let mut rows = vec![vec![1; n]];
        rows.extend((0..n.saturating_sub(1)).map(|i| unit_row(n, i, 1)));
        Self::named(n, rows, "deglex".into()).expect("deglex is full rank")
    }

    /// Pure lexicographic order with x1 ≻ x2 ≻ … ≻ xn.
    pub fn lex(n: usize) -> Self {
        let rows = (0..n).map(|i| unit_row(n, i, 1)).collect();
        Self::named(n, rows, "lex".into()).expect("lex is full rank")
    }

    /// Lexicographic order with variables ranked by `perm[0] ≻ perm[1] ≻ …`.
    pub fn lex_permuted(perm: &[usize]) -> Self {
        let n = perm.len();
        let rows = perm.iter().map(|&i| unit_row(n, i, 1)).collect();
        Self::named(n, rows, "lex".into()).expect("permutation rows are full rank")
    }

    /// Negative degree first, then reverse lexicographic tie-break: among
    /// monomials of equal degree the one with the smaller x1 exponent wins,
    /// then the smaller x2 exponent, and so on. On linear forms this gives
    /// xn ≻ … ≻ x2 ≻ x1.
    pub fn valuation_compatible(n: usize) -> Self {
        let mut rows = vec![vec![-1; n]];
        rows.extend((0..n.saturating_sub(1)).map(|i| unit_row(n, i, -1)));
        Self::named(n, rows, "valuation".into()).expect("valuation order is full rank")
    }

    /// Degree reverse lexicographic order (global).
    pub fn degrevlex(n: usize) -> Self {
        let mut rows = vec![vec![1; n]];
        rows.extend((1..n).rev().map(|i| unit_row(n, i, -1)));
        Self::named(n, rows, "degrevlex".into()).expect("degrevlex is full rank")
    }

    /// Block order `(outer, inner)` on the concatenated variables: compare by
    /// `outer` on the first block, break ties by `inner` on the second.
    pub fn block(outer: &MonomialOrder, inner: &MonomialOrder) -> Self {
        let n = outer.nvars + inner.nvars;
        let mut rows = Vec::with_capacity(n);
        for r in &outer.rows {
            let mut row = r.clone();
            row.resize(n, 0);
            rows.push(row);
        }
        for r in &inner.rows {
            let mut row = vec![0; outer.nvars];
            row.extend_from_slice(r);
            rows.push(row);
        }
        let name = format!("block({},{})", outer.name, inner.name);
        Self::named(n, rows, name).expect("block of full-rank orders is full rank")
    }

    /// The order on (x, z) comparing |α|+k first and then `self` on α.
    /// The homogenizing variable z is appended last.
    pub fn homogenizing(&self) -> Self {
        let n = self.nvars + 1;
        let mut rows = vec![vec![1; n]];
        for r in &self.rows {
            let mut row = r.clone();
            row.push(0);
            rows.push(row);
        }
        let name = format!("homog({})", self.name);
        Self::named(n, rows, name).expect("homogenizing order is full rank")
    }

    /// Elimination order for one extra variable t appended last: any
    /// monomial containing t beats every t-free monomial, `self` breaks ties.
    pub fn eliminate_last(&self) -> Self {
        let n = self.nvars + 1;
        let mut rows = vec![unit_row(n, self.nvars, 1)];
        for r in &self.rows {
            let mut row = r.clone();
            row.push(0);
            rows.push(row);
        }
        let name = format!("elim({})", self.name);
        Self::named(n, rows, name).expect("elimination order is full rank")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Compares two exponents. Both must have `nvars` entries.
    #[inline]
    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        debug_assert_eq!(a.len(), self.nvars);
        debug_assert_eq!(b.len(), self.nvars);
        let (a, b) = (a.as_slice(), b.as_slice());
        if a == b {
            return Ordering::Equal;
        }
        for row in &self.rows {
            let mut s: i64 = 0;
            for ((w, x), y) in row.iter().zip(a).zip(b) {
                s += w * (*x as i64 - *y as i64);
            }
            if s != 0 {
                return s.cmp(&0);
            }
        }
        Ordering::Equal
    }

    /// Checked comparison: length mismatch is a dimension error.
    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering> {
        for e in [a, b] {
            if e.len() != self.nvars {
                return Err(Error::Dimension { expected: self.nvars, found: e.len() });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// Global iff the first nonzero entry of every column is positive; local
    /// iff it is negative for every column.
    pub fn classification(&self) -> OrderClass {
        let mut pos = 0;
        let mut neg = 0;
        for j in 0..self.nvars {
            let first = self.rows.iter().map(|r| r[j]).find(|w| *w != 0).unwrap_or(0);
            if first > 0 {
                pos += 1;
            } else if first < 0 {
                neg += 1;
            }
        }
        if neg == 0 {
            OrderClass::Global
        } else if pos == 0 {
            OrderClass::Local
        } else {
            OrderClass::Mixed
        }
    }

    pub fn is_global(&self) -> bool {
        self.classification() == OrderClass::Global
    }

    pub fn into_ref(self) -> OrderRef {
        Arc::new(self)
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.name, self.rows)
    }
}

fn unit_row(n: usize, i: usize, w: i64) -> Vec<i64> {
    let mut r = vec![0; n];
    r[i] = w;
    r
}

fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&w| BigRational::from_integer(w.into())).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let factor = &m[i][col] / &m[rank][col];
                for c in col..ncols {
                    let v = &factor * &m[rank][c];
                    m[i][c] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Exponent {
        Exponent::from_slice(v)
    }

    #[test]
    fn deglex_examples() {
        let o = MonomialOrder::deglex(2);
        assert_eq!(o.compare(&e(&[0, 0]), &e(&[0, 0])).unwrap(), Ordering::Equal);
        assert_eq!(o.cmp(&e(&[1, 1]), &e(&[0, 3])), Ordering::Less);
        assert_eq!(o.cmp(&e(&[1, 0]), &e(&[0, 1])), Ordering::Greater);
        assert_eq!(o.classification(), OrderClass::Global);
    }

    #[test]
    fn valuation_order_has_one_maximal() {
        let o = MonomialOrder::valuation_compatible(2);
        assert_eq!(o.rows()[0], vec![-1, -1]);
        assert_eq!(o.cmp(&e(&[0, 0]), &e(&[1, 0])), Ordering::Greater);
        // ties between linear forms prefer the higher index
        assert_eq!(o.cmp(&e(&[0, 1]), &e(&[1, 0])), Ordering::Greater);
        assert_eq!(o.classification(), OrderClass::Local);
        let o3 = MonomialOrder::valuation_compatible(3);
        assert_eq!(o3.cmp(&e(&[0, 4, 0]), &e(&[2, 1, 1])), Ordering::Greater);
        assert_eq!(o3.cmp(&e(&[0, 4, 0]), &e(&[4, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn dimension_errors() {
        let o = MonomialOrder::deglex(2);
        assert!(matches!(o.compare(&e(&[1]), &e(&[0, 1])), Err(Error::Dimension { .. })));
        assert!(matches!(MonomialOrder::from_matrix(2, vec![vec![1, 1], vec![2, 2]]), Err(Error::RankDeficient)));
        assert!(matches!(MonomialOrder::from_matrix(2, vec![vec![1, 1, 1]]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn block_restricts_to_inner() {
        let b = MonomialOrder::block(&MonomialOrder::deglex(2), &MonomialOrder::deglex(2));
        let inner = MonomialOrder::deglex(2);
        let pairs = [([0, 0, 1, 1], [0, 0, 0, 3]), ([0, 0, 2, 0], [0, 0, 1, 1])];
        for (a, b2) in pairs {
            let (ya, yb) = (e(&a[2..]), e(&b2[2..]));
            assert_eq!(b.cmp(&e(&a), &e(&b2)), inner.cmp(&ya, &yb));
        }
    }

    #[test]
    fn homogenizing_falls_back_to_base() {
        let base = MonomialOrder::valuation_compatible(2);
        let h = base.homogenizing();
        // x1 z vs x2 z: equal total degree, decided by the base order on x
        assert_eq!(h.cmp(&e(&[1, 0, 1]), &e(&[0, 1, 1])), base.cmp(&e(&[1, 0]), &e(&[0, 1])));
        assert_eq!(h.cmp(&e(&[0, 0, 3]), &e(&[2, 0, 0])), Ordering::Greater);
        assert!(h.is_global());
    }

    #[test]
    fn mixed_classification() {
        let o = MonomialOrder::block(&MonomialOrder::valuation_compatible(1), &MonomialOrder::deglex(1));
        assert_eq!(o.classification(), OrderClass::Mixed);
    }
}
