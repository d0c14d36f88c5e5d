use num_bigint::BigInt;
use num_integer::binomial;

use super::{Coeff, Exponent, OrderRef, Polynomial};
use crate::param_poly::ParamPolynomial;

/// f(x + y) as an element of ℚ[y][x], expanding each power binomially.
/// The parameters y get `y_order`, which must have as many variables as f.
pub fn taylor_shift(f: &Polynomial, x_order: &OrderRef, y_order: &OrderRef) -> ParamPolynomial {
    let n = f.nvars();
    assert_eq!(y_order.nvars(), n, "one parameter per variable");
    let mut terms: Vec<(Exponent, Polynomial)> = Vec::new();
    for (e, c) in f.terms() {
        // (x_i + y_i)^{e_i} = Σ_k C(e_i, k) x_i^k y_i^{e_i − k}, multiplied out
        let mut acc: Vec<(Vec<u32>, Vec<u32>, BigInt)> = vec![(vec![0; n], vec![0; n], BigInt::from(1))];
        for i in 0..n {
            let ei = e.get(i);
            if ei == 0 {
                continue;
            }
            let mut next = Vec::with_capacity(acc.len() * (ei as usize + 1));
            for (xe, ye, b) in &acc {
                for k in 0..=ei {
                    let mut xe = xe.clone();
                    let mut ye = ye.clone();
                    xe[i] = k;
                    ye[i] = ei - k;
                    next.push((xe, ye, b * binomial(BigInt::from(ei), BigInt::from(k))));
                }
            }
            acc = next;
        }
        for (xe, ye, b) in acc {
            let coeff = c * Coeff::from_integer(b);
            terms.push((Exponent::from(xe), Polynomial::monomial(y_order, coeff, Exponent::from(ye))));
        }
    }
    ParamPolynomial::from_terms(x_order, y_order, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial, MonomialOrder};

    #[test]
    fn cusp_expansion() {
        let xo = MonomialOrder::deglex(2).into_ref();
        let yo = MonomialOrder::deglex(2).into_ref();
        let xs = default_names("x", 2);
        let ys = default_names("y", 2);
        let f = parse_polynomial("x1^2 + x2^3", &xs, &xo).unwrap();
        let g = taylor_shift(&f, &xo, &yo);
        let coeff = |e: &[u32]| g.coeff_of(&Exponent::from_slice(e));
        let y = |s: &str| parse_polynomial(s, &ys, &yo).unwrap();
        assert_eq!(coeff(&[0, 0]), y("y1^2+y2^3"));
        assert_eq!(coeff(&[1, 0]), y("2*y1"));
        assert_eq!(coeff(&[0, 1]), y("3*y2^2"));
        assert_eq!(coeff(&[2, 0]), y("1"));
        assert_eq!(coeff(&[0, 2]), y("3*y2"));
        assert_eq!(coeff(&[0, 3]), y("1"));
        assert_eq!(g.len(), 6);
        let c = parse_polynomial("5", &xs, &xo).unwrap();
        assert_eq!(taylor_shift(&c, &xo, &yo).len(), 1);
    }
}
