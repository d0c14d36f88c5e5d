//! Stratification of affine space by the local Hilbert-Samuel function of
//! an ideal of ℚ[x], and the direct per-point computation.

use crate::classical::{leading_exponents, standard_basis};
use crate::error::{Error, Result};
use crate::hilbert::{affine_hilbert_poly_capped, hs_function, subset_cap, NumericalPolynomial, Staircase};
use crate::param_poly::ParamPolynomial;
use crate::poly::{taylor_shift, Coeff, MonomialOrder, OrderRef, Polynomial};
use crate::stratify::{canonicalize, strat_exp2, Engine, StratificationResult, StratifyOptions, Stratum};

pub const DEFAULT_R_MAX: u64 = 8;

#[derive(Clone, Debug)]
pub struct HsStratum {
    /// Regions V(Q)∖V(h) sharing this Hilbert-Samuel function.
    pub regions: Vec<Stratum>,
    pub staircase: Staircase,
    pub hs_values: Vec<u64>,
    pub hs_polynomial: NumericalPolynomial,
}

impl HsStratum {
    pub fn contains_point(&self, point: &[Coeff]) -> bool {
        self.regions.iter().any(|r| r.contains_point(point))
    }
}

#[derive(Clone, Debug)]
pub struct HsStratification {
    pub x_order: OrderRef,
    pub y_order: OrderRef,
    pub shifted: Vec<ParamPolynomial>,
    /// The underlying canonicalized stratification, before merging.
    pub stratification: StratificationResult,
    pub strata: Vec<HsStratum>,
}

#[derive(Clone, Debug)]
pub struct HsOptions {
    pub stratify: StratifyOptions,
    pub r_max: u64,
    /// Largest staircase handled by the inclusion-exclusion polynomial.
    pub subset_cap: usize,
}

impl Default for HsOptions {
    fn default() -> Self {
        HsOptions {
            stratify: StratifyOptions { engine: Engine::Modified, ..Default::default() },
            r_max: DEFAULT_R_MAX,
            subset_cap: subset_cap(),
        }
    }
}

fn values(e: &Staircase, r_max: u64) -> Vec<u64> {
    (0..=r_max).map(|r| hs_function(e, r)).collect()
}

fn same_function(a: &HsStratum, b: &HsStratum) -> bool {
    if a.hs_polynomial.coefficients != b.hs_polynomial.coefficients {
        return false;
    }
    let top = a.hs_polynomial.stability_threshold.max(b.hs_polynomial.stability_threshold);
    (0..=top).all(|r| hs_function(&a.staircase, r) == hs_function(&b.staircase, r))
}

/// Stratifies y-space by the Hilbert-Samuel function of ⟨F⟩ at y, using
/// the valuation-compatible order `x_order` and the global order `y_order`.
pub fn hs_stratify(f: &[Polynomial], x_order: &OrderRef, y_order: &OrderRef, opts: &HsOptions) -> Result<HsStratification> {
    if f.iter().all(|p| p.is_zero()) {
        return Err(Error::Input("the input ideal is zero".into()));
    }
    let shifted: Vec<ParamPolynomial> =
        f.iter().filter(|p| !p.is_zero()).map(|p| taylor_shift(&p.with_order(x_order), x_order, y_order)).collect();
    let result = canonicalize(strat_exp2(&shifted, y_order, &opts.stratify)?);
    if !result.vanishing_ideal.is_unit() {
        return Err(Error::Precondition("vanishing ideal of a nonzero input is not the unit ideal".into()));
    }
    let mut by_staircase: Vec<HsStratum> = Vec::new();
    for s in &result.strata {
        if let Some(t) = by_staircase.iter_mut().find(|t| t.staircase == s.staircase) {
            t.regions.push(s.clone());
            continue;
        }
        by_staircase.push(HsStratum {
            regions: vec![s.clone()],
            staircase: s.staircase.clone(),
            hs_values: values(&s.staircase, opts.r_max),
            hs_polynomial: affine_hilbert_poly_capped(&s.staircase, opts.subset_cap)?,
        });
    }
    let mut strata: Vec<HsStratum> = Vec::new();
    for s in by_staircase {
        match strata.iter_mut().find(|t| same_function(t, &s)) {
            Some(t) => t.regions.extend(s.regions),
            None => strata.push(s),
        }
    }
    Ok(HsStratification {
        x_order: x_order.clone(),
        y_order: y_order.clone(),
        shifted,
        stratification: result,
        strata,
    })
}

/// Default orders for `n` variables: valuation-compatible on x, deglex on y.
pub fn default_orders(n: usize) -> (OrderRef, OrderRef) {
    (MonomialOrder::valuation_compatible(n).into_ref(), MonomialOrder::deglex(n).into_ref())
}

/// Staircase of ⟨F⟩ localized at `x0`: standard basis of F(x + x0) under
/// the local order `x_order`.
pub fn staircase_at_point(f: &[Polynomial], x0: &[Coeff], x_order: &OrderRef) -> Result<Staircase> {
    let n = x_order.nvars();
    if x0.len() != n {
        return Err(Error::Dimension { expected: n, found: x0.len() });
    }
    let y_order: OrderRef = MonomialOrder::deglex(n).into_ref();
    let local: Vec<Polynomial> =
        f.iter().map(|p| taylor_shift(&p.with_order(x_order), x_order, &y_order).specialize(x0)).collect();
    let sb = standard_basis(&local)?;
    Ok(Staircase::new(n, leading_exponents(&sb)))
}

/// HSf(0..=r_max) of ⟨F⟩ at `x0`.
pub fn hs_at_point(f: &[Polynomial], x0: &[Coeff], r_max: u64, x_order: &OrderRef) -> Result<Vec<u64>> {
    Ok(values(&staircase_at_point(f, x0, x_order)?, r_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_names, parse_polynomial, rat};

    #[test]
    fn cusp_values() {
        let (xo, _) = default_orders(2);
        let f = parse_polynomial("x1^2+x2^3", &default_names("x", 2), &xo).unwrap();
        assert_eq!(hs_at_point(&[f.clone()], &[rat(1), rat(0)], 4, &xo).unwrap(), vec![0; 5]);
        assert_eq!(hs_at_point(&[f.clone()], &[rat(0), rat(0)], 4, &xo).unwrap(), vec![1, 3, 5, 7, 9]);
        assert_eq!(hs_at_point(&[f], &[rat(1), rat(-1)], 4, &xo).unwrap(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn cusp_strata() {
        let (xo, yo) = default_orders(2);
        let f = parse_polynomial("x1^2+x2^3", &default_names("x", 2), &xo).unwrap();
        let r = hs_stratify(&[f], &xo, &yo, &HsOptions::default()).unwrap();
        assert_eq!(r.strata.len(), 3);
        assert_eq!(r.strata[1].hs_values[..4], [1, 2, 3, 4]);
    }

    #[test]
    fn unit_input() {
        let (xo, yo) = default_orders(2);
        let r = hs_stratify(&[Polynomial::one(&xo)], &xo, &yo, &HsOptions::default()).unwrap();
        assert_eq!(r.strata.len(), 1);
        assert!(r.strata[0].hs_values.iter().all(|&v| v == 0));
        assert!(hs_stratify(&[Polynomial::zero(&xo)], &xo, &yo, &HsOptions::default()).is_err());
    }
}
