mod common;

use psbasis::classical::{mora_nf, standard_basis};
use psbasis::param_poly::ParamPolynomial;
use psbasis::param_ring::ParamIdeal;
use psbasis::poly::{default_names, parse_polynomial_list, rat, taylor_shift, Polynomial};
use psbasis::sample::sample_points;
use psbasis::stratify::{canonicalize, comprehensive_basis, strat_exp1, strat_exp2, Engine, StratifyOptions};

use common::{specialize_basis, FIXTURES};

fn shifted(k: usize) -> (Vec<ParamPolynomial>, psbasis::poly::OrderRef) {
    let fx = &FIXTURES[k];
    let (xo, yo) = fx.orders();
    (fx.polys().iter().map(|p| taylor_shift(p, &xo, &yo)).collect(), yo)
}

fn same_local_ideal(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let (sa, sb) = (standard_basis(a).unwrap(), standard_basis(b).unwrap());
    a.iter().all(|f| mora_nf(f, &sb).is_zero()) && b.iter().all(|f| mora_nf(f, &sa).is_zero())
}

#[test]
fn exp1_and_exp2_agree_pointwise() {
    for k in 0..2 {
        let (gens, yo) = shifted(k);
        let opts = StratifyOptions::default();
        let one = strat_exp1(&gens, &yo, &opts).unwrap();
        let two = canonicalize(strat_exp2(&gens, &yo, &opts).unwrap());
        assert_eq!(one.vanishing_ideal, two.vanishing_ideal);
        for s in &two.strata {
            for p in sample_points(&s.q, &s.h_factors, 3, 200, 11) {
                let hit = one.strata.iter().find(|t| t.contains_point(&p)).expect("exp1 covers the point");
                assert_eq!(hit.staircase, s.staircase, "{} at {:?}", FIXTURES[k].name, p);
            }
        }
    }
}

#[test]
fn pruned_strata_are_nonempty() {
    for k in 0..3 {
        let (gens, yo) = shifted(k);
        let r = strat_exp2(&gens, &yo, &StratifyOptions::default()).unwrap();
        for s in &r.strata {
            assert!(!s.q.in_radical(&s.h()), "{}: empty region {:?}", FIXTURES[k].name, s.q);
        }
    }
}

#[test]
fn engines_give_same_staircase_at_points() {
    let (gens, yo) = shifted(0);
    let mora = strat_exp2(&gens, &yo, &StratifyOptions::default()).unwrap();
    let modified = strat_exp2(&gens, &yo, &StratifyOptions { engine: Engine::Modified, ..Default::default() }).unwrap();
    for s in &modified.strata {
        for p in sample_points(&s.q, &s.h_factors, 3, 200, 5) {
            let t = mora.strata.iter().find(|t| t.contains_point(&p)).unwrap();
            assert_eq!(t.staircase, s.staircase);
        }
    }
}

#[test]
fn comprehensive_basis_specializes_to_ideal() {
    let fx = &FIXTURES[0];
    let (gens, yo) = shifted(0);
    let r = strat_exp2(&gens, &yo, &StratifyOptions::default()).unwrap();
    let cb = comprehensive_basis(&r);
    assert!(!cb.is_empty());
    for s in &r.strata {
        for p in sample_points(&s.q, &s.h_factors, 3, 200, 3) {
            let input: Vec<Polynomial> = gens.iter().map(|g| g.specialize(&p)).collect();
            let spec: Vec<Polynomial> = cb.iter().map(|g| g.specialize(&p)).filter(|g| !g.is_zero()).collect();
            assert!(same_local_ideal(&input, &spec), "{} at {:?}", fx.name, p);
            assert!(same_local_ideal(&input, &specialize_basis(s, &p)));
        }
    }
}

#[test]
fn parallel_workers_match_serial() {
    let (gens, yo) = shifted(1);
    let serial = canonicalize(strat_exp2(&gens, &yo, &StratifyOptions::default()).unwrap());
    let par = canonicalize(strat_exp2(&gens, &yo, &StratifyOptions { workers: 4, ..Default::default() }).unwrap());
    assert_eq!(serial.strata.len(), par.strata.len());
    for (a, b) in serial.strata.iter().zip(&par.strata) {
        assert_eq!((&a.staircase, &a.q, &a.h_factors), (&b.staircase, &b.q, &b.h_factors));
    }
}

#[test]
fn depth_cap_is_a_size_error() {
    let (gens, yo) = shifted(0);
    let err = strat_exp2(&gens, &yo, &StratifyOptions { max_depth: 1, ..Default::default() }).unwrap_err();
    assert!(matches!(err, psbasis::Error::SizeCap { .. }), "{err:?}");
}

#[test]
fn sample_points_lie_in_region() {
    let yo = psbasis::poly::MonomialOrder::deglex(2).into_ref();
    let names = default_names("y", 2);
    let q = ParamIdeal::new(&yo, parse_polynomial_list("y1^2-y2", &names, &yo).unwrap()).unwrap();
    let h = parse_polynomial_list("y1", &names, &yo).unwrap();
    let pts = sample_points(&q, &h, 4, 200, 1);
    assert_eq!(pts.len(), 4);
    for p in pts {
        assert_eq!(&p[0] * &p[0], p[1]);
        assert_ne!(p[0], rat(0));
    }
}
