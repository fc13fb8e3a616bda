mod support;

use hadamard_bounds::hadamard::{hh_check, lemma1_lhs, lemma1_rhs, shh_check, Direction};
use hadamard_bounds::{verify_identity, Error, FunctionModel, Integrator};
use rand::Rng;
use support::*;

#[test]
fn identity_examples() {
    let quad = Integrator::default();
    let iv = interval(1.0, 2.0);
    for (f, x) in [
        (FunctionModel::polynomial(vec![0.0, 0.0, 1.0]), 1.5),
        (FunctionModel::sine(), 1.2),
        (FunctionModel::exponential(), 1.0),
        (FunctionModel::exponential(), 2.0),
    ] {
        let r = verify_identity(&f, &iv, x, 1e-10, &quad).unwrap();
        assert!(r.holds && r.residual < 1e-12, "{f} at {x}: {r:?}");
    }
}

#[test]
fn identity_lhs_matches_exact_primitive() {
    let mut rng = rng(40);
    let quad = oracle();
    for _ in 0..100 {
        let iv = draw_interval(&mut rng, 0.2, 5.0, 0.05);
        let x = draw_point(&mut rng, &iv);
        let c: f64 = rng.gen_range(0.2..1.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let f = FunctionModel::parse(&format!("exp({c}*x)")).unwrap();
        let exact = lemma_lhs_exact(|y: f64| (c * y).exp(), |y: f64| (c * y).exp() / c, &iv, x);
        let lhs = lemma1_lhs(&f, &iv, x, &quad).unwrap();
        let rhs = lemma1_rhs(&f, &iv, x, &quad).unwrap();
        assert!((lhs - exact).abs() < 1e-11 * exact.abs().max(1.0));
        assert!((rhs - exact).abs() < 1e-11 * exact.abs().max(1.0));
    }
}

#[test]
fn linear_functions_give_zero() {
    // for f(x) = a x + b the boundary term equals the mean only at the midpoint
    let f = FunctionModel::affine(2.0, 1.0);
    let iv = interval(1.0, 3.0);
    let r = verify_identity(&f, &iv, 2.0, 1e-12, &Integrator::default()).unwrap();
    assert!(r.holds);
    let constant = FunctionModel::constant(4.0);
    for x in [1.0, 1.7, 3.0] {
        let r = verify_identity(&constant, &iv, x, 1e-12, &Integrator::default()).unwrap();
        assert!(r.lhs.abs() < 1e-14 && r.rhs == 0.0, "{r:?}");
    }
}

#[test]
fn rejects_points_outside_and_kinks() {
    let quad = Integrator::default();
    let iv = interval(1.0, 2.0);
    let f = FunctionModel::sine();
    assert!(matches!(
        verify_identity(&f, &iv, 2.5, 1e-10, &quad),
        Err(Error::PointOutsideInterval { .. })
    ));
    let kink = FunctionModel::parse("abs(x - 1.5)").unwrap();
    assert!(matches!(
        verify_identity(&kink, &iv, 1.2, 1e-10, &quad),
        Err(Error::NonDifferentiable { .. })
    ));
}

#[test]
fn classic_chain() {
    let quad = Integrator::default();
    let sq = FunctionModel::polynomial(vec![0.0, 0.0, 1.0]);
    let r = hh_check(&sq, 1.0, 2.0, Direction::Convex, 1e-8, &quad).unwrap();
    assert!(r.holds && r.left <= r.middle && r.middle <= r.right);
    assert!(!hh_check(&sq, 1.0, 2.0, Direction::Concave, 1e-8, &quad).unwrap().holds);

    let sin = FunctionModel::sine();
    assert!(hh_check(&sin, 0.1, 3.0, Direction::Concave, 1e-8, &quad).unwrap().holds);

    // s = 1 reproduces the classical triple exactly
    let mut rng = rng(41);
    for _ in 0..20 {
        let iv = draw_interval(&mut rng, 0.1, 4.0, 0.01);
        let a = hh_check(&sq, iv.u(), iv.v(), Direction::Convex, 1e-8, &quad).unwrap();
        let b = shh_check(&sq, iv.u(), iv.v(), s_param(1.0), Direction::Convex, 1e-8, &quad).unwrap();
        assert_eq!((a.left, a.middle, a.right), (b.left, b.middle, b.right));
    }
}

#[test]
fn s_convex_chain_for_powers() {
    // x^s is s-convex in the second sense; near u = 0 the right inequality is an equality
    // up to the u^s / (s+1) contribution of f(u)
    let quad = Integrator::default();
    let u: f64 = 1e-9;
    for s in [0.2, 0.5, 0.8] {
        let f = FunctionModel::power(s);
        let r = shh_check(&f, u, 1.0, s_param(s), Direction::Convex, 1e-8, &quad).unwrap();
        assert!(r.holds, "s = {s}: {r:?}");
        assert!((r.right - r.middle - u.powf(s) / (s + 1.0)).abs() < 1e-8, "{r:?}");
    }
}
