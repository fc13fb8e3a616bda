mod support;

use hadamard_bounds::bounds::{
    certify_hypothesis, evaluate_lhs, rhs, rhs_corollary, rhs_t1, rhs_t2, rhs_t3, rhs_t4, rhs_t5, rhs_t7,
    HolderPair, HypothesisCheck, PowerMeanExponent,
};
use hadamard_bounds::{check_bound, BoundId, BoundParams, CheckOptions, Error, FunctionModel, Integrator};
use rand::Rng;
use support::*;

fn square() -> FunctionModel {
    FunctionModel::polynomial(vec![0.0, 0.0, 1.0])
}

#[test]
fn worked_values_for_square() {
    let iv = interval(1.0, 2.0);
    let f = square();
    assert!((rhs_t1(&f, &iv, 1.5).unwrap() - 55.0 / 24.0).abs() < 1e-14);
    assert!((rhs_t2(&f, &iv, 1.5, s_param(1.0)).unwrap() - 55.0 / 24.0).abs() < 1e-14);
    let lhs = evaluate_lhs(&f, &iv, 1.5, &Integrator::default()).unwrap();
    assert!((lhs - 55.0 / 24.0).abs() < 1e-12);

    let hp = HolderPair::new(2.0).unwrap();
    let t3 = rhs_t3(&f, &iv, 1.5, hp).unwrap();
    let hand = (7.0f64 / 3.0).sqrt() * (0.25 * 12.5f64.sqrt() + 0.25 * 6.5f64.sqrt());
    assert!((t3 - hand).abs() < 1e-14, "{t3} vs {hand}");
    let t4 = rhs_t4(&f, &iv, 1.5, s_param(0.5), hp).unwrap();
    assert!((t4 - t3 * (2.0f64 / 1.5).sqrt()).abs() < 1e-14);
}

#[test]
fn check_bound_reports() {
    let iv = interval(1.0, 2.0);
    let opts = CheckOptions::default();
    let r = check_bound(BoundId::T1, &square(), &iv, &BoundParams::at(1.5), &opts).unwrap();
    assert!(r.holds && (r.ratio - 1.0).abs() < 1e-12, "{r:?}");
    assert_eq!(r.hypothesis, HypothesisCheck::Unchecked);

    let r = check_bound(BoundId::T3, &square(), &iv, &BoundParams::at(1.5).with_q(2.0), &opts).unwrap();
    assert!(r.holds && r.ratio < 1.0);
    assert_eq!(r.q, Some(2.0));
    assert_eq!(r.s, None);

    let r = check_bound(
        BoundId::T4,
        &square(),
        &iv,
        &BoundParams::at(1.5).with_s(0.5).with_q(2.0),
        &CheckOptions::classified(32),
    )
    .unwrap();
    assert!(r.holds);
    assert_eq!(r.hypothesis.status(), "pass at grid 32");
}

#[test]
fn hypothesis_violation_is_reported_not_raised() {
    // |f'| = 1.5 sqrt(x) is concave, so the convexity hypothesis of t1 fails
    let f = FunctionModel::power(1.5);
    let iv = interval(1.0, 4.0);
    let r = check_bound(BoundId::T1, &f, &iv, &BoundParams::at(2.0), &CheckOptions::classified(32)).unwrap();
    let cert = r.hypothesis.certificate().unwrap();
    assert!(!cert.passes() && cert.counterexample.is_some());
    assert_eq!(r.hypothesis.status(), "fail at grid 32");
    assert!(r.lhs.is_finite() && r.rhs.is_finite());
}

#[test]
fn parameter_validation() {
    let iv = interval(1.0, 2.0);
    let opts = CheckOptions::default();
    let f = square();
    for s in [0.0, 1.5, -0.2, f64::NAN] {
        let err = check_bound(BoundId::T2, &f, &iv, &BoundParams::at(1.5).with_s(s), &opts).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter { .. }), "s = {s}: {err}");
    }
    assert!(matches!(
        check_bound(BoundId::T2, &f, &iv, &BoundParams::at(1.5), &opts),
        Err(Error::MissingParameter { .. })
    ));
    assert!(check_bound(BoundId::T3, &f, &iv, &BoundParams::at(1.5).with_q(1.0), &opts).is_err());
    assert!(check_bound(BoundId::T6, &f, &iv, &BoundParams::at(1.5).with_q(1.0), &opts).is_ok());
    assert!(check_bound(BoundId::T6, &f, &iv, &BoundParams::at(1.5).with_q(0.5), &opts).is_err());
    assert!(matches!(
        check_bound(BoundId::T1, &f, &iv, &BoundParams::at(2.5), &opts),
        Err(Error::PointOutsideInterval { .. })
    ));
    assert!(matches!("t9".parse::<BoundId>(), Err(Error::UnknownBound(_))));
    for id in BoundId::ALL {
        assert_eq!(id.tag().parse::<BoundId>().unwrap(), id);
    }
}

#[test]
fn corollaries_are_theorem_substitutions() {
    let mut rng = rng(50);
    for _ in 0..50 {
        let i = rng.gen_range(0..100);
        let (f, iv) = draw_convex_slope(&mut rng, i);
        let s = draw_s(&mut rng);
        let q = rng.gen_range(1.1..5.0);
        let (u, mid) = (iv.u(), iv.midpoint());
        let hp = HolderPair::new(q).unwrap();
        let pm = PowerMeanExponent::new(q).unwrap();
        let p = BoundParams::at(mid).with_s(s).with_q(q);
        let sp = s_param(s);
        let pairs = [
            (BoundId::C1, rhs_t2(&f, &iv, mid, sp).unwrap()),
            (BoundId::C3i, rhs_t4(&f, &iv, u, sp, hp).unwrap()),
            (BoundId::C3iiTight, rhs_t4(&f, &iv, mid, sp, hp).unwrap()),
            (BoundId::C4i, rhs_t5(&f, &iv, u, sp, pm).unwrap()),
            (BoundId::C4ii, rhs_t1(&f, &iv, u).unwrap()),
            (BoundId::C4iiiTight, rhs_t5(&f, &iv, mid, sp, pm).unwrap()),
            (BoundId::C5i, rhs_t7(&f, &iv, u, sp, hp).unwrap()),
            (BoundId::C5ii, rhs_t7(&f, &iv, mid, sp, hp).unwrap()),
        ];
        for (id, theorem) in pairs {
            let corollary = rhs_corollary(id, &f, &iv, &p).unwrap();
            assert!(rel_close(corollary, theorem, 1e-13), "{id}: {corollary} vs {theorem}");
        }
    }
}

#[test]
fn loose_corollaries_dominate_tight_ones() {
    let mut rng = rng(51);
    for _ in 0..200 {
        let i = rng.gen_range(0..100);
        let (f, iv) = draw_convex_slope(&mut rng, i);
        let p = BoundParams::at(iv.midpoint())
            .with_s(draw_s(&mut rng))
            .with_q(rng.gen_range(1.05..6.0));
        for (tight, loose) in [
            (BoundId::C3iiTight, BoundId::C3iiLoose),
            (BoundId::C4iiiTight, BoundId::C4iiiLoose),
        ] {
            let (a, b) = (rhs(tight, &f, &iv, &p).unwrap(), rhs(loose, &f, &iv, &p).unwrap());
            assert!(a <= b, "{tight} {a} > {loose} {b}");
        }
    }
}

#[test]
fn endpoint_collapse() {
    let mut rng = rng(52);
    let f = FunctionModel::parse("exp(0.7*x) + x^2").unwrap();
    for _ in 0..20 {
        let iv = draw_interval(&mut rng, 0.2, 4.0, 0.05);
        let (u, v) = (iv.u(), iv.v());
        let s = draw_s(&mut rng);
        let q = 2.5;
        let d = |x: f64| f.abs_deriv(x).unwrap();
        let lp = HolderPair::new(q).unwrap();
        // at x = v only the (x-u)^2 term survives, evaluated with x = v
        let t1_at_v = rhs_t1(&f, &iv, v).unwrap();
        assert!(rel_close(t1_at_v, ((u + 2.0 * v) * d(v) + (2.0 * u + v) * d(u)) / 6.0, 1e-14));
        let t1_at_u = rhs_t1(&f, &iv, u).unwrap();
        assert!(rel_close(t1_at_u, ((2.0 * u + v) * d(u) + (u + 2.0 * v) * d(v)) / 6.0, 1e-14));
        let t7_at_v = rhs_t7(&f, &iv, v, s_param(s), lp).unwrap();
        let t7_at_u = rhs_t7(&f, &iv, u, s_param(s), lp).unwrap();
        // both endpoints collapse onto the single midpoint slope
        assert!(rel_close(t7_at_u, t7_at_v, 1e-14));
    }
}

#[test]
fn midpoint_slope_bound_dominates_holder_pipeline() {
    // for concave |f'|^q the midpoint form bounds the Hölder integral it replaces
    let mut rng = rng(53);
    for i in 0..30 {
        let q = rng.gen_range(1.2..4.0);
        let (f, iv) = draw_concave_slope(&mut rng, i, q);
        let x = draw_point(&mut rng, &iv);
        let hp = HolderPair::new(q).unwrap();
        let closed = rhs_t7(&f, &iv, x, s_param(1.0), hp).unwrap();
        let (u, v, w) = (iv.u(), iv.v(), iv.width() * iv.width());
        let lp = weight_power_integral(&iv, q / (q - 1.0)).powf((q - 1.0) / q);
        let pipeline = lp / w
            * ((v - x).powi(2) * slope_power_mean(&f, x, v, q).powf(1.0 / q)
                + (x - u).powi(2) * slope_power_mean(&f, x, u, q).powf(1.0 / q));
        assert!(pipeline <= closed * (1.0 + 1e-10), "{f}: {pipeline} > {closed}");
        let p = BoundParams::at(x).with_s(1.0).with_q(q);
        assert!(certify_hypothesis(BoundId::T7, &f, &iv, &p, 32).unwrap().passes());
    }
}

#[test]
fn c2_with_sampled_bound() {
    let iv = interval(1.0, 2.0);
    let f = square();
    let given = rhs_corollary(BoundId::C2, &f, &iv, &BoundParams::at(1.5).with_s(1.0).with_m(4.0)).unwrap();
    assert_eq!(given, 3.0);
    let sampled = rhs_corollary(BoundId::C2, &f, &iv, &BoundParams::at(1.5).with_s(1.0)).unwrap();
    assert!((sampled - 3.0).abs() < 1e-12, "{sampled}");
    let r = check_bound(BoundId::C2, &f, &iv, &BoundParams::at(1.5).with_s(1.0), &CheckOptions::default()).unwrap();
    assert!(r.holds && r.x == 1.5);
    assert!(rhs_corollary(BoundId::C2, &f, &iv, &BoundParams::at(1.5).with_s(1.0).with_m(-1.0)).is_err());
}
