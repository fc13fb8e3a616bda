//! The eight theorem bounds on one function, with hypothesis certificates.

use hadamard_bounds::{check_bound, BoundId, BoundParams, CheckOptions, FunctionModel, PositiveInterval};

fn main() -> hadamard_bounds::Result<()> {
    let f = FunctionModel::parse("x^2")?;
    let iv = PositiveInterval::new(1.0, 2.0)?;
    let opts = CheckOptions::classified(32);
    let params = BoundParams::at(1.3).with_s(0.5).with_q(2.0);

    println!("{:<4} {:>12} {:>12} {:>8}  hypothesis", "id", "lhs", "rhs", "ratio");
    // the concave-class bounds t7 and t8 need a function with concave |f'|^q
    for id in BoundId::THEOREMS.into_iter().filter(|id| !matches!(id, BoundId::T7 | BoundId::T8)) {
        let r = check_bound(id, &f, &iv, &params, &opts)?;
        println!("{:<4} {:>12.8} {:>12.8} {:>8.4}  {}", id, r.lhs, r.rhs, r.ratio, r.hypothesis.status());
    }

    // |cos|^2 is concave below π/4
    let sine = FunctionModel::sine();
    let small = PositiveInterval::new(0.1, 0.7)?;
    for id in [BoundId::T7, BoundId::T8] {
        let r = check_bound(id, &sine, &small, &BoundParams::at(0.4).with_s(1.0).with_q(2.0), &opts)?;
        println!("{:<4} {:>12.8} {:>12.8} {:>8.4}  {}", id, r.lhs, r.rhs, r.ratio, r.hypothesis.status());
    }

    // the hypothesis is reported, not enforced
    let f = FunctionModel::power(1.5);
    let r = check_bound(BoundId::T1, &f, &PositiveInterval::new(1.0, 4.0)?, &BoundParams::at(2.0), &opts)?;
    let cert = r.hypothesis.certificate().expect("classified");
    println!("x^1.5 under t1: holds={} hypothesis {} counterexample {:?}", r.holds, cert.status(), cert.counterexample);
    Ok(())
}
