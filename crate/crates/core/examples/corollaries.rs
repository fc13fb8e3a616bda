//! Corollaries as theorem substitutions at the midpoint or an endpoint.

use hadamard_bounds::bounds::{rhs, rhs_t2};
use hadamard_bounds::{check_bound, BoundId, BoundParams, CheckOptions, FunctionModel, PositiveInterval, SParameter};

fn main() -> hadamard_bounds::Result<()> {
    let f = FunctionModel::parse("exp(x/2)")?;
    let iv = PositiveInterval::new(1.0, 3.0)?;
    let params = BoundParams::at(iv.midpoint()).with_s(0.6).with_q(3.0);
    let opts = CheckOptions::classified(32);

    // c5i and c5ii assume concave |f'|^q, which exp(x/2) violates
    for id in BoundId::ALL.into_iter().filter(|id| !id.is_theorem()) {
        let r = check_bound(id, &f, &iv, &params, &opts)?;
        println!(
            "{:<12} x={:<4} lhs={:.8} rhs={:.8} holds={:<5} hypothesis {}",
            id.tag(),
            r.x,
            r.lhs,
            r.rhs,
            r.holds,
            r.hypothesis.status()
        );
    }

    let c1 = rhs(BoundId::C1, &f, &iv, &params)?;
    let t2 = rhs_t2(&f, &iv, iv.midpoint(), SParameter::new(0.6)?)?;
    println!("c1 = t2 at the midpoint: {c1} vs {t2}");

    let tight = rhs(BoundId::C3iiTight, &f, &iv, &params)?;
    let loose = rhs(BoundId::C3iiLoose, &f, &iv, &params)?;
    println!("dropping (1/(s+1))^(1/q): {tight:.8} <= {loose:.8}");

    let given = rhs(BoundId::C2, &f, &iv, &params.with_m(3f64.exp().sqrt() / 2.0))?;
    let sampled = rhs(BoundId::C2, &f, &iv, &params)?;
    println!("c2 with M = max|f'|: given {given:.8}, sampled {sampled:.8}");
    Ok(())
}
