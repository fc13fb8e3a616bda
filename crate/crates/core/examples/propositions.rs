//! Special-means propositions from x^s and sin x, with printed and substituted forms.

use hadamard_bounds::bounds::{HolderPair, PowerMeanExponent};
use hadamard_bounds::props::{prop1, prop2, prop3, prop4, PropositionReport};
use hadamard_bounds::{CheckOptions, PositiveInterval, SParameter};

fn show(r: &PropositionReport) {
    print!(
        "prop {} s={:?} q={:?}: lhs={:.8} rhs={:.8} holds={}",
        r.id, r.s, r.q, r.lhs, r.rhs, r.holds
    );
    if r.discrepancy {
        print!("  (as printed: {:.8})", r.rhs_as_printed);
    }
    println!();
}

fn main() -> hadamard_bounds::Result<()> {
    let iv = PositiveInterval::new(1.0, 2.0)?;
    let opts = CheckOptions::classified(32);

    for s in [1.0, 0.5, 0.1] {
        show(&prop1(&iv, SParameter::new(s)?, &opts)?);
    }
    for s in [1.0, 0.5] {
        show(&prop2(&iv, SParameter::new(s)?, HolderPair::new(2.0)?, &opts)?);
        show(&prop3(&iv, SParameter::new(s)?, PowerMeanExponent::new(2.0)?, &opts)?);
    }

    let quarter = PositiveInterval::new(std::f64::consts::FRAC_PI_4, std::f64::consts::FRAC_PI_2)?;
    let r = prop4(&quarter, HolderPair::new(2.0)?, &opts)?;
    show(&r);
    println!("  hypothesis on [π/4, π/2]: {}", r.hypothesis.status());
    let r = prop4(&PositiveInterval::new(0.2, 0.7)?, HolderPair::new(2.0)?, &opts)?;
    show(&r);
    println!("  hypothesis on [0.2, 0.7]: {}", r.hypothesis.status());
    Ok(())
}
