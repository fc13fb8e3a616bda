//! The two-point identity: boundary terms minus the mean against weighted integrals of f'.

use hadamard_bounds::hadamard::{lemma1_lhs, lemma1_rhs};
use hadamard_bounds::{verify_identity, FunctionModel, Integrator, PositiveInterval};

fn main() -> hadamard_bounds::Result<()> {
    let quad = Integrator::default();
    let iv = PositiveInterval::new(1.0, 2.0)?;
    for text in ["x^2", "sin(x)", "exp(x)", "x^3 - 4*x"] {
        let f = FunctionModel::parse(text)?;
        for x in [1.0, 1.25, 1.5, 2.0] {
            let r = verify_identity(&f, &iv, x, 1e-10, &quad)?;
            println!("{text:>10} x={x:<4} lhs={:+.12} rhs={:+.12} residual={:.1e}", r.lhs, r.rhs, r.residual);
        }
    }

    let f = FunctionModel::parse("x^2")?;
    let lhs = lemma1_lhs(&f, &iv, 1.5, &quad)?;
    println!("x^2 at the midpoint: {lhs} = 55/24 = {}", 55.0 / 24.0);
    println!("route through f': {}", lemma1_rhs(&f, &iv, 1.5, &quad)?);
    Ok(())
}
