//! Special means of a positive interval and their ordering.

use hadamard_bounds::means::{arithmetic_mean, generalized_log_mean, geometric_mean, identric_mean};
use hadamard_bounds::{MeanExponent, PositiveInterval};

fn main() -> hadamard_bounds::Result<()> {
    for (u, v) in [(1.0, 2.0), (1.0, std::f64::consts::E), (0.5, 10.0)] {
        let iv = PositiveInterval::new(u, v)?;
        println!("[{u}, {v}]");
        println!("  G   = {:.10}", geometric_mean(&iv));
        println!("  I   = {:.10}", identric_mean(&iv));
        println!("  A   = {:.10}", arithmetic_mean(&iv));
        for p in [-2.0, 0.5, 2.0, 3.0] {
            println!("  L_{p:<4} = {:.10}", generalized_log_mean(&iv, MeanExponent::new(p)?));
        }
    }

    match PositiveInterval::new(2.0, 2.0) {
        Err(e) => println!("degenerate interval rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
