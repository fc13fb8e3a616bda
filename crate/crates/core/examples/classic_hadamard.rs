//! Hermite-Hadamard chains for convex, concave and s-convex functions.

use hadamard_bounds::hadamard::{hh_check, shh_check, Direction};
use hadamard_bounds::{FunctionModel, Integrator, SParameter};

fn main() -> hadamard_bounds::Result<()> {
    let quad = Integrator::default();
    let tol = 1e-10;

    let square = FunctionModel::parse("x^2")?;
    let r = hh_check(&square, 1.0, 2.0, Direction::Convex, tol, &quad)?;
    println!("x^2 on [1,2]: {} <= {} <= {}  holds={}", r.left, r.middle, r.right, r.holds);

    let sine = FunctionModel::sine();
    let r = hh_check(&sine, 0.1, 3.0, Direction::Concave, tol, &quad)?;
    println!("sin on [0.1,3] reversed: {:.6} >= {:.6} >= {:.6}  holds={}", r.left, r.middle, r.right, r.holds);

    // x^s is s-convex; near 0 the right-hand inequality becomes sharp
    for s in [0.25, 0.5, 0.75, 1.0] {
        let f = FunctionModel::power(s);
        let r = shh_check(&f, 1e-12, 1.0, SParameter::new(s)?, Direction::Convex, tol, &quad)?;
        println!(
            "x^{s} on (0,1]: 2^(s-1) f(mid)={:.6} mean={:.6} (f(u)+f(v))/(s+1)={:.6}",
            r.left, r.middle, r.right
        );
    }
    Ok(())
}
