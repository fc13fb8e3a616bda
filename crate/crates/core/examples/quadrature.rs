//! Adaptive Gauss-Kronrod integration with error estimates and budgets.

use hadamard_bounds::quadrature::QuadratureError;
use hadamard_bounds::Integrator;

fn main() {
    let quad = Integrator::default();
    let r = quad.integrate(|x: f64| x.sin(), 0.0, std::f64::consts::PI).unwrap();
    println!("∫ sin over [0, π] = {:.15} (est {:.1e}, {} evals)", r.value, r.abs_error_estimate, r.n_evals);

    let m: f64 = 0.3;
    let exact = 2.0 / 3.0 * (m * m.sqrt() + (1.0f64 - m).powf(1.5));
    for tol in [1e-4, 1e-8, 1e-12] {
        let r = Integrator::with_tolerance(tol)
            .integrate(|x: f64| (x - m).abs().sqrt(), 0.0, 1.0)
            .unwrap();
        println!(
            "kink at {m}, tol {tol:.0e}: error {:.2e} <= estimate {:.2e}, {} evals",
            (r.value - exact).abs(),
            r.abs_error_estimate,
            r.n_evals
        );
    }

    let tight = Integrator {
        max_evals: 500,
        ..Integrator::default()
    };
    match tight.integrate(|x: f64| (1.0 / x).sin(), 1e-4, 1.0) {
        Err(e @ QuadratureError::BudgetExceeded { .. }) => println!("oscillatory integrand: {e}"),
        other => println!("{other:?}"),
    }
}
