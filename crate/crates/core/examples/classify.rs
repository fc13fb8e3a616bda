//! Sampled (s-)convexity certificates and counterexamples.

use hadamard_bounds::{classify, ConvexityClass, PositiveInterval, SParameter};

fn main() -> hadamard_bounds::Result<()> {
    let iv = PositiveInterval::new(0.1, 3.0)?;
    let cases: [(&str, fn(f64) -> f64, ConvexityClass); 3] = [
        ("sin", f64::sin, ConvexityClass::Concave),
        ("sin", f64::sin, ConvexityClass::Convex),
        ("x^2", |x| x * x, ConvexityClass::Convex),
    ];
    for (name, g, class) in cases {
        let c = classify(g, &iv, class, None, 32)?;
        println!("{name} {class}: {} (max violation {:.3e})", c.status(), c.max_violation);
        if let Some((x, y, t)) = c.counterexample {
            println!("  counterexample x={x:.4} y={y:.4} t={t:.4}");
        }
    }

    let unit = PositiveInterval::new(0.5, 2.0)?;
    for s in [0.25, 0.5, 1.0] {
        let c = classify(|x: f64| x.powf(1.5), &unit, ConvexityClass::SConvex, Some(SParameter::new(s)?), 32)?;
        println!("x^1.5 s-convex with s={s}: {}", c.status());
    }

    // evidence sharpens with the grid
    for grid in [8, 16, 64] {
        let c = classify(|x: f64| x.sqrt(), &unit, ConvexityClass::Convex, None, grid)?;
        println!("sqrt convex at grid {grid}: max violation {:.3e}", c.max_violation);
    }
    Ok(())
}
