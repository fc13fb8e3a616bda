//! Parsing expressions in `x` and evaluating their symbolic derivatives.

use hadamard_bounds::FunctionModel;

fn main() -> hadamard_bounds::Result<()> {
    for text in ["x^2", "x*sin(x) + 2*cos(x)", "exp(-x^2/2)", "ln(x)/sqrt(x)", "abs(x - 1)^1.5"] {
        let f = FunctionModel::parse(text)?;
        let df = f.differentiate()?;
        println!("f(x)  = {f}");
        println!("f'(x) = {df}");
        for x in [0.5, 1.5, 2.5] {
            println!("  x={x}: f={:.6} f'={:.6}", f.eval(x), f.deriv(x));
        }
    }

    for bad in ["x +", "sinh(x)", "x^x"] {
        if let Err(e) = FunctionModel::parse(bad) {
            println!("{bad:?}: {e}");
        }
    }

    // kinks inside the interval are caught before any bound is evaluated
    let kink = FunctionModel::parse("abs(x - 1.5)")?;
    println!("probe on [1, 2]: {:?}", kink.probe(1.0, 2.0).map_err(|e| e.to_string()));
    Ok(())
}
