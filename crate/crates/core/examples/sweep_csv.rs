//! A parameter sweep written as CSV, as the `sweep` subcommand does.

use hadamard_bounds::cli::sweep::{run_sweep, write_csv, Axis, SweepGrid, SweepSummary, XAxis};
use hadamard_bounds::{BoundId, CheckOptions, FunctionModel};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FunctionModel::parse("x^2")?;
    let grid = SweepGrid {
        u: Axis::single(1.0),
        v: Axis::list(vec![2.0, 3.0])?,
        x: XAxis::Uniform(5),
        s: Some(Axis::range(0.25, 1.0, 4)?),
        q: None,
    };
    let rows = run_sweep(BoundId::T2, &f, &grid, &CheckOptions::default())?;
    write_csv(std::io::stdout().lock(), &rows)?;

    let summary = SweepSummary::of(&rows);
    eprintln!("{summary:?}");
    Ok(())
}
