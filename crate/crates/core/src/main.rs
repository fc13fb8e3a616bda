use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(hadamard_bounds::cli::run(std::env::args_os()))
}
