use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(diracxp::cli::run(std::env::args_os()))
}
