use std::process::ExitCode;

fn main() -> ExitCode {
    diag2trid::cli::run()
}
