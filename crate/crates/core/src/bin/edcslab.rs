use std::process::ExitCode;

fn main() -> ExitCode {
    edcslab::cli::run(std::env::args_os())
}
