use std::process::ExitCode;

fn main() -> ExitCode {
    zmc::cli::main_with_args(std::env::args_os())
}
