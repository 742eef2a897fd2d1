use std::process::ExitCode;

fn main() -> ExitCode {
    liecx::cli::main()
}
