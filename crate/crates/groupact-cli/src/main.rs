use std::process::ExitCode;

fn main() -> ExitCode {
    groupact_cli::run()
}
