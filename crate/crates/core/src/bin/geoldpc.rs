use std::process::ExitCode;

fn main() -> ExitCode {
    geoldpc::cli::cli_main()
}
