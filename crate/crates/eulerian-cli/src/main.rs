use std::process::ExitCode;

fn main() -> ExitCode {
    eulerian_cli::app::main_entry()
}
