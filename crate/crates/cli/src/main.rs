use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = wha_cli::run_command(std::env::args_os());
    if outcome.to_stdout {
        let _ = std::io::stdout().write_all(outcome.output.as_bytes());
    }
    eprint!("{}", outcome.diagnostics);
    ExitCode::from(outcome.code as u8)
}
