use std::io::Write;
use std::process::ExitCode;

use golay_core::cli::{parse_and_validate, run, CliError};

fn main() -> ExitCode {
    let cfg = match parse_and_validate(std::env::args_os()) {
        Ok(cfg) => cfg,
        Err(CliError::Info(text)) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("{}", msg.trim_end());
            return ExitCode::from(1);
        }
    };
    let stdin = std::io::stdin();
    let out = match run(&cfg, &mut stdin.lock()) {
        Ok(out) => out,
        Err(CliError::Usage(msg) | CliError::Info(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &out.text),
        None => std::io::stdout().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(out.exit_code)
}
