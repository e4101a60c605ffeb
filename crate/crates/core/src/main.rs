mod cli;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let args = match cli::Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { cli::EXIT_IO } else { cli::EXIT_OK };
            return ExitCode::from(code as u8);
        }
    };
    match cli::run(args) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("bondle: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
