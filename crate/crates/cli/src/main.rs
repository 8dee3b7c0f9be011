use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use termdisc_cli::app::error_exit_code;
use termdisc_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((rendered, code)) => {
            if cli.out.is_none() {
                let mut stdout = std::io::stdout().lock();
                if stdout.write_all(rendered.as_bytes()).is_err() {
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
