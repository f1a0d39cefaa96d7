use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use hshear_cli::args::{Cli, Sub};
use hshear_cli::{run_rule, run_shear, run_surface, run_validate, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Sub::Shear { common, rmax } => run_shear(&common.into_job(Command::Shear, rmax), &mut out),
        Sub::Validate { common } => run_validate(&common.into_job(Command::Validate, None), &mut out),
        Sub::Surface { common, rmax, obj } => {
            run_surface(&common.into_job(Command::Surface, rmax), obj.as_deref(), &mut out)
        }
        Sub::Rule { gauss, kronrod } => run_rule(Sub::rule_choice(gauss, kronrod), &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hshear: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
