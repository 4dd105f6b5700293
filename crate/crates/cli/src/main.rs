mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::Globals;
use output::Format;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = if cli.tsv { Format::Tsv } else { Format::Json };
    let globals = Globals { seed: cli.seed, max_base: cli.max_base, alphas: cli.alphas, tol: cli.tol };
    match commands::run(&cli.command, globals) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = out.write(format, &mut stdout).and_then(|_| stdout.flush()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
