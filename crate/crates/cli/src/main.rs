use clap::{Parser, Subcommand};
use frse_cli::{parse_config, run_scenario, to_text, CliError, Kind};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "frse", version, about = "Fractional Schrodinger scenario runner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct RunArgs {
    /// scenario config file
    config: PathBuf,
    /// override [output] dir
    #[arg(long)]
    dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// run the scenario named by `kind` in the config
    Run(RunArgs),
    /// validate a config and print it with all defaults filled in
    Check { config: PathBuf },
    Beam(RunArgs),
    Slab(RunArgs),
    Sne(RunArgs),
    Ftse(RunArgs),
    Anderson(RunArgs),
    #[command(name = "specfun-table")]
    SpecfunTable(RunArgs),
}

fn load(path: &Path, kind: Option<Kind>) -> Result<frse_cli::ScenarioConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display(), e))?;
    parse_config(&text, kind).map_err(CliError::Config)
}

fn run(args: &RunArgs, kind: Option<Kind>) -> Result<(), CliError> {
    let mut cfg = load(&args.config, kind)?;
    if let Some(d) = &args.dir {
        cfg.output.dir = d.clone();
    }
    let start = Instant::now();
    let (art, paths) = run_scenario(&cfg)?;
    println!("{}", serde_json::to_string_pretty(&art.summary(&cfg)).expect("summary serializes"));
    for p in &paths {
        eprintln!("wrote {}", p.display());
    }
    eprintln!("runtime {:.3} s", start.elapsed().as_secs_f64());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Run(a) => run(a, None),
        Command::Check { config } => load(config, None).map(|c| print!("{}", to_text(&c))),
        Command::Beam(a) => run(a, Some(Kind::Beam)),
        Command::Slab(a) => run(a, Some(Kind::Slab)),
        Command::Sne(a) => run(a, Some(Kind::Sne)),
        Command::Ftse(a) => run(a, Some(Kind::Ftse)),
        Command::Anderson(a) => run(a, Some(Kind::Anderson)),
        Command::SpecfunTable(a) => run(a, Some(Kind::SpecfunTable)),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("frse: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
