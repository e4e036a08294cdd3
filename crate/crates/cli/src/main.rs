use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use log::info;

use spectral_knots::report::{self, Command, OutputFormat, RunConfig};
use spectral_knots::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CommandArg {
    E2,
    Chord,
    Crosscheck,
    Kancheck,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Markdown,
}

/// Exact pages of the truncated Sinha spectral sequence for long knots and
/// chord-diagram spaces modulo 1T/4T.
#[derive(Debug, Parser)]
#[command(name = "spectral-knots", version)]
struct Cli {
    #[arg(long, value_enum)]
    command: CommandArg,

    /// Truncation (e2, kancheck) or largest chord count (chord, crosscheck).
    #[arg(long)]
    n: usize,

    /// Largest complexity k; rows 0, 2, ..., 2*k_max are computed.
    #[arg(long = "k-max", default_value_t = 0)]
    k_max: usize,

    /// `q` or `fp:<prime>`.
    #[arg(long, default_value = "q")]
    field: String,

    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,

    /// Result cache directory; SPECTRAL_KNOTS_CACHE takes precedence.
    #[arg(long = "cache-dir")]
    cache_dir: Option<PathBuf>,
}

fn config(cli: &Cli) -> Result<RunConfig, Error> {
    let command = match cli.command {
        CommandArg::E2 => Command::E2,
        CommandArg::Chord => Command::Chord,
        CommandArg::Crosscheck => Command::Crosscheck,
        CommandArg::Kancheck => Command::Kancheck,
    };
    let mut cfg = RunConfig::new(command, cli.n, cli.k_max, &cli.field)?;
    cfg.format = match cli.format {
        FormatArg::Json => OutputFormat::Json,
        FormatArg::Csv => OutputFormat::Csv,
        FormatArg::Markdown => OutputFormat::Markdown,
    };
    cfg.cache_dir = cli.cache_dir.clone();
    Ok(cfg)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();

    let outcome = config(&cli).and_then(|cfg| report::run(&cfg).map(|o| (cfg, o)));
    let (cfg, outcome) = match outcome {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    info!(
        "fingerprint {} ({}, {} ms)",
        outcome.record.fingerprint,
        if outcome.cache_hit { "cache hit" } else { "computed" },
        outcome.record.wall_time_ms
    );
    print!("{}", outcome.record.payload.render(cfg.format));

    if outcome.record.payload.all_checks_pass() {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: check failed");
        if let Some(rows) = &outcome.record.payload.crosscheck {
            for r in rows.iter().filter(|r| !r.equal) {
                eprintln!("  n_diag {}: dim_A = {} but E2 diagonal = {}", r.n_diag, r.dim_a, r.e2_diag);
            }
        }
        if let Some(k) = &outcome.record.payload.kancheck {
            if !k.equal {
                eprintln!("  kan unit: lhs {:?} vs rhs {:?}", k.lhs, k.rhs);
            }
        }
        ExitCode::from(1)
    }
}
