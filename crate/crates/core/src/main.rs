use clap::{Args, Parser, Subcommand};
use qmono::cli::{self, Command, RunConfig};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "qmono",
    version,
    about = "Entanglement monogamy toolkit: measures for small multi-qubit states, \
             parameterized lower-bound tables, and verification sweeps"
)]
struct CliArgs {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Default)]
struct Common {
    /// First alpha of the grid (default: per command)
    #[arg(long)]
    alpha_start: Option<f64>,
    /// Last alpha of the grid (default: per command)
    #[arg(long)]
    alpha_end: Option<f64>,
    /// Grid spacing (default: 0.25)
    #[arg(long)]
    alpha_step: Option<f64>,
    /// Tightening parameter m >= 0 (default: 2)
    #[arg(long)]
    m: Option<f64>,
    /// Side-information ratio k in (0, 1] (default: 0.8)
    #[arg(long)]
    k: Option<f64>,
    /// PRNG seed for randomized sweeps
    #[arg(long)]
    seed: Option<u64>,
    /// Sample-count multiplier for randomized sweeps (>= 1)
    #[arg(long)]
    samples: Option<u64>,
    /// Input state file: {"dims":[2,2,2],"amps":[[re,im],...]}
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Concurrence comparison table (columns Z1..Z6) as CSV
    Figure1(Common),
    /// CREN comparison table (columns W1..W6) as CSV
    Figure2(Common),
    /// Bures comparison table (columns T1..T4) as CSV
    Figure3(Common),
    /// Measures and applicable bounds for a state file, as key,value CSV
    Measure(Common),
    /// Bound-vs-truth comparison across an alpha grid for a state file
    Compare(Common),
    /// Run every randomized verification suite
    Verify(Common),
}

fn to_config(command: Command, c: Common) -> RunConfig {
    let mut cfg = RunConfig::new(command);
    cfg.alpha_start = c.alpha_start;
    cfg.alpha_end = c.alpha_end;
    cfg.alpha_step = c.alpha_step;
    cfg.m = c.m;
    cfg.k = c.k;
    if let Some(seed) = c.seed {
        cfg.seed = seed;
    }
    if let Some(samples) = c.samples {
        cfg.samples = samples;
    }
    cfg.input_path = c.input;
    cfg.output_path = c.output;
    cfg
}

fn main() {
    let args = CliArgs::parse();
    let cfg = match args.command {
        Cmd::Figure1(c) => to_config(Command::Figure1, c),
        Cmd::Figure2(c) => to_config(Command::Figure2, c),
        Cmd::Figure3(c) => to_config(Command::Figure3, c),
        Cmd::Measure(c) => to_config(Command::Measure, c),
        Cmd::Compare(c) => to_config(Command::Compare, c),
        Cmd::Verify(c) => to_config(Command::Verify, c),
    };
    std::process::exit(cli::execute(&cfg));
}
