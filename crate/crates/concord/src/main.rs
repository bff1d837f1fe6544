use clap::{Parser, Subcommand, ValueEnum};
use concord::dsl::Severity;
use concord::pipeline::{
    self, compute_stats, render_table, Granularity, PipelineError, RunOptions,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "concord",
    version,
    about = "Configurable graph code representations: prune statements, build and augment graphs, emit datasets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GranularityArg {
    Method,
    Class,
}

#[derive(Subcommand)]
enum Command {
    /// Execute a configuration: prune, build, augment, serialize.
    Run {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "method")]
        granularity: GranularityArg,
        /// Representation used as the reduction baseline (default: first).
        #[arg(long)]
        baseline: Option<String>,
        /// Worker threads (0 = automatic).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// CSV with columns project,unit,label[,split] to fill manifest slots.
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Exit non-zero if any per-file warning occurred.
        #[arg(long)]
        strict: bool,
        /// Also write the statistics JSON to this path.
        #[arg(long)]
        stats_out: Option<PathBuf>,
        /// Source extensions to scan (repeatable).
        #[arg(long = "ext", default_values = ["java", "c"])]
        extensions: Vec<String>,
    },
    /// Validate a configuration and print its diagnostics.
    Check { config: PathBuf },
    /// Recompute statistics from an existing manifest.
    Stats {
        manifest: PathBuf,
        #[arg(long)]
        baseline: Option<String>,
        #[arg(long)]
        stats_out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("CONCORD_LOG", "warn"))
        .init();
    match Cli::parse().command {
        Command::Run {
            config,
            granularity,
            baseline,
            jobs,
            labels,
            strict,
            stats_out,
            extensions,
        } => {
            let opts = RunOptions {
                granularity: match granularity {
                    GranularityArg::Method => Granularity::Method,
                    GranularityArg::Class => Granularity::Class,
                },
                baseline,
                jobs,
                labels,
                strict,
                stats_out,
                extensions,
            };
            match pipeline::run(&config, &opts) {
                Ok(outcome) => {
                    eprint!("{}", render_table(&outcome.stats));
                    eprintln!("manifest: {}", outcome.manifest_path.display());
                    if !outcome.warnings.is_empty() {
                        eprintln!("{} warning(s)", outcome.warnings.len());
                        if strict {
                            return ExitCode::from(1);
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(err) => exit_for(err),
            }
        }
        Command::Check { config } => {
            let display = config.display().to_string();
            match pipeline::load_model(&config) {
                Ok(model) => {
                    for d in &model.diagnostics {
                        eprintln!("{}", d.format_with_file(&display));
                    }
                    if model.is_executable() {
                        let warnings = model
                            .diagnostics
                            .iter()
                            .filter(|d| d.severity == Severity::Warning)
                            .count();
                        eprintln!("{display}: ok ({warnings} warnings)");
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(2)
                    }
                }
                Err(err) => exit_for(err),
            }
        }
        Command::Stats {
            manifest,
            baseline,
            stats_out,
        } => match compute_stats(&manifest, baseline.as_deref()) {
            Ok(stats) => {
                eprint!("{}", render_table(&stats));
                if let Some(path) = stats_out {
                    let mut text =
                        serde_json::to_string_pretty(&stats).expect("stats serialization");
                    text.push('\n');
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
    }
}

fn exit_for(err: PipelineError) -> ExitCode {
    eprintln!("{err}");
    match err {
        PipelineError::Config { .. } => ExitCode::from(2),
        PipelineError::RepoList { .. } => ExitCode::from(3),
        _ => ExitCode::from(1),
    }
}
