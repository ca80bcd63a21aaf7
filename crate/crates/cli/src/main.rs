//! `ulm`: command-line front end of the local model verifier.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ulm_core::golden::{self, GoldenFile};
use ulm_core::ideals::select::{IdealExport, Which};
use ulm_core::report::{exit, Report};
use ulm_core::text::format_ideal_text;
use ulm_core::verify::basis::{SPIN_SAMPLES, SPIN_SEED};
use ulm_core::verify::Suite;
use ulm_core::wedge::cases::{dual_table, single_table};
use ulm_core::wedge::lattice::{check_spin_basis, spin_basis};
use ulm_core::{ChartSpec, Field};

#[derive(Parser)]
#[command(name = "ulm", version, about = "Verify local model ideals of signature (n-1, 1) at strongly non-special level")]
struct Cli {
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ChartArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    kappa: usize,
}

impl ChartArgs {
    fn chart(self) -> Result<ChartSpec> {
        Ok(ChartSpec::new(self.n, self.kappa)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Basis,
    Simplify,
    Groebner,
    Components,
    Integral,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Basis => vec![Suite::Basis],
            SuiteArg::Simplify => vec![Suite::Simplify],
            SuiteArg::Groebner => vec![Suite::Groebner],
            SuiteArg::Components => vec![Suite::Components],
            SuiteArg::Integral => vec![Suite::Integral],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Single,
    Dual,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generators of an ideal.
    EmitIdeal {
        #[command(flatten)]
        chart: ChartArgs,
        #[arg(long, value_parser = parse_which)]
        which: Which,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Work over F_p instead of the rationals.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Run verification suites; exit 0 iff every selected check passes.
    Verify {
        #[command(flatten)]
        chart: ChartArgs,
        /// Suites to run (repeatable).
        #[arg(long, value_enum, default_value = "all")]
        suite: Vec<SuiteArg>,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Cap on S-pairs per Groebner computation.
        #[arg(long, env = "ULM_BUDGET_PAIRS")]
        budget_pairs: Option<usize>,
        /// Print the report as JSON on stdout instead of text.
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the worst-term table, one line per set: `S; case-id; valuation; leading-terms`.
    WorstTerms {
        #[command(flatten)]
        chart: ChartArgs,
        #[arg(long, value_enum, default_value = "both")]
        table: TableArg,
        /// Write the lines as a golden file.
        #[arg(long)]
        write_golden: Option<PathBuf>,
    },
    /// Print the spin basis of the special-fiber image and check it.
    SpinBasis {
        #[command(flatten)]
        chart: ChartArgs,
        #[arg(long, default_value_t = SPIN_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = SPIN_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare a golden worst-term file with a fresh computation (or a second file).
    GoldenDiff {
        golden: PathBuf,
        /// Compare against this file instead of regenerating.
        #[arg(long)]
        current: Option<PathBuf>,
    },
}

fn parse_which(s: &str) -> Result<Which, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(exit::USAGE as u8);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e.downcast_ref::<ulm_core::Error>().is_some_and(|e| e.is_budget());
            ExitCode::from(if budget { exit::BUDGET } else { exit::USAGE } as u8)
        }
    }
}

fn run(cmd: Command) -> Result<i32> {
    match cmd {
        Command::EmitIdeal { chart, which, format, prime } => {
            let chart = chart.chart()?;
            let field = match prime {
                Some(p) => Field::prime(p)?,
                None => Field::Rationals,
            };
            let ideal = which.build(&chart, field);
            match format {
                Format::Text => print!("{}", format_ideal_text(&ideal.ring, &ideal.polys())),
                Format::Json => println!("{}", serde_json::to_string_pretty(&IdealExport::new(&ideal))?),
            }
            Ok(exit::PASS)
        }
        Command::Verify { chart, suite, json, budget_pairs, format } => {
            let chart = chart.chart()?;
            if let Some(b) = budget_pairs {
                std::env::set_var(ulm_core::groebner::ENV_PAIRS, b.to_string());
            }
            let mut suites: Vec<Suite> = suite.iter().flat_map(|s| s.suites()).collect();
            if let Some(w) = chart.admissibility_warning() {
                let skipped: Vec<&str> =
                    suites.iter().filter(|s| s.needs_strongly_non_special()).map(|s| s.name()).collect();
                if !skipped.is_empty() {
                    eprintln!("warning: {w}; skipping suites {}", skipped.join(", "));
                }
                suites.retain(|s| !s.needs_strongly_non_special());
            }
            let report = Report::run(chart, &suites);
            if let Some(path) = json {
                std::fs::write(&path, report.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
            }
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(report.exit_code())
        }
        Command::WorstTerms { chart, table, write_golden } => {
            let chart = chart.chart()?;
            let q = Field::Rationals;
            let lines: Vec<String> = match table {
                TableArg::Single => single_table(q, chart.n, chart.kappa).iter().map(|r| r.line()).collect(),
                TableArg::Dual => dual_table(q, chart.n, chart.kappa).iter().map(|r| r.line()).collect(),
                TableArg::Both => golden::worst_term_lines(&chart),
            };
            for l in &lines {
                println!("{l}");
            }
            if let Some(path) = write_golden {
                let g = GoldenFile::from_lines(chart, lines);
                std::fs::write(&path, g.to_json()).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(exit::PASS)
        }
        Command::SpinBasis { chart, samples, seed, format } => {
            let chart = chart.chart()?;
            let q = Field::Rationals;
            let basis = spin_basis(q, chart.n, chart.kappa);
            let report = check_spin_basis(q, chart.n, chart.kappa, samples, seed);
            match format {
                Format::Text => {
                    for e in &basis {
                        println!("{e}");
                    }
                    let c = &report.corrected;
                    println!(
                        "{} elements, rank {}, image dimension {}, {} outside the lattice; {}/{} integral combinations reduce; rule disagreements {}",
                        c.len,
                        c.rank,
                        c.image_dim,
                        c.non_members.len(),
                        report.combinations_checked - report.combinations_failed,
                        report.combinations_checked,
                        report.rule_disagreements
                    );
                }
                Format::Json => {
                    let out = serde_json::json!({ "basis": basis, "check": report });
                    println!("{}", serde_json::to_string_pretty(&out)?);
                }
            }
            Ok(if report.passed() { exit::PASS } else { exit::FAIL })
        }
        Command::GoldenDiff { golden: path, current } => {
            let read = |p: &PathBuf| -> Result<GoldenFile> {
                let src = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                Ok(GoldenFile::from_json(&src)?)
            };
            let g = read(&path)?;
            if !g.hash_is_consistent() {
                eprintln!("warning: content hash of {} does not match its lines", path.display());
            }
            let cur = match &current {
                Some(p) => read(p)?,
                None => GoldenFile::generate(&g.chart),
            };
            let entries = golden::diff(&g, &cur)?;
            for e in &entries {
                println!("{e}");
            }
            Ok(if entries.is_empty() { exit::PASS } else { exit::FAIL })
        }
    }
}
