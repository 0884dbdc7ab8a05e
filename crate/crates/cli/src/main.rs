//! `leecode`: construct, enumerate and analyze the Z2[u] codes of one
//! instance or of every instance at a given `m`.

mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use leecode_core::gray::{PaperClaim, DEFAULT_BUDGET_BYTES};
use leecode_core::report::{analyze, AnalysisOptions, AnalysisReport, Mode, Verdict};
use leecode_core::ring::MAX_DIM;
use leecode_core::{Instance, SupportSet};

const DEFAULT_MAX_M: u32 = 5;
const MAX_M_VAR: &str = "LEECODE_MAX_M";

#[derive(Parser, Debug)]
#[command(
    name = "leecode",
    version,
    about = "Few-Lee-weight codes over Z2[u] from simplicial complexes"
)]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[command(flatten)]
    single: SingleArgs,

    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze every (D, E, F) triple of proper supports at one m.
    Scan(ScanArgs),
}

#[derive(Args, Debug)]
struct SingleArgs {
    #[arg(long)]
    m: Option<u32>,
    /// Support of the first complex: 1-based coordinates, comma separated, or `none`.
    #[arg(long = "D", value_name = "COORDS", value_parser = parse_coords)]
    d: Option<Coords>,
    #[arg(long = "E", value_name = "COORDS", value_parser = parse_coords)]
    e: Option<Coords>,
    #[arg(long = "F", value_name = "COORDS", value_parser = parse_coords)]
    f: Option<Coords>,
    #[arg(long, value_enum, default_value_t = CliMode::Analyze)]
    mode: CliMode,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long)]
    m: u32,
    #[arg(long, value_enum, default_value_t = CliMode::Analyze)]
    mode: CliMode,
    /// Keep only rows passing every listed filter.
    #[arg(long, value_enum, value_delimiter = ',')]
    filter: Vec<Filter>,
    /// Keep only rows with |D| = |E| = |F|.
    #[arg(long)]
    equal_sizes: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Byte budget for materializing the Gray image.
    #[arg(long, value_name = "BYTES", default_value_t = DEFAULT_BUDGET_BYTES)]
    budget: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_name = "N")]
    workers: Option<usize>,
    /// Also report the distribution over all messages.
    #[arg(long)]
    message_distribution: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum CliMode {
    Analyze,
    Brute,
    Closed,
    Compare,
    Scan,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Filter {
    Minimal,
    SelfOrthogonal,
}

#[derive(Clone, Debug)]
struct Coords(Vec<u32>);

fn parse_coords(s: &str) -> Result<Coords, String> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("none") || s.is_empty() {
        return Ok(Coords(Vec::new()));
    }
    let mut out = Vec::new();
    for part in s.split(',') {
        let c: u32 = part
            .trim()
            .parse()
            .map_err(|_| format!("`{part}` is not a coordinate"))?;
        if c == 0 {
            return Err("coordinates are 1-based".into());
        }
        if out.contains(&c) {
            return Err(format!("coordinate {c} repeated"));
        }
        out.push(c);
    }
    Ok(Coords(out))
}

fn max_m() -> u32 {
    std::env::var(MAX_M_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_M)
        .min(MAX_DIM)
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

fn check_m(m: u32) {
    let limit = max_m();
    if !(2..=limit).contains(&m) {
        usage_error(format!(
            "--m must be in 2..={limit} (set {MAX_M_VAR} to raise the limit)"
        ));
    }
}

fn support(name: &str, coords: &Option<Coords>, m: u32) -> SupportSet {
    let Some(Coords(coords)) = coords else {
        usage_error(format!("--{name} is required"));
    };
    if let Some(c) = coords.iter().find(|&&c| c > m) {
        usage_error(format!("--{name}: coordinate {c} is out of range 1..={m}"));
    }
    if coords.len() as u32 == m {
        usage_error(format!("--{name} must be a proper subset of [{m}]"));
    }
    SupportSet::from_coords(coords, m).unwrap_or_else(|e| usage_error(format!("--{name}: {e}")))
}

fn core_mode(mode: CliMode) -> Mode {
    match mode {
        CliMode::Analyze | CliMode::Scan => Mode::Analyze,
        CliMode::Brute => Mode::Brute,
        CliMode::Closed => Mode::Closed,
        CliMode::Compare => Mode::Compare,
    }
}

fn options(mode: CliMode, common: &CommonArgs) -> AnalysisOptions {
    AnalysisOptions {
        mode: core_mode(mode),
        budget_bytes: common.budget,
        message_distribution: common.message_distribution,
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn matched(report: &AnalysisReport) -> bool {
    report.distributions_match != Some(false)
}

fn run_single(args: &SingleArgs, common: &CommonArgs) -> Result<bool> {
    let Some(m) = args.m else {
        usage_error("--m is required");
    };
    check_m(m);
    let (d, e, f) = (
        support("D", &args.d, m),
        support("E", &args.e, m),
        support("F", &args.f, m),
    );
    let inst = Instance::new(m, d, e, f)?;
    let report = analyze(&inst, &options(args.mode, common))?;

    let mut w = sink(&common.out)?;
    match common.format {
        Format::Text => output::write_text(&mut w, &report)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &report)?;
            writeln!(w)?;
        }
        Format::Csv => {
            let mut csv = output::CsvRows::new(&options(args.mode, common))?;
            csv.write(&report)?;
            w.write_all(&csv.take())?;
        }
    }
    w.flush()?;
    Ok(matched(&report))
}

fn keep(report: &AnalysisReport, inst: &Instance, args: &ScanArgs) -> bool {
    if args.equal_sizes && inst.equal_size().is_none() {
        return false;
    }
    args.filter.iter().all(|filter| match filter {
        Filter::Minimal => match report.exact_minimal {
            Verdict::Known(b) => b,
            Verdict::Skipped => report.ab_minimal,
        },
        Filter::SelfOrthogonal => report.self_orthogonal,
    })
}

fn run_scan(args: &ScanArgs, threads: usize) -> Result<bool> {
    check_m(args.m);
    let opts = options(args.mode, &args.common);
    let instances: Vec<Instance> = Instance::all(args.m)?
        .into_iter()
        .filter(|inst| !args.equal_sizes || inst.equal_size().is_some())
        .collect();

    let mut w = sink(&args.common.out)?;
    let mut csv = match args.common.format {
        Format::Csv => Some(output::CsvRows::new(&opts)?),
        _ => None,
    };
    let mut buf = Vec::new();
    let mut all_matched = true;

    // Rows are computed a batch at a time and written in input order.
    for batch in instances.chunks(4 * threads.max(1)) {
        let reports = batch
            .par_iter()
            .map(|inst| analyze(inst, &opts))
            .collect::<Result<Vec<_>, _>>()?;
        for (inst, report) in batch.iter().zip(reports) {
            all_matched &= matched(&report);
            if !keep(&report, inst, args) {
                continue;
            }
            match (&mut csv, args.common.format) {
                (Some(csv), _) => csv.write(&report)?,
                (None, Format::Json) => {
                    serde_json::to_writer(&mut buf, &report)?;
                    buf.push(b'\n');
                }
                (None, _) => output::write_scan_line(&mut buf, &report)?,
            }
        }
        if let Some(csv) = &mut csv {
            buf = csv.take();
        }
        w.write_all(&buf)?;
        buf.clear();
    }
    w.flush()?;
    Ok(all_matched)
}

fn run(cli: Cli) -> Result<bool> {
    let common = match &cli.command {
        Some(Command::Scan(args)) => &args.common,
        None => &cli.common,
    };
    let threads = match common.workers {
        Some(0) => usage_error("--workers must be positive"),
        Some(n) => n,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?;

    pool.install(|| match &cli.command {
        Some(Command::Scan(args)) => {
            if args.mode == CliMode::Scan {
                usage_error("scan --mode must be analyze, brute, closed or compare");
            }
            run_scan(args, threads)
        }
        None if cli.single.mode == CliMode::Scan => {
            let Some(m) = cli.single.m else {
                usage_error("--m is required");
            };
            let args = ScanArgs {
                m,
                mode: CliMode::Analyze,
                filter: Vec::new(),
                equal_sizes: false,
                common: cli.common.clone(),
            };
            run_scan(&args, threads)
        }
        None => run_single(&cli.single, &cli.common),
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("leecode: brute-force and closed-form distributions differ");
            ExitCode::FAILURE
        }
        Err(e) => {
            eprintln!("leecode: {e:#}");
            ExitCode::FAILURE
        }
    }
}

pub(crate) fn claim_str(claim: PaperClaim) -> &'static str {
    match claim {
        PaperClaim::Minimal => "true",
        PaperClaim::Open => "open",
        PaperClaim::NoClaim => "false",
    }
}
