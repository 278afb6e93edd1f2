use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sicra::sim::{self, ScenarioConfig};
use sicra::sweep::{
    self, Settings, SweepSpec, ANALYTIC_COLUMNS, RESULT_COLUMNS,
};

/// Slotted-ALOHA uplink with SIC at the access point: closed forms,
/// simulation and comparison, written as CSV.
#[derive(Parser)]
#[command(name = "sicra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form metrics of the scenario or of every sweep point.
    Analyze(Common),
    /// Simulate the base scenario (sweep keys are ignored).
    Simulate {
        #[command(flatten)]
        common: Common,
        /// Write a per-slot trace of the first run to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Simulate every sweep point.
    Sweep(Common),
    /// Simulate every sweep point and compare with the closed forms.
    Compare {
        #[command(flatten)]
        common: Common,
        /// Largest tolerated |z| before exiting with status 1.
        #[arg(long, default_value_t = 4.0)]
        z_bound: f64,
        /// Report deviations but always exit 0.
        #[arg(long)]
        report_only: bool,
    },
}

#[derive(Args)]
struct Common {
    /// Scenario file of `key = value` lines.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Override a key, applied after the file (repeatable).
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Shorthand for `--set scenario.seed=SEED`; applied last.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long)]
    jobs: Option<usize>,
    /// Output CSV path (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Config(String),
    Io(String),
}

impl From<sicra::Error> for Failure {
    fn from(e: sicra::Error) -> Self {
        Failure::Config(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn settings(c: &Common) -> Result<Settings, Failure> {
    let mut s = match &c.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
            Settings::parse(&text)?
        }
        None => Settings::default(),
    };
    for pair in &c.set {
        s.set_pair(pair)?;
    }
    if let Some(seed) = c.seed {
        s.set("scenario.seed", &seed.to_string())?;
    }
    Ok(s)
}

fn writer(out: &Option<PathBuf>) -> Result<csv::Writer<Box<dyn Write>>, Failure> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(io::BufWriter::new(File::create(path)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    };
    Ok(csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(sink))
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        if n == 0 {
            return Err(Failure::Config("--jobs must be at least 1".into()));
        }
        b = b.num_threads(n);
    }
    let pool = b.build().map_err(|e| Failure::Io(e.to_string()))?;
    Ok(pool.install(f))
}

fn analyze(c: &Common) -> Result<(), Failure> {
    let s = settings(c)?;
    let spec = s.sweep_or_single()?;
    let samples = s.samples_per_order()?;
    let rows = with_pool(c.jobs, || sweep::analyze(&spec, samples))??;
    let mut w = writer(&c.out)?;
    w.write_record(ANALYTIC_COLUMNS)?;
    for r in &rows {
        if r.values.stable == Some(false) {
            eprintln!("warning: point {}: {}", r.point, r.values.note);
        }
        w.write_record(r.fields())?;
    }
    w.flush()?;
    Ok(())
}

fn write_trace(config: &ScenarioConfig, path: &Path) -> Result<(), Failure> {
    let records = sim::trace(config)?;
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(io::BufWriter::new(File::create(path)?));
    let mut header = vec!["slot".to_owned(), "transmitters".into(), "decoded".into()];
    header.extend((0..config.n_nodes).map(|k| format!("aoi_{k}")));
    w.write_record(&header)?;
    for r in &records {
        let mut row = vec![r.slot.to_string(), r.transmitters.to_string(), r.decoded.to_string()];
        row.extend(r.aoi.iter().map(u64::to_string));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn simulate(c: &Common, spec: SweepSpec, analytics: bool) -> Result<Vec<sweep::ResultRow>, Failure> {
    let s = settings(c)?;
    let samples = s.samples_per_order()?;
    with_pool(c.jobs, || -> Result<_, Failure> {
        let results = sweep::simulate(&spec)?;
        let values = if analytics {
            Some(
                sweep::map_points(&results.iter().map(|(p, _)| p.clone()).collect::<Vec<_>>(), |p| {
                    sweep::analytic_values(&p.config, samples)
                })?,
            )
        } else {
            None
        };
        Ok(sweep::result_rows(&spec, &results, values.as_deref()))
    })?
}

fn emit(rows: &[sweep::ResultRow], out: &Option<PathBuf>) -> Result<(), Failure> {
    let mut w = writer(out)?;
    w.write_record(RESULT_COLUMNS)?;
    for r in rows {
        w.write_record(r.fields())?;
    }
    w.flush()?;
    Ok(())
}

/// Returns whether every z-score stayed within the bound.
fn summarize(rows: &[sweep::ResultRow], bound: f64) -> bool {
    let skipped = rows
        .iter()
        .filter(|r| r.z.is_none() && r.metric != "drop_rate" && !r.note.is_empty())
        .count();
    let exceeded = rows.iter().filter(|r| r.z.is_some_and(|z| !(z.abs() < bound))).count();
    match sweep::max_deviation(rows) {
        Some(r) => eprintln!(
            "max |sim - analytic| / stderr = {:.3} (point {}, {}); {exceeded} of {} comparisons exceed {bound}; {skipped} skipped",
            r.z.unwrap().abs(),
            r.point,
            r.metric,
            rows.iter().filter(|r| r.z.is_some()).count(),
        ),
        None => eprintln!("no comparable metrics; {skipped} skipped"),
    }
    exceeded == 0
}

fn execute(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Analyze(c) => analyze(&c)?,
        Command::Simulate { common, trace } => {
            let cfg = settings(&common)?.scenario()?;
            if let Some(path) = &trace {
                write_trace(&cfg, path)?;
            }
            let rows = simulate(&common, SweepSpec::single(cfg), false)?;
            emit(&rows, &common.out)?;
        }
        Command::Sweep(c) => {
            let spec = settings(&c)?
                .sweep()?
                .ok_or_else(|| Failure::Config("sweep.axis: required by the sweep command".into()))?;
            let rows = simulate(&c, spec, false)?;
            emit(&rows, &c.out)?;
        }
        Command::Compare { common, z_bound, report_only } => {
            let spec = settings(&common)?.sweep_or_single()?;
            let rows = simulate(&common, spec, true)?;
            emit(&rows, &common.out)?;
            if !summarize(&rows, z_bound) && !report_only {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Config(msg) | Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
