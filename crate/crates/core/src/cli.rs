//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so tests can drive it in-process.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::config::{RunConfig, DEFAULT_SIZE_BUDGET};
use crate::graph::{
    format_spectrum, read_graph, spectrum_dense, top2_eigenvalues, write_graph, GraphFile, SolverConfig,
    DEFAULT_DENSE_THRESHOLD, DEFAULT_SEED, DEFAULT_TOLERANCE,
};
use crate::numtheory::wu_scan;
use crate::pipeline::{certify, observe_plan, survey, write_survey_csv, ConstructionPlan, GraphSpec, Strategy};
use crate::{Error, Result};

const SPEC_KEY: &str = "spec:";

#[derive(Debug, Parser)]
#[command(
    name = "exforge",
    version,
    about = "Construct and spectrally certify regular expander families"
)]
struct Cli {
    /// Eigensolver residual tolerance, per unit of degree.
    #[arg(long, global = true, env = "EXFORGE_TOLERANCE", default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Largest vertex count handled by full diagonalization.
    #[arg(long, global = true, env = "EXFORGE_DENSE_THRESHOLD", default_value_t = DEFAULT_DENSE_THRESHOLD)]
    dense_threshold: usize,
    /// Largest vertex count any construction may produce.
    #[arg(long, global = true, env = "EXFORGE_BUDGET", default_value_t = DEFAULT_SIZE_BUDGET)]
    budget: usize,
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "EXFORGE_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Directory for output artifacts (default: standard output).
    #[arg(long, global = true, env = "EXFORGE_OUT")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Scan [lo, hi] for almost-primes in (x - x^(101/232), x]; exit 1 if any x lacks one.
    Sieve {
        lo: u64,
        hi: u64,
        #[arg(default_value_t = 1)]
        stride: u64,
    },
    /// Build a graph from a spec such as `paley:13`, `lps:5,13`, `aug:2:complete:4` or `pipeline:8,lps,1`.
    Construct {
        spec: String,
        /// Output file; relative paths resolve under --out. Standard output if omitted.
        output: Option<PathBuf>,
    },
    /// Measure a graph file and write its certification report.
    Certify { graph: PathBuf },
    /// Plan, build and certify every degree in [k_lo, k_hi]; CSV output.
    Survey { k_lo: u32, k_hi: u32, strategy: String },
    /// Print the eigenvalues of a graph file, largest first.
    Spectrum {
        graph: PathBuf,
        /// Only the top two, by Lanczos iteration.
        #[arg(long)]
        top2: bool,
    },
    /// Print the construction plan for degree k.
    Plan { k: u32, strategy: String },
}

impl Cli {
    fn config(&self) -> Result<RunConfig> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::Usage(format!(
                "--tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.dense_threshold == 0 || self.budget == 0 {
            return Err(Error::Usage("--dense-threshold and --budget must be positive".into()));
        }
        Ok(RunConfig {
            solver: SolverConfig {
                tolerance: self.tolerance,
                dense_threshold: self.dense_threshold,
                seed: self.seed,
            },
            size_budget: self.budget,
            output_dir: self.out.clone(),
        })
    }
}

/// Parse `args` (including the program name), execute, and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error ({}): {e}", e.class());
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let cfg = cli.config()?;
    match &cli.command {
        Command::Sieve { lo, hi, stride } => {
            let scan = wu_scan(*lo, *hi, *stride).map_err(|e| Error::Usage(e.to_string()))?;
            let mut text = String::with_capacity(scan.records.len() * 24);
            for r in &scan.records {
                text.push_str(&r.to_string());
                text.push('\n');
            }
            stdout.write_all(text.as_bytes())?;
            writeln!(stderr, "{}", scan.summary())?;
            Ok(if scan.absent() == 0 { 0 } else { 1 })
        }
        Command::Construct { spec, output } => {
            let spec: GraphSpec = spec.parse()?;
            let graph = spec.build(cfg.size_budget)?;
            let mut comments = vec![format!("{SPEC_KEY} {spec}")];
            comments.push(format!("generator: exforge {}", env!("CARGO_PKG_VERSION")));
            comments.extend(cfg.provenance());
            let mut buf = Vec::new();
            write_graph(&graph, &comments, &mut buf)?;
            match output {
                Some(path) => {
                    let path = resolve(&cfg, path);
                    write_file(&path, &buf)?;
                    writeln!(
                        stderr,
                        "wrote {} ({} vertices, degree {})",
                        path.display(),
                        graph.n(),
                        graph.k()
                    )?;
                }
                None => stdout.write_all(&buf)?,
            }
            Ok(0)
        }
        Command::Certify { graph } => {
            let file = read_graph(graph)?;
            let plan = plan_for(&file, &cfg)?;
            let report = certify(&file.graph, &plan, &cfg.solver)?;
            let mut doc = String::from("# exforge certification report\n");
            for line in cfg.provenance() {
                doc.push_str(&format!("# {line}\n"));
            }
            doc.push_str(&report.to_document()?);
            emit(&cfg, &report_name(graph), doc.as_bytes(), stdout, stderr)?;
            Ok(0)
        }
        Command::Survey { k_lo, k_hi, strategy } => {
            let strategy: Strategy = strategy.parse()?;
            let rows = survey(*k_lo, *k_hi, strategy, cfg.size_budget, &cfg.solver)?;
            let mut buf = Vec::new();
            write_survey_csv(&rows, &mut buf)?;
            emit(
                &cfg,
                &format!("survey-{k_lo}-{k_hi}-{strategy}.csv"),
                &buf,
                stdout,
                stderr,
            )?;
            Ok(0)
        }
        Command::Spectrum { graph, top2 } => {
            let g = read_graph(graph)?.graph;
            let s = if *top2 {
                top2_eigenvalues(&g, cfg.solver.tolerance, cfg.solver.seed)?
            } else {
                spectrum_dense(&g, cfg.solver.tolerance)?
            };
            writeln!(stdout, "# method: {}", s.method)?;
            writeln!(stdout, "# residual: {:e}", s.residual)?;
            stdout.write_all(format_spectrum(&s.values).as_bytes())?;
            Ok(0)
        }
        Command::Plan { k, strategy } => {
            let p = crate::pipeline::plan(*k, strategy.parse()?, cfg.size_budget)?;
            let doc = toml::to_string(&p).map_err(|e| Error::Serialize(e.to_string()))?;
            stdout.write_all(doc.as_bytes())?;
            Ok(0)
        }
    }
}

/// The plan recorded in a `spec:` comment when it is a pipeline spec of the
/// right degree; otherwise whatever peeling `K2` factors reveals.
fn plan_for(file: &GraphFile, cfg: &RunConfig) -> Result<ConstructionPlan> {
    let recorded = file
        .comments
        .iter()
        .find_map(|c| c.strip_prefix(SPEC_KEY))
        .and_then(|s| s.trim().parse::<GraphSpec>().ok())
        .and_then(|s| s.plan(cfg.size_budget))
        .and_then(|p| p.ok())
        .filter(|p| p.k == file.graph.k());
    Ok(recorded.unwrap_or_else(|| observe_plan(&file.graph, cfg.size_budget).0))
}

fn report_name(graph: &Path) -> String {
    let stem = graph
        .file_stem()
        .map_or_else(|| "graph".into(), |s| s.to_string_lossy());
    format!("{stem}.report.toml")
}

fn resolve(cfg: &RunConfig, path: &Path) -> PathBuf {
    match &cfg.output_dir {
        Some(dir) if path.is_relative() => dir.join(path),
        _ => path.to_path_buf(),
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, bytes)?;
    Ok(())
}

/// Into `--out/<name>` when an output directory is configured, else stdout.
fn emit(cfg: &RunConfig, name: &str, bytes: &[u8], stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match &cfg.output_dir {
        Some(dir) => {
            let path = dir.join(name);
            write_file(&path, bytes)?;
            writeln!(stderr, "wrote {}", path.display())?;
        }
        None => stdout.write_all(bytes)?,
    }
    Ok(())
}
