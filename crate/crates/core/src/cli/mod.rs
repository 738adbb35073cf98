//! Command-line front end: config parsing, the staged pipeline and reports.

mod config;
mod report;
mod run;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;

pub use config::{RunConfig, RunOptions, Verb};
pub use report::{
    AxiomCounts, CertificateDump, HopfSummary, KacSummary, MatchSummary, MultiplierDump, NumericSummary, PresentationDump, RelationDump,
    RunReport, SearchSummary, Sizes,
};
pub use run::{run, EXIT_CONFIG, EXIT_MISMATCH, EXIT_OK, EXIT_UNDETERMINED};

/// JSON schema of the report written by `--out`.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Parser, Debug)]
#[command(
    name = "cqg-kac",
    version,
    about = "Kac quotients of universal unitary and orthogonal quantum groups"
)]
pub struct Args {
    #[arg(value_enum)]
    pub verb: Verb,
    /// JSON block specification.
    #[arg(long)]
    pub config: PathBuf,
    /// Where to write the JSON report.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Degree bound for ideal membership in matching and Hopf checks.
    #[arg(long)]
    pub membership_bound: Option<usize>,
    /// First seed of the representation search.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Matrix size for the representation search.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Length of the words multiplied onto relations before tracing.
    #[arg(long)]
    pub lp_degree: Option<usize>,
}

impl Args {
    /// Loads the config file and applies command-line overrides.
    pub fn resolve(&self) -> crate::error::Result<RunConfig> {
        let mut config = RunConfig::from_path(&self.config)?;
        config.verb = self.verb;
        let o = &mut config.options;
        if let Some(b) = self.membership_bound {
            o.membership_bound = b;
        }
        if let Some(s) = self.seed {
            o.seed = s;
        }
        if let Some(d) = self.dim {
            o.dim = d;
        }
        if let Some(k) = self.lp_degree {
            o.lp_degree = k;
        }
        if self.out.is_some() {
            o.out = self.out.clone();
        }
        config.validate()?;
        Ok(config)
    }
}

/// Human-readable summary printed by the binary.
pub fn render(report: &RunReport) -> String {
    let mut out = Vec::new();
    out.push(format!(
        "input: {} ({})",
        report.input.verb,
        serde_json::to_string(&report.input.spec).unwrap_or_default()
    ));
    out.push(format!(
        "sizes: {} generators, {} relations",
        report.sizes.generators, report.sizes.relations
    ));
    if let Some(p) = &report.presentation {
        out.push(format!("presentation {}", p.label));
        for r in &p.relations {
            out.push(format!("  [{}] {} = 0", r.origin, r.element));
        }
    }
    if let Some(k) = &report.kac {
        out.push(format!(
            "kac: {} forced in {} rounds: {}",
            k.forced.len(),
            k.rounds,
            k.forced.join(" ")
        ));
        if !k.undetermined.is_empty() {
            out.push(format!("  undetermined: {}", k.undetermined.join(" ")));
        }
    }
    if let Some(m) = &report.matching {
        out.push(format!("match: {} against {} ({})", m.matched, m.target, m.mode));
    }
    if let Some(h) = &report.hopf {
        for (axiom, c) in &h.counts {
            out.push(format!(
                "hopf {axiom}: {} pass, {} fail, {} inconclusive",
                c.pass, c.fail, c.inconclusive
            ));
        }
        if let Some(c) = h.central_morphism {
            out.push(format!("central morphism: {c}"));
        }
    }
    if let Some(n) = &report.numeric {
        out.push(format!(
            "numeric: identity residual {:.3e}, search found {}",
            n.identity_residual, n.search.found
        ));
    }
    out.push(format!("verdict: {}", report.verdict));
    out.join("\n")
}

/// Entry point of the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let config = match args.resolve() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_CONFIG;
        }
    };
    let (code, report) = run(&config);
    println!("{}", render(&report));
    if let Some(path) = &config.options.out {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("cannot write {}: {e}", path.display());
            return EXIT_CONFIG;
        }
    }
    code
}
