use std::collections::BTreeMap;
use std::time::Instant;

use super::config::{RunConfig, Verb};
use super::report::{HopfSummary, KacSummary, MatchSummary, NumericSummary, PresentationDump, RunReport, SearchSummary, Sizes};
use crate::error::Result;
use crate::hopf::{central_morphism_check, hopf_axiom_check};
use crate::numeric::{classical_point, eval_residual, rep_search_restarts, CMatrix};
use crate::presentation::{presentation_for, symplectic, Presentation};
use crate::quotient::{expected_kac_target, match_presentations};
use crate::trace::{kac_fixpoint, KacOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_UNDETERMINED: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

struct Stages {
    timings: BTreeMap<String, f64>,
}

impl Stages {
    fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        self.timings.insert(name.to_string(), t.elapsed().as_secs_f64());
        out
    }
}

/// Runs the pipeline for `config.verb` and returns the exit code with the report.
///
/// Exit codes: 0 success or matched, 1 configuration error, 2 undetermined
/// (the derivation left generators open, or a bounded Hopf check was
/// inconclusive), 3 mismatch (target or Hopf axiom failure).
pub fn run(config: &RunConfig) -> (i32, RunReport) {
    let start = Instant::now();
    let mut report = RunReport {
        input: config.clone(),
        sizes: Sizes {
            generators: 0,
            relations: 0,
            quotient_generators: None,
            quotient_relations: None,
        },
        presentation: None,
        kac: None,
        matching: None,
        hopf: None,
        numeric: None,
        timings: BTreeMap::new(),
        verdict: String::new(),
    };
    let code = match run_stages(config, &mut report) {
        Ok(code) => code,
        Err(e) => {
            report.verdict = format!("error: {e}");
            EXIT_CONFIG
        }
    };
    report.timings.insert("total".into(), start.elapsed().as_secs_f64());
    (code, report)
}

fn run_stages(config: &RunConfig, report: &mut RunReport) -> Result<i32> {
    config.validate()?;
    let mut stages = Stages { timings: BTreeMap::new() };
    let opts = &config.options;
    let verb = config.verb;
    let p = stages.time("build", || presentation_for(&config.spec))?;
    report.sizes.generators = p.generators().len();
    report.sizes.relations = p.relations().len();

    let mut code = EXIT_OK;
    let mut verdict = None;
    if verb == Verb::Build {
        report.presentation = Some(PresentationDump::of(&p));
        verdict = Some(format!(
            "built {}: {} generators, {} relations",
            p.label,
            p.generators().len(),
            p.relations().len()
        ));
    }

    if matches!(verb, Verb::Kac | Verb::Match | Verb::Report) {
        let kac_opts = KacOptions {
            degree: opts.lp_degree,
            ..KacOptions::default()
        };
        let kac = stages.time("kac", || kac_fixpoint(&p, &kac_opts))?;
        report.sizes.quotient_generators = Some(kac.quotient.generators().len());
        report.sizes.quotient_relations = Some(kac.quotient.relations().len());
        report.kac = Some(KacSummary::of(&kac, opts.lp_degree));
        if !kac.undetermined.is_empty() {
            code = EXIT_UNDETERMINED;
            let open: Vec<String> = kac.undetermined.iter().map(|g| g.to_string()).collect();
            verdict = Some(format!("undetermined: {}", open.join(", ")));
        } else if verb == Verb::Kac {
            verdict = Some(format!(
                "forced {} generators to zero in {} rounds",
                kac.forced.len(),
                kac.iterations
            ));
        } else {
            let target = expected_kac_target(&config.spec)?;
            let m = stages.time("match", || {
                match_presentations(&kac.quotient, &target.presentation, &target.renaming, opts.membership_bound)
            })?;
            report.matching = Some(MatchSummary::of(&m, &target.label));
            if m.matched {
                verdict = Some(if kac.forced.is_empty() {
                    "matched self (no forced zeros)".to_string()
                } else {
                    format!("matched {}", target.label)
                });
            } else {
                code = EXIT_MISMATCH;
                verdict = Some(format!("mismatch against {}", target.label));
            }
        }
    }

    if matches!(verb, Verb::HopfCheck | Verb::Report) {
        let r = stages.time("hopf", || hopf_axiom_check(&p, opts.membership_bound))?;
        let central = if is_single_symplectic(&p) {
            Some(central_morphism_check(&p)?)
        } else {
            None
        };
        let failed = r.any_fail() || central == Some(false);
        if failed {
            code = EXIT_MISMATCH;
        } else if verb == Verb::HopfCheck && !r.all_pass() {
            code = EXIT_UNDETERMINED;
        }
        if verb == Verb::HopfCheck || failed {
            let counts = r.summary();
            let (pass, fail, open) = counts.values().fold((0, 0, 0), |a, c| (a.0 + c.0, a.1 + c.1, a.2 + c.2));
            verdict = Some(format!(
                "hopf checks at bound {}: {pass} pass, {fail} fail, {open} inconclusive",
                opts.membership_bound
            ));
        }
        report.hopf = Some(HopfSummary::of(&r, central));
    }

    if matches!(verb, Verb::Numeric | Verb::Report) {
        let summary = stages.time("numeric", || numeric_stage(&p, config))?;
        if verb == Verb::Numeric {
            verdict = Some(format!(
                "identity point residual {:.3e}; dimension-{} search {}",
                summary.identity_residual,
                summary.search.dim,
                match summary.search.seed_used {
                    Some(s) => format!("certified at seed {s}"),
                    None => "found nothing".to_string(),
                }
            ));
            if !summary.identity_passes {
                code = EXIT_MISMATCH;
            }
        }
        report.numeric = Some(summary);
    }

    report.timings.extend(stages.timings);
    report.verdict = verdict.unwrap_or_default();
    Ok(code)
}

fn is_single_symplectic(p: &Presentation) -> bool {
    match p.layouts() {
        [l] => {
            let n = l.dimension();
            n % 2 == 0 && l.f.as_ref() == Some(&symplectic(n / 2))
        }
        _ => false,
    }
}

fn numeric_stage(p: &Presentation, config: &RunConfig) -> Result<NumericSummary> {
    let n: usize = p.layouts().iter().map(|l| l.dimension()).sum();
    let pi = classical_point(p, &CMatrix::identity(n, n))?;
    let identity = eval_residual(p, &pi)?;
    let opts = &config.options;
    let found = rep_search_restarts(p, opts.dim, opts.seed, opts.restarts);
    let max_residual = match &found {
        Some((_, pi)) => Some(eval_residual(p, pi)?.max),
        None => None,
    };
    Ok(NumericSummary {
        identity_residual: identity.max,
        identity_passes: identity.passes(),
        search: SearchSummary {
            dim: opts.dim,
            seed: opts.seed,
            restarts: opts.restarts,
            found: found.is_some(),
            seed_used: found.as_ref().map(|(s, _)| *s),
            max_residual,
        },
    })
}
