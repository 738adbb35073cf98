use std::collections::BTreeMap;

use serde::Serialize;

use super::config::RunConfig;
use crate::algebra::format_rational;
use crate::hopf::{AxiomCheck, HopfReport};
use crate::presentation::Presentation;
use crate::quotient::MatchResult;
use crate::trace::{Equation, KacReport};

#[derive(Clone, Debug, Serialize)]
pub struct Sizes {
    pub generators: usize,
    pub relations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_generators: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_relations: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationDump {
    pub origin: String,
    pub element: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationDump {
    pub label: String,
    pub generators: Vec<String>,
    pub relations: Vec<RelationDump>,
}

impl PresentationDump {
    pub fn of(p: &Presentation) -> Self {
        PresentationDump {
            label: p.label.clone(),
            generators: p.generators().iter().map(|g| g.to_string()).collect(),
            relations: p
                .relations()
                .iter()
                .map(|r| RelationDump {
                    origin: r.origin.clone(),
                    element: r.element.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplierDump {
    pub equation: String,
    pub origin: String,
    pub lambda: String,
}

/// A certificate with its equations spelled out, checkable without the solver.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateDump {
    pub generator: String,
    pub round: usize,
    pub symbol: String,
    pub multipliers: Vec<MultiplierDump>,
    pub combination: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct KacSummary {
    pub forced: Vec<String>,
    pub certificates: Vec<CertificateDump>,
    pub undetermined: Vec<String>,
    pub rounds: usize,
    pub lp_degree: usize,
    pub all_certificates_verify: bool,
}

impl KacSummary {
    pub fn of(report: &KacReport, lp_degree: usize) -> Self {
        let certificates = report
            .forced
            .iter()
            .map(|f| {
                let eqs: &[Equation] = &report.equation_sets[f.round];
                CertificateDump {
                    generator: f.generator.to_string(),
                    round: f.round,
                    symbol: f.certificate.symbol.to_string(),
                    multipliers: f
                        .certificate
                        .multipliers
                        .iter()
                        .map(|(i, l)| MultiplierDump {
                            equation: eqs[*i].expr.to_string(),
                            origin: eqs[*i].origin.clone(),
                            lambda: format_rational(l),
                        })
                        .collect(),
                    combination: f.certificate.combination.to_string(),
                }
            })
            .collect();
        KacSummary {
            forced: report.forced.iter().map(|f| f.generator.to_string()).collect(),
            certificates,
            undetermined: report.undetermined.iter().map(|g| g.to_string()).collect(),
            rounds: report.iterations,
            lp_degree,
            all_certificates_verify: report.verify_all(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MatchSummary {
    pub matched: bool,
    pub mode: String,
    pub target: String,
    pub renaming: BTreeMap<String, String>,
    pub unmatched_derived: Vec<String>,
    pub unmatched_target: Vec<String>,
}

impl MatchSummary {
    pub fn of(m: &MatchResult, target: &str) -> Self {
        MatchSummary {
            matched: m.matched,
            mode: m.mode.to_string(),
            target: target.to_string(),
            renaming: m.renaming.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            unmatched_derived: m.unmatched_derived.iter().map(|x| x.to_string()).collect(),
            unmatched_target: m.unmatched_target.iter().map(|x| x.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCounts {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfSummary {
    pub bound: usize,
    pub counts: BTreeMap<String, AxiomCounts>,
    pub open: Vec<AxiomCheck>,
    /// Only for a single factor with `F = J_M`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub central_morphism: Option<bool>,
}

impl HopfSummary {
    pub fn of(r: &HopfReport, central_morphism: Option<bool>) -> Self {
        HopfSummary {
            bound: r.bound,
            counts: r
                .summary()
                .into_iter()
                .map(|(a, (pass, fail, inconclusive))| (a.to_string(), AxiomCounts { pass, fail, inconclusive }))
                .collect(),
            open: r
                .checks
                .iter()
                .filter(|c| c.status != crate::hopf::CheckStatus::Pass)
                .cloned()
                .collect(),
            central_morphism,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchSummary {
    pub dim: usize,
    pub seed: u64,
    pub restarts: usize,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed_used: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericSummary {
    pub identity_residual: f64,
    pub identity_passes: bool,
    pub search: SearchSummary,
}

/// Everything one run produced. `timings` is the only nondeterministic field.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub input: RunConfig,
    pub sizes: Sizes,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<PresentationDump>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kac: Option<KacSummary>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matching: Option<MatchSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<NumericSummary>,
    /// Seconds per stage.
    pub timings: BTreeMap<String, f64>,
    pub verdict: String,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON report with `timings` emptied, for reproducibility checks.
    pub fn to_json_without_timings(&self) -> String {
        let mut r = self.clone();
        r.timings.clear();
        r.to_json()
    }
}
