//! Runs scenarios and renders their reports.

use std::time::Instant;

use serde::Serialize;

use pmha_core::convolution::{
    check_conv_associativity, check_convolutive_inverse, check_module_algebra, random_hom, random_triples, seeded_rng,
};
use pmha_core::group::group_check;
use pmha_core::group_correspondence::{check_globalizability, check_pga, check_sigma_conditions, roundtrip_check};
use pmha_core::mha::check_mha_axioms;
use pmha_core::partial_action::{
    check_enveloping, check_global, check_minimal, check_partial_action, check_quasi_unitary, check_symmetric, globalize,
};
use pmha_core::partial_coaction::{canonical_e, check_coglobalization, check_partial_coaction, check_quasi_counitary, coaction_globalize};
use pmha_core::{Error, Outcome, Report, Vector};

use crate::catalog::{resolve_check, Job};
use crate::scenario::{CheckSpec, Scenario, SCHEMA_VERSION};
use crate::CliError;

/// Command-line overrides of scenario settings.
#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub window: Option<usize>,
    pub seed: Option<u64>,
    /// Record wall-clock time per check. Off by default so reports are reproducible.
    pub timing: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub index: usize,
    pub kind: String,
    pub subject: String,
    pub outcome: Outcome,
    pub report: Report,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioReport {
    pub schema_version: u32,
    pub scenario: String,
    pub seed: u64,
    pub window: usize,
    pub outcome: Outcome,
    pub checks: Vec<CheckResult>,
}

/// 0 pass, 1 fail, 2 inconclusive.
pub fn exit_code(outcome: Outcome) -> i32 {
    match outcome {
        Outcome::Pass => 0,
        Outcome::Fail => 1,
        Outcome::Inconclusive => 2,
    }
}

fn subject(c: &CheckSpec) -> String {
    [&c.group, &c.instance, &c.target, &c.action, &c.coaction, &c.pga, &c.mutate, &c.candidate, &c.e]
        .into_iter()
        .flatten()
        .cloned()
        .collect::<Vec<_>>()
        .join(" ")
}

/// Folds the recoverable core errors into a report; anything else aborts the run.
fn settle(check: &str, r: pmha_core::Result<Report>) -> Result<Report, CliError> {
    match r {
        Ok(rep) => Ok(rep),
        Err(Error::Inconclusive(why)) => {
            let mut rep = Report::new(check, "bounded search");
            rep.inconclusive("decided", why);
            Ok(rep)
        }
        Err(Error::Rejected(why)) => {
            let mut rep = Report::new(check, "input rejected");
            rep.fact("accepted", false, || why);
            Ok(rep)
        }
        Err(e) => Err(CliError::Check(format!("{check}: {e}"))),
    }
}

fn run_job(job: &Job, kind: &str, window: usize, seed: u64) -> Result<Report, CliError> {
    let r = match job {
        Job::Group(g) => group_check(g, &g.window(window)),
        Job::MhaAxioms(m) => Ok(check_mha_axioms(m, &m.window(window))),
        Job::Convolution { m, r, samples } => {
            let mut rng = seeded_rng(seed);
            let triples = random_triples(m, r, &mut rng, *samples);
            check_conv_associativity(m, r, &triples)
        }
        Job::ModuleAlgebra { m, r, samples } => {
            let mut rng = seeded_rng(seed);
            let homs: Vec<_> = (0..*samples).map(|_| random_hom(m, r, &mut rng, 3, 2)).collect();
            check_module_algebra(m, r, &m.window(window), &homs)
        }
        Job::ConvolutiveInverse { m, identity } => {
            let w = m.window(window);
            let tests: Vec<Vector> = w.iter().cloned().map(Vector::unit).collect();
            let id = |x: &Vector| x.clone();
            let s = |x: &Vector| m.antipode(x);
            if *identity {
                check_convolutive_inverse(m, &id, &id, &tests, &w)
            } else {
                check_convolutive_inverse(m, &s, &id, &tests, &w)
            }
        }
        Job::PartialAction(p) => Ok(check_partial_action(p, &p.acting.window(window))),
        Job::Symmetric(p) => check_symmetric(p, &p.acting.window(window)),
        Job::Global(p, max_size) => check_global(p, &p.acting.window(window), *max_size),
        Job::QuasiUnitary(p, max_size) => Ok(check_quasi_unitary(p, p.l_basis(), &p.acting.window(window), *max_size).0),
        Job::Envelope(p, max_size) => globalize(p, &p.acting.window(window), *max_size).and_then(|env| {
            let mut rep = Report::new("envelope", &env_scope(p));
            rep.absorb("enveloping", check_enveloping(&env, true));
            rep.absorb("minimal", check_minimal(&env)?);
            Ok(rep)
        }),
        Job::Pga(p) => (|| {
            let mut rep = Report::new("pga", &p.name);
            rep.absorb("pga", check_pga(p));
            rep.absorb("sigma", check_sigma_conditions(p)?);
            rep.absorb("globalizable", check_globalizability(p));
            rep.absorb("roundtrip", roundtrip_check(p)?);
            Ok(rep)
        })(),
        Job::PartialCoaction(c) => Ok(check_partial_coaction(c, &c.a_tokens())),
        Job::QuasiCounitary(m, e) => Ok(check_quasi_counitary(m, e)),
        Job::Coglobalization(c, bound) => {
            let w = c.a_tokens();
            coaction_globalize(c, &canonical_e(&c.acting), &w, *bound).and_then(|g| check_coglobalization(&g, &w))
        }
    };
    settle(kind, r)
}

fn env_scope(p: &pmha_core::partial_action::PartialActionData) -> String {
    format!("standard envelope of {}", p.name)
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Check(e.to_string())
    }
}

pub fn run_scenario(s: &Scenario, opts: &RunOptions) -> Result<ScenarioReport, CliError> {
    let window = opts.window.unwrap_or(s.window);
    let seed = opts.seed.unwrap_or(s.seed);
    let mut checks = Vec::with_capacity(s.checks.len());
    for (index, c) in s.checks.iter().enumerate() {
        let job = resolve_check(c)?;
        let start = Instant::now();
        let report = run_job(&job, &c.kind, window, seed.wrapping_add(index as u64))?;
        let timing_ms = opts.timing.then(|| start.elapsed().as_millis());
        checks.push(CheckResult {
            index,
            kind: c.kind.clone(),
            subject: subject(c),
            outcome: report.outcome(),
            report,
            timing_ms,
        });
    }
    let outcome = checks.iter().map(|c| c.outcome).max().unwrap_or(Outcome::Pass);
    Ok(ScenarioReport { schema_version: SCHEMA_VERSION, scenario: s.name.clone(), seed, window, outcome, checks })
}

/// Pretty JSON with a trailing newline.
pub fn render_machine(r: &ScenarioReport) -> String {
    let mut out = serde_json::to_string_pretty(r).expect("reports serialize");
    out.push('\n');
    out
}

pub fn render_human(r: &ScenarioReport) -> String {
    let mut out = format!(
        "scenario {} (seed {}, window {}): {}\n",
        r.scenario,
        r.seed,
        r.window,
        r.outcome.as_str().to_uppercase()
    );
    for c in &r.checks {
        out.push_str(&format!("\n#{} {} {}", c.index, c.kind, c.subject));
        if let Some(t) = c.timing_ms {
            out.push_str(&format!(" ({t} ms)"));
        }
        out.push('\n');
        out.push_str(&c.report.summary());
    }
    out
}
