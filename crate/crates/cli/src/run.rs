use std::collections::BTreeMap;
use std::fmt::Write as _;

use plucker_core::chow::BundleModel;
use plucker_core::degree::plucker_degree;
use plucker_core::pushforward::{ch_pushforward, Method, PushforwardSeries};
use plucker_core::suite::{self, GEN_CAUCHY_PAIRS};
use plucker_core::symfunc::{cauchy_expand_check, gen_cauchy_check, CauchyForm, CheckReport, DEFAULT_SAMPLE_HEIGHT, MAX_CAUCHY_RANK};

use crate::config::{BaseSpec, Command, ConfigError, JobConfig, OutputFormat};
use crate::report::{table, terms_of, Check, Component, Params, Report, Term};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_CONFIG: u8 = 2;

pub struct Outcome {
    pub output: String,
    pub exit: u8,
}

#[derive(Debug)]
pub enum RunError {
    Config(ConfigError),
    Compute(plucker_core::Error),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Config(e) => write!(f, "{e}"),
            RunError::Compute(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<ConfigError> for RunError {
    fn from(e: ConfigError) -> Self {
        RunError::Config(e)
    }
}

impl From<plucker_core::Error> for RunError {
    fn from(e: plucker_core::Error) -> Self {
        RunError::Compute(e)
    }
}

type RunResult<T> = Result<T, RunError>;

fn base_name(base: &BaseSpec) -> String {
    base.build().describe()
}

fn params(job: &JobConfig, bundle: Option<&BundleModel>) -> Params {
    Params {
        command: job.command.name().to_string(),
        base: base_name(&job.base),
        bundle: bundle.map(BundleModel::describe),
        rank: bundle.map(BundleModel::rank),
        d: job.d,
        variant: job.options.variant.name().to_string(),
        seed: job.options.seed,
        trials: job.options.trials,
    }
}

fn cauchy_form_name(form: CauchyForm) -> &'static str {
    match form {
        CauchyForm::Literal => "literal",
        CauchyForm::ShuffleNormalized => "normalized",
    }
}

pub fn run(job: &JobConfig) -> RunResult<Outcome> {
    match job.command {
        Command::Degree => degree(job),
        Command::ChernPushforward => chern_pushforward(job),
        Command::Verify => verify(job),
        Command::IdentityCheck => identity_check(job),
    }
}

fn header(p: &Params, extra: &[(&str, String)]) -> String {
    let mut rows = vec![vec!["command".to_string(), p.command.clone()]];
    if p.command != Command::Verify.name() {
        rows.push(vec!["base".into(), p.base.clone()]);
    }
    if let Some(b) = &p.bundle {
        rows.push(vec!["bundle".into(), b.clone()]);
    }
    if let Some(d) = p.d {
        rows.push(vec!["d".into(), d.to_string()]);
    }
    for (k, v) in extra {
        rows.push(vec![k.to_string(), v.clone()]);
    }
    let t = table(&rows[0], &rows[1..]);
    t + "\n"
}

fn degree(job: &JobConfig) -> RunResult<Outcome> {
    let bundle = job.build_bundle()?.expect("validated");
    let d = job.d.expect("validated");
    let result = plucker_degree(&bundle, d, job.options.variant)?;
    let p = params(job, Some(&bundle));
    let output = match job.options.format {
        OutputFormat::Json => {
            let degree_components = result
                .breakdown
                .iter()
                .map(|(k, c)| Component {
                    degree: result.n,
                    k: Some(k.clone()),
                    values: BTreeMap::from([(
                        Method::Closed.name().to_string(),
                        vec![Term {
                            monomial: "1".into(),
                            coeff: c.to_string(),
                        }],
                    )]),
                })
                .collect();
            Report {
                params: p,
                method: Method::Closed.name().to_string(),
                degree_components,
                value: result.degree.to_string(),
                checks: Vec::new(),
            }
            .to_json()
        }
        OutputFormat::Text => {
            let mut out = header(&p, &[("n", result.n.to_string()), ("denominator", p.variant.clone())]);
            let rows: Vec<Vec<String>> = result
                .breakdown
                .iter()
                .map(|(k, c)| {
                    let k: Vec<String> = k.iter().map(u32::to_string).collect();
                    vec![format!("({})", k.join(",")), c.to_string()]
                })
                .collect();
            out += &table(&["k".into(), "contribution".into()], &rows);
            let _ = writeln!(out, "{result}");
            if !result.is_integer() {
                out += "warning: the degree is not an integer\n";
            }
            out += "note: very-ampleness of the determinant of E is assumed, not checked\n";
            out
        }
    };
    Ok(Outcome {
        output,
        exit: EXIT_OK,
    })
}

fn chern_pushforward(job: &JobConfig) -> RunResult<Outcome> {
    let bundle = job.build_bundle()?.expect("validated");
    let d = job.d.expect("validated");
    let methods: Vec<Method> = match job.options.method {
        Some(m) => vec![m],
        None => Method::ALL.to_vec(),
    };
    let series = methods
        .iter()
        .map(|&m| ch_pushforward(&bundle, d, m, job.options.variant))
        .collect::<Result<Vec<PushforwardSeries>, _>>()?;
    let agree = series.iter().all(|s| s.agrees_with(&series[0]));
    let p = params(job, Some(&bundle));
    let method_label = if methods.len() == 1 { methods[0].name().to_string() } else { "all".to_string() };
    let output = match job.options.format {
        OutputFormat::Json => {
            let degree_components = (0..series[0].components.len())
                .map(|m| Component {
                    degree: m as u32,
                    k: None,
                    values: series
                        .iter()
                        .map(|s| (s.method.name().to_string(), terms_of(&s.components[m])))
                        .collect(),
                })
                .collect();
            Report {
                params: p,
                method: method_label,
                degree_components,
                value: series[0].total().to_string(),
                checks: Vec::new(),
            }
            .to_json()
        }
        OutputFormat::Text => {
            let mut out = header(&p, &[("n", bundle.n().to_string()), ("denominator", p.variant.clone())]);
            let mut headers = vec!["degree".to_string()];
            headers.extend(series.iter().map(|s| s.method.name().to_string()));
            let rows: Vec<Vec<String>> = (0..series[0].components.len())
                .map(|m| {
                    let mut row = vec![m.to_string()];
                    row.extend(series.iter().map(|s| s.components[m].to_string()));
                    row
                })
                .collect();
            out += &table(&headers, &rows);
            if series.len() > 1 {
                out += if agree { "all methods agree\n" } else { "METHODS DISAGREE\n" };
            }
            out
        }
    };
    Ok(Outcome {
        output,
        exit: if agree { EXIT_OK } else { EXIT_VERIFY_FAILED },
    })
}

fn render_checks(
    job: &JobConfig,
    bundle: Option<&BundleModel>,
    label: &str,
    reports: &[CheckReport],
    extra: &[(&str, String)],
) -> Outcome {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let p = params(job, bundle);
    let output = match job.options.format {
        OutputFormat::Json => Report {
            params: p,
            method: label.to_string(),
            degree_components: Vec::new(),
            value: if failed == 0 { "pass".into() } else { "fail".into() },
            checks: reports.iter().map(Check::from).collect(),
        }
        .to_json(),
        OutputFormat::Text => {
            let mut extra = extra.to_vec();
            extra.push(("seed", job.options.seed.to_string()));
            extra.push(("trials", job.options.trials.to_string()));
            let mut out = header(&p, &extra);
            for r in reports {
                let _ = writeln!(out, "{r}");
            }
            let _ = writeln!(out, "{} checks, {failed} failed", reports.len());
            out
        }
    };
    Outcome {
        output,
        exit: if failed == 0 { EXIT_OK } else { EXIT_VERIFY_FAILED },
    }
}

fn verify(job: &JobConfig) -> RunResult<Outcome> {
    let o = &job.options;
    let max_rank = o.max_rank;
    let mut reports = Vec::new();
    reports.extend(suite::run_grid(max_rank, suite::four_way_agreement)?);
    reports.extend(suite::run_grid(max_rank, |m, d| suite::monomial_triple(m, d, o.trials, o.seed))?);
    reports.extend(suite::run_grid(max_rank, suite::grading_and_vanishing)?);
    for r in 1..=max_rank.min(5) {
        for model in suite::grid_models(r)? {
            reports.push(suite::projective_reduction(&model)?);
        }
    }
    for (r, d) in suite::grid_pairs(max_rank) {
        reports.push(suite::point_degree_check(r, d)?);
    }
    reports.push(suite::denominator_variant_check()?);
    reports.push(suite::phi_closed_form_check(8, 4));
    reports.push(suite::phi_antisymmetry_check(o.trials.max(1) * 2, o.seed));
    reports.push(suite::schur_shift_check(o.trials.div_ceil(2), o.seed)?);
    reports.push(suite::factorial_det_suite(o.trials, o.seed, 4, 10));
    reports.extend(suite::cauchy_expansion_suite(3, o.weight)?);
    let pairs: Vec<(usize, usize)> = GEN_CAUCHY_PAIRS
        .iter()
        .copied()
        .filter(|&(r, _)| r as u32 <= max_rank)
        .collect();
    reports.extend(suite::gen_cauchy_suite(&pairs, o.trials, o.seed, o.cauchy_form)?);
    Ok(render_checks(
        job,
        None,
        "verify",
        &reports,
        &[
            ("max rank", max_rank.to_string()),
            ("cauchy form", cauchy_form_name(o.cauchy_form).to_string()),
        ],
    ))
}

fn identity_check(job: &JobConfig) -> RunResult<Outcome> {
    let o = &job.options;
    let bundle = job.build_bundle()?;
    let mut reports = vec![suite::factorial_det_suite(o.trials, o.seed, 4, 10)];
    match (&bundle, job.d) {
        (Some(e), Some(d)) => {
            reports.push(cauchy_expand_check(e, d, o.weight)?);
            let r = e.rank() as usize;
            if r <= MAX_CAUCHY_RANK {
                reports.push(gen_cauchy_check(r, d, o.trials, o.seed, o.cauchy_form, DEFAULT_SAMPLE_HEIGHT)?);
            }
        }
        _ => {
            reports.extend(suite::cauchy_expansion_suite(3, o.weight)?);
            reports.extend(suite::gen_cauchy_suite(&GEN_CAUCHY_PAIRS, o.trials, o.seed, o.cauchy_form)?);
        }
    }
    let mut extra = vec![("cauchy form", cauchy_form_name(o.cauchy_form).to_string())];
    extra.push(("weight", o.weight.to_string()));
    Ok(render_checks(job, bundle.as_ref(), "identity-check", &reports, &extra))
}
