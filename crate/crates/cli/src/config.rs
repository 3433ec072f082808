//! Job configuration: a TOML file with `[base]`, `[bundle]` and `[options]`
//! sections, overridden field by field from the command line.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde::Deserialize;

use plucker_core::chow::{BaseModel, BundleModel, GradedElement};
use plucker_core::pushforward::{DenominatorVariant, Method};
use plucker_core::suite::{DEFAULT_FORMAL_N, DEFAULT_SEED, MAX_GRID_RANK};
use plucker_core::symfunc::CauchyForm;
use plucker_core::Rational;

/// A configuration problem, tagged with the dotted name of the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl ConfigError {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        ConfigError {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "configuration error in `{}`: {}", self.field, self.message)
    }
}

impl std::error::Error for ConfigError {}

type ConfigResult<T> = Result<T, ConfigError>;

/// A rational written either as a TOML integer or as a `"p/q"` string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RawRational {
    Int(i64),
    Text(String),
}

impl RawRational {
    fn parse(&self, field: &str) -> ConfigResult<Rational> {
        match self {
            RawRational::Int(i) => Ok(Rational::from_integer((*i).into())),
            RawRational::Text(s) => parse_rational(s, field),
        }
    }
}

pub fn parse_rational(s: &str, field: &str) -> ConfigResult<Rational> {
    Rational::from_str(s.trim())
        .map_err(|_| ConfigError::new(field, format!("{s:?} is not a rational of the form p or p/q")))
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBase {
    pub kind: Option<String>,
    pub n: Option<i64>,
    pub families: Option<i64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawBundle {
    pub rank: Option<i64>,
    pub chern_roots: Option<Vec<i64>>,
    pub segre: Option<Vec<RawRational>>,
    pub formal: Option<bool>,
    pub family: Option<i64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawOptions {
    pub variant: Option<String>,
    pub format: Option<String>,
    pub seed: Option<u64>,
    pub trials: Option<i64>,
    pub method: Option<String>,
    pub max_rank: Option<i64>,
    pub cauchy_form: Option<String>,
    pub weight: Option<i64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub command: Option<String>,
    pub d: Option<i64>,
    #[serde(default)]
    pub base: RawBase,
    #[serde(default)]
    pub bundle: RawBundle,
    #[serde(default)]
    pub options: RawOptions,
}

impl RawConfig {
    pub fn from_file(path: &Path) -> ConfigResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::new("config", format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn from_toml(text: &str) -> ConfigResult<Self> {
        toml::from_str(text).map_err(|e| {
            let message = e.message().to_string();
            let field = unknown_or_bad_field(&message, text, e.span());
            ConfigError::new(field, message)
        })
    }

    /// Fields present in `over` replace those in `self`.
    pub fn overlay(mut self, over: RawConfig) -> Self {
        macro_rules! take {
            ($($path:ident).+) => {
                if over.$($path).+.is_some() {
                    self.$($path).+ = over.$($path).+;
                }
            };
        }
        take!(command);
        take!(d);
        take!(base.kind);
        take!(base.n);
        take!(base.families);
        take!(bundle.rank);
        take!(bundle.chern_roots);
        take!(bundle.segre);
        take!(bundle.formal);
        take!(bundle.family);
        take!(options.variant);
        take!(options.format);
        take!(options.seed);
        take!(options.trials);
        take!(options.method);
        take!(options.max_rank);
        take!(options.cauchy_form);
        take!(options.weight);
        self
    }
}

/// Best-effort dotted key for a TOML error, from the line the span points at.
fn unknown_or_bad_field(message: &str, text: &str, span: Option<std::ops::Range<usize>>) -> String {
    if let Some(rest) = message.split("unknown field `").nth(1) {
        if let Some(name) = rest.split('`').next() {
            return name.to_string();
        }
    }
    let Some(span) = span else {
        return "config".to_string();
    };
    let mut section = String::new();
    let mut key = String::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if trimmed.starts_with('[') && trimmed.ends_with(']') {
            section = trimmed.trim_matches(|c| c == '[' || c == ']').trim().to_string();
        }
        if offset + line.len() > span.start {
            if let Some((k, _)) = trimmed.split_once('=') {
                key = k.trim().to_string();
            }
            break;
        }
        offset += line.len();
    }
    match (section.is_empty(), key.is_empty()) {
        (_, true) if !section.is_empty() => section,
        (_, true) => "config".to_string(),
        (true, false) => key,
        (false, false) => format!("{section}.{key}"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Degree,
    ChernPushforward,
    Verify,
    IdentityCheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Degree => "degree",
            Command::ChernPushforward => "chern-pushforward",
            Command::Verify => "verify",
            Command::IdentityCheck => "identity-check",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum BaseSpec {
    Point,
    Projective(u32),
    Formal { n: u32, families: u32 },
}

impl BaseSpec {
    pub fn build(&self) -> Arc<BaseModel> {
        match *self {
            BaseSpec::Point => BaseModel::point(),
            BaseSpec::Projective(n) => BaseModel::projective(n),
            BaseSpec::Formal { n, families } => BaseModel::formal(n, families),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BundleData {
    Trivial,
    Roots(Vec<i64>),
    Segre(Vec<Rational>),
    Formal { family: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BundleSpec {
    pub rank: u32,
    pub data: BundleData,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Options {
    pub variant: DenominatorVariant,
    pub format: OutputFormat,
    pub seed: u64,
    pub trials: usize,
    /// `None` means all four methods.
    pub method: Option<Method>,
    pub max_rank: u32,
    pub cauchy_form: CauchyForm,
    pub weight: u32,
}

/// A validated job.
#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub command: Command,
    pub base: BaseSpec,
    pub bundle: Option<BundleSpec>,
    pub d: Option<usize>,
    pub options: Options,
}

pub const DEFAULT_TRIALS: usize = 100;
pub const DEFAULT_WEIGHT: u32 = 3;

fn nonneg(v: i64, field: &str) -> ConfigResult<u32> {
    u32::try_from(v).map_err(|_| ConfigError::new(field, format!("must be a nonnegative integer, got {v}")))
}

fn positive(v: i64, field: &str) -> ConfigResult<u32> {
    match u32::try_from(v) {
        Ok(x) if x > 0 => Ok(x),
        _ => Err(ConfigError::new(field, format!("must be a positive integer, got {v}"))),
    }
}

pub fn parse_cauchy_form(s: &str) -> ConfigResult<CauchyForm> {
    match s {
        "literal" => Ok(CauchyForm::Literal),
        "normalized" => Ok(CauchyForm::ShuffleNormalized),
        other => Err(ConfigError::new(
            "options.cauchy_form",
            format!("unknown form {other:?} (expected \"literal\" or \"normalized\")"),
        )),
    }
}

impl JobConfig {
    pub fn validate(command: Command, raw: RawConfig) -> ConfigResult<Self> {
        if let Some(c) = &raw.command {
            if c != command.name() {
                return Err(ConfigError::new(
                    "command",
                    format!("file is for {c:?} but {:?} was requested", command.name()),
                ));
            }
        }
        let base = validate_base(&raw.base)?;
        let bundle = validate_bundle(&raw.bundle, &base)?;
        let d = match raw.d {
            None => None,
            Some(v) => Some(positive(v, "d")? as usize),
        };
        if let (Some(d), Some(b)) = (d, &bundle) {
            if d > b.rank as usize {
                return Err(ConfigError::new("d", format!("must satisfy 1 <= d <= rank = {}, got {d}", b.rank)));
            }
        }
        let options = validate_options(&raw.options)?;
        if matches!(command, Command::Degree | Command::ChernPushforward) {
            if bundle.is_none() {
                return Err(ConfigError::new("bundle.rank", "a bundle is required for this command"));
            }
            if d.is_none() {
                return Err(ConfigError::new("d", "required for this command"));
            }
        }
        if command == Command::Degree {
            if let BaseSpec::Formal { .. } = base {
                return Err(ConfigError::new(
                    "base.kind",
                    "degree needs a concrete base (point or projective); the formal model has no integration",
                ));
            }
        }
        Ok(JobConfig {
            command,
            base,
            bundle,
            d,
            options,
        })
    }

    pub fn build_bundle(&self) -> ConfigResult<Option<BundleModel>> {
        let Some(spec) = &self.bundle else {
            return Ok(None);
        };
        let base = self.base.build();
        let built = match &spec.data {
            BundleData::Trivial => BundleModel::trivial(&base, spec.rank),
            BundleData::Roots(roots) => BundleModel::from_chern_roots(&base, roots),
            BundleData::Formal { family } => BundleModel::formal(&base, spec.rank, *family),
            BundleData::Segre(values) => {
                let segre = values
                    .iter()
                    .enumerate()
                    .map(|(i, q)| GradedElement::hyperplane_power(&base, i as u32, q.clone()))
                    .collect();
                BundleModel::from_segre(&base, spec.rank, segre)
            }
        };
        let field = match spec.data {
            BundleData::Segre(_) => "bundle.segre",
            BundleData::Roots(_) => "bundle.chern_roots",
            _ => "bundle",
        };
        built.map(Some).map_err(|e| ConfigError::new(field, e.to_string()))
    }
}

fn validate_base(raw: &RawBase) -> ConfigResult<BaseSpec> {
    let kind = raw.kind.as_deref().unwrap_or("formal");
    let n = raw.n.map(|v| nonneg(v, "base.n")).transpose()?;
    if raw.families.is_some() && kind != "formal" {
        return Err(ConfigError::new("base.families", "only meaningful for the formal base"));
    }
    match kind {
        "point" => match n {
            None | Some(0) => Ok(BaseSpec::Point),
            Some(n) => Err(ConfigError::new("base.n", format!("a point has dimension 0, got {n}"))),
        },
        "projective" => match n {
            Some(n) => Ok(BaseSpec::Projective(n)),
            None => Err(ConfigError::new("base.n", "required for a projective base")),
        },
        "formal" => {
            let families = raw.families.map(|v| positive(v, "base.families")).transpose()?.unwrap_or(1);
            Ok(BaseSpec::Formal {
                n: n.unwrap_or(DEFAULT_FORMAL_N),
                families,
            })
        }
        other => Err(ConfigError::new(
            "base.kind",
            format!("unknown base {other:?} (expected point, projective or formal)"),
        )),
    }
}

fn validate_bundle(raw: &RawBundle, base: &BaseSpec) -> ConfigResult<Option<BundleSpec>> {
    let given = [raw.chern_roots.is_some(), raw.segre.is_some(), raw.formal == Some(true)]
        .iter()
        .filter(|&&b| b)
        .count();
    if given > 1 {
        return Err(ConfigError::new(
            "bundle",
            "give at most one of chern_roots, segre, formal",
        ));
    }
    let rank = raw.rank.map(|v| positive(v, "bundle.rank")).transpose()?;
    if raw.family.is_some() && raw.formal != Some(true) && !matches!(base, BaseSpec::Formal { .. }) {
        return Err(ConfigError::new("bundle.family", "only meaningful for a formal bundle"));
    }
    let formal_base = match base {
        BaseSpec::Formal { families, .. } => Some(*families),
        _ => None,
    };
    let (rank, data) = if let Some(roots) = &raw.chern_roots {
        if formal_base.is_some() {
            return Err(ConfigError::new("bundle.chern_roots", "not available on the formal base"));
        }
        if roots.is_empty() {
            return Err(ConfigError::new("bundle.chern_roots", "must list at least one root"));
        }
        let len = roots.len() as u32;
        if let Some(r) = rank {
            if r != len {
                return Err(ConfigError::new(
                    "bundle.chern_roots",
                    format!("{len} roots given for rank {r}"),
                ));
            }
        }
        (len, BundleData::Roots(roots.clone()))
    } else if let Some(segre) = &raw.segre {
        if formal_base.is_some() {
            return Err(ConfigError::new("bundle.segre", "not available on the formal base; use formal = true"));
        }
        let rank = rank.ok_or_else(|| ConfigError::new("bundle.rank", "required with explicit Segre classes"))?;
        let n = match base {
            BaseSpec::Point => 0,
            BaseSpec::Projective(n) => *n,
            BaseSpec::Formal { n, .. } => *n,
        };
        if segre.len() != n as usize + 1 {
            return Err(ConfigError::new(
                "bundle.segre",
                format!("expected n + 1 = {} entries s_0..s_{n}, got {}", n + 1, segre.len()),
            ));
        }
        let values = segre
            .iter()
            .map(|v| v.parse("bundle.segre"))
            .collect::<ConfigResult<Vec<_>>>()?;
        if values[0] != Rational::from_integer(1.into()) {
            return Err(ConfigError::new("bundle.segre", format!("s_0 must be 1, got {}", values[0])));
        }
        (rank, BundleData::Segre(values))
    } else {
        let Some(rank) = rank else {
            return Ok(None);
        };
        match (formal_base, raw.formal) {
            (Some(families), _) => {
                let family = raw.family.map(|v| nonneg(v, "bundle.family")).transpose()?.unwrap_or(0);
                if family >= families {
                    return Err(ConfigError::new(
                        "bundle.family",
                        format!("the base has {families} famil{}", if families == 1 { "y" } else { "ies" }),
                    ));
                }
                (rank, BundleData::Formal { family })
            }
            (None, Some(true)) => {
                return Err(ConfigError::new("bundle.formal", "a formal bundle needs the formal base"));
            }
            (None, _) => (rank, BundleData::Trivial),
        }
    };
    Ok(Some(BundleSpec { rank, data }))
}

fn validate_options(raw: &RawOptions) -> ConfigResult<Options> {
    let variant = match raw.variant.as_deref() {
        None => DenominatorVariant::default(),
        Some(s) => s
            .parse()
            .map_err(|e: plucker_core::Error| ConfigError::new("options.variant", e.to_string()))?,
    };
    let format = match raw.format.as_deref() {
        None | Some("text") => OutputFormat::Text,
        Some("json") => OutputFormat::Json,
        Some(other) => {
            return Err(ConfigError::new(
                "options.format",
                format!("unknown format {other:?} (expected \"text\" or \"json\")"),
            ))
        }
    };
    let method = match raw.method.as_deref() {
        None | Some("all") => None,
        Some(s) => Some(
            s.parse()
                .map_err(|e: plucker_core::Error| ConfigError::new("options.method", e.to_string()))?,
        ),
    };
    let max_rank = raw.max_rank.map(|v| positive(v, "options.max_rank")).transpose()?.unwrap_or(MAX_GRID_RANK);
    if max_rank > 7 {
        return Err(ConfigError::new("options.max_rank", format!("at most 7 is supported, got {max_rank}")));
    }
    Ok(Options {
        variant,
        format,
        seed: raw.seed.unwrap_or(DEFAULT_SEED),
        trials: raw
            .trials
            .map(|v| positive(v, "options.trials"))
            .transpose()?
            .map_or(DEFAULT_TRIALS, |t| t as usize),
        method,
        max_rank,
        cauchy_form: raw
            .cauchy_form
            .as_deref()
            .map(parse_cauchy_form)
            .transpose()?
            .unwrap_or(CauchyForm::ShuffleNormalized),
        weight: raw.weight.map(|v| nonneg(v, "options.weight")).transpose()?.unwrap_or(DEFAULT_WEIGHT),
    })
}
