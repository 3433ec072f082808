use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::phi::phi;
use crate::chow::{BundleModel, FlagRing, GradedElement};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ring::{factorial, falling_factorial_inverse, vandermonde_of_ints, Coeff, Rational};
use crate::symfunc::{partitions_up_to, schur_delta, segre_series_product, syt_count};

/// Which factorial denominator the closed formula uses.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DenominatorVariant {
    /// `∏ (r + k_i - i - 1)!`, the value the derivation produces.
    #[default]
    ProofConsistent,
    /// `∏ (r + k_i - i)!`, off by one in every factor; kept for comparison.
    Displayed,
}

impl DenominatorVariant {
    pub fn name(self) -> &'static str {
        match self {
            DenominatorVariant::ProofConsistent => "proof",
            DenominatorVariant::Displayed => "displayed",
        }
    }
}

impl FromStr for DenominatorVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proof" | "proof-consistent" => Ok(DenominatorVariant::ProofConsistent),
            "displayed" => Ok(DenominatorVariant::Displayed),
            other => Err(Error::InvalidParameters(format!(
                "unknown denominator variant {other:?} (expected \"proof\" or \"displayed\")"
            ))),
        }
    }
}

/// The four routes to `π_* ch(det Q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Closed,
    Schur,
    ConstantTerm,
    FlagOracle,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Closed, Method::Schur, Method::ConstantTerm, Method::FlagOracle];

    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Schur => "schur",
            Method::ConstantTerm => "constant-term",
            Method::FlagOracle => "flag-oracle",
        }
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                Error::InvalidParameters(format!(
                    "unknown method {s:?} (expected closed, schur, constant-term or flag-oracle)"
                ))
            })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Graded components of `π_* ch(det Q)` in `A*(X) ⊗ Q`.
///
/// Component `m` is homogeneous of degree `m` and equals
/// `π_* θ^{d(r-d)+m} / (d(r-d)+m)!`.
#[derive(Clone, Debug, PartialEq)]
pub struct PushforwardSeries {
    pub method: Method,
    pub rank: u32,
    pub d: usize,
    pub components: Vec<GradedElement>,
}

impl PushforwardSeries {
    fn from_total(method: Method, bundle: &BundleModel, d: usize, total: &GradedElement) -> Self {
        PushforwardSeries {
            method,
            rank: bundle.rank(),
            d,
            components: total.components(),
        }
    }

    /// Relative dimension `d(r-d)` of the Grassmann bundle.
    pub fn relative_dim(&self) -> u32 {
        self.d as u32 * (self.rank - self.d as u32)
    }

    /// `π_* θ^{d(r-d)+m}`.
    pub fn theta_power(&self, m: usize) -> GradedElement {
        let n = self.relative_dim() as u64 + m as u64;
        let scale = Rational::from_integer(BigInt::from(factorial(n)));
        self.components[m].scale(&scale)
    }

    pub fn total(&self) -> GradedElement {
        let mut it = self.components.iter();
        let first = it.next().expect("at least one component").clone();
        it.fold(first, |acc, c| acc.add(c))
    }

    /// Components agree with `other`'s exactly.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.components == other.components
    }
}

fn check_params(bundle: &BundleModel, d: usize) -> Result<()> {
    let r = bundle.rank() as usize;
    if d == 0 || d > r {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= d <= r, got d = {d}, r = {r}"
        )));
    }
    Ok(())
}

/// Every `k ∈ Z_{≥0}^d` with `|k| = m`.
pub fn compositions(m: u32, d: usize) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=remaining).rev() {
            prefix.push(first);
            rec(remaining - first, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, d, &mut Vec::new(), &mut out);
    out
}

/// Rational weight `∏_{i<j}(k_i - k_j - i + j) / ∏ D_i(k)` of `∏ s_{k_i}(E)` in the closed formula.
pub fn closed_term_coefficient(k: &[u32], r: u32, variant: DenominatorVariant) -> Rational {
    let shifted: Vec<i64> = k.iter().enumerate().map(|(i, &ki)| ki as i64 - i as i64).collect();
    let offset = match variant {
        DenominatorVariant::ProofConsistent => r as i64 - 1,
        DenominatorVariant::Displayed => r as i64,
    };
    let mut value = Rational::from_integer(vandermonde_of_ints(&shifted));
    for x in &shifted {
        value *= falling_factorial_inverse(offset + x);
    }
    value
}

/// Closed formula: `Σ_k ∏_{i<j}(k_i - k_j - i + j) / ∏(r + k_i - i - 1)! ∏ s_{k_i}(E)`.
///
/// Terms with `|k| > n` only reach degrees above the truncation, so the sum
/// runs over `|k| <= n`.
pub fn ch_pushforward_closed(
    bundle: &BundleModel,
    d: usize,
    variant: DenominatorVariant,
) -> Result<PushforwardSeries> {
    check_params(bundle, d)?;
    let n = bundle.n();
    let base = bundle.base();
    let mut components = Vec::with_capacity(n as usize + 1);
    for m in 0..=n {
        let mut acc = GradedElement::zero(base);
        for k in compositions(m, d) {
            let weight = closed_term_coefficient(&k, bundle.rank(), variant);
            if weight.is_zero() {
                continue;
            }
            let product = k
                .iter()
                .fold(GradedElement::one(base), |p, &ki| p.mul(&bundle.segre(ki as i64)));
            debug_assert!(product.is_homogeneous_of_degree(m));
            acc = acc.add(&product.scale(&weight));
        }
        components.push(acc);
    }
    Ok(PushforwardSeries {
        method: Method::Closed,
        rank: bundle.rank(),
        d,
        components,
    })
}

/// Schur form: `Σ_λ f^{λ+ε} / |λ+ε|! Δ_λ(s(E))` with `ε = (r-d)^d`.
pub fn ch_pushforward_schur(bundle: &BundleModel, d: usize) -> Result<PushforwardSeries> {
    check_params(bundle, d)?;
    let n = bundle.n();
    let base = bundle.base();
    let width = bundle.rank() - d as u32;
    let mut components = vec![GradedElement::zero(base); n as usize + 1];
    for lambda in partitions_up_to(d, n) {
        let shape = lambda.plus_rectangle(width);
        let weight = Rational::new(
            BigInt::from(syt_count(&shape)),
            BigInt::from(factorial(shape.weight() as u64)),
        );
        let delta = schur_delta(&lambda, bundle, d)?;
        let m = lambda.weight() as usize;
        components[m] = components[m].add(&delta.scale(&weight));
    }
    Ok(PushforwardSeries {
        method: Method::Schur,
        rank: bundle.rank(),
        d,
        components,
    })
}

/// Constant-term form: `Φ(∏ t_i^{r-d-(d-1-i)} ∏ s(E, t_i))`, which is
/// `const_t(P(t))` with the exponential absorbed into `Φ`.
pub fn ch_pushforward_constterm(bundle: &BundleModel, d: usize) -> Result<PushforwardSeries> {
    check_params(bundle, d)?;
    let r = bundle.rank() as i32;
    let shift: Vec<i32> = (0..d).map(|i| r - d as i32 - (d as i32 - 1 - i as i32)).collect();
    let f: LaurentPoly<GradedElement> = segre_series_product(bundle, d).shift(&shift);
    let total = phi(&f);
    Ok(PushforwardSeries::from_total(Method::ConstantTerm, bundle, d, &total))
}

/// Flag-bundle oracle: component `m` is `p_*(∏ ξ_i^{d-1-i} θ^N) / N!` with `N = d(r-d) + m`.
pub fn ch_pushforward_oracle(bundle: &BundleModel, d: usize) -> Result<PushforwardSeries> {
    check_params(bundle, d)?;
    let ring = FlagRing::new(bundle, d)?;
    let rel = d as u32 * (bundle.rank() - d as u32);
    let pushes = ring.theta_power_pushforwards(rel + bundle.n());
    let components = (0..=bundle.n())
        .map(|m| {
            let power = rel + m;
            let inv = falling_factorial_inverse(power as i64);
            pushes[power as usize].scale(&inv)
        })
        .collect();
    Ok(PushforwardSeries {
        method: Method::FlagOracle,
        rank: bundle.rank(),
        d,
        components,
    })
}

pub fn ch_pushforward(
    bundle: &BundleModel,
    d: usize,
    method: Method,
    variant: DenominatorVariant,
) -> Result<PushforwardSeries> {
    match method {
        Method::Closed => ch_pushforward_closed(bundle, d, variant),
        Method::Schur => ch_pushforward_schur(bundle, d),
        Method::ConstantTerm => ch_pushforward_constterm(bundle, d),
        Method::FlagOracle => ch_pushforward_oracle(bundle, d),
    }
}
