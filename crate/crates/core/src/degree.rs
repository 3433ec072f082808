//! Plücker degree of a Grassmann bundle `G_X(d, E)` under `det Q`.

use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::chow::{oracle_pushforward_theta_pow, BundleModel, GradedElement};
use crate::error::{Error, Result};
use crate::pushforward::{closed_term_coefficient, compositions, DenominatorVariant};
use crate::ring::{factorial, int, Coeff, Rational};
use crate::symfunc::{syt_count, Partition};

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeResult {
    pub degree: Rational,
    pub rank: u32,
    pub d: usize,
    pub n: u32,
    pub base: String,
    pub variant: DenominatorVariant,
    /// `(k, contribution)` for every `|k| = n` with a nonzero contribution.
    pub breakdown: Vec<(Vec<u32>, Rational)>,
}

impl DegreeResult {
    pub fn is_integer(&self) -> bool {
        self.degree.is_integer()
    }
}

impl fmt::Display for DegreeResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree = {}", self.degree)
    }
}

/// `(d(r-d)+n)! Σ_{|k|=n} w(k) ∫_X ∏ s_{k_i}(E)` with `w` the closed-formula weight.
///
/// Very-ampleness of `∧^d E` is not checked, and a non-integer value is
/// returned as is.
pub fn plucker_degree(bundle: &BundleModel, d: usize, variant: DenominatorVariant) -> Result<DegreeResult> {
    let base = bundle.base();
    if base.is_formal() {
        return Err(Error::DegreeNeedsConcreteBase);
    }
    let r = bundle.rank();
    if d == 0 || d > r as usize {
        return Err(Error::InvalidParameters(format!("need 1 <= d <= r, got d = {d}, r = {r}")));
    }
    let n = bundle.n();
    let top = d as u64 * (r as u64 - d as u64) + n as u64;
    let top_factorial = Rational::from_integer(BigInt::from(factorial(top)));
    let mut degree = int(0);
    let mut breakdown = Vec::new();
    for k in compositions(n, d) {
        let weight = closed_term_coefficient(&k, r, variant);
        if weight.is_zero() {
            continue;
        }
        let product = k
            .iter()
            .fold(GradedElement::one(base), |p, &ki| p.mul(&bundle.segre(ki as i64)));
        let contribution = weight * product.integrate()? * &top_factorial;
        if contribution.is_zero() {
            continue;
        }
        degree += &contribution;
        breakdown.push((k, contribution));
    }
    Ok(DegreeResult {
        degree,
        rank: r,
        d,
        n,
        base: base.describe(),
        variant,
        breakdown,
    })
}

/// Degree of the fiber `G(d, r)`: the number of standard tableaux on the `d × (r-d)` rectangle.
pub fn fiber_degree_hook(r: u32, d: u32) -> Result<BigUint> {
    if d == 0 || d > r {
        return Err(Error::InvalidParameters(format!("need 1 <= d <= r, got d = {d}, r = {r}")));
    }
    Ok(syt_count(&Partition::rectangle(d as usize, r - d)))
}

/// `∫_X π_* θ^{d(r-d)+n}` straight from the flag ring.
pub fn oracle_degree(bundle: &BundleModel, d: usize) -> Result<Rational> {
    if bundle.base().is_formal() {
        return Err(Error::DegreeNeedsConcreteBase);
    }
    let r = bundle.rank();
    if d == 0 || d > r as usize {
        return Err(Error::InvalidParameters(format!("need 1 <= d <= r, got d = {d}, r = {r}")));
    }
    let top = d as u32 * (r - d as u32) + bundle.n();
    oracle_pushforward_theta_pow(bundle, d, top)?.integrate()
}
