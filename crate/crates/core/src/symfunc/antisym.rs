use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::CheckReport;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ring::{factorial, int, Coeff, Rational};

/// Default bound on numerators and denominators of sampled rationals.
pub const DEFAULT_SAMPLE_HEIGHT: i64 = 20;

/// Largest `r` accepted by [`gen_cauchy_check`]; the anti-symmetrizer sums `r!` terms.
pub const MAX_CAUCHY_RANK: usize = 6;

/// Sign of a permutation given in one-line notation.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// All permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    (0..n)
        .permutations(n)
        .map(|p| {
            let s = permutation_sign(&p);
            (p, s)
        })
        .collect()
}

/// `Σ_σ sgn(σ) σ(f)` over permutations of the variables listed in `block`.
pub fn antisymmetrize<C: Coeff>(f: &LaurentPoly<C>, block: &[usize]) -> Result<LaurentPoly<C>> {
    let n = f.nvars();
    if block.iter().any(|&b| b >= n) || block.iter().unique().count() != block.len() {
        return Err(Error::InvalidParameters(format!(
            "block {block:?} is not a set of variable indices below {n}"
        )));
    }
    let mut acc = f.zero_like();
    for (perm, sign) in signed_permutations(block.len()) {
        let mut sigma: Vec<usize> = (0..n).collect();
        for (k, &p) in perm.iter().enumerate() {
            sigma[block[k]] = block[p];
        }
        let term = f.permute(&sigma);
        acc = if sign > 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}

/// Which statement of the generalized Cauchy determinant identity to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CauchyForm {
    /// The full anti-symmetrizer `𝒜 = Σ_{σ ∈ S_r} sgn(σ) σ` on the left-hand side.
    Literal,
    /// `𝒜 / (d! (r-d)!)`, i.e. the signed sum over `(d, r-d)`-shuffles.
    ShuffleNormalized,
}

fn vandermonde_at(x: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            acc *= &x[i] - &x[j];
        }
    }
    acc
}

fn sample_rational(rng: &mut ChaCha8Rng, height: i64) -> Rational {
    let num = rng.random_range(-height..=height);
    let den = rng.random_range(1..=height);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A nondegenerate sample: distinct `ξ`, nonzero `t`, and `1 - ξ_i t_j != 0`.
fn sample_point(rng: &mut ChaCha8Rng, r: usize, d: usize, height: i64) -> (Vec<Rational>, Vec<Rational>) {
    loop {
        let xi: Vec<Rational> = (0..r).map(|_| sample_rational(rng, height)).collect();
        let t: Vec<Rational> = (0..d).map(|_| sample_rational(rng, height)).collect();
        let distinct = xi.iter().all_unique();
        let t_ok = t.iter().all(|x| !x.is_zero());
        let poles_ok = xi
            .iter()
            .all(|x| t.iter().all(|y| !(Rational::one() - x * y).is_zero()));
        if distinct && t_ok && poles_ok {
            return (xi, t);
        }
    }
}

/// Both sides of both forms of the identity at one point, as `(lhs, rhs)` pairs.
fn evaluate_both_forms(
    xi: &[Rational],
    t: &[Rational],
    d: usize,
    perms: &[(Vec<usize>, i32)],
) -> [(Rational, Rational); 2] {
    let r = xi.len();
    let tau: Vec<Rational> = t.iter().map(|x| x.recip()).collect();
    // g(x) = Δ(x_0..x_{d-1}) Δ(x_d..x_{r-1}) / ∏_{i,j<d} (τ_j - x_i)
    let g_tau = |x: &[Rational]| {
        let mut den = Rational::one();
        for xi in &x[..d] {
            for tj in &tau {
                den *= tj - xi;
            }
        }
        vandermonde_at(&x[..d]) * vandermonde_at(&x[d..]) / den
    };
    let g_t = |x: &[Rational]| {
        let mut den = Rational::one();
        for xi in &x[..d] {
            for tj in t {
                den *= Rational::one() - xi * tj;
            }
        }
        vandermonde_at(&x[..d]) * vandermonde_at(&x[d..]) / den
    };
    let mut lhs_tau = int(0);
    let mut lhs_t = int(0);
    let mut permuted = xi.to_vec();
    for (perm, sign) in perms {
        for (k, &p) in perm.iter().enumerate() {
            permuted[k] = xi[p].clone();
        }
        let (a, b) = (g_tau(&permuted), g_t(&permuted));
        if *sign > 0 {
            lhs_tau += a;
            lhs_t += b;
        } else {
            lhs_tau -= a;
            lhs_t -= b;
        }
    }
    let full = vandermonde_at(xi);
    let mut den_tau = Rational::one();
    let mut den_t = Rational::one();
    for x in xi {
        for (tj, tauj) in t.iter().zip(&tau) {
            den_tau *= tauj - x;
            den_t *= Rational::one() - x * tj;
        }
    }
    let t_power: Rational = t.iter().map(|x| num_traits::pow(x.clone(), r - d)).product();
    [
        (lhs_tau, &full / den_tau),
        (lhs_t, full * t_power / den_t),
    ]
}

/// Verifies the generalized Cauchy determinant identity
/// `𝒜(Δ(ξ_0..ξ_{d-1}) Δ(ξ_d..ξ_{r-1}) / ∏_{i,j<d}(τ_j - ξ_i)) = Δ(ξ) / ∏_{i<r, j<d}(τ_j - ξ_i)`
/// and its `τ_j = 1/t_j` form at `trials` random rational points.
///
/// Trial `k` draws from ChaCha stream `k` of `seed`, so the outcome does not
/// depend on scheduling.
pub fn gen_cauchy_check(
    r: usize,
    d: usize,
    trials: usize,
    seed: u64,
    form: CauchyForm,
    height: i64,
) -> Result<CheckReport> {
    if d == 0 || d > r || r > MAX_CAUCHY_RANK {
        return Err(Error::InvalidParameters(format!(
            "generalized Cauchy check needs 1 <= d <= r <= {MAX_CAUCHY_RANK}, got r={r}, d={d}"
        )));
    }
    if height < 1 {
        return Err(Error::InvalidParameters("sample height must be positive".into()));
    }
    let perms = signed_permutations(r);
    let normalizer = Rational::from_integer(BigInt::from(factorial(d as u64) * factorial((r - d) as u64)));
    let outcomes: Vec<Option<String>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            let (xi, t) = sample_point(&mut rng, r, d, height);
            let sides = evaluate_both_forms(&xi, &t, d, &perms);
            for (which, (lhs, rhs)) in sides.into_iter().enumerate() {
                let lhs = match form {
                    CauchyForm::Literal => lhs,
                    CauchyForm::ShuffleNormalized => lhs / &normalizer,
                };
                if lhs != rhs {
                    let ratio = if rhs.is_zero() { "undefined".to_string() } else { (&lhs / &rhs).to_string() };
                    return Some(format!(
                        "trial {trial} ({} form): lhs {lhs} != rhs {rhs}, lhs/rhs = {ratio}",
                        if which == 0 { "τ" } else { "t = 1/τ" }
                    ));
                }
            }
            None
        })
        .collect();
    let failure = outcomes.into_iter().flatten().next();
    Ok(CheckReport::new(
        format!("generalized Cauchy r={r} d={d} {form:?}"),
        trials * 2,
        failure,
    ))
}
