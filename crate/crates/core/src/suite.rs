//! Standard test models and the cross-method agreement checks run by the
//! verification grid.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chow::{BaseModel, BundleModel, FlagRing};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::pushforward::{
    ch_pushforward, factorial_det_check, monomial_pushforward_ct, monomial_pushforward_det, phi,
    phi_eval_monomial, DenominatorVariant, Method,
};
use crate::ring::{int, Coeff, Rational};
use crate::symfunc::{
    cauchy_expand_check, gen_cauchy_check, partitions_up_to, permutation_sign, schur_in_t,
    signed_permutations, CauchyForm, CheckReport, DEFAULT_SAMPLE_HEIGHT,
};

pub const DEFAULT_SEED: u64 = 20240917;
pub const DEFAULT_FORMAL_N: u32 = 3;
pub const MAX_GRID_RANK: u32 = 6;

/// Chern-root prefixes of the fixed split bundles; rank `r` uses the first `r` roots.
const SPLIT_P1: [i64; 6] = [1, 1, 1, 1, 1, 1];
const SPLIT_P2: [i64; 6] = [2, 0, 1, 0, 1, 0];
const SPLIT_P3: [i64; 6] = [1, 2, -1, 3, 0, 1];

/// A named bundle used by the grid.
#[derive(Clone, Debug)]
pub struct TestModel {
    pub key: String,
    pub bundle: BundleModel,
}

/// The models of the agreement grid at rank `r`: the formal Segre model and
/// three split bundles over `P^1`, `P^2`, `P^3`.
pub fn grid_models(r: u32) -> Result<Vec<TestModel>> {
    let formal = BaseModel::formal(DEFAULT_FORMAL_N, 1);
    let mut out = vec![TestModel {
        key: format!("formal(n={DEFAULT_FORMAL_N})"),
        bundle: BundleModel::formal(&formal, r, 0)?,
    }];
    for (n, roots) in [(1, &SPLIT_P1), (2, &SPLIT_P2), (3, &SPLIT_P3)] {
        let base = BaseModel::projective(n);
        let prefix = &roots[..r as usize];
        out.push(TestModel {
            key: format!("P^{n} roots {prefix:?}"),
            bundle: BundleModel::from_chern_roots(&base, prefix)?,
        });
    }
    Ok(out)
}

/// Every `(r, d)` with `1 <= d <= r <= max_rank`.
pub fn grid_pairs(max_rank: u32) -> Vec<(u32, usize)> {
    (1..=max_rank)
        .flat_map(|r| (1..=r as usize).map(move |d| (r, d)))
        .collect()
}

/// The four methods give identical components.
pub fn four_way_agreement(model: &TestModel, d: usize) -> Result<CheckReport> {
    let name = format!("four-way r={} d={d} {}", model.bundle.rank(), model.key);
    let series = Method::ALL
        .iter()
        .map(|&m| ch_pushforward(&model.bundle, d, m, DenominatorVariant::ProofConsistent))
        .collect::<Result<Vec<_>>>()?;
    let reference = &series[0];
    let failure = series[1..].iter().find(|s| !s.agrees_with(reference)).map(|s| {
        let m = s
            .components
            .iter()
            .zip(&reference.components)
            .position(|(a, b)| a != b)
            .unwrap_or(0);
        format!(
            "{} disagrees with {} at degree {m}: {} vs {}",
            s.method, reference.method, s.components[m], reference.components[m]
        )
    });
    Ok(CheckReport::new(name, series.len(), failure))
}

/// Constant-term, determinantal, and flag-ring push-forwards of random
/// monomials `ξ^p` with entries up to `r - 1 + n`.
pub fn monomial_triple(model: &TestModel, d: usize, trials: usize, seed: u64) -> Result<CheckReport> {
    let bundle = &model.bundle;
    let r = bundle.rank();
    let name = format!("monomial triple r={r} d={d} {}", model.key);
    let ring = FlagRing::new(bundle, d)?;
    let max = r - 1 + bundle.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((r as u64) << 8 | d as u64));
    for trial in 0..trials {
        let p: Vec<u32> = (0..d).map(|_| rng.random_range(0..=max)).collect();
        let ct = monomial_pushforward_ct(&p, bundle)?;
        let det = monomial_pushforward_det(&p, bundle)?;
        let oracle = ring.coeff_xi(&ring.monomial(&p));
        if ct != det || ct != oracle {
            let why = format!("trial {trial}, p = {p:?}: ct {ct}, det {det}, oracle {oracle}");
            return Ok(CheckReport::new(name, trial + 1, Some(why)));
        }
    }
    Ok(CheckReport::new(name, trials, None))
}

/// `π_* θ^N` vanishes for `N < d(r-d)` and is homogeneous of degree
/// `N - d(r-d)` up to `N = d(r-d) + n`.
pub fn grading_and_vanishing(model: &TestModel, d: usize) -> Result<CheckReport> {
    let bundle = &model.bundle;
    let r = bundle.rank();
    let name = format!("grading r={r} d={d} {}", model.key);
    let rel = d as u32 * (r - d as u32);
    let pushes = FlagRing::new(bundle, d)?.theta_power_pushforwards(rel + bundle.n());
    let failure = pushes.iter().enumerate().find_map(|(power, g)| {
        let power = power as u32;
        if power < rel {
            (!g.is_zero()).then(|| format!("π_* θ^{power} = {g}, expected 0"))
        } else {
            (!g.is_homogeneous_of_degree(power - rel))
                .then(|| format!("π_* θ^{power} = {g} is not homogeneous of degree {}", power - rel))
        }
    });
    Ok(CheckReport::new(name, pushes.len(), failure))
}

/// `d = 1`: component `m` equals `s_m(E) / (r - 1 + m)!`.
pub fn projective_reduction(model: &TestModel) -> Result<CheckReport> {
    let bundle = &model.bundle;
    let r = bundle.rank();
    let name = format!("d=1 reduction r={r} {}", model.key);
    let mut failure = None;
    for method in Method::ALL {
        let s = ch_pushforward(bundle, 1, method, DenominatorVariant::ProofConsistent)?;
        for (m, got) in s.components.iter().enumerate() {
            let expected = bundle
                .segre(m as i64)
                .scale(&crate::ring::falling_factorial_inverse(r as i64 - 1 + m as i64));
            if *got != expected && failure.is_none() {
                failure = Some(format!("{method} degree {m}: {got} vs {expected}"));
            }
        }
    }
    Ok(CheckReport::new(name, Method::ALL.len(), failure))
}

/// Degree over a point against the tableau count of the rectangle and the flag-ring oracle.
pub fn point_degree_check(r: u32, d: usize) -> Result<CheckReport> {
    let e = BundleModel::trivial(&BaseModel::point(), r)?;
    let closed = crate::degree::plucker_degree(&e, d, DenominatorVariant::ProofConsistent)?.degree;
    let hook = Rational::from_integer(crate::degree::fiber_degree_hook(r, d as u32)?.into());
    let oracle = crate::degree::oracle_degree(&e, d)?;
    let failure = (closed != hook || oracle != hook)
        .then(|| format!("closed {closed}, oracle {oracle}, tableaux {hook}"));
    Ok(CheckReport::new(format!("point degree r={r} d={d}"), 3, failure))
}

/// The proof-consistent denominator gives `deg G(2,4) = 2`; the displayed one a non-integer.
pub fn denominator_variant_check() -> Result<CheckReport> {
    let e = BundleModel::trivial(&BaseModel::point(), 4)?;
    let proof = crate::degree::plucker_degree(&e, 2, DenominatorVariant::ProofConsistent)?.degree;
    let shown = crate::degree::plucker_degree(&e, 2, DenominatorVariant::Displayed)?.degree;
    let failure = (proof != int(2) || shown.is_integer())
        .then(|| format!("proof-consistent {proof}, displayed {shown}"));
    Ok(CheckReport::new("denominator variants on G(2,4)", 2, failure))
}

/// Runs one kind of check over the whole grid, in parallel, ordered by case key.
pub fn run_grid<F>(max_rank: u32, check: F) -> Result<Vec<CheckReport>>
where
    F: Fn(&TestModel, usize) -> Result<CheckReport> + Sync,
{
    let mut cases = Vec::new();
    for (r, d) in grid_pairs(max_rank) {
        for (idx, model) in grid_models(r)?.into_iter().enumerate() {
            cases.push(((r, d, idx), model));
        }
    }
    let mut results = cases
        .into_par_iter()
        .map(|(key, model)| check(&model, key.1).map(|rep| (key, rep)))
        .collect::<Result<Vec<_>>>()?;
    results.sort_by_key(|a| a.0);
    Ok(results.into_iter().map(|(_, rep)| rep).collect())
}

fn random_poly(rng: &mut ChaCha8Rng, d: usize, max_exp: i32, min_exp: i32, terms: usize) -> LaurentPoly<Rational> {
    let proto = int(0);
    LaurentPoly::from_terms(
        d,
        &proto,
        (0..terms).map(|_| {
            let e: Vec<i32> = (0..d).map(|_| rng.random_range(min_exp..=max_exp)).collect();
            let c = int(rng.random_range(-5..=5));
            (e, c)
        }),
    )
}

/// `Φ` against its closed form on every `k` with entries `0..=8`, `d <= 4`.
pub fn phi_closed_form_check(max_entry: i32, max_d: usize) -> CheckReport {
    let mut cases = 0;
    for d in 1..=max_d {
        let mut k = vec![0i32; d];
        loop {
            let f = LaurentPoly::monomial(k.clone(), int(1));
            let ki: Vec<i64> = k.iter().map(|&x| x as i64).collect();
            cases += 1;
            if phi(&f) != phi_eval_monomial(&ki) {
                return CheckReport::new("phi closed form", cases, Some(format!("k = {k:?}")));
            }
            let Some(pos) = k.iter().rposition(|&x| x < max_entry) else {
                break;
            };
            k[pos] += 1;
            for x in &mut k[pos + 1..] {
                *x = 0;
            }
        }
    }
    CheckReport::new("phi closed form", cases, None)
}

/// `Φ(σ f) = sgn(σ) Φ(f)` on random Laurent polynomials.
pub fn phi_antisymmetry_check(trials: usize, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let d = rng.random_range(1..=4usize);
        let f = random_poly(&mut rng, d, 6, -2, 4);
        let mut sigma: Vec<usize> = (0..d).collect();
        sigma.shuffle(&mut rng);
        let sign = permutation_sign(&sigma);
        let lhs = phi(&f.permute(&sigma));
        let rhs = phi(&f).scale(&int(sign as i64));
        if lhs != rhs {
            return CheckReport::new(
                "phi antisymmetry",
                trial + 1,
                Some(format!("σ = {sigma:?}, f = {f}: {lhs} vs {rhs}")),
            );
        }
    }
    CheckReport::new("phi antisymmetry", trials, None)
}

fn symmetrize(f: &LaurentPoly<Rational>) -> LaurentPoly<Rational> {
    signed_permutations(f.nvars())
        .iter()
        .fold(LaurentPoly::zero(f.nvars(), &int(0)), |acc, (p, _)| acc.add(&f.permute(p)))
}

/// `Φ(∏ t_i^{-i} f s_λ(t)) = Φ(∏ t_i^{λ_i - i} f)` for symmetric `f`.
pub fn schur_shift_check(trials: usize, seed: u64) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let d = rng.random_range(1..=3usize);
        let f = symmetrize(&random_poly(&mut rng, d, 4, 0, 3).truncate_total_degree(4));
        let shapes: Vec<_> = partitions_up_to(d, 3).collect();
        let lambda = shapes[rng.random_range(0..shapes.len())].clone();
        let stair: Vec<i32> = (0..d).map(|i| -(i as i32)).collect();
        let lhs = phi(&f.mul(&schur_in_t(&lambda, d)?).shift(&stair));
        let shifted: Vec<i32> = (0..d).map(|i| lambda.part(i) as i32 - i as i32).collect();
        let rhs = phi(&f.shift(&shifted));
        if lhs != rhs {
            return Ok(CheckReport::new(
                "schur shift",
                trial + 1,
                Some(format!("λ = {lambda}, f = {f}: {lhs} vs {rhs}")),
            ));
        }
    }
    Ok(CheckReport::new("schur shift", trials, None))
}

/// The factorial determinant identity on random integer points.
pub fn factorial_det_suite(trials: usize, seed: u64, max_d: usize, max_entry: i64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let d = rng.random_range(1..=max_d);
        let x: Vec<i64> = (0..d).map(|_| rng.random_range(0..=max_entry)).collect();
        if !factorial_det_check(&x) {
            return CheckReport::new("factorial determinant", trial + 1, Some(format!("x = {x:?}")));
        }
    }
    CheckReport::new("factorial determinant", trials, None)
}

/// The Cauchy expansion on the formal model for `d <= max_d`, truncated at weight `w`.
pub fn cauchy_expansion_suite(max_d: usize, w: u32) -> Result<Vec<CheckReport>> {
    let base: Arc<BaseModel> = BaseModel::formal(DEFAULT_FORMAL_N, 1);
    (1..=max_d)
        .map(|d| {
            let e = BundleModel::formal(&base, (d as u32).max(DEFAULT_FORMAL_N), 0)?;
            cauchy_expand_check(&e, d, w)
        })
        .collect()
}

/// The generalized Cauchy determinant at the listed `(r, d)`.
pub fn gen_cauchy_suite(pairs: &[(usize, usize)], trials: usize, seed: u64, form: CauchyForm) -> Result<Vec<CheckReport>> {
    pairs
        .iter()
        .map(|&(r, d)| gen_cauchy_check(r, d, trials, seed, form, DEFAULT_SAMPLE_HEIGHT))
        .collect()
}

pub const GEN_CAUCHY_PAIRS: [(usize, usize); 4] = [(3, 1), (4, 2), (5, 2), (5, 3)];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        assert_eq!(grid_pairs(3).len(), 6);
        let models = grid_models(2).unwrap();
        assert_eq!(models.len(), 4);
        assert_eq!(models[3].bundle.chern_roots(), Some(&[1, 2][..]));
    }

    #[test]
    fn small_grid_passes() {
        for reps in [
            run_grid(3, four_way_agreement).unwrap(),
            run_grid(3, |m, d| monomial_triple(m, d, 10, DEFAULT_SEED)).unwrap(),
            run_grid(3, grading_and_vanishing).unwrap(),
        ] {
            for rep in reps {
                assert!(rep.passed(), "{rep}");
            }
        }
    }

    #[test]
    fn phi_suites_pass() {
        assert!(phi_closed_form_check(4, 3).passed());
        assert!(phi_antisymmetry_check(30, 1).passed());
        let rep = schur_shift_check(20, 2).unwrap();
        assert!(rep.passed(), "{rep}");
        assert!(factorial_det_suite(20, 3, 4, 10).passed());
    }
}
