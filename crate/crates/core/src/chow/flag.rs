//! The Chow ring of the partial flag bundle `Fl_d(E) -> X` as a free
//! `A*(X)`-module, with push-forward by coefficient extraction.
//!
//! The ring is a tower `A_0 = A*(X)`, `A_{l+1} = A_l[ξ_l] / P_{E_l}(ξ_l)`,
//! where `E_0 = E` and `c(E_l, t) = c(E_{l+1}, t)(1 + ξ_l t)`. Normal forms
//! have `deg_{ξ_l} <= r - l - 1`. Multiplication in `A_{l+1}` splits both
//! factors by their `ξ_l`-degree, multiplies coefficients in `A_l`
//! recursively, then lowers `ξ_l`-degrees with the relation for `E_l`, whose
//! coefficients only involve `ξ_0..ξ_{l-1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::base::GradedElement;
use super::bundle::BundleModel;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::ring::{Coeff, Rational};

type Terms = BTreeMap<Vec<u32>, GradedElement>;

struct Tables {
    bundle: BundleModel,
    r: usize,
    d: usize,
    /// `chern[l][i] = c_i(E_l)` in normal form, `0 <= i <= r - l`
    chern: Vec<Vec<Terms>>,
}

/// The flag-bundle Chow ring for a bundle `E` and flag length `d`.
#[derive(Clone)]
pub struct FlagRing {
    tables: Arc<Tables>,
}

/// Normal-form element of the flag-bundle Chow ring.
#[derive(Clone)]
pub struct FlagRingElement {
    tables: Arc<Tables>,
    terms: Terms,
}

fn insert(terms: &mut Terms, key: Vec<u32>, value: GradedElement) {
    if value.is_zero() {
        return;
    }
    match terms.get_mut(&key) {
        Some(existing) => {
            let s = existing.add(&value);
            if s.is_zero() {
                terms.remove(&key);
            } else {
                *existing = s;
            }
        }
        None => {
            terms.insert(key, value);
        }
    }
}

fn add_into(target: &mut Terms, source: &Terms, negate: bool) {
    for (k, v) in source {
        insert(target, k.clone(), if negate { v.neg() } else { v.clone() });
    }
}

impl Tables {
    /// Product in `A_level` of elements using only `ξ_0..ξ_{level-1}`.
    fn mul_level(&self, a: &Terms, b: &Terms, level: usize) -> Terms {
        let mut out = Terms::new();
        if a.is_empty() || b.is_empty() {
            return out;
        }
        if level == 0 {
            let key = vec![0; self.d];
            if let (Some(x), Some(y)) = (a.get(&key), b.get(&key)) {
                insert(&mut out, key, x.mul(y));
            }
            return out;
        }
        let pos = level - 1;
        let split = |t: &Terms| {
            let mut parts: BTreeMap<u32, Terms> = BTreeMap::new();
            for (k, v) in t {
                let mut lower = k.clone();
                let e = std::mem::take(&mut lower[pos]);
                parts.entry(e).or_default().insert(lower, v.clone());
            }
            parts
        };
        let (pa, pb) = (split(a), split(b));
        let mut poly: BTreeMap<u32, Terms> = BTreeMap::new();
        for (e, ae) in &pa {
            for (f, bf) in &pb {
                let prod = self.mul_level(ae, bf, pos);
                add_into(poly.entry(e + f).or_default(), &prod, false);
            }
        }
        // ξ_pos^m = Σ_{i=1}^{m} (-1)^{i+1} c_i(E_pos) ξ_pos^{m-i}
        let m = (self.r - pos) as u32;
        while let Some((&top, _)) = poly.iter().next_back() {
            if top < m {
                break;
            }
            let q = poly.remove(&top).expect("present");
            if q.is_empty() {
                continue;
            }
            for i in 1..=m as usize {
                let c = &self.chern[pos][i];
                if c.is_empty() {
                    continue;
                }
                let prod = self.mul_level(&q, c, pos);
                add_into(poly.entry(top - i as u32).or_default(), &prod, i % 2 == 0);
            }
        }
        for (e, part) in poly {
            for (mut k, v) in part {
                k[pos] = e;
                insert(&mut out, k, v);
            }
        }
        out
    }

    fn constant(&self, g: GradedElement) -> Terms {
        let mut t = Terms::new();
        insert(&mut t, vec![0; self.d], g);
        t
    }

    fn xi(&self, l: usize) -> Terms {
        let mut key = vec![0; self.d];
        key[l] = 1;
        let mut t = Terms::new();
        insert(&mut t, key, GradedElement::one(self.bundle.base()));
        t
    }
}

impl FlagRing {
    pub fn new(bundle: &BundleModel, d: usize) -> Result<Self> {
        let r = bundle.rank() as usize;
        if d == 0 || d > r {
            return Err(Error::InvalidParameters(format!(
                "flag length d = {d} must satisfy 1 <= d <= r = {r}"
            )));
        }
        let mut tables = Tables {
            bundle: bundle.clone(),
            r,
            d,
            chern: Vec::with_capacity(d),
        };
        let level0: Vec<Terms> = (0..=r)
            .map(|i| tables.constant(bundle.chern(i as i64)))
            .collect();
        tables.chern.push(level0);
        // c_i(E_l) = c_i(E_{l+1}) + ξ_l c_{i-1}(E_{l+1})
        for l in 0..d - 1 {
            let xi = tables.xi(l);
            let mut next: Vec<Terms> = Vec::with_capacity(r - l);
            for i in 0..r - l {
                let mut c = tables.chern[l][i].clone();
                if i > 0 {
                    let shifted = tables.mul_level(&xi, &next[i - 1], l + 1);
                    add_into(&mut c, &shifted, true);
                }
                next.push(c);
            }
            debug_assert!({
                let top = tables.mul_level(&xi, &next[r - l - 1], l + 1);
                let mut rest = tables.chern[l][r - l].clone();
                add_into(&mut rest, &top, true);
                rest.is_empty()
            });
            tables.chern.push(next);
        }
        Ok(FlagRing {
            tables: Arc::new(tables),
        })
    }

    pub fn bundle(&self) -> &BundleModel {
        &self.tables.bundle
    }

    pub fn d(&self) -> usize {
        self.tables.d
    }

    pub fn rank(&self) -> usize {
        self.tables.r
    }

    fn wrap(&self, terms: Terms) -> FlagRingElement {
        FlagRingElement {
            tables: Arc::clone(&self.tables),
            terms,
        }
    }

    pub fn zero(&self) -> FlagRingElement {
        self.wrap(Terms::new())
    }

    pub fn one(&self) -> FlagRingElement {
        self.constant(GradedElement::one(self.bundle().base()))
    }

    /// Pull-back of a base class.
    pub fn constant(&self, g: GradedElement) -> FlagRingElement {
        self.wrap(self.tables.constant(g))
    }

    /// The class `ξ_l = c_1(O_{P(E_l)}(1))`.
    pub fn xi(&self, l: usize) -> FlagRingElement {
        assert!(l < self.d(), "ξ index out of range");
        self.wrap(self.tables.xi(l))
    }

    /// `q*θ = ξ_0 + ... + ξ_{d-1}`.
    pub fn theta(&self) -> FlagRingElement {
        (0..self.d()).fold(self.zero(), |acc, l| acc.add(&self.xi(l)))
    }

    /// Chern classes `c_0(E_l)..c_{r-l}(E_l)` in normal form.
    pub fn subbundle_chern_classes(&self, l: usize) -> Vec<FlagRingElement> {
        self.tables.chern[l].iter().map(|t| self.wrap(t.clone())).collect()
    }

    /// Normal form of `ξ_0^{e_0} ... ξ_{d-1}^{e_{d-1}}`.
    pub fn monomial(&self, exps: &[u32]) -> FlagRingElement {
        assert_eq!(exps.len(), self.d());
        exps.iter()
            .enumerate()
            .fold(self.one(), |acc, (l, &e)| acc.mul(&self.xi(l).pow(e)))
    }

    /// Reduce an arbitrary polynomial `Σ g_e ξ^e` to normal form.
    pub fn reduce<'a, I>(&self, terms: I) -> FlagRingElement
    where
        I: IntoIterator<Item = (&'a Vec<u32>, &'a GradedElement)>,
    {
        let mut acc = self.zero();
        for (e, g) in terms {
            acc = acc.add(&self.monomial(e).scale_by(g));
        }
        acc
    }

    /// `F(ξ)` for a polynomial `F` in `d` variables with base-class coefficients.
    pub fn evaluate(&self, f: &LaurentPoly<GradedElement>) -> Result<FlagRingElement> {
        if f.nvars() != self.d() || !f.is_polynomial() {
            return Err(Error::InvalidParameters(
                "expected a polynomial in ξ_0..ξ_{d-1}".into(),
            ));
        }
        let mut acc = self.zero();
        for (e, g) in f.terms() {
            let exps: Vec<u32> = e.iter().map(|&x| x as u32).collect();
            acc = acc.add(&self.monomial(&exps).scale_by(g));
        }
        Ok(acc)
    }

    /// The exponent tuple `(r-1, r-2, ..., r-d)` of the top monomial.
    pub fn top_tuple(&self) -> Vec<u32> {
        (0..self.d()).map(|l| (self.rank() - l - 1) as u32).collect()
    }

    /// Push-forward to the base: coefficient of `ξ_0^{r-1} ... ξ_{d-1}^{r-d}`.
    pub fn coeff_xi(&self, a: &FlagRingElement) -> GradedElement {
        a.terms
            .get(&self.top_tuple())
            .cloned()
            .unwrap_or_else(|| GradedElement::zero(self.bundle().base()))
    }

    /// `π_* θ^N` for `N = 0..=max_power`, via `p_*(∏ ξ_i^{d-1-i} (Σ ξ_i)^N)`.
    pub fn theta_power_pushforwards(&self, max_power: u32) -> Vec<GradedElement> {
        let d = self.d();
        let staircase: Vec<u32> = (0..d).map(|i| (d - 1 - i) as u32).collect();
        let theta = self.theta();
        let mut current = self.monomial(&staircase);
        let mut out = Vec::with_capacity(max_power as usize + 1);
        for power in 0..=max_power {
            if power > 0 {
                current = current.mul(&theta);
            }
            out.push(self.coeff_xi(&current));
        }
        out
    }
}

/// Flag-ring push-forward `π_* θ^N` for the Grassmann bundle `G(d, E)`.
pub fn oracle_pushforward_theta_pow(bundle: &BundleModel, d: usize, power: u32) -> Result<GradedElement> {
    let ring = FlagRing::new(bundle, d)?;
    Ok(ring
        .theta_power_pushforwards(power)
        .pop()
        .expect("nonempty"))
}

impl FlagRingElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GradedElement)> {
        self.terms.iter()
    }

    pub fn d(&self) -> usize {
        self.tables.d
    }

    fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.tables, &other.tables)
    }

    /// True if every stored exponent tuple respects `0 <= i_l <= r - l - 1`.
    pub fn is_normal(&self) -> bool {
        let r = self.tables.r;
        self.terms
            .keys()
            .all(|k| k.iter().enumerate().all(|(l, &e)| (e as usize) < r - l))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !self.same_ring(other) {
            return Err(Error::ModelMismatch);
        }
        Ok(FlagRingElement {
            tables: Arc::clone(&self.tables),
            terms: self.tables.mul_level(&self.terms, &other.terms, self.tables.d),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if !self.same_ring(other) {
            return Err(Error::ModelMismatch);
        }
        let mut terms = self.terms.clone();
        add_into(&mut terms, &other.terms, false);
        Ok(FlagRingElement {
            tables: Arc::clone(&self.tables),
            terms,
        })
    }

    /// Multiply by a base class.
    pub fn scale_by(&self, g: &GradedElement) -> Self {
        let mut terms = Terms::new();
        for (k, v) in &self.terms {
            insert(&mut terms, k.clone(), v.mul(g));
        }
        FlagRingElement {
            tables: Arc::clone(&self.tables),
            terms,
        }
    }
}

impl PartialEq for FlagRingElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Coeff for FlagRingElement {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn zero_like(&self) -> Self {
        FlagRingElement {
            tables: Arc::clone(&self.tables),
            terms: Terms::new(),
        }
    }
    fn one_like(&self) -> Self {
        FlagRingElement {
            tables: Arc::clone(&self.tables),
            terms: self.tables.constant(GradedElement::one(self.tables.bundle.base())),
        }
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("flag ring elements from different rings")
    }
    fn neg(&self) -> Self {
        FlagRingElement {
            tables: Arc::clone(&self.tables),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.neg())).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("flag ring elements from different rings")
    }
    fn scale(&self, q: &Rational) -> Self {
        let mut terms = Terms::new();
        for (k, v) in &self.terms {
            insert(&mut terms, k.clone(), v.scale(q));
        }
        FlagRingElement {
            tables: Arc::clone(&self.tables),
            terms,
        }
    }
}

impl fmt::Debug for FlagRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl fmt::Display for FlagRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, v)| {
                let mono: Vec<String> = k
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(l, &e)| if e == 1 { format!("ξ{l}") } else { format!("ξ{l}^{e}") })
                    .collect();
                if mono.is_empty() {
                    format!("({v})")
                } else {
                    format!("({v})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::base::BaseModel;
    use crate::ring::int;

    #[test]
    fn trivial_rank_two_over_p1() {
        let base = BaseModel::projective(1);
        let e = BundleModel::trivial(&base, 2).unwrap();
        let ring = FlagRing::new(&e, 1).unwrap();
        assert!(ring.xi(0).mul(&ring.xi(0)).is_zero());
    }

    #[test]
    fn quadric_surface_relation() {
        let base = BaseModel::projective(1);
        let e = BundleModel::from_chern_roots(&base, &[1, 1]).unwrap();
        let ring = FlagRing::new(&e, 1).unwrap();
        let xi = ring.xi(0);
        let sq = xi.mul(&xi);
        let two_h = GradedElement::hyperplane_power(&base, 1, int(2));
        assert_eq!(sq, xi.scale_by(&two_h));
        assert_eq!(ring.coeff_xi(&sq), two_h);
        assert_eq!(oracle_pushforward_theta_pow(&e, 1, 2).unwrap(), two_h);
    }

    #[test]
    fn second_step_relation_uses_divided_chern_classes() {
        // r = 3, d = 2: ξ_1^2 = c_1(E_1) ξ_1 - c_2(E_1) with c(E_1) = c(E)/(1 + ξ_0 t)
        let base = BaseModel::formal(3, 1);
        let e = BundleModel::formal(&base, 3, 0).unwrap();
        let ring = FlagRing::new(&e, 2).unwrap();
        let (x0, x1) = (ring.xi(0), ring.xi(1));
        let c = |i: i64| ring.constant(e.chern(i));
        let c1_e1 = c(1).sub(&x0);
        let c2_e1 = c(2).sub(&x0.mul(&c1_e1));
        let expected = c1_e1.mul(&x1).sub(&c2_e1);
        assert_eq!(x1.mul(&x1), expected);
        let chern_e1 = ring.subbundle_chern_classes(1);
        assert_eq!(chern_e1[1], c1_e1);
        assert_eq!(chern_e1[2], c2_e1);
    }

    #[test]
    fn coefficient_extraction_basics() {
        let base = BaseModel::formal(2, 1);
        let e = BundleModel::formal(&base, 4, 0).unwrap();
        let ring = FlagRing::new(&e, 2).unwrap();
        let top = ring.monomial(&ring.top_tuple());
        assert_eq!(ring.coeff_xi(&top), GradedElement::one(&base));
        assert!(ring.coeff_xi(&ring.one()).is_zero());
    }

    #[test]
    fn grassmannian_g24_degree() {
        let e = BundleModel::trivial(&BaseModel::point(), 4).unwrap();
        let ring = FlagRing::new(&e, 2).unwrap();
        let pushes = ring.theta_power_pushforwards(4);
        for p in &pushes[..4] {
            assert!(p.is_zero());
        }
        assert_eq!(pushes[4].integrate().unwrap(), int(2));
    }

    #[test]
    fn mismatched_rings_rejected() {
        let base = BaseModel::point();
        let e = BundleModel::trivial(&base, 3).unwrap();
        let a = FlagRing::new(&e, 1).unwrap();
        let b = FlagRing::new(&e, 1).unwrap();
        assert_eq!(a.xi(0).try_mul(&b.xi(0)), Err(Error::ModelMismatch));
        assert!(FlagRing::new(&e, 4).is_err());
    }
}
