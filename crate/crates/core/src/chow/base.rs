use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::ring::{int, Coeff, Rational};

/// Model of the rational Chow ring `A*(X) ⊗ Q` of the base.
///
/// Every model is a graded polynomial ring truncated above degree `n`:
/// no generators for a point, the hyperplane class `h` for `P^n`, and free
/// generators `s_1..s_n` per bundle family for the formal Segre model.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseModel {
    Point,
    ProjectiveSpace(u32),
    FormalSegre { n: u32, families: u32 },
}

impl BaseModel {
    pub fn point() -> Arc<Self> {
        Arc::new(BaseModel::Point)
    }

    pub fn projective(n: u32) -> Arc<Self> {
        Arc::new(BaseModel::ProjectiveSpace(n))
    }

    pub fn formal(n: u32, families: u32) -> Arc<Self> {
        Arc::new(BaseModel::FormalSegre { n, families })
    }

    /// Dimension of `X`, equivalently the truncation degree.
    pub fn dim(&self) -> u32 {
        match *self {
            BaseModel::Point => 0,
            BaseModel::ProjectiveSpace(n) => n,
            BaseModel::FormalSegre { n, .. } => n,
        }
    }

    pub fn is_formal(&self) -> bool {
        matches!(self, BaseModel::FormalSegre { .. })
    }

    pub fn num_generators(&self) -> usize {
        match *self {
            BaseModel::Point => 0,
            BaseModel::ProjectiveSpace(_) => 1,
            BaseModel::FormalSegre { n, families } => (n * families) as usize,
        }
    }

    pub fn generator_weight(&self, index: usize) -> u32 {
        match *self {
            BaseModel::Point => unreachable!("a point has no generators"),
            BaseModel::ProjectiveSpace(_) => 1,
            BaseModel::FormalSegre { n, .. } => index as u32 % n + 1,
        }
    }

    /// Index of the formal generator `s_i` of bundle family `family`.
    pub fn segre_generator_index(&self, family: u32, i: u32) -> Option<usize> {
        match *self {
            BaseModel::FormalSegre { n, families } if family < families && (1..=n).contains(&i) => {
                Some((family * n + i - 1) as usize)
            }
            _ => None,
        }
    }

    pub fn generator_name(&self, index: usize) -> String {
        match *self {
            BaseModel::Point => unreachable!("a point has no generators"),
            BaseModel::ProjectiveSpace(_) => "h".to_string(),
            BaseModel::FormalSegre { n, families } => {
                let (f, i) = (index as u32 / n, index as u32 % n + 1);
                if families == 1 {
                    format!("s{i}")
                } else {
                    format!("s{f}_{i}")
                }
            }
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            BaseModel::Point => "point".to_string(),
            BaseModel::ProjectiveSpace(n) => format!("P^{n}"),
            BaseModel::FormalSegre { n, families } => format!("formal(n={n}, families={families})"),
        }
    }
}

/// Element of the truncated graded ring modeling `A*(X) ⊗ Q`.
///
/// Stored as a sparse polynomial in the model's generators; monomials of
/// weighted degree above `dim` are never stored.
#[derive(Clone, PartialEq)]
pub struct GradedElement {
    model: Arc<BaseModel>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl GradedElement {
    pub fn zero(model: &Arc<BaseModel>) -> Self {
        GradedElement {
            model: Arc::clone(model),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(model: &Arc<BaseModel>, q: Rational) -> Self {
        let mut out = Self::zero(model);
        if !q.is_zero() {
            out.terms.insert(vec![0; model.num_generators()], q);
        }
        out
    }

    pub fn one(model: &Arc<BaseModel>) -> Self {
        Self::constant(model, Rational::one())
    }

    /// The monomial with the given generator exponents, or zero if it lies above the truncation.
    pub fn monomial(model: &Arc<BaseModel>, exps: Vec<u32>, q: Rational) -> Self {
        assert_eq!(exps.len(), model.num_generators(), "generator count mismatch");
        let mut out = Self::zero(model);
        if !q.is_zero() && weighted_degree(model, &exps) <= model.dim() {
            out.terms.insert(exps, q);
        }
        out
    }

    /// `q * h^k` on a projective space (`h^0 = 1` on a point).
    pub fn hyperplane_power(model: &Arc<BaseModel>, k: u32, q: Rational) -> Self {
        match **model {
            BaseModel::Point if k == 0 => Self::constant(model, q),
            BaseModel::Point => Self::zero(model),
            BaseModel::ProjectiveSpace(_) => Self::monomial(model, vec![k], q),
            BaseModel::FormalSegre { .. } => panic!("no hyperplane class on a formal model"),
        }
    }

    /// The formal Segre generator `s_i` of `family`.
    pub fn segre_generator(model: &Arc<BaseModel>, family: u32, i: u32) -> Option<Self> {
        let idx = model.segre_generator_index(family, i)?;
        let mut exps = vec![0; model.num_generators()];
        exps[idx] = 1;
        Some(Self::monomial(model, exps, Rational::one()))
    }

    pub fn model(&self) -> &Arc<BaseModel> {
        &self.model
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_model(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.model, &other.model) || self.model == other.model,
            "graded elements from different base models"
        );
    }

    fn insert_term(&mut self, e: Vec<u32>, q: Rational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(|| int(0));
        *entry += q;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// The homogeneous part of degree `m`.
    pub fn component(&self, m: u32) -> Self {
        let mut out = Self::zero(&self.model);
        for (e, q) in &self.terms {
            if weighted_degree(&self.model, e) == m {
                out.terms.insert(e.clone(), q.clone());
            }
        }
        out
    }

    /// Homogeneous components of degrees `0..=dim`.
    pub fn components(&self) -> Vec<Self> {
        (0..=self.model.dim()).map(|m| self.component(m)).collect()
    }

    /// True if every stored monomial has degree `m` (vacuously true for zero).
    pub fn is_homogeneous_of_degree(&self, m: u32) -> bool {
        self.terms.keys().all(|e| weighted_degree(&self.model, e) == m)
    }

    /// Coefficient of the degree-`k` hyperplane power on a point or projective space.
    pub fn hyperplane_coefficient(&self, k: u32) -> Rational {
        match *self.model {
            BaseModel::Point if k == 0 => self.terms.get(&Vec::new()).cloned().unwrap_or_default(),
            BaseModel::Point => int(0),
            BaseModel::ProjectiveSpace(_) => self.terms.get(&vec![k]).cloned().unwrap_or_default(),
            BaseModel::FormalSegre { .. } => panic!("no hyperplane class on a formal model"),
        }
    }

    /// Degree map `∫_X`: the coefficient of the top class.
    pub fn integrate(&self) -> Result<Rational> {
        match *self.model {
            BaseModel::FormalSegre { .. } => Err(Error::FormalIntegration),
            _ => Ok(self.hyperplane_coefficient(self.model.dim())),
        }
    }

    pub fn monomial_name(&self, exps: &[u32]) -> String {
        let parts: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| {
                let name = self.model.generator_name(i);
                if x == 1 {
                    name
                } else {
                    format!("{name}^{x}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Terms ordered by degree, then by exponents.
    pub fn sorted_terms(&self) -> Vec<(u32, &Vec<u32>, &Rational)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(e, q)| (weighted_degree(&self.model, e), e, q))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(a.1)));
        out
    }
}

fn weighted_degree(model: &BaseModel, exps: &[u32]) -> u32 {
    exps.iter()
        .enumerate()
        .map(|(i, &x)| x * model.generator_weight(i))
        .sum()
}

impl Coeff for GradedElement {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn zero_like(&self) -> Self {
        Self::zero(&self.model)
    }

    fn one_like(&self) -> Self {
        Self::one(&self.model)
    }

    fn add(&self, other: &Self) -> Self {
        self.check_model(other);
        let mut out = self.clone();
        for (e, q) in &other.terms {
            out.insert_term(e.clone(), q.clone());
        }
        out
    }

    fn neg(&self) -> Self {
        GradedElement {
            model: Arc::clone(&self.model),
            terms: self.terms.iter().map(|(e, q)| (e.clone(), -q)).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        self.check_model(other);
        let n = self.model.dim();
        let mut out = Self::zero(&self.model);
        for (e1, q1) in &self.terms {
            let d1 = weighted_degree(&self.model, e1);
            for (e2, q2) in &other.terms {
                if d1 + weighted_degree(&self.model, e2) > n {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(e, q1 * q2);
            }
        }
        out
    }

    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(&self.model);
        }
        GradedElement {
            model: Arc::clone(&self.model),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * q)).collect(),
        }
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (_, e, q)) in terms.into_iter().enumerate() {
            let name = self.monomial_name(e);
            let (sign, mag) = if q.is_negative() { ("-", -q) } else { ("+", q.clone()) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if name == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{mag}*{name}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedElement[{}]({self})", self.model.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    #[test]
    fn truncation_on_projective_space() {
        let p1 = BaseModel::projective(1);
        let h = GradedElement::hyperplane_power(&p1, 1, int(1));
        assert!(h.mul(&h).is_zero());
        let p2 = BaseModel::projective(2);
        let h = GradedElement::hyperplane_power(&p2, 1, int(3));
        assert_eq!(h.mul(&h), GradedElement::hyperplane_power(&p2, 2, int(9)));
    }

    #[test]
    fn integration() {
        let pt = BaseModel::point();
        assert_eq!(GradedElement::constant(&pt, int(5)).integrate().unwrap(), int(5));
        let p2 = BaseModel::projective(2);
        assert_eq!(
            GradedElement::hyperplane_power(&p2, 2, int(3)).integrate().unwrap(),
            int(3)
        );
        let p1 = BaseModel::projective(1);
        let a = GradedElement::hyperplane_power(&p1, 1, int(2)).add(&GradedElement::constant(&p1, int(7)));
        assert_eq!(a.integrate().unwrap(), int(2));
        let formal = BaseModel::formal(3, 1);
        assert_eq!(
            GradedElement::one(&formal).integrate(),
            Err(Error::FormalIntegration)
        );
    }

    #[test]
    fn formal_grading() {
        let m = BaseModel::formal(3, 1);
        let s1 = GradedElement::segre_generator(&m, 0, 1).unwrap();
        let s2 = GradedElement::segre_generator(&m, 0, 2).unwrap();
        let p = s1.mul(&s2);
        assert!(p.is_homogeneous_of_degree(3));
        assert!(p.mul(&s1).is_zero());
        assert!(s2.mul(&s2).is_zero());
        assert_eq!(s1.pow(3).to_string(), "s1^3");
        assert_eq!(s1.sub(&s2.scale(&crate::ring::rat(1, 2))).to_string(), "s1 - 1/2*s2");
    }

    #[test]
    fn display_families() {
        let m = BaseModel::formal(2, 2);
        let a = GradedElement::segre_generator(&m, 1, 2).unwrap();
        assert_eq!(a.to_string(), "s1_2");
    }
}
