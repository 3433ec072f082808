use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::base::{BaseModel, GradedElement};
use crate::error::{Error, Result};
use crate::ring::{Coeff, Rational};

/// A vector bundle on the base, known through its rank and characteristic classes.
///
/// Segre classes follow the convention `s(E, t) c(E, -t) = 1`, so `s_i` is
/// the complete homogeneous symmetric polynomial of degree `i` in the Chern
/// roots.
#[derive(Clone, Debug)]
pub struct BundleModel {
    base: Arc<BaseModel>,
    rank: u32,
    /// `s_0..s_n`
    segre: Vec<GradedElement>,
    /// `c_0..c_r`
    chern: Vec<GradedElement>,
    chern_roots: Option<Vec<i64>>,
}

/// Segre classes `s_0..s_n` from Chern classes `c_0..c_k` (`k <= r`).
pub fn segre_from_chern(chern: &[GradedElement], r: u32, n: u32) -> Result<Vec<GradedElement>> {
    let first = chern
        .first()
        .ok_or_else(|| Error::InvalidChern("empty Chern class list".into()))?;
    if *first != first.one_like() {
        return Err(Error::InvalidChern("c_0 must be 1".into()));
    }
    if chern.len() > r as usize + 1 {
        return Err(Error::InvalidChern(format!(
            "{} Chern classes given for a rank {r} bundle",
            chern.len()
        )));
    }
    let mut segre = vec![first.clone()];
    for i in 1..=n as usize {
        // sum_{j=0}^{i} (-1)^j c_j s_{i-j} = 0
        let mut s = first.zero_like();
        for (j, c) in chern.iter().enumerate().take(i + 1).skip(1) {
            let term = c.mul(&segre[i - j]);
            s = if j % 2 == 1 { s.add(&term) } else { s.sub(&term) };
        }
        segre.push(s);
    }
    Ok(segre)
}

/// Chern classes `c_0..c_n` from Segre classes `s_0..s_n`.
pub fn chern_from_segre(segre: &[GradedElement], n: u32) -> Result<Vec<GradedElement>> {
    let first = segre
        .first()
        .ok_or_else(|| Error::InvalidSegre("empty Segre class list".into()))?;
    if *first != first.one_like() {
        return Err(Error::InvalidSegre("s_0 must be 1".into()));
    }
    let zero = first.zero_like();
    let s = |j: usize| segre.get(j).cloned().unwrap_or_else(|| zero.clone());
    // u_i = (-1)^i c_i satisfies u_i = -sum_{j=1}^{i} s_j u_{i-j}
    let mut u = vec![first.clone()];
    for i in 1..=n as usize {
        let mut acc = zero.clone();
        for j in 1..=i {
            acc = acc.sub(&s(j).mul(&u[i - j]));
        }
        u.push(acc);
    }
    Ok(u.into_iter()
        .enumerate()
        .map(|(i, x)| if i % 2 == 1 { x.neg() } else { x })
        .collect())
}

impl BundleModel {
    /// Split bundle `⊕ O(a_j)` over a point or projective space.
    pub fn from_chern_roots(base: &Arc<BaseModel>, roots: &[i64]) -> Result<Self> {
        if base.is_formal() {
            return Err(Error::InvalidBundle(
                "Chern roots need a point or projective-space base".into(),
            ));
        }
        if roots.is_empty() {
            return Err(Error::InvalidBundle("rank must be positive".into()));
        }
        let r = roots.len() as u32;
        // elementary symmetric polynomials of the roots
        let mut e = vec![BigInt::one()];
        for &a in roots {
            let mut next = e.clone();
            next.push(BigInt::from(0));
            for i in 1..next.len() {
                next[i] += &e[i - 1] * a;
            }
            e = next;
        }
        let chern: Vec<GradedElement> = e
            .into_iter()
            .enumerate()
            .map(|(i, ei)| GradedElement::hyperplane_power(base, i as u32, Rational::from_integer(ei)))
            .collect();
        let mut bundle = Self::from_chern(base, r, chern)?;
        bundle.chern_roots = Some(roots.to_vec());
        Ok(bundle)
    }

    /// Bundle of rank `r` given by Chern classes `c_0..c_k`, `k <= r`.
    pub fn from_chern(base: &Arc<BaseModel>, r: u32, chern: Vec<GradedElement>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidBundle("rank must be positive".into()));
        }
        for (i, c) in chern.iter().enumerate() {
            if c.model() != base {
                return Err(Error::ModelMismatch);
            }
            if !c.is_homogeneous_of_degree(i as u32) {
                return Err(Error::InvalidChern(format!("c_{i} is not homogeneous of degree {i}")));
            }
        }
        let n = base.dim();
        let segre = segre_from_chern(&chern, r, n)?;
        let mut chern = chern;
        chern.resize(r as usize + 1, GradedElement::zero(base));
        Ok(BundleModel {
            base: Arc::clone(base),
            rank: r,
            segre,
            chern,
            chern_roots: None,
        })
    }

    /// Bundle of rank `r` given by Segre classes `s_0..s_k`; missing classes
    /// up to the base dimension are taken to be zero.
    pub fn from_segre(base: &Arc<BaseModel>, r: u32, segre: Vec<GradedElement>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidBundle("rank must be positive".into()));
        }
        let n = base.dim();
        if segre.len() > n as usize + 1 {
            return Err(Error::InvalidSegre(format!(
                "{} Segre classes given but the base has dimension {n}",
                segre.len()
            )));
        }
        for (i, s) in segre.iter().enumerate() {
            if s.model() != base {
                return Err(Error::ModelMismatch);
            }
            if !s.is_homogeneous_of_degree(i as u32) {
                return Err(Error::InvalidSegre(format!("s_{i} is not homogeneous of degree {i}")));
            }
        }
        let mut segre = segre;
        segre.resize(n as usize + 1, GradedElement::zero(base));
        let chern = chern_from_segre(&segre, n)?;
        if let Some(i) = (r as usize + 1..chern.len()).find(|&i| !chern[i].is_zero()) {
            return Err(Error::InvalidSegre(format!(
                "implied c_{i} = {} is nonzero for a rank {r} bundle",
                chern[i]
            )));
        }
        Self::from_chern(base, r, chern.into_iter().take(r as usize + 1).collect())
    }

    /// Universal rank-`r` bundle on a formal base: `s_1..s_min(r,n)` are the
    /// free generators of `family`, higher Segre classes follow from `c_i = 0`
    /// for `i > r`.
    pub fn formal(base: &Arc<BaseModel>, r: u32, family: u32) -> Result<Self> {
        let n = base.dim();
        let free = r.min(n);
        let mut segre = vec![GradedElement::one(base)];
        for i in 1..=free {
            let g = GradedElement::segre_generator(base, family, i).ok_or_else(|| {
                Error::InvalidBundle(format!("base {} has no Segre family {family}", base.describe()))
            })?;
            segre.push(g);
        }
        let chern = chern_from_segre(&segre, free)?;
        Self::from_chern(base, r, chern)
    }

    pub fn trivial(base: &Arc<BaseModel>, r: u32) -> Result<Self> {
        Self::from_chern(base, r, vec![GradedElement::one(base)])
    }

    pub fn base(&self) -> &Arc<BaseModel> {
        &self.base
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Truncation degree of the base.
    pub fn n(&self) -> u32 {
        self.base.dim()
    }

    /// `s_i(E)`, zero for `i < 0` or `i > n`.
    pub fn segre(&self, i: i64) -> GradedElement {
        if i < 0 || i as usize >= self.segre.len() {
            GradedElement::zero(&self.base)
        } else {
            self.segre[i as usize].clone()
        }
    }

    /// `c_i(E)`, zero outside `0..=r`.
    pub fn chern(&self, i: i64) -> GradedElement {
        if i < 0 || i as usize >= self.chern.len() {
            GradedElement::zero(&self.base)
        } else {
            self.chern[i as usize].clone()
        }
    }

    pub fn segre_classes(&self) -> &[GradedElement] {
        &self.segre
    }

    pub fn chern_classes(&self) -> &[GradedElement] {
        &self.chern
    }

    pub fn chern_roots(&self) -> Option<&[i64]> {
        self.chern_roots.as_deref()
    }

    /// Checks `s(E, t) c(E, -t) = 1` modulo `t^{n+1}`.
    pub fn satisfies_segre_relation(&self) -> bool {
        let n = self.n() as i64;
        (0..=n).all(|i| {
            let mut acc = GradedElement::zero(&self.base);
            for j in 0..=i {
                let term = self.chern(j).mul(&self.segre(i - j));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            if i == 0 {
                acc == GradedElement::one(&self.base)
            } else {
                acc.is_zero()
            }
        })
    }

    pub fn describe(&self) -> String {
        match &self.chern_roots {
            Some(roots) => format!(
                "rank {} on {} with Chern roots {:?}",
                self.rank,
                self.base.describe(),
                roots
            ),
            None => format!("rank {} on {}", self.rank, self.base.describe()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    #[test]
    fn trivial_bundle_has_no_segre_classes() {
        let base = BaseModel::projective(3);
        let e = BundleModel::trivial(&base, 3).unwrap();
        for i in 1..=3 {
            assert!(e.segre(i).is_zero());
        }
        assert_eq!(e.segre(0), GradedElement::one(&base));
    }

    #[test]
    fn split_bundle_over_p1() {
        let base = BaseModel::projective(1);
        let e = BundleModel::from_chern_roots(&base, &[1, 1]).unwrap();
        assert_eq!(e.segre(1), GradedElement::hyperplane_power(&base, 1, int(2)));
        assert_eq!(e.chern(1), GradedElement::hyperplane_power(&base, 1, int(2)));
        assert!(e.chern(2).is_zero());
    }

    #[test]
    fn line_bundle_geometric_series() {
        let base = BaseModel::projective(2);
        let a = 3;
        let chern = vec![
            GradedElement::one(&base),
            GradedElement::hyperplane_power(&base, 1, int(a)),
        ];
        let s = segre_from_chern(&chern, 1, 2).unwrap();
        assert_eq!(s[1], GradedElement::hyperplane_power(&base, 1, int(a)));
        assert_eq!(s[2], GradedElement::hyperplane_power(&base, 2, int(a * a)));
    }

    #[test]
    fn rejects_bad_chern_input() {
        let base = BaseModel::projective(2);
        let bad = vec![GradedElement::constant(&base, int(2))];
        assert!(matches!(segre_from_chern(&bad, 2, 2), Err(Error::InvalidChern(_))));
        let too_many = vec![GradedElement::one(&base); 4];
        assert!(segre_from_chern(&too_many, 2, 2).is_err());
    }

    #[test]
    fn formal_bundle_respects_rank() {
        let base = BaseModel::formal(3, 1);
        let e = BundleModel::formal(&base, 1, 0).unwrap();
        // rank one: s_k = s_1^k
        assert_eq!(e.segre(2), e.segre(1).pow(2));
        assert_eq!(e.segre(3), e.segre(1).pow(3));
        assert!(e.satisfies_segre_relation());
        let e3 = BundleModel::formal(&base, 3, 0).unwrap();
        assert_eq!(e3.segre(2), GradedElement::segre_generator(&base, 0, 2).unwrap());
        assert!(e3.satisfies_segre_relation());
    }

    #[test]
    fn segre_input_validation() {
        let base = BaseModel::projective(2);
        // s = 1 + h + 0: c(-t) = 1/(1+ht) => c_2 = h^2 != 0 for a line bundle
        let segre = vec![
            GradedElement::one(&base),
            GradedElement::hyperplane_power(&base, 1, int(1)),
        ];
        assert!(matches!(
            BundleModel::from_segre(&base, 1, segre.clone()),
            Err(Error::InvalidSegre(_))
        ));
        let e = BundleModel::from_segre(&base, 2, segre).unwrap();
        assert!(e.satisfies_segre_relation());
        assert_eq!(e.chern(2), GradedElement::hyperplane_power(&base, 2, int(1)));
    }
}
