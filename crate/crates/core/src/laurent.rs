//! Sparse multivariate Laurent polynomials over an arbitrary [`Coeff`] ring.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors (negative exponents
//! allowed). Zero coefficients are pruned after every operation, so two
//! polynomials are equal exactly when their maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{Coeff, Rational};

/// Exponents of one monomial, one entry per variable.
pub type ExponentVector = Vec<i32>;

#[derive(Clone, PartialEq)]
pub struct LaurentPoly<C: Coeff> {
    nvars: usize,
    /// Zero of the coefficient ring; doubles as the ring tag.
    zero: C,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    /// The zero polynomial in `nvars` variables with coefficients in the ring of `proto`.
    pub fn zero(nvars: usize, proto: &C) -> Self {
        LaurentPoly {
            nvars,
            zero: proto.zero_like(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize, proto: &C) -> Self {
        Self::constant(nvars, proto.one_like())
    }

    pub fn monomial(exps: ExponentVector, c: C) -> Self {
        let mut p = Self::zero(exps.len(), &c);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `t_i`.
    pub fn var(nvars: usize, i: usize, proto: &C) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, proto.one_like())
    }

    pub fn from_terms<I>(nvars: usize, proto: &C, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
    {
        let mut p = Self::zero(nvars, proto);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, e: ExponentVector, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let s = existing.add(c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeff_zero(&self) -> &C {
        &self.zero
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i32]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(|| self.zero.clone())
    }

    /// Coefficient of the all-zero exponent vector.
    pub fn const_term(&self) -> C {
        self.coeff(&vec![0; self.nvars])
    }

    /// Constant term of `self * other`, without forming the product.
    pub fn const_term_of_product(&self, other: &Self) -> C {
        let mut acc = self.zero.clone();
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (e, c) in &small.terms {
            let opposite: ExponentVector = e.iter().map(|x| -x).collect();
            if let Some(d) = large.terms.get(&opposite) {
                acc = acc.add(&c.mul(d));
            }
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars, &self.zero);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: ExponentVector = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &c1.mul(c2));
            }
        }
        out
    }

    /// Multiply every coefficient by `c`.
    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map_coeffs(|x| x.mul(c))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.map_coeffs(|x| x.scale(q))
    }

    /// Multiply by the monomial `t^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        let mut out = Self::zero(self.nvars, &self.zero);
        for (e, c) in &self.terms {
            let e2 = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            out.terms.insert(e2, c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        Coeff::pow(self, e)
    }

    /// Apply `f` to every coefficient, dropping results that vanish.
    pub fn map_coeffs<F>(&self, f: F) -> Self
    where
        F: Fn(&C) -> C,
    {
        let mut out = Self::zero(self.nvars, &self.zero);
        for (e, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    /// Substitute `t_i -> 1/t_i` for every variable.
    pub fn invert_variables(&self) -> Self {
        let mut out = Self::zero(self.nvars, &self.zero);
        for (e, c) in &self.terms {
            out.terms.insert(e.iter().map(|x| -x).collect(), c.clone());
        }
        out
    }

    /// Apply the variable permutation `t_i -> t_{sigma[i]}`.
    pub fn permute(&self, sigma: &[usize]) -> Self {
        assert_eq!(sigma.len(), self.nvars);
        let mut out = Self::zero(self.nvars, &self.zero);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; self.nvars];
            for (i, &x) in e.iter().enumerate() {
                e2[sigma[i]] = x;
            }
            out.terms.insert(e2, c.clone());
        }
        out
    }

    /// Keep only terms of total degree at most `w`.
    pub fn truncate_total_degree(&self, w: i64) -> Self {
        let mut out = Self::zero(self.nvars, &self.zero);
        for (e, c) in &self.terms {
            if e.iter().map(|&x| x as i64).sum::<i64>() <= w {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// True if no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<i32>());
        match degs.next() {
            None => true,
            Some(first) => degs.all(|d| d == first),
        }
    }

    /// Largest term in lexicographic order on exponent vectors.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &C)> {
        self.terms.iter().next_back()
    }
}

impl LaurentPoly<Rational> {
    pub fn rational_var(nvars: usize, i: usize) -> Self {
        Self::var(nvars, i, &Rational::one())
    }

    /// Embed into a polynomial ring over the ring of `proto`.
    pub fn lift<D: Coeff>(&self, proto: &D) -> LaurentPoly<D> {
        let one = proto.one_like();
        LaurentPoly::from_terms(
            self.nvars,
            proto,
            self.terms.iter().map(|(e, q)| (e.clone(), one.scale(q))),
        )
    }

    /// Exact division of genuine polynomials by lexicographic leading terms.
    ///
    /// Fails with [`Error::InexactDivision`] when the remainder would be nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        assert_eq!(self.nvars, divisor.nvars);
        let (lead_e, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        if !self.is_polynomial() || !divisor.is_polynomial() {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars, &self.zero);
        while let Some((e, c)) = rem.leading_term() {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return Err(Error::InexactDivision);
            }
            let qe: ExponentVector = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let qc = c / lead_c;
            let step = Self::monomial(qe, qc);
            rem = rem.sub(&divisor.mul(&step));
            quot = quot.add(&step);
        }
        Ok(quot)
    }
}

impl<C: Coeff> Coeff for LaurentPoly<C> {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars, &self.zero)
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars, &self.zero)
    }
    fn add(&self, other: &Self) -> Self {
        LaurentPoly::add(self, other)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentPoly::mul(self, other)
    }
    fn scale(&self, q: &Rational) -> Self {
        LaurentPoly::scale(self, q)
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        LaurentPoly::add(self, rhs)
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        LaurentPoly::sub(self, rhs)
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        LaurentPoly::mul(self, rhs)
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly::neg(self)
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { format!("t{i}") } else { format!("t{i}^{x}") })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// The Vandermonde polynomial `∏_{0<=i<j<d} (t_i - t_j)`; `1` for `d = 1`.
pub fn vandermonde(d: usize) -> LaurentPoly<Rational> {
    let one = Rational::one();
    let mut acc = LaurentPoly::one(d, &one);
    for i in 0..d {
        for j in i + 1..d {
            let factor = LaurentPoly::rational_var(d, i).sub(&LaurentPoly::rational_var(d, j));
            acc = acc.mul(&factor);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn t(d: usize, i: usize) -> LaurentPoly<Rational> {
        LaurentPoly::rational_var(d, i)
    }

    #[test]
    fn const_term_examples() {
        let one = LaurentPoly::one(2, &int(0));
        assert_eq!(one.const_term(), int(1));
        let diff = &t(2, 0) - &t(2, 1);
        assert_eq!(diff.const_term(), int(0));
        let inv_t0 = LaurentPoly::monomial(vec![-1, 0], int(1));
        assert_eq!((&diff * &inv_t0).const_term(), int(1));
        assert_eq!(diff.const_term_of_product(&inv_t0), int(1));
    }

    #[test]
    fn vandermonde_small_cases() {
        assert_eq!(vandermonde(1), LaurentPoly::one(1, &int(0)));
        assert_eq!(vandermonde(2), &t(2, 0) - &t(2, 1));
        let v3 = vandermonde(3);
        assert_eq!(v3.len(), 6);
        let hand = &(&(&t(3, 0) - &t(3, 1)) * &(&t(3, 0) - &t(3, 2))) * &(&t(3, 1) - &t(3, 2));
        assert_eq!(v3, hand);
        // t0^2 t1 has coefficient +1
        assert_eq!(v3.coeff(&[2, 1, 0]), int(1));
        assert_eq!(v3.coeff(&[0, 1, 2]), int(-1));
    }

    #[test]
    fn cancellation_prunes_terms() {
        let a = &t(2, 0) + &t(2, 1);
        let b = &a - &a;
        assert!(b.is_zero());
        assert_eq!(b, LaurentPoly::zero(2, &int(0)));
    }

    #[test]
    fn exact_division() {
        let num = &t(2, 0).pow(2) - &t(2, 1).pow(2);
        let q = num.div_exact(&vandermonde(2)).unwrap();
        assert_eq!(q, &t(2, 0) + &t(2, 1));
        let bad = t(2, 0).div_exact(&vandermonde(2));
        assert!(matches!(bad, Err(Error::InexactDivision)));
    }

    #[test]
    fn permute_and_invert() {
        let p = LaurentPoly::monomial(vec![2, -1, 0], int(3));
        assert_eq!(p.permute(&[1, 2, 0]), LaurentPoly::monomial(vec![0, 2, -1], int(3)));
        assert_eq!(p.invert_variables(), LaurentPoly::monomial(vec![-2, 1, 0], int(3)));
    }
}
