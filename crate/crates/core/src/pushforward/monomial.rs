use crate::chow::{BundleModel, GradedElement};
use crate::error::{Error, Result};
use crate::laurent::{vandermonde, LaurentPoly};
use crate::matrix::det;
use crate::symfunc::segre_series_product;

fn check_d(bundle: &BundleModel, d: usize) -> Result<()> {
    let r = bundle.rank() as usize;
    if d == 0 || d > r {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= d <= r, got d = {d}, r = {r}"
        )));
    }
    Ok(())
}

/// `p_*(ξ_0^{p_0} ... ξ_{d-1}^{p_{d-1}})` as the constant term of
/// `Δ(t) ∏ t_i^{-p_i + r - d} s(E, t_i)`.
pub fn monomial_pushforward_ct(p: &[u32], bundle: &BundleModel) -> Result<GradedElement> {
    let d = p.len();
    check_d(bundle, d)?;
    let r = bundle.rank() as i32;
    let shift: Vec<i32> = p.iter().map(|&pi| r - d as i32 - pi as i32).collect();
    let series = segre_series_product(bundle, d).shift(&shift);
    let delta = vandermonde(d).lift(&GradedElement::one(bundle.base()));
    Ok(delta.const_term_of_product(&series))
}

/// The same push-forward as the determinant `det[s_{p_i + j - r + 1}(E)]_{0<=i,j<d}`.
pub fn monomial_pushforward_det(p: &[u32], bundle: &BundleModel) -> Result<GradedElement> {
    let d = p.len();
    check_d(bundle, d)?;
    let r = bundle.rank() as i64;
    let rows: Vec<Vec<GradedElement>> = p
        .iter()
        .map(|&pi| (0..d).map(|j| bundle.segre(pi as i64 + j as i64 - r + 1)).collect())
        .collect();
    det(&rows)
}

/// `p_* F(ξ) = const_t(Δ(t) ∏ t_i^{r-d} F(1/t) ∏ s(E, t_i))` for a polynomial `F`.
pub fn pushforward_general_f(f: &LaurentPoly<GradedElement>, bundle: &BundleModel) -> Result<GradedElement> {
    let d = f.nvars();
    check_d(bundle, d)?;
    if !f.is_polynomial() {
        return Err(Error::InvalidParameters("F must be a polynomial".into()));
    }
    let r = bundle.rank() as i32;
    let shift = vec![r - d as i32; d];
    let twisted = f.invert_variables().shift(&shift);
    let series = segre_series_product(bundle, d).mul(&twisted);
    let delta = vandermonde(d).lift(&GradedElement::one(bundle.base()));
    Ok(delta.const_term_of_product(&series))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::BaseModel;

    #[test]
    fn top_monomial_pushes_to_one() {
        let base = BaseModel::formal(3, 1);
        for (r, d) in [(3, 1), (4, 2), (5, 3)] {
            let e = BundleModel::formal(&base, r, 0).unwrap();
            let top: Vec<u32> = (0..d).map(|l| r - 1 - l as u32).collect();
            assert_eq!(monomial_pushforward_ct(&top, &e).unwrap(), GradedElement::one(&base));
            assert_eq!(monomial_pushforward_det(&top, &e).unwrap(), GradedElement::one(&base));
        }
    }

    #[test]
    fn single_variable_values() {
        let base = BaseModel::formal(3, 1);
        let e = BundleModel::formal(&base, 3, 0).unwrap();
        assert_eq!(monomial_pushforward_ct(&[3], &e).unwrap(), e.segre(1));
        assert_eq!(monomial_pushforward_det(&[3], &e).unwrap(), e.segre(1));
        for p in 0..=1 {
            assert!(monomial_pushforward_ct(&[p], &e).unwrap().is_zero());
        }
    }

    #[test]
    fn two_by_two_determinant() {
        let base = BaseModel::formal(3, 1);
        let e = BundleModel::formal(&base, 3, 0).unwrap();
        assert_eq!(monomial_pushforward_det(&[3, 1], &e).unwrap(), e.segre(1));
        assert_eq!(monomial_pushforward_ct(&[3, 1], &e).unwrap(), e.segre(1));
    }

    #[test]
    fn general_f_special_cases() {
        let base = BaseModel::formal(3, 1);
        let e = BundleModel::formal(&base, 4, 0).unwrap();
        let one = GradedElement::one(&base);
        let top = LaurentPoly::monomial(vec![3, 2], one.clone());
        assert_eq!(pushforward_general_f(&top, &e).unwrap(), one);
        let constant = LaurentPoly::one(2, &one);
        assert!(pushforward_general_f(&constant, &e).unwrap().is_zero());
        let laurent = LaurentPoly::monomial(vec![-1, 0], one.clone());
        assert!(pushforward_general_f(&laurent, &e).is_err());
        assert!(pushforward_general_f(&LaurentPoly::one(5, &one), &e).is_err());
    }
}
