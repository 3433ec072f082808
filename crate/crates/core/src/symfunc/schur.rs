use num_traits::One;

use super::partition::{partitions_up_to, Partition};
use super::CheckReport;
use crate::chow::{BundleModel, GradedElement};
use crate::error::Result;
use crate::laurent::{vandermonde, LaurentPoly};
use crate::matrix::det;
use crate::ring::Rational;

/// The bialternant `det[t_j^{λ_i + d - i}]` for `1 <= i <= d`, `0 <= j < d`.
pub fn bialternant(lambda: &Partition, d: usize) -> Result<LaurentPoly<Rational>> {
    let lambda = lambda.padded(d)?;
    let one = Rational::one();
    let rows: Vec<Vec<LaurentPoly<Rational>>> = (0..d)
        .map(|i| {
            let e = lambda.part(i) as i32 + (d - 1 - i) as i32;
            (0..d)
                .map(|j| {
                    let mut exps = vec![0; d];
                    exps[j] = e;
                    LaurentPoly::monomial(exps, one.clone())
                })
                .collect()
        })
        .collect();
    det(&rows)
}

/// Schur polynomial `s_λ(t_0..t_{d-1})` by exact division of the bialternant by `Δ(t)`.
pub fn schur_in_t(lambda: &Partition, d: usize) -> Result<LaurentPoly<Rational>> {
    bialternant(lambda, d)?.div_exact(&vandermonde(d))
}

/// Jacobi–Trudi determinant `Δ_λ(s(E)) = det[s_{λ_i + j - i}(E)]`.
pub fn schur_delta(lambda: &Partition, bundle: &BundleModel, d: usize) -> Result<GradedElement> {
    let lambda = lambda.padded(d)?;
    let rows: Vec<Vec<GradedElement>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| bundle.segre(lambda.part(i) as i64 + j as i64 - i as i64))
                .collect()
        })
        .collect();
    det(&rows)
}

/// `∏_{i<d} s(E, t_i)` as a polynomial in `t` with base-class coefficients.
pub fn segre_series_product(bundle: &BundleModel, d: usize) -> LaurentPoly<GradedElement> {
    let proto = GradedElement::one(bundle.base());
    let mut acc = LaurentPoly::one(d, &proto);
    for i in 0..d {
        let series = LaurentPoly::from_terms(
            d,
            &proto,
            (0..=bundle.n()).map(|k| {
                let mut e = vec![0; d];
                e[i] = k as i32;
                (e, bundle.segre(k as i64))
            }),
        );
        acc = acc.mul(&series);
    }
    acc
}

/// Checks `∏ s(E, t_i) = Σ_λ Δ_λ(s(E)) s_λ(t)` up to total `t`-degree `w`.
pub fn cauchy_expand_check(bundle: &BundleModel, d: usize, w: u32) -> Result<CheckReport> {
    let name = format!("cauchy expansion d={d} w={w} [{}]", bundle.describe());
    let lhs = segre_series_product(bundle, d).truncate_total_degree(w as i64);
    let proto = GradedElement::one(bundle.base());
    let mut rhs = LaurentPoly::zero(d, &proto);
    let mut cases = 0;
    for lambda in partitions_up_to(d, w) {
        let coeff = schur_delta(&lambda, bundle, d)?;
        if !coeff.is_zero() {
            rhs = rhs.add(&schur_in_t(&lambda, d)?.lift(&proto).mul_coeff(&coeff));
        }
        cases += 1;
    }
    let diff = lhs.sub(&rhs);
    let failure = diff.leading_term().map(|(e, c)| {
        format!(
            "t^{e:?}: lhs {} vs rhs {} (difference {c})",
            lhs.coeff(e),
            rhs.coeff(e)
        )
    });
    Ok(CheckReport::new(name, cases, failure))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::BaseModel;
    use crate::ring::{int, Coeff};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn t(d: usize, i: usize) -> LaurentPoly<Rational> {
        LaurentPoly::rational_var(d, i)
    }

    #[test]
    fn small_schur_polynomials() {
        assert_eq!(schur_in_t(&p(&[0, 0]), 2).unwrap(), LaurentPoly::one(2, &int(1)));
        assert_eq!(schur_in_t(&p(&[1, 0]), 2).unwrap(), &t(2, 0) + &t(2, 1));
        assert_eq!(schur_in_t(&p(&[1, 1]), 2).unwrap(), &t(2, 0) * &t(2, 1));
        // s_(2,1)(t0,t1,t2) has 8 monomials, the middle one with coefficient 2
        let s21 = schur_in_t(&p(&[2, 1]), 3).unwrap();
        assert_eq!(s21.len(), 7);
        assert_eq!(s21.coeff(&[1, 1, 1]), int(2));
    }

    #[test]
    fn jacobi_trudi_small() {
        let base = BaseModel::formal(3, 1);
        let e = BundleModel::formal(&base, 4, 0).unwrap();
        assert_eq!(schur_delta(&p(&[0, 0]), &e, 2).unwrap(), GradedElement::one(&base));
        assert_eq!(schur_delta(&p(&[3, 0, 0]), &e, 3).unwrap(), e.segre(3));
        let s11 = schur_delta(&p(&[1, 1]), &e, 2).unwrap();
        assert_eq!(s11, e.segre(1).mul(&e.segre(1)).sub(&e.segre(2)));
    }

    #[test]
    fn cauchy_examples() {
        let formal = BaseModel::formal(3, 1);
        let e = BundleModel::formal(&formal, 3, 0).unwrap();
        assert!(cauchy_expand_check(&e, 1, 3).unwrap().passed());
        assert!(cauchy_expand_check(&e, 2, 3).unwrap().passed());
        let p2 = BaseModel::projective(2);
        let split = BundleModel::from_chern_roots(&p2, &[1, 1, 0]).unwrap();
        assert!(cauchy_expand_check(&split, 2, 2).unwrap().passed());
    }
}
