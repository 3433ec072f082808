use num_bigint::BigInt;
use num_traits::One;

use crate::laurent::{vandermonde, LaurentPoly};
use crate::matrix::det;
use crate::ring::{factorial, falling_factorial_inverse, vandermonde_of_ints, Coeff, Rational};

/// The linear form `Φ(f) = const_t(Δ(t) exp(Σ 1/t_i) f)`.
///
/// `exp` is never expanded: a monomial `t^m` of `Δ f` pairs with the single
/// term `∏ t_i^{-m_i} / m_i!` of the exponential, so
/// `Φ(f) = Σ_m [Δ f]_m ∏ 1/m_i!` with `1/m! = 0` for `m < 0`.
pub fn phi<C: Coeff>(f: &LaurentPoly<C>) -> C {
    let d = f.nvars();
    let product = vandermonde(d).lift(f.coeff_zero()).mul(f);
    let mut acc = f.coeff_zero().clone();
    for (m, c) in product.terms() {
        let weight: Rational = m
            .iter()
            .map(|&x| falling_factorial_inverse(x as i64))
            .product();
        if !Coeff::is_zero(&weight) {
            acc = acc.add(&c.scale(&weight));
        }
    }
    acc
}

/// Closed form `Φ(∏ t_i^{k_i}) = (-1)^{d(d-1)/2} Δ(k) / ∏ (k_i + d - 1)!`.
///
/// Valid for all integer `k` under `1/m! = 0` for `m < 0`.
pub fn phi_eval_monomial(k: &[i64]) -> Rational {
    let d = k.len() as i64;
    let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
    let mut value = Rational::from_integer(vandermonde_of_ints(k) * sign);
    for &ki in k {
        value *= falling_factorial_inverse(ki + d - 1);
    }
    value
}

/// Checks `det[1/(x_i + j)!]_{0<=i,j<d} = Δ(x) / ∏ (x_i + d - 1)!` exactly.
pub fn factorial_det_check(x: &[i64]) -> bool {
    factorial_det_sides(x).map(|(l, r)| l == r).unwrap_or(false)
}

/// Both sides of the factorial determinant identity.
pub fn factorial_det_sides(x: &[i64]) -> Option<(Rational, Rational)> {
    let d = x.len();
    let rows: Vec<Vec<Rational>> = x
        .iter()
        .map(|&xi| (0..d).map(|j| falling_factorial_inverse(xi + j as i64)).collect())
        .collect();
    let lhs = det(&rows).ok()?;
    let mut rhs = Rational::from_integer(vandermonde_of_ints(x));
    for &xi in x {
        let m = xi + d as i64 - 1;
        if m < 0 {
            rhs = Rational::from_integer(BigInt::from(0));
        } else {
            rhs /= Rational::from_integer(BigInt::from(factorial(m as u64)));
        }
    }
    Some((lhs, rhs))
}

/// `Φ(∏ t_i^{k_i})` computed straight from the definition, for tests and reports.
pub fn phi_monomial_by_definition(k: &[i64]) -> Rational {
    let exps: Vec<i32> = k.iter().map(|&x| x as i32).collect();
    phi(&LaurentPoly::monomial(exps, Rational::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    #[test]
    fn one_variable() {
        for k in 0..6 {
            let f = LaurentPoly::monomial(vec![k], int(1));
            assert_eq!(phi(&f), falling_factorial_inverse(k as i64));
        }
        assert_eq!(phi_eval_monomial(&[3]), rat(1, 6));
    }

    #[test]
    fn two_variables() {
        let f = LaurentPoly::monomial(vec![1, 0], int(1));
        assert_eq!(phi(&f), rat(-1, 2));
        assert_eq!(phi_eval_monomial(&[1, 0]), rat(-1, 2));
        for k in 0..4 {
            assert_eq!(phi(&LaurentPoly::monomial(vec![k, k], int(1))), int(0));
            assert_eq!(phi_eval_monomial(&[k as i64, k as i64]), int(0));
        }
    }

    #[test]
    fn negative_exponents() {
        // Δ·t1^{-1} = t0 t1^{-1} - 1, only the constant survives
        assert_eq!(phi_monomial_by_definition(&[0, -1]), int(-1));
        assert_eq!(phi_eval_monomial(&[0, -1]), int(-1));
    }

    #[test]
    fn factorial_determinants() {
        assert_eq!(factorial_det_sides(&[0]), Some((int(1), int(1))));
        assert_eq!(factorial_det_sides(&[1, 0]), Some((rat(1, 2), rat(1, 2))));
        assert!(factorial_det_check(&[4, 7, 2]));
        assert!(factorial_det_check(&[3, 3, 1]));
    }
}
