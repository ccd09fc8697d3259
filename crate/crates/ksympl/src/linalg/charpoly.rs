//! Characteristic polynomials by the Faddeev–LeVerrier recurrence.
//! Works over any field of characteristic zero (divides by 1..n).

use super::matrix::Mat;
use crate::scalar::Scalar;

/// Coefficients of `det(lambda I - A)`, lowest degree first:
/// `coeffs[i]` multiplies `lambda^i`, and `coeffs[n] = 1` (monic).
pub fn charpoly<S: Scalar>(a: &Mat<S>) -> Vec<S> {
    assert!(a.is_square(), "characteristic polynomial of square matrices only");
    let n = a.rows();
    let mut coeffs = vec![S::zero(); n + 1];
    coeffs[n] = S::one();
    let mut m = Mat::zeros(n, n);
    for k in 1..=n {
        // M_k = A (M_{k-1} + c_{n-k+1} I); c_{n-k} = -tr(M_k)/k
        m = a.mul(&m.add(&Mat::scaled_identity(n, coeffs[n - k + 1].clone())));
        let c = -(m.trace() / S::from_int(k as i64));
        coeffs[n - k] = c;
    }
    coeffs
}

/// Evaluates a low-first coefficient list at a scalar.
pub fn eval_poly<S: Scalar>(coeffs: &[S], x: &S) -> S {
    coeffs
        .iter()
        .rev()
        .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn int(n: i64) -> Q {
        <Q as Scalar>::from_int(n)
    }

    #[test]
    fn diagonal_case() {
        let a: Mat<Q> = Mat::from_int_rows(&[vec![1, 0], vec![0, 2]]);
        // (x-1)(x-2) = x^2 - 3x + 2
        assert_eq!(charpoly(&a), vec![int(2), int(-3), int(1)]);
    }

    #[test]
    fn companion_matrix_recovers_its_polynomial() {
        // Companion of x^3 - 2x^2 + 5x - 7
        let a: Mat<Q> = Mat::from_int_rows(&[
            vec![0, 0, 7],
            vec![1, 0, -5],
            vec![0, 1, 2],
        ]);
        assert_eq!(charpoly(&a), vec![int(-7), int(5), int(-2), int(1)]);
    }

    #[test]
    fn cayley_hamilton_spot_check() {
        let a: Mat<Q> = Mat::from_int_rows(&[vec![2, 1, 0], vec![-1, 3, 2], vec![0, 1, 1]]);
        let cp = charpoly(&a);
        // p(A) = 0
        let mut acc: Mat<Q> = Mat::zeros(3, 3);
        let mut power: Mat<Q> = Mat::identity(3);
        for c in &cp {
            acc = acc.add(&power.scalar_mul(c));
            power = power.mul(&a);
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn eval_poly_horner() {
        let p = vec![int(2), int(-3), int(1)]; // x^2 - 3x + 2
        assert_eq!(eval_poly(&p, &int(1)), int(0));
        assert_eq!(eval_poly(&p, &int(4)), int(6));
    }
}
