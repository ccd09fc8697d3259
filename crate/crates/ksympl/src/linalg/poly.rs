//! Homogeneous multivariate polynomials with explicit exponent-vector keys.
//!
//! Coefficients are stored sparsely in a `BTreeMap` keyed by exponent
//! vectors (length = number of variables, entries summing to the degree), so
//! iteration order is deterministic. Zero coefficients are never stored.

use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// A homogeneous polynomial of fixed degree in `num_vars` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousPoly<S> {
    num_vars: usize,
    degree: u32,
    coeffs: BTreeMap<Vec<u16>, S>,
}

impl<S: Scalar> HomogeneousPoly<S> {
    /// The zero polynomial of the given shape.
    pub fn zero(num_vars: usize, degree: u32) -> Self {
        HomogeneousPoly {
            num_vars,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds from explicit terms, dropping zeros. Panics on malformed
    /// exponent vectors (wrong length or degree).
    pub fn from_terms(
        num_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Vec<u16>, S)>,
    ) -> Self {
        let mut p = Self::zero(num_vars, degree);
        for (expo, c) in terms {
            p.add_term(expo, c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    fn check_exponent(&self, expo: &[u16]) {
        assert_eq!(expo.len(), self.num_vars, "exponent vector length mismatch");
        let total: u32 = expo.iter().map(|&e| e as u32).sum();
        assert_eq!(total, self.degree, "exponent vector degree mismatch");
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coeff(&self, expo: &[u16]) -> S {
        self.check_exponent(expo);
        self.coeffs.get(expo).cloned().unwrap_or_else(S::zero)
    }

    /// Adds `c` to the coefficient of `expo`, keeping the map normalized.
    pub fn add_term(&mut self, expo: Vec<u16>, c: S) {
        self.check_exponent(&expo);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(expo);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Deterministic iteration in ascending lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &S)> {
        self.coeffs.iter()
    }

    /// The lexicographically greatest exponent vector with nonzero
    /// coefficient (the leading monomial in the t1-major reading order).
    pub fn leading_exponent(&self) -> Option<&Vec<u16>> {
        self.coeffs.keys().next_back()
    }

    pub fn scalar_mul(&self, k: &S) -> Self {
        if k.is_zero() {
            return Self::zero(self.num_vars, self.degree);
        }
        HomogeneousPoly {
            num_vars: self.num_vars,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scalar_mul(&-S::one()))
    }

    /// Polynomial product (degrees add).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = Self::zero(self.num_vars, self.degree + other.degree);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let expo: Vec<u16> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(expo, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// `self^n` by repeated multiplication (`n = 0` gives the constant 1).
    pub fn pow(&self, n: u32) -> Self {
        if n == 0 {
            return Self::from_terms(self.num_vars, 0, [(vec![0; self.num_vars], S::one())]);
        }
        let mut out = self.clone();
        for _ in 1..n {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to variable `i` (degree drops by one).
    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(i < self.num_vars);
        assert!(self.degree > 0, "derivative of a constant");
        let mut out = Self::zero(self.num_vars, self.degree - 1);
        for (e, c) in self.terms() {
            if e[i] == 0 {
                continue;
            }
            let mut expo = e.clone();
            expo[i] -= 1;
            out.add_term(expo, S::from_int(e[i] as i64) * c.clone());
        }
        out
    }

    /// Evaluation at a point.
    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.num_vars);
        let mut acc = S::zero();
        for (e, c) in self.terms() {
            let mut term = c.clone();
            for (x, &p) in point.iter().zip(e.iter()) {
                for _ in 0..p {
                    term = term * x.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Maps coefficients into another scalar type, dropping zeros.
    pub fn convert<T: Scalar>(&self, f: impl Fn(&S) -> T) -> HomogeneousPoly<T> {
        HomogeneousPoly {
            num_vars: self.num_vars,
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .filter_map(|(e, c)| {
                    let t = f(c);
                    if t.is_zero() {
                        None
                    } else {
                        Some((e.clone(), t))
                    }
                })
                .collect(),
        }
    }

    /// Largest coefficient magnitude (tolerance scale for float backends).
    pub fn max_mag(&self) -> f64 {
        self.coeffs.values().map(Scalar::mag).fold(0.0, f64::max)
    }
}

/// All exponent vectors of length `num_vars` summing to `degree`, in
/// ascending lexicographic order (the `BTreeMap` key order).
pub fn exponents_of_degree(num_vars: usize, degree: u32) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut current = vec![0u16; num_vars];
    fill(&mut out, &mut current, 0, degree);
    out.sort();
    out
}

fn fill(out: &mut Vec<Vec<u16>>, current: &mut Vec<u16>, pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining as u16;
        out.push(current.clone());
        current[pos] = 0;
        return;
    }
    for e in 0..=remaining {
        current[pos] = e as u16;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

/// Multinomial coefficient `(sum e_i)! / prod e_i!` as an i64 (desk-scale
/// degrees only; panics on overflow in debug builds).
pub fn multinomial(expo: &[u16]) -> i64 {
    let mut result: i64 = 1;
    let mut total: i64 = 0;
    for &e in expo {
        for i in 1..=e as i64 {
            total += 1;
            result = result * total / i;
        }
    }
    result
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
    fn eval_matches_direct_expansion() {
        // p = 2 t0^2 + 3 t0 t1 - t1^2
        let p = HomogeneousPoly::from_terms(
            2,
            2,
            [
                (vec![2, 0], int(2)),
                (vec![1, 1], int(3)),
                (vec![0, 2], int(-1)),
            ],
        );
        let (x, y) = (int(5), int(-7));
        let direct = int(2) * x.clone() * x.clone()
            + int(3) * x.clone() * y.clone()
            - y.clone() * y.clone();
        assert_eq!(p.eval(&[x, y]), direct);
    }

    #[test]
    fn product_adds_degrees_and_distributes() {
        let p = HomogeneousPoly::from_terms(2, 1, [(vec![1, 0], int(1)), (vec![0, 1], int(1))]);
        let sq = p.mul(&p);
        assert_eq!(sq.degree(), 2);
        assert_eq!(sq.coeff(&[2, 0]), int(1));
        assert_eq!(sq.coeff(&[1, 1]), int(2));
        assert_eq!(sq.coeff(&[0, 2]), int(1));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let p = HomogeneousPoly::from_terms(2, 1, [(vec![1, 0], int(2)), (vec![0, 1], int(-1))]);
        assert_eq!(p.pow(3), p.mul(&p).mul(&p));
        assert_eq!(p.pow(0).coeff(&[0, 0]), int(1));
    }

    #[test]
    fn derivative_drops_degree() {
        // d/dt0 (t0^2 t1) = 2 t0 t1
        let p = HomogeneousPoly::from_terms(2, 3, [(vec![2, 1], int(1))]);
        let d = p.partial_derivative(0);
        assert_eq!(d.degree(), 2);
        assert_eq!(d.coeff(&[1, 1]), int(2));
        // d/dt1 (t0^2 t1) = t0^2
        let d1 = p.partial_derivative(1);
        assert_eq!(d1.coeff(&[2, 0]), int(1));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = HomogeneousPoly::from_terms(1, 2, [(vec![2], int(5))]);
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(q.num_terms(), 0);
    }

    #[test]
    fn exponent_enumeration_is_complete_and_sorted() {
        let e = exponents_of_degree(3, 2);
        assert_eq!(e.len(), 6); // C(3+2-1, 2)
        let mut sorted = e.clone();
        sorted.sort();
        assert_eq!(e, sorted);
        assert!(e.contains(&vec![0, 0, 2]));
        assert!(e.contains(&vec![2, 0, 0]));
        assert!(e.contains(&vec![1, 1, 0]));
    }

    #[test]
    fn leading_exponent_is_lex_greatest() {
        let p = HomogeneousPoly::from_terms(
            3,
            2,
            [(vec![0, 1, 1], int(4)), (vec![1, 0, 1], int(2))],
        );
        assert_eq!(p.leading_exponent(), Some(&vec![1, 0, 1]));
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[2, 0, 0]), 1);
        assert_eq!(multinomial(&[1, 1, 0]), 2);
        assert_eq!(multinomial(&[2, 2]), 6);
        assert_eq!(multinomial(&[1, 1, 1, 1]), 24);
        assert_eq!(multinomial(&[4]), 1);
    }
}
