//! The Pfaffian polynomial of a span: `p(t₁..t_k) = Pf(Σ tᵢωᵢ)`.

use super::{KsymplecticError, TwoFormSpan};
use crate::exec::par_map;
use crate::linalg::{exponents_of_degree, pfaffian, solve_square, HomogeneousPoly, Mat};
use crate::scalar::Scalar;

/// Computes the degree-`2n` homogeneous polynomial `p(t) = Pf(Σ tᵢωᵢ)` in
/// the span's `k` coefficients, where `dim V = 4n`.
///
/// The coefficients are interpolated: the Pfaffian is evaluated at every
/// integer grid point `α` with `|α| = 2n` (one per monomial), and the
/// resulting square linear system on the monomial basis is solved. That grid
/// is a scaled principal lattice of the simplex, which is poised for
/// degree-`2n` interpolation, so the design matrix is always invertible.
/// Evaluations run through the data-parallel map.
pub fn pfaffian_polynomial<S: Scalar>(
    span: &TwoFormSpan<S>,
) -> Result<HomogeneousPoly<S>, KsymplecticError> {
    let dim_v = span.dim_v();
    if !dim_v.is_multiple_of(4) {
        return Err(KsymplecticError::DimensionNotMultipleOf4(dim_v));
    }
    let k = span.k();
    let degree = (dim_v / 2) as u32;
    let nodes = exponents_of_degree(k, degree);
    let count = nodes.len();

    let values: Vec<S> = par_map(&nodes, |node| {
        let coeffs: Vec<S> = node.iter().map(|&a| S::from_int(a as i64)).collect();
        let m = span.combine(&coeffs);
        pfaffian(&m).expect("span forms are square, antisymmetric, and even-dimensional")
    });

    if values.iter().all(S::is_zero) {
        // Every grid evaluation vanishes and the grid is poised, so p ≡ 0.
        return Ok(HomogeneousPoly::zero(k, degree));
    }

    // Design matrix: row per node, column per monomial, entry node^monomial.
    let design = Mat::from_fn(count, count, |i, j| {
        let mut acc = S::one();
        for (v, &e) in nodes[j].iter().enumerate() {
            for _ in 0..e {
                acc = acc * S::from_int(nodes[i][v] as i64);
            }
        }
        acc
    });
    let rhs = Mat::from_fn(count, 1, |i, _| values[i].clone());
    let solved = solve_square(&design, &rhs)
        .expect("principal-lattice design matrix is invertible");

    Ok(HomogeneousPoly::from_terms(
        k,
        degree,
        nodes
            .into_iter()
            .enumerate()
            .map(|(j, expo)| (expo, solved[(j, 0)].clone())),
    ))
}
