//! Data-parallel map helpers with a sequential fallback.
//!
//! The heavy inner loops — Pfaffian evaluations on the interpolation grid and
//! null-cone sample checks — are independent per item, so they run through
//! [`par_map`]. With the `parallel` feature (default) the work is spread over
//! the rayon pool; without it the same call degrades to a plain sequential
//! map. Results are collected in input order either way, so outputs are
//! identical across both modes and across thread counts.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, in parallel when the `parallel` feature is active.
/// Output order always matches input order.
#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Maps `f` over `items`, in parallel when the `parallel` feature is active.
/// Output order always matches input order.
#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Like [`par_map`] over an index range `0..len`.
pub fn par_map_indexed<U, F>(len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    let indices: Vec<usize> = (0..len).collect();
    par_map(&indices, |i| f(*i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_input_order() {
        let items: Vec<u64> = (0..1000).collect();
        let out = par_map(&items, |x| x * x);
        assert_eq!(out, items.iter().map(|x| x * x).collect::<Vec<_>>());
    }

    #[test]
    fn indexed_variant_matches() {
        assert_eq!(par_map_indexed(5, |i| i + 1), vec![1, 2, 3, 4, 5]);
    }
}
