//! Order-preserving map over an index range, parallel when the `rayon`
//! feature is enabled. Callers reduce the returned vector sequentially, so
//! results are bit-identical with and without parallelism.

use alloc::vec::Vec;

#[cfg(feature = "rayon")]
pub(crate) fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "rayon"))]
pub(crate) fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
