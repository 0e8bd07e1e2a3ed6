//! Work distribution for the data-parallel inner loops.
//!
//! With the `parallel` feature (default) these helpers fan out through
//! rayon; without it they degenerate to plain sequential iteration. Grids
//! below [`PAR_MIN_LEN`] stay sequential either way: a rayon dispatch costs
//! more than a sweep over a few thousand nodes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;

/// Smallest buffer worth a parallel dispatch.
pub(crate) const PAR_MIN_LEN: usize = 1 << 13;

/// Builds a value per index.
pub(crate) fn map_indexed<F>(len: usize, f: F) -> Vec<f64>
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if len >= PAR_MIN_LEN {
        return (0..len).into_par_iter().map(f).collect();
    }
    (0..len).map(f).collect()
}

/// Applies `f` to equal-length chunks of `data` (chunk index, chunk).
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if data.len() >= PAR_MIN_LEN {
        data.par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(i, c)| f(i, c));
        return;
    }
    data.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
}

/// Maps a fallible function over items, preserving order. Always parallel
/// when the feature is on: callers hand this coarse-grained work (whole
/// trajectory slices, whole experiment runs).
pub(crate) fn try_map<T, U, F>(items: &[T], f: F) -> Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Maps a fallible function over an index range, preserving order.
pub(crate) fn try_map_range<U, F>(len: usize, f: F) -> Result<Vec<U>>
where
    U: Send,
    F: Fn(usize) -> Result<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..len).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).map(f).collect()
    }
}
