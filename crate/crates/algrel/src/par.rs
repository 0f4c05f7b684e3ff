//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (the default) the heavy inner loops run on
//! rayon. Chunk boundaries and the merge order are fixed, so results are
//! identical bit for bit in both modes.

use std::ops::Range;

pub(crate) const CHUNK: u64 = 1 << 16;

/// Splits `0..total` into fixed-size chunks, maps each chunk and folds the
/// results in chunk order.
#[cfg(feature = "parallel")]
pub(crate) fn map_reduce_ranges<T, F, R>(total: u64, map: F, reduce: R, identity: T) -> T
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync + Send,
    R: Fn(T, T) -> T,
{
    use rayon::prelude::*;
    let chunks: Vec<Range<u64>> = split(total);
    let parts: Vec<T> = chunks.into_par_iter().map(map).collect();
    parts.into_iter().fold(identity, reduce)
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_reduce_ranges<T, F, R>(total: u64, map: F, reduce: R, identity: T) -> T
where
    T: Send,
    F: Fn(Range<u64>) -> T + Sync + Send,
    R: Fn(T, T) -> T,
{
    split(total).into_iter().map(map).fold(identity, reduce)
}

fn split(total: u64) -> Vec<Range<u64>> {
    let mut chunks = Vec::with_capacity((total / CHUNK + 1) as usize);
    let mut lo = 0;
    while lo < total {
        let hi = (lo + CHUNK).min(total);
        chunks.push(lo..hi);
        lo = hi;
    }
    chunks
}

/// Maps the items of a vector, in parallel when enabled, preserving order.
#[cfg(feature = "parallel")]
pub(crate) fn map_vec<I, T, F>(items: Vec<I>, map: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(map).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_vec<I, T, F>(items: Vec<I>, map: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    items.into_iter().map(map).collect()
}
