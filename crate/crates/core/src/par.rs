//! Data-parallel execution facade.
//!
//! With the `parallel` feature (default) the helpers fan work out over
//! rayon; without it they run plain sequential loops. Both lanes produce
//! bit-identical results: work is only ever split across independent
//! output elements, and every per-element accumulation keeps its fixed
//! left-to-right order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, collecting results in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..n`, collecting results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_indexed<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync,
{
    (0..n).map(f).collect()
}

/// Maps `f` over a slice, collecting results in input order.
pub fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    map_indexed(items.len(), |i| f(&items[i]))
}

/// Runs `f(chunk_index, chunk)` over consecutive equal-size chunks of `buf`.
///
/// Each chunk is written by exactly one invocation, so splitting across
/// threads cannot change any accumulation order.
#[cfg(feature = "parallel")]
pub fn for_each_chunk_mut<F>(buf: &mut [f32], chunk: usize, f: F)
where
    F: Fn(usize, &mut [f32]) + Sync,
{
    buf.par_chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
}

/// Runs `f(chunk_index, chunk)` over consecutive equal-size chunks of `buf`.
#[cfg(not(feature = "parallel"))]
pub fn for_each_chunk_mut<F>(buf: &mut [f32], chunk: usize, f: F)
where
    F: Fn(usize, &mut [f32]) + Sync,
{
    buf.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
}

/// Always-sequential twin of [`for_each_chunk_mut`]; kept unconditionally
/// so tests and benches can compare the two lanes.
pub fn for_each_chunk_mut_seq<F>(buf: &mut [f32], chunk: usize, f: F)
where
    F: Fn(usize, &mut [f32]) + Sync,
{
    buf.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
}
