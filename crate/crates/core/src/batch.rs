//! Data-parallel helpers for the randomised identity sweeps and Gram
//! computations. With the default `parallel` feature the batched map runs on
//! rayon; without it the same call is a plain sequential iteration. Both
//! entry points preserve input order, so results are deterministic either
//! way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Sequential map, always available; the baseline the benchmarks compare
/// against.
pub fn map_seq<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    items.iter().map(f).collect()
}

/// Explicit rayon map.
#[cfg(feature = "parallel")]
pub fn map_par<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.par_iter().map(f).collect()
}

/// Batched map used by the suites: parallel when the feature is on.
#[cfg(feature = "parallel")]
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    map_par(items, f)
}

/// Batched map used by the suites: sequential fallback.
#[cfg(not(feature = "parallel"))]
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    map_seq(items, f)
}
