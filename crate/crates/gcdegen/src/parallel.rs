//! Sequential/parallel switch for batch sweeps.
//!
//! Every sweep in this crate maps a pure function over an index set and
//! collects the results in input order, so the parallel and sequential
//! paths are observationally identical. With the `parallel` feature (on by
//! default) [`map_collect`] runs on the current rayon thread pool; without
//! it, it is an alias for the plain sequential loop.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving input order in the output.
#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

/// Maps `f` over `items`, preserving input order in the output.
#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Sequential reference path, kept available unconditionally so benchmarks
/// can compare it against [`map_collect`] under the `parallel` feature.
pub fn map_collect_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
