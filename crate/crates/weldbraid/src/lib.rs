//! Exact computational algebra for welded and virtual braids: finite groups
//! and groupoids, biracks and bikoids, crossed-module towers, and evaluation
//! of braid words as exact linear operators on tensor powers of
//! groupoid-algebra representations. All arithmetic is exact (integer indices
//! and arbitrary-precision rationals); every structure ships with an
//! exhaustive verifier that reports the first counterexample it finds.

pub mod core_algebra;
pub mod groupoid;
pub mod birack;
pub mod bikoid;
pub mod crossed_module;
pub mod representation;
pub mod braid_engine;
pub mod topology_oracle;
pub mod catalog;

pub use core_algebra::Violation;

/// Scans `0..len` for a violation, returning the first one found.
///
/// With the `parallel` feature the scan is data-parallel but still reports
/// the earliest-index witness; without it the scan is sequential.
pub(crate) fn scan_range<F>(len: usize, f: F) -> Option<Violation>
where
    F: Fn(usize) -> Option<Violation> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..len).into_par_iter().find_map_first(|i| f(i))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).find_map(f)
    }
}

/// Tests a predicate over `0..len`, returning whether all indices satisfy it.
pub(crate) fn all_range<F>(len: usize, f: F) -> bool
where
    F: Fn(usize) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..len).into_par_iter().all(|i| f(i))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..len).all(f)
    }
}
