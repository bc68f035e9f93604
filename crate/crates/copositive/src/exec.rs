//! Execution strategy for the enumeration loops: data-parallel under the
//! `parallel` feature, plain iteration otherwise. Output order matches the
//! index order either way, so results are deterministic.

#[cfg(feature = "parallel")]
pub(crate) fn filter_map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    use rayon::prelude::*;
    (0..count).into_par_iter().filter_map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn filter_map_indexed<T, F>(count: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> Option<T>,
{
    (0..count).filter_map(f).collect()
}
