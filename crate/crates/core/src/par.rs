//! Index-ordered map over a range, parallel when the `parallel` feature is
//! enabled. Output order is always by index, never by completion order.

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<O, F>(len: usize, f: F) -> Vec<O>
where
    O: Send,
    F: Fn(usize) -> O + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<O, F>(len: usize, f: F) -> Vec<O>
where
    O: Send,
    F: Fn(usize) -> O + Sync + Send,
{
    (0..len).map(f).collect()
}
