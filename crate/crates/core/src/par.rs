//! Execution strategy for the data-parallel loops.
//!
//! With the `parallel` feature the batch loops (unit-vector expansion of a
//! program, per-source rising chain counting, join/meet table rows) run on
//! the rayon pool. Without it, or with [`Strategy::Sequential`], they run in
//! a plain loop. Both paths produce identical results.

/// How a batch loop is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    /// Falls back to sequential when the crate is built without `parallel`.
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// Evaluates `f(0..n)` and collects the results in index order.
    pub(crate) fn map_indices<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            Strategy::Sequential => (0..n).map(f).collect(),
            Strategy::Parallel => parallel_map(n, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let seq = Strategy::Sequential.map_indices(1000, |i| i * i);
        let par = Strategy::Parallel.map_indices(1000, |i| i * i);
        assert_eq!(seq, par);
    }
}
