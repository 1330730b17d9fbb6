//! Execution policy for the data-parallel loops (enumeration folds and
//! Monte Carlo streams).
//!
//! With the `parallel` feature the work items run on the rayon pool; without
//! it, or with [`Exec::Sequential`], they run in order on the calling thread.
//! Results are always combined in item order, so both policies give
//! bit-identical answers.

/// How to run a batch of independent work items.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// `true` when this policy really fans out (feature enabled and policy parallel).
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps every item and returns the outputs in item order.
    pub fn map<T, U, F>(self, items: Vec<T>, f: F) -> Vec<U>
    where
        T: Send,
        U: Send,
        F: Fn(T) -> U + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }
}
