//! Execution strategy for the data-parallel kernels.
//!
//! With the `parallel` feature (on by default) the row-block loops in the
//! linear algebra and the sums over group elements run on the rayon pool.
//! Without it every kernel runs sequentially; results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a kernel distributes its independent work items.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Exec::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Apply `f` to every `chunk`-sized row of `data`, passing the row index.
    pub(crate) fn rows_mut<T, F>(self, data: &mut [T], chunk: usize, f: F)
    where
        T: Send,
        F: Fn(usize, &mut [T]) + Sync + Send,
    {
        if chunk == 0 {
            return;
        }
        match self {
            Exec::Sequential => data.chunks_mut(chunk).enumerate().for_each(|(i, r)| f(i, r)),
            #[cfg(feature = "parallel")]
            Exec::Parallel => data.par_chunks_mut(chunk).enumerate().for_each(|(i, r)| f(i, r)),
        }
    }

    /// Map every item independently and collect in input order.
    pub(crate) fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
        }
    }

    /// Map-reduce with an associative `combine`; `identity` must be neutral.
    pub(crate) fn map_reduce<T, R, F, I, C>(self, items: &[T], identity: I, f: F, combine: C) -> R
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
        I: Fn() -> R + Sync + Send,
        C: Fn(R, R) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).fold(identity(), combine),
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).reduce(identity, combine),
        }
    }
}
