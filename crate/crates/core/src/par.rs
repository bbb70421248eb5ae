//! Data-parallel helpers.
//!
//! With the `parallel` feature (on by default) these dispatch to rayon; without
//! it, or when [`Execution::Sequential`] is requested, they run on the calling
//! thread. Results are always returned in input order.

/// How a batch of independent computations is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Parallel,
    Sequential,
}

impl Execution {
    /// True when work will actually be spread over a thread pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `source` into a vector, preserving order.
pub fn map_collect<T, R, F>(exec: Execution, source: &[T], map_op: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return source.par_iter().map(map_op).collect();
    }
    let _ = exec;
    source.iter().map(map_op).collect()
}

/// Map-reduce with an associative, commutative `reduce_op`.
pub fn map_reduce<T, R, FM, FD, FR>(
    exec: Execution,
    source: &[T],
    map_op: FM,
    default_op: FD,
    reduce_op: FR,
) -> R
where
    T: Sync,
    R: Send,
    FM: Fn(&T) -> R + Sync + Send,
    FD: Fn() -> R + Sync + Send,
    FR: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return source.par_iter().map(map_op).reduce(default_op, reduce_op);
    }
    let _ = exec;
    source.iter().map(map_op).fold(default_op(), reduce_op)
}

/// Caps the global pool at `threads` workers. Only the first call has an
/// effect; later calls (or calls after the pool was used) are ignored.
pub fn configure_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let p = map_collect(Execution::Parallel, &xs, |x| x * x);
        let s = map_collect(Execution::Sequential, &xs, |x| x * x);
        assert_eq!(p, s);
        let sum_p = map_reduce(Execution::Parallel, &xs, |x| *x, || 0, |a, b| a + b);
        let sum_s = map_reduce(Execution::Sequential, &xs, |x| *x, || 0, |a, b| a + b);
        assert_eq!(sum_p, 499500);
        assert_eq!(sum_s, 499500);
    }
}
