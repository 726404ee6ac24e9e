//! Sweep execution: ordered map over a case list, parallel when the
//! `parallel` feature is on and more than one job is requested.
//!
//! Collection preserves enumeration order, so results are identical for
//! any job count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub(crate) fn map_ordered<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("failed to build worker pool");
        return pool.install(|| items.par_iter().map(&f).collect());
    }
    let _ = jobs;
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_independent_of_jobs() {
        let items: Vec<u64> = (0..10_000).collect();
        let seq = map_ordered(&items, 1, |&x| x * x);
        let par = map_ordered(&items, 8, |&x| x * x);
        assert_eq!(seq, par);
    }
}
