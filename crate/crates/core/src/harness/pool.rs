//! Replication-level parallelism.

use rayon::prelude::*;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "GRAFEN_WORKERS";

/// Worker count from [`WORKERS_ENV`], else the available parallelism.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Evaluates `job(0..count)` on a pool of `workers` threads and returns the
/// results in index order, whatever order they finished in.
pub fn run_indexed<T, F>(count: usize, workers: usize, job: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    let workers = workers.max(1);
    if workers == 1 {
        return (0..count).map(job).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("failed to start worker pool");
    pool.install(|| (0..count).into_par_iter().map(job).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let out = run_indexed(200, 4, |i| {
            // uneven work so completion order differs from index order
            let mut x = 0u64;
            for k in 0..((200 - i) * 500) as u64 {
                x = x.wrapping_add(k * k);
            }
            (i, x)
        });
        assert!(out.iter().enumerate().all(|(i, &(j, _))| i == j));
        assert_eq!(out, run_indexed(200, 1, |i| {
            let mut x = 0u64;
            for k in 0..((200 - i) * 500) as u64 {
                x = x.wrapping_add(k * k);
            }
            (i, x)
        }));
    }

    #[test]
    fn empty_job_list() {
        assert!(run_indexed(0, 3, |i| i).is_empty());
    }
}
