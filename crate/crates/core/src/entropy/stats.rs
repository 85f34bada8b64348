use rayon::prelude::*;
use serde::Serialize;

use crate::hypergraph::{Hypergraph, ListAssignment};

use super::{run_variant, DrawSequence, RunError, RunOptions, Variant};

/// Iteration counts of independent seeded runs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IterationStats {
    /// Seeds `seed_base, seed_base + 1, …` in trial order.
    pub seeds: Vec<u64>,
    pub counts: Vec<u64>,
    /// Trials that hit the iteration cap.
    pub exhausted: usize,
    pub mean: f64,
    pub max: u64,
}

/// Runs `trials` independent runs with draws from `1..=r`, seeds
/// `seed_base + t`, on at most `threads` worker threads (all available when
/// `None`). The result does not depend on the thread count.
#[allow(clippy::too_many_arguments)]
pub fn iteration_stats(
    h: &Hypergraph,
    lists: &ListAssignment,
    variant: Variant<'_>,
    r: usize,
    trials: usize,
    seed_base: u64,
    options: RunOptions,
    threads: Option<usize>,
) -> Result<IterationStats, RunError> {
    let seeds: Vec<u64> = (0..trials as u64)
        .map(|t| seed_base.wrapping_add(t))
        .collect();
    let one = |seed: u64| -> Result<(u64, bool), RunError> {
        let draws = DrawSequence::seeded(seed, r)?;
        let res = run_variant(h, lists, variant, &draws, options)?;
        Ok((res.iterations, res.is_complete()))
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t.max(1));
    }
    let pool = builder.build().map_err(|e| RunError::InvariantViolated {
        iteration: 0,
        detail: e.to_string(),
    })?;
    let results: Vec<(u64, bool)> =
        pool.install(|| seeds.par_iter().map(|&s| one(s)).collect::<Result<_, _>>())?;

    let counts: Vec<u64> = results.iter().map(|r| r.0).collect();
    let exhausted = results.iter().filter(|r| !r.1).count();
    let mean = if counts.is_empty() {
        0.0
    } else {
        counts.iter().sum::<u64>() as f64 / counts.len() as f64
    };
    let max = counts.iter().copied().max().unwrap_or(0);
    Ok(IterationStats {
        seeds,
        counts,
        exhausted,
        mean,
        max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conflict_free_instance_takes_n_iterations() {
        let h = Hypergraph::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let lists = ListAssignment::uniform(6, 3);
        let s = iteration_stats(
            &h,
            &lists,
            Variant::Sets,
            3,
            20,
            5,
            RunOptions::default(),
            Some(2),
        )
        .unwrap();
        assert!(s.counts.iter().all(|&c| c == 6));
        assert_eq!(s.mean, 6.0);
        assert_eq!(s.exhausted, 0);
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
        let lists = ListAssignment::uniform(5, 4);
        let opts = RunOptions {
            max_iters: Some(10_000),
            audit: false,
        };
        let a = iteration_stats(&h, &lists, Variant::Multisets, 4, 16, 100, opts, Some(1)).unwrap();
        let b = iteration_stats(&h, &lists, Variant::Multisets, 4, 16, 100, opts, Some(4)).unwrap();
        assert_eq!(a, b);
    }
}
