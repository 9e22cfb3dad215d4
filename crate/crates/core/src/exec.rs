//! Deterministic data-parallel helpers.
//!
//! Every helper maps over an indexed set of chunks, collects the per-chunk
//! results *in index order*, and folds them sequentially. The fold order is
//! therefore independent of thread scheduling, so floating-point outputs are
//! bit-identical between parallel and sequential runs of the same build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `0..n` through `f` (in parallel when built with the `parallel`
/// feature), returning results in index order.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential twin of [`map_indexed`], available in every build; the bench
/// suite compares the two.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Split `0..total` into `chunks` half-open ranges of near-equal size.
pub fn split_ranges(total: u64, chunks: usize) -> Vec<(u64, u64)> {
    let chunks = chunks.max(1) as u64;
    let base = total / chunks;
    let rem = total % chunks;
    let mut out = Vec::with_capacity(chunks as usize);
    let mut start = 0;
    for i in 0..chunks {
        let len = base + u64::from(i < rem);
        out.push((start, start + len));
        start += len;
    }
    out
}

/// Number of chunks to split an enumeration into.
pub fn default_chunks() -> usize {
    #[cfg(feature = "parallel")]
    {
        4 * rayon::current_num_threads().max(1)
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Map every range of `0..total` through `map` and fold the per-range
/// results in range order.
pub fn fold_ranges<T, A, M, F>(total: u64, map: M, fold: F, init: A) -> A
where
    T: Send,
    M: Fn(u64, u64) -> T + Sync + Send,
    F: FnMut(A, T) -> A,
{
    let ranges = split_ranges(total, default_chunks());
    let parts = map_indexed(ranges.len(), |i| {
        let (lo, hi) = ranges[i];
        map(lo, hi)
    });
    parts.into_iter().fold(init, fold)
}

/// Sequential twin of [`fold_ranges`].
pub fn fold_ranges_seq<T, A, M, F>(total: u64, map: M, fold: F, init: A) -> A
where
    M: Fn(u64, u64) -> T,
    F: FnMut(A, T) -> A,
{
    let ranges = split_ranges(total, default_chunks());
    let parts: Vec<T> = ranges.iter().map(|&(lo, hi)| map(lo, hi)).collect();
    parts.into_iter().fold(init, fold)
}

/// Numerically careful log(exp(a) + exp(b)).
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// Streaming log-sum-exp accumulator; merging two accumulators is associative,
/// which makes it the reduction type for enumeration ranges.
#[derive(Clone, Copy, Debug)]
pub struct LogSum {
    log_sum: f64,
}

impl Default for LogSum {
    fn default() -> Self {
        LogSum {
            log_sum: f64::NEG_INFINITY,
        }
    }
}

impl LogSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_log(&mut self, log_term: f64) {
        self.log_sum = log_add_exp(self.log_sum, log_term);
    }

    pub fn merge(&mut self, other: LogSum) {
        self.log_sum = log_add_exp(self.log_sum, other.log_sum);
    }

    /// log of the accumulated sum; −∞ when empty.
    pub fn value(&self) -> f64 {
        self.log_sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_cover_everything() {
        let r = split_ranges(10, 3);
        assert_eq!(r, vec![(0, 4), (4, 7), (7, 10)]);
        let r = split_ranges(2, 8);
        assert_eq!(r.iter().map(|(a, b)| b - a).sum::<u64>(), 2);
    }

    #[test]
    fn log_sum_matches_direct() {
        let mut acc = LogSum::new();
        for x in [0.5, -1.0, 3.0, 3.0] {
            acc.add_log(x);
        }
        let direct: f64 = [0.5f64, -1.0, 3.0, 3.0].iter().map(|x| x.exp()).sum();
        assert!((acc.value() - direct.ln()).abs() < 1e-12);
    }

    #[test]
    fn parallel_and_sequential_fold_agree_bitwise() {
        let map = |lo: u64, hi: u64| {
            let mut s = LogSum::new();
            for i in lo..hi {
                s.add_log((i as f64).sin());
            }
            s
        };
        let fold = |mut a: LogSum, b: LogSum| {
            a.merge(b);
            a
        };
        let p = fold_ranges(10_000, map, fold, LogSum::new()).value();
        let s = fold_ranges_seq(10_000, map, fold, LogSum::new()).value();
        assert_eq!(p.to_bits(), s.to_bits());
    }
}
