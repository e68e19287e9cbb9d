//! Exhaustive enumeration of S_n in lexicographic order, with ranking and
//! unranking in the factorial number system.
//!
//! Sweeps over S_n are embarrassingly parallel: the rank space `0..n!` is
//! split into chunks, each chunk is folded independently starting from
//! `unrank`, and the partial results are merged in chunk order. With the
//! `parallel` feature the chunks run on a rayon pool; without it they run
//! sequentially on the calling thread. Results are identical either way,
//! and identical for every thread count, because the chunk boundaries and
//! the merge order do not depend on the number of workers.

use crate::error::Error;
use crate::perm::Permutation;

/// Default cap on exhaustive enumeration: 10! is about 3.6M words, the
/// practical ceiling for per-permutation pattern counting at a desk.
pub const DEFAULT_CAP: usize = 10;

/// Largest n with n! representable in u64.
pub const MAX_FACTORIAL_N: usize = 20;

/// Controls for exhaustive sweeps.
#[derive(Debug, Clone)]
pub struct SweepOptions {
    /// Refuse enumeration beyond this length.
    pub cap: usize,
    /// Number of worker threads; `None` uses the default pool. Ignored
    /// without the `parallel` feature.
    pub jobs: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { cap: DEFAULT_CAP, jobs: None }
    }
}

impl SweepOptions {
    pub fn with_cap(cap: usize) -> Self {
        SweepOptions { cap, ..Self::default() }
    }

    pub fn check(&self, n: usize) -> Result<(), Error> {
        if n > self.cap {
            return Err(Error::CapExceeded { n, cap: self.cap });
        }
        factorial(n).map(|_| ())
    }
}

pub fn factorial(n: usize) -> Result<u64, Error> {
    if n > MAX_FACTORIAL_N {
        return Err(Error::FactorialOverflow { n });
    }
    Ok((1..=n as u64).product())
}

/// The r-th permutation of length n in lexicographic order.
pub fn unrank(n: usize, r: u64) -> Result<Permutation, Error> {
    let total = factorial(n)?;
    if r >= total {
        return Err(Error::RankOutOfRange { n, rank: r });
    }
    let mut available: Vec<u32> = (1..=n as u32).collect();
    let mut word = Vec::with_capacity(n);
    let mut rest = r;
    let mut radix = total;
    for i in 0..n {
        radix /= (n - i) as u64;
        let digit = (rest / radix) as usize;
        rest %= radix;
        word.push(available.remove(digit));
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// Position of `p` within the lexicographic order of S_n.
pub fn rank(p: &Permutation) -> u64 {
    let n = p.len();
    let word = p.word();
    let mut r = 0u64;
    let mut radix = factorial(n).expect("permutation length within factorial range");
    for i in 0..n {
        radix /= (n - i) as u64;
        let smaller_later = word[i + 1..].iter().filter(|&&v| v < word[i]).count() as u64;
        r += smaller_later * radix;
    }
    r
}

/// Iterator over all of S_n in lexicographic order.
pub struct LexIter {
    next: Option<Vec<u32>>,
}

impl Iterator for LexIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let word = self.next.take()?;
        let mut succ = word.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_word_unchecked(word))
    }
}

/// Yields each of the n! permutations exactly once, identity first,
/// decreasing word last.
pub fn iter_all(n: usize, cap: usize) -> Result<LexIter, Error> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    factorial(n)?;
    Ok(LexIter { next: Some((1..=n as u32).collect()) })
}

/// Advance to the lexicographic successor in place; false at the last word.
fn next_permutation(word: &mut [u32]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| word[i] < word[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).expect("suffix has a larger entry");
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

/// Fold every permutation of S_n into accumulators created by `make`,
/// merging partial accumulators in rank order. `merge` must be associative
/// with `make()` as identity.
pub fn sweep_fold<A, Make, Fold, Merge>(
    n: usize,
    opts: &SweepOptions,
    make: Make,
    fold: Fold,
    merge: Merge,
) -> Result<A, Error>
where
    A: Send,
    Make: Fn() -> A + Sync,
    Fold: Fn(&mut A, &Permutation) + Sync,
    Merge: Fn(A, A) -> A,
{
    opts.check(n)?;
    let total = factorial(n)?;
    let bounds = chunk_bounds(total);

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let run = || {
            bounds
                .par_iter()
                .map(|&(start, end)| fold_rank_range(n, start, end, &make, &fold))
                .collect::<Vec<A>>()
        };
        let parts = match opts.jobs {
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .expect("thread pool")
                .install(run),
            None => run(),
        };
        Ok(parts.into_iter().fold(make(), &merge))
    }

    #[cfg(not(feature = "parallel"))]
    {
        let parts: Vec<A> = bounds
            .iter()
            .map(|&(start, end)| fold_rank_range(n, start, end, &make, &fold))
            .collect();
        Ok(parts.into_iter().fold(make(), &merge))
    }
}

/// Sequential reference sweep; always single-threaded regardless of
/// features. The benchmark suite compares this against [`sweep_fold`].
pub fn sweep_fold_seq<A, Make, Fold>(
    n: usize,
    opts: &SweepOptions,
    make: Make,
    fold: Fold,
) -> Result<A, Error>
where
    Make: Fn() -> A,
    Fold: Fn(&mut A, &Permutation),
{
    opts.check(n)?;
    let mut acc = make();
    for p in iter_all(n, opts.cap)? {
        fold(&mut acc, &p);
    }
    Ok(acc)
}

fn fold_rank_range<A, Make, Fold>(n: usize, start: u64, end: u64, make: &Make, fold: &Fold) -> A
where
    Make: Fn() -> A,
    Fold: Fn(&mut A, &Permutation),
{
    let mut acc = make();
    let first = unrank(n, start).expect("chunk bounds are in range");
    let mut word = first.word().to_vec();
    for r in start..end {
        let p = Permutation::from_word_unchecked(word.clone());
        fold(&mut acc, &p);
        if r + 1 < end {
            next_permutation(&mut word);
        }
    }
    acc
}

/// Split `0..total` into at most 256 contiguous chunks. Boundaries depend
/// only on `total`, so merged results are reproducible across thread counts.
fn chunk_bounds(total: u64) -> Vec<(u64, u64)> {
    if total == 0 {
        return vec![(0, 0)];
    }
    let chunk = (total / 256).max(1);
    let mut bounds = Vec::new();
    let mut start = 0;
    while start < total {
        let end = (start + chunk).min(total);
        bounds.push((start, end));
        start = end;
    }
    bounds
}
