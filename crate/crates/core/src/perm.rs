//! Permutations in one-line notation and their classical statistics.
//!
//! Positions and values are 1-based throughout, and the empty permutation
//! is admitted with every statistic equal to 0. The statistics are
//!
//! - `exc`: positions i with pi(i) > i
//! - `inv`: pairs j < i with pi(j) > pi(i)
//! - `rec` / `arec`: left-to-right maxima / right-to-left minima
//! - `erec` / `earec`: records that are not antirecords, and vice versa
//! - `rar`: positions that are both (pivots)
//! - `succ`: positions i > 1 with pi(i) = pi(i-1) + 1

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is a bijection on `{1..len}`.
    pub fn from_word(values: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let word = values.into();
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (idx, &v) in word.iter().enumerate() {
            if v == 0 || v as usize > n {
                return Err(Error::ValueOutOfRange { n, index: idx + 1, value: v });
            }
            if seen[v as usize] {
                return Err(Error::DuplicateValue { n, index: idx + 1, value: v });
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u32).collect() }
    }

    /// Construct without validation. The caller must guarantee `word` is a
    /// bijection on `{1..n}`.
    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_word(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    /// Table mapping each value to its 1-based position; entry 0 is unused.
    pub fn position_of_value(&self) -> Vec<usize> {
        let mut pos = vec![0usize; self.len() + 1];
        for (i, &v) in self.word.iter().enumerate() {
            pos[v as usize] = i + 1;
        }
        pos
    }

    /// sigma with sigma(pi(i)) = i.
    pub fn inverse(&self) -> Self {
        let mut word = vec![0u32; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word }
    }

    /// pi(n) ... pi(2) pi(1).
    pub fn reverse(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    /// (n+1-pi(1)) ... (n+1-pi(n)).
    pub fn complement(&self) -> Self {
        let n = self.len() as u32;
        Permutation { word: self.word.iter().map(|&v| n + 1 - v).collect() }
    }

    /// Flags `r[i]` (0-based) marking records: pi(j) < pi(i) for all j < i.
    pub fn record_flags(&self) -> Vec<bool> {
        let mut flags = Vec::with_capacity(self.len());
        let mut max = 0u32;
        for &v in &self.word {
            flags.push(v > max);
            max = max.max(v);
        }
        flags
    }

    /// Flags marking antirecords: pi(j) > pi(i) for all j > i.
    pub fn antirecord_flags(&self) -> Vec<bool> {
        let mut flags = vec![false; self.len()];
        let mut min = u32::MAX;
        for i in (0..self.len()).rev() {
            flags[i] = self.word[i] < min;
            min = min.min(self.word[i]);
        }
        flags
    }

    /// Antirecord positions in increasing order. For n >= 1 the first one
    /// carries value 1 and the last one is n.
    pub fn arec_positions(&self) -> Vec<usize> {
        self.antirecord_flags()
            .iter()
            .enumerate()
            .filter_map(|(i, &f)| f.then_some(i + 1))
            .collect()
    }

    pub fn exc(&self) -> usize {
        self.word.iter().enumerate().filter(|&(i, &v)| v as usize > i + 1).count()
    }

    /// Number of pairs j < i with pi(j) > pi(i), i.e. occurrences of the
    /// classical pattern 21.
    pub fn inv(&self) -> usize {
        let mut count = 0;
        for i in 0..self.len() {
            for j in 0..i {
                if self.word[j] > self.word[i] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn rec(&self) -> usize {
        self.record_flags().iter().filter(|&&f| f).count()
    }

    pub fn arec(&self) -> usize {
        self.antirecord_flags().iter().filter(|&&f| f).count()
    }

    pub fn erec(&self) -> usize {
        let r = self.record_flags();
        let a = self.antirecord_flags();
        r.iter().zip(&a).filter(|&(&r, &a)| r && !a).count()
    }

    pub fn earec(&self) -> usize {
        let r = self.record_flags();
        let a = self.antirecord_flags();
        r.iter().zip(&a).filter(|&(&r, &a)| a && !r).count()
    }

    pub fn rar(&self) -> usize {
        let r = self.record_flags();
        let a = self.antirecord_flags();
        r.iter().zip(&a).filter(|&(&r, &a)| r && a).count()
    }

    pub fn succ(&self) -> usize {
        self.word.windows(2).filter(|w| w[1] == w[0] + 1).count()
    }

    pub fn statistic(&self, kind: StatisticKind) -> usize {
        match kind {
            StatisticKind::Exc => self.exc(),
            StatisticKind::Inv => self.inv(),
            StatisticKind::Rec => self.rec(),
            StatisticKind::Arec => self.arec(),
            StatisticKind::Erec => self.erec(),
            StatisticKind::Earec => self.earec(),
            StatisticKind::Rar => self.rar(),
            StatisticKind::Succ => self.succ(),
        }
    }
}

/// Within a word of distinct letters, swap the j-th smallest and the j-th
/// largest letter for every j.
pub fn word_complement(letters: &[u32]) -> Result<Vec<u32>, Error> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    for (idx, w) in sorted.windows(2).enumerate() {
        if w[0] == w[1] {
            return Err(Error::DuplicateLetter { index: idx + 2, letter: w[1] });
        }
    }
    let r = sorted.len();
    Ok(letters
        .iter()
        .map(|&v| {
            let j = sorted.binary_search(&v).expect("letter is in its own alphabet");
            sorted[r - 1 - j]
        })
        .collect())
}

/// The eight counting rules exposed by [`Permutation::statistic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatisticKind {
    Exc,
    Inv,
    Rec,
    Arec,
    Erec,
    Earec,
    Rar,
    Succ,
}

impl StatisticKind {
    pub const ALL: [StatisticKind; 8] = [
        StatisticKind::Exc,
        StatisticKind::Inv,
        StatisticKind::Rec,
        StatisticKind::Arec,
        StatisticKind::Erec,
        StatisticKind::Earec,
        StatisticKind::Rar,
        StatisticKind::Succ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatisticKind::Exc => "exc",
            StatisticKind::Inv => "inv",
            StatisticKind::Rec => "rec",
            StatisticKind::Arec => "arec",
            StatisticKind::Erec => "erec",
            StatisticKind::Earec => "earec",
            StatisticKind::Rar => "rar",
            StatisticKind::Succ => "succ",
        }
    }
}

impl fmt::Display for StatisticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatisticKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        StatisticKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

/// Text form: comma-free digit string when every value is a single digit
/// (n <= 9), comma-separated otherwise. The empty permutation prints as "".
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
        } else {
            for (i, &v) in self.word.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts both text forms regardless of length.
    fn from_str(s: &str) -> Result<Self, Error> {
        let parse_err = |reason: &str| Error::ParsePermutation {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Ok(Permutation::empty());
        }
        let values: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|part| part.trim().parse::<u32>().map_err(|e| parse_err(&e.to_string())))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d @ 1..=9) => Ok(d),
                    _ => Err(parse_err(&format!("invalid digit {c:?}"))),
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::from_word(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
