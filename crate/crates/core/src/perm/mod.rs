//! Permutations of `[n]` in one-line notation, words with distinct letters,
//! lexicographic enumeration and the word-level statistics.

mod enumerate;
mod stats;

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use enumerate::{
    enumerate, enumerate_where, enumerate_with_budget, par_fold, Lexicographic,
    DEFAULT_ENUMERATION_CEILING,
};
pub use stats::{
    admissible_inversion_count, cda, classify, cyc, des, des_set, exc, fix, fix_set, imaj, inv,
    is_alternating, letter_shape, maj, shape_counts, statistics, Membership, Shape, ShapeCounts,
    StatisticBundle,
};

/// Largest `n` accepted for a single permutation.
pub const MAX_LABEL: usize = 20;

/// A permutation `σ` of `[n]` stored as its word `σ(1) σ(2) … σ(n)`.
///
/// Ordering is lexicographic on words, which is also the enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn from_word(letters: impl Into<Vec<usize>>) -> Result<Self> {
        let letters = letters.into();
        let n = letters.len();
        if n > MAX_LABEL {
            return Err(Error::BudgetExceeded { n, max: MAX_LABEL });
        }
        let mut seen = vec![false; n + 1];
        for &a in &letters {
            if a == 0 || a > n || seen[a] {
                return Err(Error::NotABijection(letters));
            }
            seen[a] = true;
        }
        Ok(Self(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(Self::from_word(letters.clone()).is_ok(), "{letters:?}");
        Self(letters)
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Zero-based position of `label` in the word.
    pub fn position_of(&self, label: usize) -> Option<usize> {
        self.0.iter().position(|&a| a == label)
    }

    pub fn check_label(&self, label: usize) -> Result<()> {
        if label == 0 || label > self.len() {
            Err(Error::LabelOutOfRange { label, n: self.len() })
        } else {
            Ok(())
        }
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &a) in self.0.iter().enumerate() {
            inv[a - 1] = i + 1;
        }
        Self(inv)
    }

    /// Cycles of `σ`, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                cycle.push(a);
                a = self.image(a);
            }
            out.push(cycle);
        }
        out
    }

    /// Builds the permutation of `[n]` whose cycles `(c₁ c₂ … c_l)` send `cᵢ ↦ cᵢ₊₁`.
    /// Letters not covered by any cycle are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut word: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for cycle in cycles {
            for (i, &c) in cycle.iter().enumerate() {
                if c == 0 || c > n {
                    return Err(Error::LabelOutOfRange { label: c, n });
                }
                if seen[c] {
                    return Err(Error::NotABijection(cycle.clone()));
                }
                seen[c] = true;
                word[c - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self(word))
    }
}

impl Deref for Permutation {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Digit string for `n ≤ 9`, comma-separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            write_joined(f, &self.0, ",")
        }
    }
}

pub(crate) fn write_joined(f: &mut fmt::Formatter<'_>, letters: &[usize], sep: &str) -> fmt::Result {
    for (i, a) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

/// Accepts `"2743156"` (one digit per letter) or `"10,8,4,9,7,2,5,3,6,1"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let letters: Vec<usize> = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|tok| tok.trim().parse::<usize>().map_err(|_| parse_err("expected comma-separated integers")))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| parse_err("expected a digit string")))
                .collect::<Result<_>>()?
        };
        Self::from_word(letters)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A word with pairwise distinct positive letters, not necessarily `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: impl Into<Vec<usize>>) -> Result<Self> {
        let letters = letters.into();
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if sorted.first() == Some(&0) || sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedLetter(letters));
        }
        Ok(Self(letters))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for Word {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Permutation> for Word {
    fn from(p: Permutation) -> Self {
        Self(p.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0, " ")
    }
}
