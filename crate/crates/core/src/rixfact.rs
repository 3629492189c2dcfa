//! The `rix` statistic and the rix-factorization `σ = α₁⋯αᵢβ`.
//!
//! Each `αⱼ` is an L-hook of length at least two (its last letter is its
//! maximum) and `β` is an L-hook or an F-hook (first letter is the maximum).
//! The factorization is produced by repeatedly cutting just after the
//! greatest descent top, until the remainder is increasing or starts with
//! its greatest descent top.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{write_joined, Permutation};

/// Recursive `rix` on a word with distinct letters, driven by the position of the maximum.
pub fn rix(word: &[usize]) -> usize {
    let mut w = word;
    let mut count = 0;
    while let Some((i, _)) = w.iter().enumerate().max_by_key(|&(_, &a)| a) {
        let k = w.len();
        if i + 1 == k {
            count += 1;
            w = &w[..k - 1];
        } else if i == 0 {
            break;
        } else {
            w = &w[i + 1..];
        }
    }
    count
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HookKind {
    /// Last letter is the maximum; every length-one word is an L-hook.
    L,
    /// First letter is the maximum, length at least two.
    F,
}

impl HookKind {
    pub fn of(word: &[usize]) -> Option<Self> {
        let max = *word.iter().max()?;
        if word.last() == Some(&max) {
            Some(Self::L)
        } else if word[0] == max {
            Some(Self::F)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RixFactorization {
    pub alphas: Vec<Vec<usize>>,
    pub beta: Vec<usize>,
    pub beta_kind: HookKind,
    pub beta1: usize,
    /// Increasing, as it is a suffix of an increasing run.
    pub rix_set: Vec<usize>,
}

impl RixFactorization {
    /// `α₁, …, αᵢ, β` in order.
    pub fn factors(&self) -> impl Iterator<Item = &[usize]> {
        self.alphas.iter().map(Vec::as_slice).chain(std::iter::once(self.beta.as_slice()))
    }

    /// Last letters `x₁, …, xᵢ` of the α-factors.
    pub fn alpha_tops(&self) -> Vec<usize> {
        self.alphas.iter().map(|a| *a.last().expect("non-empty factor")).collect()
    }

    /// Index of the factor containing `label` (α's first, β last).
    pub fn factor_of(&self, label: usize) -> Option<usize> {
        self.factors().position(|f| f.contains(&label))
    }

    /// `β` with its rixed points removed; empty or an F-hook.
    pub fn beta_without_rixed(&self) -> Vec<usize> {
        self.beta[..self.beta.len() - self.rix_set.len()].to_vec()
    }
}

impl fmt::Display for RixFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for factor in &self.alphas {
            write_joined(f, factor, " ")?;
            f.write_str("|")?;
        }
        write_joined(f, &self.beta, " ")?;
        let kind = match self.beta_kind {
            HookKind::L => "L",
            HookKind::F => "F",
        };
        write!(f, " [{kind}] beta1={} RIX={{", self.beta1)?;
        write_joined(f, &self.rix_set, ",")?;
        f.write_str("}")
    }
}

fn is_increasing(w: &[usize]) -> bool {
    w.windows(2).all(|p| p[0] < p[1])
}

/// Position of the greatest descent top of `w`, if any.
fn greatest_descent_top(w: &[usize]) -> Option<usize> {
    (0..w.len().saturating_sub(1))
        .filter(|&i| w[i] > w[i + 1])
        .max_by_key(|&i| w[i])
}

pub fn rix_factorize(p: &Permutation) -> Result<RixFactorization> {
    if p.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    let mut w: &[usize] = p;
    let mut alphas = Vec::new();
    let beta = loop {
        let Some(top) = greatest_descent_top(w) else {
            break w;
        };
        if top == 0 {
            break w;
        }
        alphas.push(w[..=top].to_vec());
        // a descent top always has a successor, so the remainder is non-empty
        w = &w[top + 1..];
    };
    debug_assert!(!beta.is_empty());
    let beta_kind = HookKind::of(beta).expect("final rix factor is a hook");
    let beta1 = beta[0];
    let suffix_start = (1..beta.len()).rev().find(|&i| beta[i - 1] > beta[i]).unwrap_or(0);
    let rix_set = beta[suffix_start..].iter().copied().filter(|&a| a >= beta1).collect();
    Ok(RixFactorization { alphas, beta: beta.to_vec(), beta_kind, beta1, rix_set })
}

/// `RIX(σ)`, increasing. Empty for the empty permutation.
pub fn rixed_points(p: &Permutation) -> Vec<usize> {
    rix_factorize(p).map(|f| f.rix_set).unwrap_or_default()
}

/// Sanity predicate used by the tests and the verifier: the factorization
/// concatenates to `σ`, α's are L-hooks of length ≥ 2 and the tops decrease
/// down to `β₁`.
pub fn is_valid_factorization(p: &Permutation, f: &RixFactorization) -> bool {
    let concat: Vec<usize> = f.factors().flatten().copied().collect();
    let hooks_ok = f.alphas.iter().all(|a| a.len() >= 2 && HookKind::of(a) == Some(HookKind::L));
    let mut chain = f.alpha_tops();
    chain.push(f.beta1);
    concat == p.as_slice()
        && hooks_ok
        && HookKind::of(&f.beta) == Some(f.beta_kind)
        && chain.windows(2).all(|w| w[0] > w[1])
        && is_increasing(&f.rix_set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rix_recursion() {
        assert_eq!(rix(&[2, 9, 1, 7, 5, 3, 4, 6, 8]), 2);
        assert_eq!(rix(&[7]), 1);
        assert_eq!(rix(&[]), 0);
        assert_eq!(rix(&[9, 1, 2]), 0);
    }

    #[test]
    fn factorization_with_l_hook_tail() {
        let f = rix_factorize(&perm("2,1,8,7,9,3,5,4,6,10")).unwrap();
        assert_eq!(f.alphas, vec![vec![2, 1, 8, 7, 9], vec![3, 5]]);
        assert_eq!(f.beta, vec![4, 6, 10]);
        assert_eq!((f.beta_kind, f.beta1), (HookKind::L, 4));
        assert_eq!(f.rix_set, vec![4, 6, 10]);
        assert_eq!(f.to_string(), "2 1 8 7 9|3 5|4 6 10 [L] beta1=4 RIX={4,6,10}");
    }

    #[test]
    fn factorization_with_f_hook_tail() {
        let f = rix_factorize(&perm("6,1,10,8,4,9,7,2,5,3")).unwrap();
        assert_eq!(f.alphas, vec![vec![6, 1, 10], vec![8, 4, 9]]);
        assert_eq!((f.beta.clone(), f.beta_kind, f.beta1), (vec![7, 2, 5, 3], HookKind::F, 7));
        assert!(f.rix_set.is_empty());
    }

    #[test]
    fn factorization_with_partial_rixed_suffix() {
        let f = rix_factorize(&perm("1,10,4,7,6,2,5,3,8,9")).unwrap();
        assert_eq!(f.alphas, vec![vec![1, 10], vec![4, 7]]);
        assert_eq!(f.beta, vec![6, 2, 5, 3, 8, 9]);
        assert_eq!((f.beta_kind, f.beta1), (HookKind::L, 6));
        assert_eq!(f.rix_set, vec![8, 9]);
        assert_eq!(f.beta_without_rixed(), vec![6, 2, 5, 3]);
    }

    #[test]
    fn identity_is_all_rixed() {
        let f = rix_factorize(&Permutation::identity(5)).unwrap();
        assert!(f.alphas.is_empty());
        assert_eq!((f.beta_kind, f.beta1), (HookKind::L, 1));
        assert_eq!(rixed_points(&Permutation::identity(5)), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn decreasing_run_is_an_f_hook() {
        let f = rix_factorize(&perm("4321")).unwrap();
        assert!(f.alphas.is_empty());
        assert_eq!((f.beta_kind, f.beta1), (HookKind::F, 4));
        assert!(f.rix_set.is_empty());
        assert!(rixed_points(&perm("4132")).is_empty());
    }

    #[test]
    fn empty_permutation_has_no_factorization() {
        assert_eq!(rix_factorize(&Permutation::identity(0)), Err(Error::EmptyPermutation));
    }
}
