use rayon::prelude::*;

use super::Permutation;
use crate::error::{Error, Result};

/// Largest `n` for which full enumeration of `𝔖ₙ` is allowed by default.
pub const DEFAULT_ENUMERATION_CEILING: usize = 12;

/// All permutations of `[n]` in lexicographic order of their words.
/// Optionally restricted to the block starting with a fixed first letter.
#[derive(Clone, Debug)]
pub struct Lexicographic {
    current: Option<Vec<usize>>,
    first_letter: Option<usize>,
}

impl Lexicographic {
    fn new(n: usize) -> Self {
        Self { current: Some((1..=n).collect()), first_letter: None }
    }

    /// Permutations of `[n]` whose first letter is `first`, in lexicographic order.
    fn block(n: usize, first: usize) -> Self {
        let mut start = vec![first];
        start.extend((1..=n).filter(|&a| a != first));
        Self { current: Some(start), first_letter: Some(first) }
    }
}

fn next_permutation(w: &mut [usize]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] > w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] < w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

impl Iterator for Lexicographic {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.current.as_mut()?;
        let out = Permutation::from_vec_unchecked(current.clone());
        let advanced = next_permutation(current);
        let left_block = matches!(self.first_letter, Some(f) if current.first() != Some(&f));
        if !advanced || left_block {
            self.current = None;
        }
        Some(out)
    }
}

pub fn enumerate(n: usize) -> Result<Lexicographic> {
    enumerate_with_budget(n, DEFAULT_ENUMERATION_CEILING)
}

pub fn enumerate_with_budget(n: usize, max_n: usize) -> Result<Lexicographic> {
    if n > max_n {
        return Err(Error::BudgetExceeded { n, max: max_n });
    }
    Ok(Lexicographic::new(n))
}

/// Lexicographic enumeration keeping only permutations accepted by `filter`.
pub fn enumerate_where<F>(n: usize, filter: F) -> Result<impl Iterator<Item = Permutation>>
where
    F: FnMut(&Permutation) -> bool,
{
    Ok(enumerate(n)?.filter(filter))
}

/// Folds over `𝔖ₙ` in parallel, one independent sub-stream per first letter.
///
/// Each block is folded in lexicographic order and the partial results are
/// merged in ascending first-letter order, so a non-commutative `merge`
/// still sees a deterministic sequence.
pub fn par_fold<T, I, F, M>(n: usize, init: I, fold: F, merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &Permutation) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    if n > DEFAULT_ENUMERATION_CEILING {
        return Err(Error::BudgetExceeded { n, max: DEFAULT_ENUMERATION_CEILING });
    }
    if n == 0 {
        let mut acc = init();
        fold(&mut acc, &Permutation::identity(0));
        return Ok(acc);
    }
    let parts: Vec<T> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            for p in Lexicographic::block(n, first) {
                fold(&mut acc, &p);
            }
            acc
        })
        .collect();
    Ok(parts.into_iter().reduce(merge).unwrap_or_else(init))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::perm::{cda, exc, fix};

    #[test]
    fn three_in_lexicographic_order() {
        let words: Vec<String> = enumerate(3).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(words, ["123", "132", "213", "231", "312", "321"]);
    }

    #[test]
    fn zero_yields_the_empty_permutation() {
        let all: Vec<_> = enumerate(0).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_empty());
    }

    #[test]
    fn filter_selects_family() {
        let words: Vec<String> = enumerate_where(4, |p| fix(p) == 0 && cda(p) == 0 && exc(p) == 2)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        // 2413 has the cyclic double ascent 1 -> 2 -> 4; 3421 = (1 3 2 4) has none
        assert_eq!(words, ["2143", "3412", "3421", "4312", "4321"]);
    }

    #[test]
    fn counts_are_factorial_and_distinct() {
        for n in 0..=7 {
            let all: Vec<_> = enumerate(n).unwrap().collect();
            let expected: usize = (1..=n).product();
            assert_eq!(all.len(), expected);
            assert_eq!(all.iter().collect::<HashSet<_>>().len(), expected);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(enumerate(13), Err(Error::BudgetExceeded { n: 13, max: 12 })));
        assert!(enumerate_with_budget(5, 4).is_err());
    }

    #[test]
    fn parallel_blocks_restore_lexicographic_order() {
        let seq: Vec<Permutation> = enumerate(6).unwrap().collect();
        let par = par_fold(
            6,
            Vec::new,
            |acc: &mut Vec<Permutation>, p| acc.push(p.clone()),
            |mut a, b| {
                a.extend(b);
                a
            },
        )
        .unwrap();
        assert_eq!(seq, par);
    }
}
