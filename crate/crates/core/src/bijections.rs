//! Standard cycle form, the bijection `Φ` sending `(des, RIX)` to `(exc, FIX)`,
//! the map `f` from rix-free permutations with one double descent to
//! double-descent-free permutations ending in an ascent, and `lyc = cyc ∘ Φ`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::actions::mfs_step;
use crate::error::{Error, Result};
use crate::perm::{classify, write_joined, Permutation};
use crate::rixfact::rix_factorize;

/// Cycles written largest element first; cycles of length ≥ 2 by decreasing
/// maximum, then fixed points in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardCycleForm {
    pub cycles: Vec<Vec<usize>>,
}

impl StandardCycleForm {
    pub fn long_cycles(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.cycles.iter().filter(|c| c.len() >= 2)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.cycles.iter().filter(|c| c.len() == 1).map(|c| c[0])
    }

    pub fn to_permutation(&self) -> Permutation {
        let n = self.cycles.iter().map(Vec::len).sum();
        Permutation::from_cycles(n, &self.cycles).expect("cycles partition [n]")
    }

    fn is_standard(&self) -> bool {
        let max_first = self.cycles.iter().all(|c| c.iter().all(|&a| a <= c[0]));
        let long: Vec<usize> = self.long_cycles().map(|c| c[0]).collect();
        let fixed: Vec<usize> = self.fixed_points().collect();
        let long_before_fixed = self.cycles.iter().skip_while(|c| c.len() >= 2).all(|c| c.len() == 1);
        max_first
            && long_before_fixed
            && long.windows(2).all(|w| w[0] > w[1])
            && fixed.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for StandardCycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            f.write_str("(")?;
            write_joined(f, c, " ")?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl Serialize for StandardCycleForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn scf(p: &Permutation) -> StandardCycleForm {
    let (mut long, mut fixed): (Vec<_>, Vec<_>) = p
        .cycles()
        .into_iter()
        .map(|mut c| {
            let top = (0..c.len()).max_by_key(|&i| c[i]).expect("non-empty cycle");
            c.rotate_left(top);
            c
        })
        .partition(|c| c.len() >= 2);
    long.sort_by(|a, b| b[0].cmp(&a[0]));
    fixed.sort();
    long.extend(fixed);
    let out = StandardCycleForm { cycles: long };
    debug_assert!(out.is_standard());
    out
}

/// `Φ(σ)`: each L-hook `a₁⋯a_l` becomes the cycle `(a_l … a₁)`, the F-hook
/// left in `β` after deleting rixed points becomes `(a₁ a_l … a₂)`, and the
/// rixed points become fixed points.
pub fn phi(p: &Permutation) -> Permutation {
    let Ok(f) = rix_factorize(p) else {
        return Permutation::identity(0);
    };
    let mut cycles: Vec<Vec<usize>> = f.alphas.iter().map(|a| a.iter().rev().copied().collect()).collect();
    let rest = f.beta_without_rixed();
    if let Some((&first, tail)) = rest.split_first() {
        let mut c = vec![first];
        c.extend(tail.iter().rev());
        cycles.push(c);
    }
    cycles.extend(f.rix_set.iter().map(|&a| vec![a]));
    let form = StandardCycleForm { cycles };
    debug_assert!(form.is_standard(), "{p} -> {form}");
    form.to_permutation()
}

/// Inverse of [`phi`]. The last long cycle is read as an F-hook when there is
/// no fixed point or the smallest fixed point exceeds its maximum.
pub fn phi_inv(p: &Permutation) -> Permutation {
    let form = scf(p);
    let long: Vec<&Vec<usize>> = form.long_cycles().collect();
    let fixed: Vec<usize> = form.fixed_points().collect();
    let last_is_f_hook = match (long.last(), fixed.first()) {
        (Some(c), Some(&o1)) => o1 > c[0],
        (Some(_), None) => true,
        (None, _) => false,
    };
    let mut word = Vec::with_capacity(p.len());
    for (i, c) in long.iter().enumerate() {
        if i + 1 == long.len() && last_is_f_hook {
            word.push(c[0]);
            word.extend(c[1..].iter().rev());
        } else {
            word.extend(c.iter().rev());
        }
    }
    word.extend(fixed);
    Permutation::from_vec_unchecked(word)
}

/// `f(σ) = φ′_{β₁(σ)}(σ)` on permutations with `rix = 0` and exactly one double descent.
pub fn f_map(p: &Permutation) -> Result<Permutation> {
    if classify(p).rix_free_one_double_descent.is_none() {
        return Err(Error::NotInDomain(format!("{p} must have rix = 0 and exactly one double descent")));
    }
    let beta1 = rix_factorize(p)?.beta1;
    mfs_step(p, beta1)
}

/// `f⁻¹(σ) = φ′_y(σ)` with `y` the last letter, on double-descent-free permutations ending in an ascent.
pub fn f_inv(p: &Permutation) -> Result<Permutation> {
    if classify(p).no_double_descent_final_ascent.is_none() {
        return Err(Error::NotInDomain(format!("{p} must have no double descent and end with an ascent")));
    }
    mfs_step(p, p.last().expect("n >= 2"))
}

/// `cyc(Φ(σ))`.
pub fn lyc(p: &Permutation) -> usize {
    phi(p).cycles().len()
}
