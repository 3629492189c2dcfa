//! Valley-hopping: the Foata–Strehl involutions `φₓ`, the modified action
//! `φ′ₓ` that only moves double ascents and double descents, and the
//! restricted action `φ″ₓ` that additionally freezes `β₁` and the rixed points.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{letter_shape, shape_counts, Permutation, Shape};
use crate::rixfact::rix_factorize;

/// `σ = w₁ w₂ x w₃ w₄` where `w₂` (resp. `w₃`) is the longest run of letters
/// smaller than `x` immediately left (resp. right) of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct XFactorization {
    pub w1: Vec<usize>,
    pub w2: Vec<usize>,
    pub x: usize,
    pub w3: Vec<usize>,
    pub w4: Vec<usize>,
}

pub fn x_factorization(p: &Permutation, x: usize) -> Result<XFactorization> {
    p.check_label(x)?;
    let pos = p.position_of(x).expect("label in range");
    let mut left = pos;
    while left > 0 && p[left - 1] < x {
        left -= 1;
    }
    let mut right = pos + 1;
    while right < p.len() && p[right] < x {
        right += 1;
    }
    Ok(XFactorization {
        w1: p[..left].to_vec(),
        w2: p[left..pos].to_vec(),
        x,
        w3: p[pos + 1..right].to_vec(),
        w4: p[right..].to_vec(),
    })
}

/// `φₓ(σ) = w₁ w₃ x w₂ w₄`.
pub fn foata_strehl(p: &Permutation, x: usize) -> Result<Permutation> {
    let XFactorization { w1, w2, x, w3, w4 } = x_factorization(p, x)?;
    let mut out = w1;
    out.extend(w3);
    out.push(x);
    out.extend(w2);
    out.extend(w4);
    Ok(Permutation::from_vec_unchecked(out))
}

/// `φ′ₓ`: `φₓ` when `x` is a double ascent or double descent, identity on peaks and valleys.
pub fn mfs_step(p: &Permutation, x: usize) -> Result<Permutation> {
    p.check_label(x)?;
    match letter_shape(p, p.position_of(x).expect("label in range")) {
        Shape::DoubleAscent | Shape::DoubleDescent => foata_strehl(p, x),
        Shape::Peak | Shape::Valley => Ok(p.clone()),
    }
}

/// `φ″ₓ`: identity when `x` is `β₁(σ)` or a rixed point of `σ`, otherwise `φ′ₓ`.
pub fn restricted_step(p: &Permutation, x: usize) -> Result<Permutation> {
    p.check_label(x)?;
    let f = rix_factorize(p)?;
    if x == f.beta1 || f.rix_set.contains(&x) {
        Ok(p.clone())
    } else {
        mfs_step(p, x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Action {
    /// Modified Foata–Strehl action `φ′`.
    Mfs,
    /// Restricted action `φ″`.
    Restricted,
}

impl Action {
    pub fn step(self, p: &Permutation, x: usize) -> Result<Permutation> {
        match self {
            Action::Mfs => mfs_step(p, x),
            Action::Restricted => restricted_step(p, x),
        }
    }

    /// Applies the generators for every label in `set`, in ascending label order.
    pub fn apply(self, p: &Permutation, set: &BTreeSet<usize>) -> Result<Permutation> {
        set.iter().try_fold(p.clone(), |acc, &x| self.step(&acc, x))
    }
}

/// `φ′_S(σ)`.
pub fn mfs(p: &Permutation, set: &BTreeSet<usize>) -> Result<Permutation> {
    Action::Mfs.apply(p, set)
}

/// `φ″_S(σ)`.
pub fn restricted_mfs(p: &Permutation, set: &BTreeSet<usize>) -> Result<Permutation> {
    Action::Restricted.apply(p, set)
}

/// Orbit of `σ` under the chosen `ℤ₂ⁿ`-action, sorted lexicographically.
pub fn orbit(p: &Permutation, action: Action) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::new();
    seen.insert(p.clone());
    let mut frontier = vec![p.clone()];
    while let Some(cur) = frontier.pop() {
        for x in 1..=cur.len() {
            let next = action.step(&cur, x).expect("label in range");
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen
}

/// The distinguished orbit element: the one without double descents for
/// [`Action::Mfs`], and for [`Action::Restricted`] (on `σ` with `rix(σ) = 0`)
/// the one whose only double descent is `β₁`.
pub fn canonical_rep(p: &Permutation, action: Action) -> Result<Permutation> {
    if action == Action::Restricted && (p.is_empty() || !rix_factorize(p)?.rix_set.is_empty()) {
        return Err(Error::NotInDomain(format!("{p} has rixed points; restricted canonical form needs rix = 0")));
    }
    let frozen = match action {
        Action::Mfs => None,
        Action::Restricted => Some(rix_factorize(p)?.beta1),
    };
    let mut cur = p.clone();
    // each toggle turns a double descent into a double ascent and leaves the other shapes alone
    while let Some(pos) = (0..cur.len())
        .find(|&i| letter_shape(&cur, i) == Shape::DoubleDescent && Some(cur[i]) != frozen)
    {
        cur = action.step(&cur, cur[pos])?;
    }
    debug_assert_eq!(shape_counts(&cur).dd, usize::from(frozen.is_some()));
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn x_factorization_examples() {
        let f = x_factorization(&perm("2743156"), 4).unwrap();
        assert_eq!((f.w1, f.w2, f.w3, f.w4), (vec![2, 7], vec![], vec![3, 1], vec![5, 6]));
        let f = x_factorization(&Permutation::identity(5), 5).unwrap();
        // every letter left of the maximum is smaller, so the whole prefix is w2
        assert_eq!(f.w2, vec![1, 2, 3, 4]);
        assert!(f.w1.is_empty() && f.w3.is_empty() && f.w4.is_empty());
        let f = x_factorization(&perm("21"), 2).unwrap();
        assert_eq!((f.w1, f.w2, f.w3, f.w4), (vec![], vec![], vec![1], vec![]));
        assert!(matches!(x_factorization(&perm("21"), 3), Err(Error::LabelOutOfRange { .. })));
    }

    #[test]
    fn foata_strehl_examples() {
        assert_eq!(foata_strehl(&perm("2743156"), 4).unwrap(), perm("2731456"));
        assert_eq!(foata_strehl(&perm("21"), 2).unwrap(), perm("12"));
    }

    #[test]
    fn mfs_examples() {
        assert_eq!(mfs(&perm("4132"), &set(&[4])).unwrap(), perm("1324"));
        assert_eq!(mfs(&perm("4132"), &set(&[])).unwrap(), perm("4132"));
        assert_eq!(mfs(&perm("1324"), &set(&[3])).unwrap(), perm("1324"));
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(restricted_mfs(&perm("4132"), &set(&[4])).unwrap(), perm("4132"));
        let s = perm("2,1,8,7,9,3,5,4,6,10");
        assert_eq!(restricted_mfs(&s, &set(&[4])).unwrap(), s);
        assert_eq!(restricted_mfs(&s, &set(&[])).unwrap(), s);
    }

    #[test]
    fn orbits() {
        let o: Vec<_> = orbit(&perm("4132"), Action::Mfs).into_iter().collect();
        assert_eq!(o, vec![perm("1324"), perm("4132")]);
        for n in 2..=5 {
            assert_eq!(orbit(&Permutation::identity(n), Action::Mfs).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn canonical_representatives() {
        assert_eq!(canonical_rep(&perm("4132"), Action::Mfs).unwrap(), perm("1324"));
        assert_eq!(canonical_rep(&perm("1324"), Action::Mfs).unwrap(), perm("1324"));
        assert_eq!(canonical_rep(&perm("4132"), Action::Restricted).unwrap(), perm("4132"));
        assert!(matches!(canonical_rep(&perm("1234"), Action::Restricted), Err(Error::NotInDomain(_))));
    }
}
