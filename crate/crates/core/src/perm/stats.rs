use serde::Serialize;

use super::Permutation;
use crate::{bijections, rixfact};

/// Local shape of a letter under the boundary convention `σ₀ = σₙ₊₁ = +∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
}

/// Shape of the letter at zero-based position `pos` of a word with distinct letters.
pub fn letter_shape(word: &[usize], pos: usize) -> Shape {
    let here = word[pos];
    let left_smaller = pos > 0 && word[pos - 1] < here;
    let right_smaller = pos + 1 < word.len() && word[pos + 1] < here;
    match (left_smaller, right_smaller) {
        (true, true) => Shape::Peak,
        (false, false) => Shape::Valley,
        (true, false) => Shape::DoubleAscent,
        (false, true) => Shape::DoubleDescent,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ShapeCounts {
    pub dd: usize,
    pub da: usize,
    pub peak: usize,
    pub valley: usize,
}

pub fn shape_counts(word: &[usize]) -> ShapeCounts {
    let mut c = ShapeCounts::default();
    for pos in 0..word.len() {
        match letter_shape(word, pos) {
            Shape::Peak => c.peak += 1,
            Shape::Valley => c.valley += 1,
            Shape::DoubleAscent => c.da += 1,
            Shape::DoubleDescent => c.dd += 1,
        }
    }
    c
}

pub fn exc(p: &Permutation) -> usize {
    p.iter().enumerate().filter(|&(i, &a)| a > i + 1).count()
}

pub fn fix(p: &Permutation) -> usize {
    p.iter().enumerate().filter(|&(i, &a)| a == i + 1).count()
}

pub fn fix_set(p: &Permutation) -> Vec<usize> {
    p.iter()
        .enumerate()
        .filter(|&(i, &a)| a == i + 1)
        .map(|(_, &a)| a)
        .collect()
}

/// Descent positions `i ∈ [n−1]` with `wᵢ > wᵢ₊₁`.
pub fn des_set(word: &[usize]) -> Vec<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn des(word: &[usize]) -> usize {
    word.windows(2).filter(|w| w[0] > w[1]).count()
}

pub fn maj(word: &[usize]) -> usize {
    des_set(word).into_iter().sum()
}

pub fn inv(word: &[usize]) -> usize {
    let mut count = 0;
    for (i, &a) in word.iter().enumerate() {
        count += word[i + 1..].iter().filter(|&&b| b < a).count();
    }
    count
}

pub fn imaj(p: &Permutation) -> usize {
    maj(&p.inverse())
}

pub fn cyc(p: &Permutation) -> usize {
    p.cycles().len()
}

/// Cyclic double ascents: `i` with `σ⁻¹(i) < i < σ(i)`.
pub fn cda(p: &Permutation) -> usize {
    let inv = p.inverse();
    (1..=p.len()).filter(|&i| inv.image(i) < i && i < p.image(i)).count()
}

/// Number of inversions `(wᵢ, wⱼ)` that either follow an ascent into `wᵢ`
/// or have a letter larger than `wᵢ` strictly between them.
pub fn admissible_inversion_count(word: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..word.len() {
        let a = word[i];
        let ascent_into = i > 0 && word[i - 1] < a;
        let mut larger_between = false;
        for &b in &word[i + 1..] {
            if b < a && (ascent_into || larger_between) {
                count += 1;
            }
            if b > a {
                larger_between = true;
            }
        }
    }
    count
}

pub fn is_alternating(word: &[usize]) -> bool {
    word.windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] < w[1] } else { w[0] > w[1] })
}

/// Every statistic of a permutation. Serializes with the CLI's key names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatisticBundle {
    pub exc: usize,
    pub fix: usize,
    pub fix_set: Vec<usize>,
    pub maj: usize,
    pub des: usize,
    pub des_set: Vec<usize>,
    pub inv: usize,
    pub imaj: usize,
    pub ai: usize,
    pub aid: usize,
    pub rix: usize,
    pub rix_set: Vec<usize>,
    pub cyc: usize,
    pub cda: usize,
    pub dd: usize,
    pub da: usize,
    pub peak: usize,
    pub valley: usize,
    pub lyc: usize,
}

pub fn statistics(p: &Permutation) -> StatisticBundle {
    let des_set = des_set(p);
    let ai = admissible_inversion_count(p);
    let shapes = shape_counts(p);
    let fix_set = fix_set(p);
    StatisticBundle {
        exc: exc(p),
        fix: fix_set.len(),
        fix_set,
        maj: des_set.iter().sum(),
        des: des_set.len(),
        inv: inv(p),
        imaj: imaj(p),
        ai,
        aid: ai + des_set.len(),
        des_set,
        rix: rixfact::rix(p),
        rix_set: rixfact::rixed_points(p),
        cyc: cyc(p),
        cda: cda(p),
        dd: shapes.dd,
        da: shapes.da,
        peak: shapes.peak,
        valley: shapes.valley,
        lyc: bijections::lyc(p),
    }
}

/// Which of the distinguished permutation families `σ` belongs to.
/// Each `Option` carries the family index `k` when `σ` is a member.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Membership {
    /// `dd = 0`; `k = des`.
    pub no_double_descent: Option<usize>,
    /// `dd = 0` and the word ends with an ascent; `k = des + 1`.
    pub no_double_descent_final_ascent: Option<usize>,
    /// Derangement without cyclic double ascents; `k = exc`.
    pub derangement_no_cda: Option<usize>,
    /// `rix = 0` and exactly one double descent; `k = des`.
    pub rix_free_one_double_descent: Option<usize>,
    pub alternating: bool,
    pub derangement: bool,
}

pub fn classify(p: &Permutation) -> Membership {
    let n = p.len();
    let shapes = shape_counts(p);
    let d = des(p);
    let derangement = fix(p) == 0;
    let final_ascent = n >= 2 && p[n - 2] < p[n - 1];
    Membership {
        no_double_descent: (shapes.dd == 0).then_some(d),
        no_double_descent_final_ascent: (shapes.dd == 0 && final_ascent).then_some(d + 1),
        derangement_no_cda: (derangement && cda(p) == 0).then(|| exc(p)),
        rix_free_one_double_descent: (n > 0 && shapes.dd == 1 && rixfact::rix(p) == 0).then_some(d),
        alternating: is_alternating(p),
        derangement,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_statistics() {
        let s = statistics(&perm("291753468"));
        assert_eq!((s.ai, s.inv, s.rix), (12, 14, 2));
        assert_eq!(s.aid, s.ai + s.des);
    }

    #[test]
    fn boundary_shapes_of_valley_hopping_figure() {
        let c = shape_counts(&perm("65137428"));
        assert_eq!(c, ShapeCounts { dd: 3, da: 2, peak: 1, valley: 2 });
    }

    #[test]
    fn single_letter_is_a_valley() {
        assert_eq!(shape_counts(&[1]), ShapeCounts { dd: 0, da: 0, peak: 0, valley: 1 });
    }

    #[test]
    fn identity_statistics() {
        let s = statistics(&Permutation::identity(6));
        assert_eq!((s.exc, s.maj, s.inv, s.cyc), (0, 0, 0, 6));
        assert!(s.des_set.is_empty());
        assert_eq!(s.fix_set, vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn empty_permutation_is_all_zero() {
        let s = statistics(&Permutation::identity(0));
        assert_eq!(s.exc + s.fix + s.maj + s.inv + s.ai + s.rix + s.cyc + s.valley + s.lyc, 0);
    }

    #[test]
    fn cycle_count_of_scf_example() {
        assert_eq!(cyc(&perm("129753468")), 5);
    }

    #[test]
    fn admissible_inversions_small_words() {
        assert_eq!(admissible_inversion_count(&[2, 9, 1, 7, 5, 3, 4, 6, 8]), 12);
        assert_eq!(admissible_inversion_count(&[2, 1]), 0);
        assert_eq!(admissible_inversion_count(&[1, 3, 2]), 1);
        assert_eq!(admissible_inversion_count(&[3, 5, 9, 11]), 0);
    }

    #[test]
    fn family_membership() {
        let m = classify(&perm("1324"));
        assert_eq!(m.no_double_descent, Some(1));
        assert_eq!(m.no_double_descent_final_ascent, Some(2));
        assert_eq!(classify(&perm("4123")).derangement_no_cda, Some(1));
        assert_eq!(classify(&perm("4132")).rix_free_one_double_descent, Some(2));
        assert!(classify(&perm("1324")).alternating);
        assert!(!classify(&perm("1324")).derangement);
    }
}
