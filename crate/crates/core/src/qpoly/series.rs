//! q-factorials, q-binomials and truncated q-exponential series.
//!
//! A [`TruncatedSeries`] stores *numerators*: slot `n` holds `cₙ` where the
//! series is `∑ cₙ zⁿ/(q;q)ₙ`. Products then stay polynomial because
//! `1/((q;q)ᵢ(q;q)ₙ₋ᵢ) = [n i]_q/(q;q)ₙ`.

use super::poly::{MPoly, Var};
use crate::error::{Error, Result};

/// `(q;q)ₙ = ∏ᵢ₌₁ⁿ (1 − qⁱ)`.
pub fn q_factorial(n: usize) -> MPoly {
    (1..=n).fold(MPoly::one(), |acc, i| {
        &acc * &(MPoly::one() - MPoly::monomial(1, &[(Var::Q, i)]))
    })
}

/// Gaussian binomial `[n k]_q` via `[n k] = [n−1 k] + q^{n−k}[n−1 k−1]`.
pub fn q_binomial(n: usize, k: usize) -> Result<MPoly> {
    if k > n {
        return Err(Error::OutOfRange { n, k });
    }
    let mut row = vec![MPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let keep = row.get(j).cloned().unwrap_or_default();
            let shifted = if j == 0 { MPoly::zero() } else { row[j - 1].mul_var_pow(Var::Q, m - j) };
            next.push(keep + shifted);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// Row `[n 0]_q, …, [n n]_q`.
pub fn q_binomial_row(n: usize) -> Vec<MPoly> {
    (0..=n).map(|k| q_binomial(n, k).expect("k <= n")).collect()
}

/// `∑_{n ≤ N} cₙ zⁿ/(q;q)ₙ`, stored as the numerators `cₙ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<MPoly>,
}

impl TruncatedSeries {
    /// From numerators `c₀ … c_N`.
    pub fn from_numerators(coeffs: Vec<MPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least the z^0 slot");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Numerator of `zⁿ`; the coefficient itself is this over `(q;q)ₙ`.
    pub fn numerator(&self, n: usize) -> &MPoly {
        &self.coeffs[n]
    }

    pub fn numerators(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn denominator(n: usize) -> MPoly {
        q_factorial(n)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn scale(&self, c: &MPoly) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&MPoly, &MPoly) -> MPoly) -> Self {
        let order = self.order().min(other.order());
        Self { coeffs: (0..=order).map(|n| f(&self.coeffs[n], &other.coeffs[n])).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }
}

/// `e(s·z; q) = ∑ sⁿ zⁿ/(q;q)ₙ` truncated at `z^N`; slot `n` holds `sⁿ`.
pub fn q_exp_series(scale: &MPoly, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut power = MPoly::one();
    for _ in 0..=order {
        coeffs.push(power.clone());
        power = &power * scale;
    }
    TruncatedSeries { coeffs }
}

/// Cauchy product, truncated at the smaller order. Slot `n` of the result is
/// `∑ᵢ [n i]_q aᵢ bₙ₋ᵢ`.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    let order = a.order().min(b.order());
    let coeffs = (0..=order)
        .map(|n| {
            let binom = q_binomial_row(n);
            (0..=n).map(|i| &binom[i] * &(&a.coeffs[i] * &b.coeffs[n - i])).sum()
        })
        .collect();
    TruncatedSeries { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MPoly {
        MPoly::var(Var::Q)
    }

    fn poly_q(coeffs: &[i64]) -> MPoly {
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| MPoly::monomial(c, &[(Var::Q, i)]))
            .sum()
    }

    #[test]
    fn q_factorial_small() {
        assert!(q_factorial(0).is_one());
        assert_eq!(q_factorial(1), MPoly::one() - q());
        // (1-q)(1-q^2)(1-q^3) multiplied out by hand
        assert_eq!(q_factorial(3), poly_q(&[1, -1, -1, 0, 1, 1, -1]));
    }

    #[test]
    fn q_binomial_small() {
        assert_eq!(q_binomial(2, 1).unwrap(), poly_q(&[1, 1]));
        assert_eq!(q_binomial(3, 2).unwrap(), poly_q(&[1, 1, 1]));
        assert_eq!(q_binomial(4, 2).unwrap(), poly_q(&[1, 1, 2, 1, 1]));
        assert!(matches!(q_binomial(2, 3), Err(Error::OutOfRange { n: 2, k: 3 })));
    }

    #[test]
    fn q_binomial_times_denominators_is_q_factorial() {
        for n in 0..=8 {
            for k in 0..=n {
                let lhs = &(&q_binomial(n, k).unwrap() * &q_factorial(k)) * &q_factorial(n - k);
                assert_eq!(lhs, q_factorial(n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn exp_series_slots() {
        let t = MPoly::var(Var::T);
        assert_eq!(q_exp_series(&MPoly::one(), 0).numerators(), &[MPoly::one()]);
        assert_eq!(q_exp_series(&t, 2).numerators(), &[MPoly::one(), t.clone(), t.pow(2)]);
        let e = q_exp_series(&MPoly::one(), 1);
        let diff = e.sub(&q_exp_series(&t, 1).scale(&t));
        assert_eq!(diff.numerator(1), &(MPoly::one() - t.pow(2)));
    }

    #[test]
    fn series_products() {
        let z = TruncatedSeries::from_numerators(vec![MPoly::one(), MPoly::one()]);
        assert_eq!(series_mul(&z, &z).numerators(), &[MPoly::one(), MPoly::constant(2)]);

        let e = q_exp_series(&MPoly::one(), 4);
        let one = TruncatedSeries::from_numerators(vec![MPoly::one(), MPoly::zero(), MPoly::zero()]);
        assert_eq!(series_mul(&e, &one), e.truncate(2));

        // z^2 in e(z;q)^2: 2/(q;q)_2 + 1/(q;q)_1^2, cleared by (q;q)_2.
        let sq = series_mul(&e, &e);
        let numer = sq.numerator(2).clone();
        assert_eq!(numer, poly_q(&[3, 1]));
        let lhs = &numer * &q_factorial(1).pow(2);
        let rhs = &(&MPoly::constant(2) * &q_factorial(1).pow(2)) + &q_factorial(2);
        assert_eq!(lhs, rhs);
    }
}
