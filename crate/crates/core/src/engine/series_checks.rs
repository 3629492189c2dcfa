use num_bigint::BigInt;

use super::families::*;
use super::{poly_eq, Witnesses};
use crate::error::Result;
use crate::qpoly::{
    gamma_extract, q_binomial, q_exp_series, series_mul, GammaExpansion, MPoly, Monomial, TruncatedSeries, Var,
};

fn var(v: Var) -> MPoly {
    MPoly::var(v)
}

fn q_pow(i: usize) -> MPoly {
    MPoly::monomial(1, &[(Var::Q, i)])
}

/// `Γₙ₊₁` from enumerated `Γ₁ … Γₙ`:
/// `Γₙ₊₁ = Γₙ + y ∑_{i=1}^{n−1} qⁱ [n i]_q Γᵢ Γₙ₋ᵢ`.
pub fn gamma_recurrence(n: usize) -> Result<MPoly> {
    let mut sum = MPoly::zero();
    for i in 1..n {
        sum = sum + &(&q_pow(i) * &q_binomial(n, i)?) * &(&gamma_poly(i)? * &gamma_poly(n - i)?);
    }
    Ok(gamma_poly(n)? + &var(Var::Y) * &sum)
}

fn gamma_tilde_sum(n: usize) -> Result<MPoly> {
    let mut sum = MPoly::zero();
    for i in 2..n {
        sum = sum + &(&q_pow(i) * &q_binomial(n, i)?) * &(&gamma_tilde_poly(i)? * &gamma_poly(n - i)?);
    }
    Ok(sum)
}

/// `Γ̃ₙ₊₁ = yΓₙ + y ∑_{i=2}^{n−1} qⁱ [n i]_q Γ̃ᵢ Γₙ₋ᵢ`, from enumerated lower terms.
pub fn gamma_tilde_recurrence(n: usize) -> Result<MPoly> {
    Ok(&var(Var::Y) * &(gamma_poly(n)? + gamma_tilde_sum(n)?))
}

/// `Aₙ₊₁(t, r, q) = rAₙ + t ∑_{j=0}^{n−1} [n j]_q qʲ Aⱼ(t, r, q) Aₙ₋ⱼ(t, 1, q)`.
pub fn recurrence2(n: usize) -> Result<MPoly> {
    let mut sum = MPoly::zero();
    for j in 0..n {
        let tail = basic_eulerian(n - j)?.substitute(Var::R, 1);
        sum = sum + &(&q_pow(j) * &q_binomial(n, j)?) * &(&basic_eulerian(j)? * &tail);
    }
    Ok(&var(Var::R) * &basic_eulerian(n)? + &var(Var::T) * &sum)
}

pub(super) fn prop_5_2(m: usize, w: &mut Witnesses) -> Result<()> {
    if m == 1 {
        poly_eq(w, "Gamma(1) = 1", &gamma_poly(1)?, &MPoly::one());
        poly_eq(w, "Gamma~(1) = 0", &gamma_tilde_poly(1)?, &MPoly::zero());
        return Ok(());
    }
    let n = m - 1;
    poly_eq(w, format!("Gamma({m}) recurrence vs enumeration"), &gamma_recurrence(n)?, &gamma_poly(m)?);
    poly_eq(w, format!("Gamma~({m}) recurrence vs enumeration"), &gamma_tilde_recurrence(n)?, &gamma_tilde_poly(m)?);
    if m == 2 {
        // the variant without y in front of Gamma(n) gives Gamma~(2) = 1
        let variant = gamma_poly(n)? + &var(Var::Y) * &gamma_tilde_sum(n)?;
        w.require(variant != gamma_tilde_poly(m)?, || "Gamma~(2): variant without leading y unexpectedly agrees".into());
    }
    Ok(())
}

pub(super) fn recurrence2_check(m: usize, w: &mut Witnesses) -> Result<()> {
    let expected = if m == 1 { var(Var::R) } else { recurrence2(m - 1)? };
    poly_eq(w, format!("A({m}) recurrence vs enumeration"), &expected, &basic_eulerian(m)?);
    Ok(())
}

/// `e(tz) − t·e(z)`: slot `m` is `tᵐ − t`.
fn shared_denominator(order: usize) -> TruncatedSeries {
    q_exp_series(&var(Var::T), order).sub(&q_exp_series(&MPoly::one(), order).scale(&var(Var::T)))
}

fn with_gamma(order: usize, poly: impl Fn(usize) -> Result<MPoly>) -> Result<TruncatedSeries> {
    let mut slots = vec![MPoly::one()];
    for m in 1..=order {
        slots.push(GammaExpansion::from_y_poly(m, &poly(m)?).reconstruct());
    }
    Ok(TruncatedSeries::from_numerators(slots))
}

pub(super) fn prop_5_1(n: usize, w: &mut Witnesses) -> Result<()> {
    let one_minus_t = MPoly::one() - var(Var::T);
    let denom = shared_denominator(n);

    // (1 + sum A_m z^m/(q;q)_m) (e(tz) - t e(z)) = (1-t) e(rz)
    let a = TruncatedSeries::from_numerators((0..=n).map(basic_eulerian).collect::<Result<_>>()?);
    let rhs = q_exp_series(&var(Var::R), n).scale(&one_minus_t);
    poly_eq(w, format!("z^{n} of the (exc, fix, maj) generating function"), series_mul(&denom, &a).numerator(n), rhs.numerator(n));

    // z -> (1+t)z turns Gamma(m)(y,q) into sum gamma t^k (1+t)^(m-2k)
    let g = with_gamma(n, gamma_poly)?;
    let rhs = q_exp_series(&MPoly::one(), n).sub(&q_exp_series(&var(Var::T), n).scale(&var(Var::T)));
    poly_eq(w, format!("z^{n} of the Gamma generating function"), series_mul(&denom, &g).numerator(n), rhs.numerator(n));

    let h = with_gamma(n, gamma_tilde_poly)?;
    let rhs = if n == 0 { one_minus_t } else { MPoly::zero() };
    poly_eq(w, format!("z^{n} of the Gamma~ generating function"), series_mul(&denom, &h).numerator(n), &rhs);

    // the substitutions linking the two sides
    if n >= 1 {
        let a1 = basic_eulerian(n)?.substitute(Var::R, 1);
        let one_plus_t = MPoly::one() + var(Var::T);
        poly_eq(w, format!("n={n}: Gamma(n)(1+t)^n vs (1+t)A(t,1,q)"), &g.numerator(n).clone(), &(&one_plus_t * &a1));
        poly_eq(w, format!("n={n}: Gamma~(n)(1+t)^n vs A(t,0,q)"), h.numerator(n), &basic_eulerian(n)?.substitute(Var::R, 0));
    }
    Ok(())
}

pub(super) fn qmul(n: usize, w: &mut Witnesses) -> Result<()> {
    let mut by_size = vec![MPoly::zero(); n + 1];
    for subset in 0u32..(1 << n) {
        let inversions: usize = (0..n)
            .filter(|&i| subset & (1 << i) != 0)
            .map(|i| (0..i).filter(|&j| subset & (1 << j) == 0).count())
            .sum();
        let k = subset.count_ones() as usize;
        by_size[k] = &by_size[k] + &q_pow(inversions);
    }
    for (k, brute) in by_size.iter().enumerate() {
        poly_eq(w, format!("[{n} {k}]_q vs inv(A, B) sum"), &q_binomial(n, k)?, brute);
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

pub(super) fn fix_maj(n: usize, w: &mut Witnesses) -> Result<()> {
    let all = basic_eulerian(n)?;
    for j in 0..=n {
        let rhs = &q_binomial(n, j)? * &basic_eulerian(n - j)?.substitute(Var::R, 0);
        poly_eq(w, format!("n={n}, j={j}: fixed-point refinement"), &all.coeff_in(Var::R, j), &rhs);
    }
    Ok(())
}

pub(super) fn cycle_bis(n: usize, w: &mut Witnesses) -> Result<()> {
    let all = tally_over(n, |p| {
        Some(
            Monomial::ONE
                .with(Var::R, crate::perm::fix(p))
                .with(Var::Beta, crate::perm::cyc(p))
                .with(Var::T, crate::perm::exc(p)),
        )
    })?;
    for j in 1..=n {
        let lhs = all.coeff_in(Var::R, j);
        let factor = MPoly::monomial(binomial(n, j), &[(Var::Beta, j)]);
        let easy = &factor * &derangement_cycle_poly(n - j)?;
        poly_eq(w, format!("n={n}, j={j}: fixed points factor out of (cyc, exc)"), &lhs, &easy);
        // E(0,0) holds the empty permutation, so j = n keeps a k = 0 term
        let expansion = GammaExpansion::from_y_poly(n - j, &cyc_gamma_direct_poly(n - j)?);
        poly_eq(w, format!("n={n}, j={j}: E(n-j,k) expansion"), &lhs, &(&factor * &expansion.reconstruct()));
    }
    Ok(())
}

pub(super) fn exp_fixed(n: usize, w: &mut Witnesses) -> Result<()> {
    let all = basic_eulerian(n)?;
    for j in 1..=n {
        let lhs = all.coeff_in(Var::R, j);
        let binom = q_binomial(n, j)?;
        let tilde = gamma_tilde_poly(n - j)?;
        match gamma_extract(&lhs, n - j) {
            Ok(g) => {
                for k in 0..=(n - j) / 2 {
                    let expected = &binom * &tilde.coeff_in(Var::Y, k);
                    poly_eq(w, format!("n={n}, j={j}, k={k}: gamma vs [n j]_q inv sum over D~(n-j,k)"), &g.gamma(k), &expected);
                }
            }
            Err(e) => w.push(format!("n={n}, j={j}: {e}")),
        }
    }
    Ok(())
}

pub(super) fn sw3(n: usize, w: &mut Witnesses) -> Result<()> {
    let g = match sw3_gamma(n) {
        Ok(g) => g,
        Err(e) => {
            w.push(format!("n={n}: {e}"));
            return Ok(());
        }
    };
    w.require(g.is_nonnegative(), || format!("n={n}: negative coefficient in {:?}", g.gammas.iter().map(ToString::to_string).collect::<Vec<_>>()));
    w.require(g.gamma(0).is_zero(), || format!("n={n}: gamma~(0)(p,q) = {}", g.gamma(0)));
    let at_p1 = g.substitute(Var::P, 1);
    let thm = gamma_derangement(n)?;
    for k in 0..=n / 2 {
        poly_eq(w, format!("n={n}, k={k}: gamma~(1,q) vs gamma~(q)"), &at_p1.gamma(k), &thm.gamma(k));
    }
    Ok(())
}
