//! The polynomial families, each obtained by summing a monomial over `𝔖ₙ`.
//!
//! Every γ-expansion is computed two ways (peeling the enumerated polynomial,
//! and summing directly over the permutation family that indexes it) and the
//! two are required to agree.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::bijections::lyc;
use crate::error::{Error, Result};
use crate::perm::{
    admissible_inversion_count, cda, classify, cyc, des, exc, fix, inv, maj, par_fold, shape_counts,
    Permutation,
};
use crate::qpoly::{gamma_extract, GammaExpansion, MPoly, Monomial, Tally, Var};
use crate::rixfact::rix;

/// Sums `monomial(σ)` over `𝔖ₙ`, skipping permutations mapped to `None`.
pub fn tally_over<F>(n: usize, monomial: F) -> Result<MPoly>
where
    F: Fn(&Permutation) -> Option<Monomial> + Sync + Send,
{
    let tally = par_fold(
        n,
        Tally::new,
        |acc, p| {
            if let Some(m) = monomial(p) {
                acc.bump(m);
            }
        },
        Tally::merge,
    )?;
    Ok(tally.to_poly())
}

fn mono() -> Monomial {
    Monomial::ONE
}

fn maj_minus_exc(p: &Permutation) -> usize {
    maj(p).checked_sub(exc(p)).expect("maj >= exc")
}

type CacheKey = (&'static str, usize);

fn cached(family: &'static str, n: usize, build: impl FnOnce() -> Result<MPoly>) -> Result<MPoly> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, MPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache lock").get(&(family, n)) {
        return Ok(p.clone());
    }
    let p = build()?;
    cache.lock().expect("cache lock").insert((family, n), p.clone());
    Ok(p)
}

/// `Aₙ(t, r, q) = ∑ t^exc r^fix q^(maj − exc)`.
pub fn basic_eulerian(n: usize) -> Result<MPoly> {
    cached("exc-fix-maj", n, || {
        tally_over(n, |p| {
            Some(mono().with(Var::T, exc(p)).with(Var::R, fix(p)).with(Var::Q, maj_minus_exc(p)))
        })
    })
}

/// `∑ t^des r^rix q^ai`.
pub fn basic_eulerian_desrix(n: usize) -> Result<MPoly> {
    tally_over(n, |p| {
        Some(mono().with(Var::T, des(p)).with(Var::R, rix(p)).with(Var::Q, admissible_inversion_count(p)))
    })
}

/// `Γₙ(y, q) = ∑ y^des q^inv` over permutations without double descents.
/// `Γ₀ = 1`.
pub fn gamma_poly(n: usize) -> Result<MPoly> {
    cached("gamma", n, || {
        tally_over(n, |p| {
            (shape_counts(p).dd == 0).then(|| mono().with(Var::Y, des(p)).with(Var::Q, inv(p)))
        })
    })
}

/// `Γ̃ₙ(y, q) = ∑ y^(des+1) q^inv` over permutations without double descents
/// ending in an ascent. `Γ̃₀ = 1` by convention, `Γ̃₁ = 0`.
pub fn gamma_tilde_poly(n: usize) -> Result<MPoly> {
    if n == 0 {
        return Ok(MPoly::one());
    }
    cached("gamma-tilde", n, || {
        tally_over(n, |p| {
            classify(p)
                .no_double_descent_final_ascent
                .map(|k| mono().with(Var::Y, k).with(Var::Q, inv(p)))
        })
    })
}

/// `∑ β^cyc t^exc` over derangements.
pub fn derangement_cycle_poly(n: usize) -> Result<MPoly> {
    tally_over(n, |p| (fix(p) == 0).then(|| mono().with(Var::Beta, cyc(p)).with(Var::T, exc(p))))
}

/// `∑ β^cyc y^exc` over derangements without cyclic double ascents.
pub fn cyc_gamma_direct_poly(n: usize) -> Result<MPoly> {
    tally_over(n, |p| {
        (fix(p) == 0 && cda(p) == 0).then(|| mono().with(Var::Beta, cyc(p)).with(Var::Y, exc(p)))
    })
}

/// `∑ t^exc p^des q^(maj − exc)` over derangements.
pub fn derangement_des_poly(n: usize) -> Result<MPoly> {
    tally_over(n, |p| {
        (fix(p) == 0).then(|| mono().with(Var::T, exc(p)).with(Var::P, des(p)).with(Var::Q, maj_minus_exc(p)))
    })
}

/// `∑ β^lyc t^des q^ai` over permutations with `rix = 0`.
pub fn rix_free_poly(n: usize) -> Result<MPoly> {
    tally_over(n, |p| {
        (rix(p) == 0).then(|| {
            mono()
                .with(Var::T, des(p))
                .with(Var::Q, admissible_inversion_count(p))
                .with(Var::Beta, lyc(p))
        })
    })
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::NotInDomain("gamma families are indexed by n >= 1".into()))
    } else {
        Ok(())
    }
}

fn two_routes(family: &'static str, n: usize, extracted: GammaExpansion, direct: GammaExpansion) -> Result<GammaExpansion> {
    if extracted == direct {
        Ok(extracted)
    } else {
        Err(Error::MismatchAgainstDirect { family, n })
    }
}

/// γ-coefficients of `Aₙ(t, 1, q)` about center `n − 1`.
pub fn gamma_basic(n: usize) -> Result<GammaExpansion> {
    require_positive(n)?;
    let extracted = gamma_extract(&basic_eulerian(n)?.substitute(Var::R, 1), n - 1)?;
    let direct = GammaExpansion::from_y_poly(n - 1, &gamma_poly(n)?);
    two_routes("basic", n, extracted, direct)
}

/// γ-coefficients of `Aₙ(t, 0, q)` about center `n`.
pub fn gamma_derangement(n: usize) -> Result<GammaExpansion> {
    require_positive(n)?;
    let extracted = gamma_extract(&basic_eulerian(n)?.substitute(Var::R, 0), n)?;
    let direct = GammaExpansion::from_y_poly(n, &gamma_tilde_poly(n)?);
    two_routes("derangement", n, extracted, direct)
}

/// γ-coefficients (in `β`) of `∑ β^cyc t^exc` over derangements, about center `n`.
pub fn cyc_gamma(n: usize) -> Result<GammaExpansion> {
    require_positive(n)?;
    let extracted = gamma_extract(&derangement_cycle_poly(n)?, n)?;
    let direct = GammaExpansion::from_y_poly(n, &cyc_gamma_direct_poly(n)?);
    two_routes("cyc", n, extracted, direct)
}

/// γ-coefficients (in `p, q`) of `∑ t^exc p^des q^(maj − exc)` over derangements.
///
/// This polynomial is symmetric about `n/2`, so the center is `n`; the
/// `k = 0` coefficient vanishes for `n ≥ 1`.
pub fn sw3_gamma(n: usize) -> Result<GammaExpansion> {
    require_positive(n)?;
    gamma_extract(&derangement_des_poly(n)?, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_q(coeffs: &[i64]) -> MPoly {
        coeffs.iter().enumerate().map(|(i, &c)| MPoly::monomial(c, &[(Var::Q, i)])).sum()
    }

    fn t_pow(k: usize) -> MPoly {
        MPoly::monomial(1, &[(Var::T, k)])
    }

    #[test]
    fn small_basic_eulerian() {
        assert!(basic_eulerian(0).unwrap().is_one());
        assert_eq!(basic_eulerian(1).unwrap(), MPoly::var(Var::R));
        // identity gives r^2, 21 gives t
        assert_eq!(basic_eulerian(2).unwrap(), MPoly::monomial(1, &[(Var::R, 2)]) + t_pow(1));
    }

    #[test]
    fn four_letter_displays() {
        let c = poly_q(&[3, 2, 3, 2, 1]);
        let a1 = MPoly::one() + &c * &t_pow(1) + &c * &t_pow(2) + t_pow(3);
        assert_eq!(basic_eulerian(4).unwrap().substitute(Var::R, 1), a1);
        let a0 = t_pow(1) + &poly_q(&[2, 1, 2, 1, 1]) * &t_pow(2) + t_pow(3);
        assert_eq!(basic_eulerian(4).unwrap().substitute(Var::R, 0), a0);
    }

    #[test]
    fn des_rix_route_small() {
        for n in 0..=5 {
            assert_eq!(basic_eulerian_desrix(n).unwrap(), basic_eulerian(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn gamma_families_small() {
        assert!(gamma_basic(1).unwrap().gammas[0].is_one());
        let g = gamma_basic(4).unwrap();
        assert_eq!(g.gammas, vec![MPoly::one(), poly_q(&[0, 2, 3, 2, 1])]);

        let d = gamma_derangement(1).unwrap();
        assert!(d.gammas.iter().all(MPoly::is_zero));
        let d = gamma_derangement(4).unwrap();
        assert_eq!(d.gamma(1), MPoly::one());
        assert_eq!(d.gamma(2), poly_q(&[0, 1, 2, 1, 1]));

        let b = MPoly::var(Var::Beta);
        let c = cyc_gamma(4).unwrap();
        assert_eq!(c.gamma(1), b);
        assert_eq!(c.gamma(2), b.scale(&2.into()) + b.pow(2).scale(&3.into()));
        assert_eq!(cyc_gamma(2).unwrap().gamma(1), b);
    }

    #[test]
    fn sw3_two_letters() {
        // the single derangement 21 contributes p t
        let g = sw3_gamma(2).unwrap();
        assert!(g.gamma(0).is_zero());
        assert_eq!(g.gamma(1), MPoly::var(Var::P));
    }

    #[test]
    fn zero_size_is_rejected() {
        assert!(matches!(gamma_basic(0), Err(Error::NotInDomain(_))));
    }
}
