use serde::{Serialize, Serializer};

use super::poly::{MPoly, Var};
use crate::error::{Error, Result};

/// `h(t) = ∑ₖ γₖ tᵏ(1+t)^{m−2k}` for `0 ≤ k ≤ ⌊m/2⌋`, with `m` the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaExpansion {
    pub center: usize,
    pub gammas: Vec<MPoly>,
}

impl GammaExpansion {
    pub fn gamma(&self, k: usize) -> MPoly {
        self.gammas.get(k).cloned().unwrap_or_default()
    }

    /// `∑ₖ γₖ tᵏ(1+t)^{m−2k}`.
    pub fn reconstruct(&self) -> MPoly {
        let one_plus_t = MPoly::one() + MPoly::var(Var::T);
        self.gammas
            .iter()
            .enumerate()
            .map(|(k, g)| &g.mul_var_pow(Var::T, k) * &one_plus_t.pow((self.center - 2 * k) as u32))
            .sum()
    }

    /// `∑ₖ γₖ yᵏ`.
    pub fn to_y_poly(&self) -> MPoly {
        MPoly::from_coeffs(Var::Y, &self.gammas)
    }

    /// Inverse of [`to_y_poly`](Self::to_y_poly) for a given center.
    pub fn from_y_poly(center: usize, poly: &MPoly) -> Self {
        let gammas = (0..=center / 2).map(|k| poly.coeff_in(Var::Y, k)).collect();
        Self { center, gammas }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(MPoly::has_nonnegative_coefficients)
    }

    pub fn substitute(&self, v: Var, value: i64) -> Self {
        Self { center: self.center, gammas: self.gammas.iter().map(|g| g.substitute(v, value)).collect() }
    }
}

impl Serialize for GammaExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("GammaExpansion", 2)?;
        s.serialize_field("center", &self.center)?;
        let gammas: Vec<String> = self.gammas.iter().map(ToString::to_string).collect();
        s.serialize_field("gammas", &gammas)?;
        s.end()
    }
}

/// Peels `γ₀, γ₁, …` off `h` viewed as a polynomial in `t`.
///
/// Fails with [`Error::NotExpandable`] when `deg_t h > m` or a residual
/// survives, which happens exactly when `[tᵏ]h ≠ [t^{m−k}]h` for some `k`.
pub fn gamma_extract(h: &MPoly, center: usize) -> Result<GammaExpansion> {
    if h.degree_in(Var::T) as usize > center {
        return Err(Error::NotExpandable { center });
    }
    let one_plus_t = MPoly::one() + MPoly::var(Var::T);
    let mut residual = h.clone();
    let mut gammas = Vec::with_capacity(center / 2 + 1);
    for k in 0..=center / 2 {
        let g = residual.coeff_in(Var::T, k);
        if !g.is_zero() {
            residual -= &(&g.mul_var_pow(Var::T, k) * &one_plus_t.pow((center - 2 * k) as u32));
        }
        gammas.push(g);
    }
    if !residual.is_zero() {
        return Err(Error::NotExpandable { center });
    }
    Ok(GammaExpansion { center, gammas })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> MPoly {
        MPoly::var(Var::T)
    }

    fn poly_q(coeffs: &[i64]) -> MPoly {
        coeffs.iter().enumerate().map(|(i, &c)| MPoly::monomial(c, &[(Var::Q, i)])).sum()
    }

    #[test]
    fn extract_simple() {
        let h = MPoly::one() + t().scale(&3.into()) + t().pow(2);
        let g = gamma_extract(&h, 2).unwrap();
        assert_eq!(g.gammas, vec![MPoly::one(), MPoly::one()]);
        assert_eq!(g.reconstruct(), h);
    }

    #[test]
    fn extract_with_q_coefficients() {
        let c = poly_q(&[3, 2, 3, 2, 1]);
        let h = MPoly::one() + &c * &t() + &c * &t().pow(2) + t().pow(3);
        let g = gamma_extract(&h, 3).unwrap();
        assert!(g.gammas[0].is_one());
        assert_eq!(g.gammas[1], poly_q(&[0, 2, 3, 2, 1]));
    }

    #[test]
    fn asymmetric_is_rejected() {
        let h = MPoly::one() + t().scale(&2.into());
        assert_eq!(gamma_extract(&h, 1), Err(Error::NotExpandable { center: 1 }));
        assert!(gamma_extract(&t().pow(3), 2).is_err());
    }

    #[test]
    fn zero_polynomial_expands_to_zero() {
        let g = gamma_extract(&MPoly::zero(), 1).unwrap();
        assert!(g.gammas.iter().all(MPoly::is_zero));
    }

    #[test]
    fn y_poly_round_trip() {
        let g = GammaExpansion { center: 5, gammas: vec![MPoly::one(), poly_q(&[0, 3]), poly_q(&[1, 1])] };
        assert_eq!(GammaExpansion::from_y_poly(5, &g.to_y_poly()), g);
    }
}
