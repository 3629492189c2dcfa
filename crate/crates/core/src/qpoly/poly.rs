use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The closed variable alphabet, in display order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    R,
    Q,
    P,
    Y,
    /// Cycle-counting variable, printed as `b`.
    Beta,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::T, Var::R, Var::Q, Var::P, Var::Y, Var::Beta];

    fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::R => "r",
            Var::Q => "q",
            Var::P => "p",
            Var::Y => "y",
            Var::Beta => "b",
        }
    }
}

const NVARS: usize = Var::ALL.len();

/// Exponent vector over `(t, r, q, p, y, β)`.
///
/// Ordered graded-lexicographically: lower total degree first, then larger
/// exponents of earlier variables first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn with(mut self, var: Var, exp: usize) -> Self {
        self.0[var.index()] = u16::try_from(exp).expect("exponent overflow");
        self
    }

    pub fn exp(&self, var: Var) -> u32 {
        u32::from(self.0[var.index()])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    fn times(self, other: Self) -> Self {
        let mut out = self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `t, r, q, p, y, β` with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::ONE.with(v, 1))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c.into());
        out
    }

    /// `c · v₁^e₁ ⋯` from `(variable, exponent)` pairs.
    pub fn monomial(c: impl Into<BigInt>, powers: &[(Var, usize)]) -> Self {
        let m = powers.iter().fold(Monomial::ONE, |m, &(v, e)| m.with(v, e));
        Self::term(c, m)
    }

    /// `∑ₖ coeffs[k] · vᵏ`.
    pub fn from_coeffs(v: Var, coeffs: &[MPoly]) -> Self {
        coeffs
            .iter()
            .enumerate()
            .fold(Self::zero(), |acc, (k, c)| acc + c.mul_var_pow(v, k))
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Coefficient of `vᵏ`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, v: Var, k: usize) -> MPoly {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.exp(v) as usize == k {
                out.add_term(m.with(v, 0), c.clone());
            }
        }
        out
    }

    pub fn mul_var_pow(&self, v: Var, k: usize) -> MPoly {
        let shift = Monomial::ONE.with(v, k);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.times(shift), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            out.add_term(*m, a * c);
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact partial evaluation `v ↦ value`.
    pub fn substitute(&self, v: Var, value: impl Into<BigInt>) -> MPoly {
        let value = value.into();
        let mut powers: Vec<BigInt> = vec![BigInt::one()];
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * &value;
                powers.push(next);
            }
            out.add_term(m.with(v, 0), c * &powers[e]);
        }
        out
    }

    /// Replaces `v` by the polynomial `value`.
    pub fn substitute_poly(&self, v: Var, value: &MPoly) -> MPoly {
        let top = self.degree_in(v) as usize;
        (0..=top).rev().fold(Self::zero(), |acc, k| &(&acc * value) + &self.coeff_in(v, k))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Display with terms grouped by powers of `v`, e.g. `1 + (3+2q)t + t^2`.
    pub fn display_grouped(&self, v: Var) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut pieces: Vec<String> = Vec::new();
        for k in 0..=self.degree_in(v) as usize {
            let c = self.coeff_in(v, k);
            if c.is_zero() {
                continue;
            }
            let power = match k {
                0 => String::new(),
                1 => v.symbol().to_string(),
                _ => format!("{}^{k}", v.symbol()),
            };
            let piece = if k == 0 {
                c.to_string()
            } else if c.is_one() {
                power
            } else if c == -MPoly::one() {
                format!("-{power}")
            } else if c.num_terms() == 1 {
                format!("{c}{power}")
            } else {
                format!("({c}){power}")
            };
            pieces.push(piece);
        }
        let mut out = String::new();
        for (i, piece) in pieces.iter().enumerate() {
            match (i, piece.strip_prefix('-')) {
                (0, _) => out.push_str(piece),
                (_, Some(rest)) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                (_, None) => {
                    out.push_str(" + ");
                    out.push_str(piece);
                }
            }
        }
        out
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    for v in Var::ALL {
        match m.exp(v) {
            0 => {}
            1 => f.write_str(v.symbol())?,
            e => write!(f, "{}^{e}", v.symbol())?,
        }
    }
    Ok(())
}

/// `2q+3q^2-t^2q`: coefficients and `^1` elided where they are 1.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            if *m == Monomial::ONE || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            write_monomial(f, m)?;
        }
        Ok(())
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::zero(), |acc, p| acc + p)
    }
}

/// Machine-integer accumulator for enumeration sums; converted to [`MPoly`] at the end.
#[derive(Clone, Debug, Default)]
pub struct Tally(HashMap<Monomial, i64>);

impl Tally {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bump(&mut self, m: Monomial) {
        *self.0.entry(m).or_insert(0) += 1;
    }

    pub fn add(&mut self, m: Monomial, c: i64) {
        *self.0.entry(m).or_insert(0) += c;
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        for (m, c) in other.0 {
            self.add(m, c);
        }
        self
    }

    pub fn to_poly(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (m, &c) in &self.0 {
            out.add_term(*m, BigInt::from(c));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> MPoly {
        MPoly::var(Var::T)
    }
    fn q() -> MPoly {
        MPoly::var(Var::Q)
    }

    #[test]
    fn binomial_square() {
        let a = MPoly::one() + t();
        assert_eq!((&a * &a).to_string(), "1+2t+t^2");
    }

    #[test]
    fn products_in_q() {
        let a = &q() * &(MPoly::one() + q());
        assert_eq!(a.to_string(), "q+q^2");
        let b = MPoly::constant(2) + q() + q().pow(2);
        assert_eq!((&a * &b).to_string(), "2q+3q^2+2q^3+q^4");
    }

    #[test]
    fn zero_coefficients_vanish() {
        let a = &(MPoly::one() + q()) - &q();
        assert!(a.is_one());
        assert_eq!((&a - &a), MPoly::zero());
        assert_eq!(MPoly::zero().to_string(), "0");
    }

    #[test]
    fn substitution() {
        let a = (MPoly::one() + t()).pow(2);
        assert!(a.substitute(Var::T, -1).is_zero());
        assert_eq!(a.substitute(Var::R, 5), a);
        let s = a.substitute_poly(Var::T, &(q() - MPoly::one()));
        assert_eq!(s, q().pow(2));
    }

    #[test]
    fn display_negative_and_mixed() {
        let a = MPoly::one() - q();
        assert_eq!(a.to_string(), "1-q");
        let b = MPoly::monomial(3, &[(Var::T, 2), (Var::Q, 1)]) - MPoly::var(Var::Beta);
        assert_eq!(b.to_string(), "-b+3t^2q");
    }

    #[test]
    fn grouped_display() {
        let c = MPoly::constant(3) + q().scale(&2.into());
        let a = MPoly::one() + &c * &t() + t().pow(3);
        assert_eq!(a.display_grouped(Var::T), "1 + (3+2q)t + t^3");
        assert_eq!((-t()).display_grouped(Var::T), "-t");
        assert_eq!((MPoly::one() - t()).display_grouped(Var::T), "1 - t");
    }

    #[test]
    fn tally_matches_polynomial_sum() {
        let mut tally = Tally::new();
        let m = Monomial::ONE.with(Var::T, 1);
        tally.bump(m);
        tally.bump(m);
        tally.bump(Monomial::ONE);
        assert_eq!(tally.to_poly(), MPoly::one() + t().scale(&2.into()));
    }
}
