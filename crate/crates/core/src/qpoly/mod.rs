//! Exact polynomial arithmetic over the fixed alphabet `t, r, q, p, y, β`,
//! q-analogues and γ-expansions.

mod gamma;
mod poly;
mod series;

pub use gamma::{gamma_extract, GammaExpansion};
pub use poly::{MPoly, Monomial, Tally, Var};
pub use series::{q_binomial, q_binomial_row, q_exp_series, q_factorial, series_mul, TruncatedSeries};

/// Ring operation selector for [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn arith(a: &MPoly, b: &MPoly, op: ArithOp) -> MPoly {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}
