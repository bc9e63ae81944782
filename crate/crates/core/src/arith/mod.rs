//! Exact scalars, polynomials and rational functions.

mod comb;
mod poly;
mod rational;
mod ratfunc;

use core::fmt;

pub use comb::{binomial, binomial_rational, factorial, pochhammer};
pub use poly::{Poly, Var};
pub use rational::{rat, rat_int, try_div, Rational, RationalExt};
pub use ratfunc::RationalFunction;

/// Failure of an exact arithmetic operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithError {
    DivisionByZero,
    /// Operands carry different variable tags.
    VariableMismatch { left: Var, right: Var },
    /// `exact_div` found a nonzero remainder.
    InexactDivision,
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::DivisionByZero => f.write_str("division by zero"),
            ArithError::VariableMismatch { left, right } => {
                write!(f, "polynomials in different variables: {left} and {right}")
            }
            ArithError::InexactDivision => f.write_str("polynomial division leaves a remainder"),
        }
    }
}

impl core::error::Error for ArithError {}
