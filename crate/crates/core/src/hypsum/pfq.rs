use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{Poly, Rational, RationalExt};

/// Generalized hypergeometric series
/// `Σ_j Π (upper_i)_j / (Π (lower_i)_j · j!) · x^j`, evaluated only when it
/// terminates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pfq {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PfqError {
    /// No upper parameter is a nonpositive integer.
    NonTerminating,
    /// Lower parameter `index` hits zero at term `term` before the series ends.
    LowerPole { index: usize, term: usize },
}

impl fmt::Display for PfqError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PfqError::NonTerminating => f.write_str("series does not terminate"),
            PfqError::LowerPole { index, term } => {
                write!(f, "lower parameter {index} vanishes at term {term} before termination")
            }
        }
    }
}

impl core::error::Error for PfqError {}

impl Pfq {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        Pfq { upper, lower }
    }

    /// Index of the last nonzero term: `m` for the smallest-magnitude upper
    /// parameter `-m`.
    pub fn degree(&self) -> Result<usize, PfqError> {
        self.upper
            .iter()
            .filter(|a| a.is_integer() && !a.is_positive_int())
            .map(|a| a.as_integer().expect("integer").magnitude().try_into().unwrap_or(usize::MAX))
            .min()
            .ok_or(PfqError::NonTerminating)
    }

    /// Series coefficients `c_0 ..= c_m`, so that the value is `Σ c_j x^j`.
    pub fn coefficients(&self) -> Result<Vec<Rational>, PfqError> {
        let m = self.degree()?;
        let mut out = Vec::with_capacity(m + 1);
        let mut c = Rational::one();
        out.push(c.clone());
        for j in 0..m {
            let jr = Rational::from_integer(j.into());
            let mut den = Rational::from_integer((j + 1).into());
            for (index, b) in self.lower.iter().enumerate() {
                let f = b + &jr;
                if f.is_zero() {
                    return Err(PfqError::LowerPole { index, term: j + 1 });
                }
                den *= f;
            }
            let num = self.upper.iter().fold(Rational::one(), |acc, a| acc * (a + &jr));
            c = c * num / den;
            out.push(c.clone());
        }
        Ok(out)
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational, PfqError> {
        Ok(self.coefficients()?.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c))
    }

    /// Value with a polynomial argument, e.g. `y` or `(1-x)/2`.
    pub fn eval_poly(&self, arg: &Poly) -> Result<Poly, PfqError> {
        let var = arg.var().clone();
        Ok(self
            .coefficients()?
            .iter()
            .rev()
            .fold(Poly::zero(var.clone()), |acc, c| &(&acc * arg) + &Poly::constant(var.clone(), c.clone())))
    }
}

trait PositiveInt {
    fn is_positive_int(&self) -> bool;
}

impl PositiveInt for Rational {
    fn is_positive_int(&self) -> bool {
        self.is_integer() && self.is_nonneg() && !self.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int, Var};
    use alloc::vec;

    #[test]
    fn zero_upper_parameter_gives_one() {
        let p = Pfq::new(vec![rat_int(0), rat(7, 3)], vec![rat(5, 2)]);
        assert_eq!(p.eval(&rat(9, 4)), Ok(rat_int(1)));
        assert_eq!(p.degree(), Ok(0));
    }

    #[test]
    fn chu_vandermonde() {
        // 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
        use crate::arith::pochhammer;
        for n in 0..8u32 {
            let (b, c) = (rat(3, 2), rat(7, 3));
            let p = Pfq::new(vec![rat_int(-(n as i64)), b.clone()], vec![c.clone()]);
            assert_eq!(p.eval(&rat_int(1)).unwrap(), pochhammer(&(&c - &b), n) / pochhammer(&c, n));
        }
    }

    #[test]
    fn smallest_nonpositive_parameter_terminates() {
        let p = Pfq::new(vec![rat_int(-5), rat_int(-2)], vec![rat_int(1)]);
        assert_eq!(p.degree(), Ok(2));
        assert_eq!(p.coefficients().unwrap().len(), 3);
    }

    #[test]
    fn errors() {
        let p = Pfq::new(vec![rat_int(1), rat(1, 2)], vec![rat_int(3)]);
        assert_eq!(p.eval(&rat_int(1)), Err(PfqError::NonTerminating));
        let p = Pfq::new(vec![rat_int(-3)], vec![rat_int(-1)]);
        assert_eq!(p.coefficients(), Err(PfqError::LowerPole { index: 0, term: 2 }));
        // pole only after termination is harmless
        let p = Pfq::new(vec![rat_int(-1)], vec![rat_int(-1)]);
        assert_eq!(p.eval(&rat_int(1)), Ok(rat_int(2)));
    }

    #[test]
    fn polynomial_argument() {
        // 2y 2F1(-1, 3; 3; y) = 2y - 2y^2
        let p = Pfq::new(vec![rat_int(-1), rat_int(3)], vec![rat_int(3)]);
        let y = Poly::identity(Var::Y);
        let v = &p.eval_poly(&y).unwrap() * &Poly::from_ints(Var::Y, &[0, 2]);
        assert_eq!(v, Poly::from_ints(Var::Y, &[0, 2, -2]));
    }
}
