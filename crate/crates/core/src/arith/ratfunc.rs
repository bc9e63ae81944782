use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{ArithError, Poly, Rational, Var};

/// Quotient of two polynomials in the same variable, kept in lowest terms
/// with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let g = num.gcd(&den)?;
        let g = if g.is_zero() { Poly::one(den.var().clone()) } else { g };
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc = den.leading().expect("nonzero denominator").recip();
        Ok(RationalFunction { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn from_poly(p: Poly) -> Self {
        let den = Poly::one(p.var().clone());
        RationalFunction { num: p, den }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_poly(Poly::constant(var, c))
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn var(&self) -> &Var {
        self.den.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num == self.den
    }

    /// Value at a point, or `None` at a pole.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let d = self.den.eval(at);
        (!d.is_zero()).then(|| self.num.eval(at) / d)
    }

    /// `self(var + h)`.
    pub fn shift(&self, h: &Rational) -> Self {
        // shifting preserves coprimality and the leading coefficient
        RationalFunction { num: self.num.shift(h), den: self.den.shift(h) }
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithError> {
        let num = self.num.checked_mul(&other.den)?.checked_add(&other.num.checked_mul(&self.den)?)?;
        Self::new(num, self.den.checked_mul(&other.den)?)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        Self::new(self.num.checked_mul(&other.num)?, self.den.checked_mul(&other.den)?)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        self.checked_mul(&other.recip()?)
    }

    /// Primitive integer numerator and denominator with `self = num / den`
    /// and a positive leading coefficient in `den`.
    pub fn integer_form(&self) -> (Poly, Poly) {
        let (_, fnum) = self.num.integer_parts();
        let (_, fden) = self.den.integer_parts();
        // self = (fnum/fden) * pn / pd with pn, pd primitive
        let ratio = if self.num.is_zero() { Rational::zero() } else { &fnum / &fden };
        let pn = if self.num.is_zero() { self.num.clone() } else { self.num.scale(&fnum.recip()) };
        let pd = self.den.scale(&fden.recip());
        (pn.scale(&Rational::from_integer(ratio.numer().clone())), pd.scale(&Rational::from_integer(ratio.denom().clone())))
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

/// `(num) / (den)` over integers; parentheses only around multi-term parts.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.integer_form();
        let wrap = |p: &Poly| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if wrap(&num) && !den.is_one_poly() {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        if den.is_one_poly() {
            return Ok(());
        }
        if wrap(&den) {
            write!(f, " / ({den})")
        } else {
            write!(f, " / {den}")
        }
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.leading().is_some_and(One::is_one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use alloc::string::ToString;

    fn l(c: &[i64]) -> Poly {
        Poly::from_ints(Var::L, c)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (l^2 - 1) / (2l - 2) = (l + 1) / 2 -> monic den: (l/2 + 1/2) / 1
        let r = RationalFunction::new(l(&[-1, 0, 1]), l(&[-2, 2])).unwrap();
        assert_eq!(r.den(), &l(&[1]));
        assert_eq!(r.num(), &Poly::new(Var::L, alloc::vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(r.to_string(), "(l + 1) / 2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RationalFunction::new(l(&[1]), l(&[])), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn arithmetic_and_shift() {
        let r = RationalFunction::new(l(&[1, 1]), l(&[0, 1])).unwrap(); // (l+1)/l
        let s = r.shift(&rat_int(-1)); // l/(l-1)
        assert_eq!(s, RationalFunction::new(l(&[0, 1]), l(&[-1, 1])).unwrap());
        let prod = &r * &s;
        assert_eq!(prod, RationalFunction::new(l(&[1, 1]), l(&[-1, 1])).unwrap());
        let diff = &r - &r;
        assert!(diff.is_zero());
        assert!(r.checked_div(&r).unwrap().is_one());
        assert_eq!(r.eval(&rat_int(2)), Some(rat(3, 2)));
        assert_eq!(r.eval(&rat_int(0)), None);
    }

    #[test]
    fn display_forms() {
        let r = RationalFunction::new(l(&[3, 1]), l(&[-2, 1])).unwrap();
        assert_eq!(r.to_string(), "(l + 3) / (l - 2)");
        let c = RationalFunction::constant(Var::L, rat(-3, 4));
        assert_eq!(c.to_string(), "-3 / 4");
        let p = RationalFunction::from_poly(l(&[0, 1]));
        assert_eq!(p.to_string(), "l");
    }
}
