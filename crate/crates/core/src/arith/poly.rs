use alloc::borrow::Cow;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{ArithError, Rational};

/// Name of a polynomial's indeterminate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(Cow<'static, str>);

impl Var {
    /// `y = e^(-t)`.
    pub const Y: Var = Var(Cow::Borrowed("y"));
    /// `x = 1 - 2y`, the orthogonal-polynomial variable.
    pub const X: Var = Var(Cow::Borrowed("x"));
    /// Default summation variable.
    pub const L: Var = Var(Cow::Borrowed("l"));

    pub fn new(name: impl Into<String>) -> Self {
        Var(Cow::Owned(name.into()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Dense univariate polynomial over [`Rational`].
///
/// `coeffs[i]` is the coefficient of `var^i`. The last stored coefficient is
/// never zero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(var: Var) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::new(var, vec![c])
    }

    /// `c * var^deg`.
    pub fn monomial(var: Var, c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { var, coeffs }
    }

    /// The polynomial `var` itself.
    pub fn identity(var: Var) -> Self {
        Self::monomial(var, Rational::one(), 1)
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    fn check_var(&self, other: &Poly) -> Result<(), ArithError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(ArithError::VariableMismatch { left: self.var.clone(), right: other.var.clone() })
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, ArithError> {
        self.check_var(other)?;
        let (long, short) =
            if self.coeffs.len() >= other.coeffs.len() { (self, other) } else { (other, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Ok(Poly::new(self.var.clone(), coeffs))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, ArithError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, ArithError> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.var.clone()));
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Poly::new(self.var.clone(), coeffs))
    }

    /// Product truncated to degrees `<= max_deg`.
    pub fn mul_truncated(&self, other: &Poly, max_deg: usize) -> Result<Poly, ArithError> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.var.clone()));
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(max_deg + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Poly::new(self.var.clone(), coeffs))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var.clone());
        }
        Poly { var: self.var.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `var^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { var: self.var.clone(), coeffs }
    }

    /// Exact division by `var^k`; `None` if some coefficient below `k` is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<Poly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::new(self.var.clone(), self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        Poly::new(self.var.clone(), coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// `self(inner)`. The result lives in `inner`'s variable.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero(inner.var.clone());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(inner.var.clone(), c.clone());
        }
        acc
    }

    /// `self(var + h)`.
    pub fn shift(&self, h: &Rational) -> Poly {
        let inner = Poly::new(self.var.clone(), vec![h.clone(), Rational::one()]);
        self.compose(&inner)
    }

    /// `self(var + 1)`.
    pub fn shift_by_one(&self) -> Poly {
        self.shift(&Rational::one())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), ArithError> {
        self.check_var(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(ArithError::DivisionByZero);
        };
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len().saturating_sub(dd);
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(self.var.clone(), quot), Poly::new(self.var.clone(), rem)))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, ArithError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ArithError::InexactDivision)
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly, ArithError> {
        self.check_var(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Resultant of two polynomials by the Euclidean remainder sequence.
    ///
    /// Conventions: `res(a, c) = c^deg(a)` for a nonzero constant `c`, and the
    /// resultant with the zero polynomial is zero.
    pub fn resultant(&self, other: &Poly) -> Result<Rational, ArithError> {
        self.check_var(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut acc = Rational::one();
        loop {
            let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
                return Ok(Rational::zero());
            };
            if db == 0 {
                return Ok(acc * num_traits::pow(b.coeffs[0].clone(), da));
            }
            if da == 0 {
                return Ok(acc * num_traits::pow(a.coeffs[0].clone(), db));
            }
            let (_, r) = a.div_rem(&b)?;
            let Some(dr) = r.degree() else {
                return Ok(Rational::zero());
            };
            // res(a, b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
            if da % 2 == 1 && db % 2 == 1 {
                acc = -acc;
            }
            acc *= num_traits::pow(b.coeffs[db].clone(), da - dr);
            a = b;
            b = r;
        }
    }

    /// Integer roots by enumerating divisors of the trailing coefficient up to
    /// a root bound, ascending, without multiplicity.
    pub fn integer_roots(&self) -> Vec<num_bigint::BigInt> {
        use num_bigint::BigInt;
        let Some(low) = self.low_degree() else {
            return Vec::new();
        };
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(BigInt::ZERO);
        }
        let reduced = self.shift_down(low).expect("low degree");
        if reduced.is_constant() {
            return roots;
        }
        let (ints, _) = reduced.integer_parts();
        let trailing = ints[0].abs();
        // an integer root divides the trailing coefficient and is bounded by
        // the Fujiwara bound 2 max_i |c_{n-i} / c_n|^(1/i)
        let lc = ints.last().expect("nonzero").abs();
        let deg = ints.len() - 1;
        let bound = (1..=deg)
            .map(|i| {
                let q = (ints[deg - i].abs() + &lc - BigInt::one()) / &lc;
                num_integer::Roots::nth_root(&q, i as u32) + BigInt::one()
            })
            .max()
            .unwrap_or_default()
            * BigInt::from(2);
        let limit = if trailing < bound { trailing.clone() } else { bound };
        let mut d = BigInt::one();
        while d <= limit {
            if (&trailing % &d).is_zero() {
                for cand in [d.clone(), -d.clone()] {
                    if reduced.eval(&Rational::from_integer(cand.clone())).is_zero() {
                        roots.push(cand);
                    }
                }
            }
            d += 1;
        }
        roots.sort();
        roots
    }

    /// The polynomial of least degree through the given points (Newton
    /// divided differences). Nodes must be distinct.
    pub fn interpolate(var: Var, points: &[(Rational, Rational)]) -> Poly {
        let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
        let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..dd.len() {
            for i in (level..dd.len()).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
            }
        }
        let mut acc = Poly::zero(var.clone());
        for i in (0..dd.len()).rev() {
            let factor = Poly::new(var.clone(), vec![-xs[i].clone(), Rational::one()]);
            acc = &(&acc * &factor) + &Poly::constant(var.clone(), dd[i].clone());
        }
        acc
    }

    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient; returns the integer coefficients and the factor `f` with
    /// `self = f * primitive`.
    pub fn integer_parts(&self) -> (Vec<num_bigint::BigInt>, Rational) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return (Vec::new(), Rational::one());
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::ZERO, |acc, c| acc.gcd(c));
        if ints.last().expect("nonzero").is_negative() {
            g = -g;
        }
        for c in &mut ints {
            *c /= &g;
        }
        (ints, Rational::new(g, lcm))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics if the operands are in different variables; use the
        /// `checked_*` form to get an error instead.
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

/// Descending powers, e.g. `3*y^2 - y + 1/2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            if i == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}*")?;
            }
            match i {
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{i}", self.var)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn y(c: &[i64]) -> Poly {
        Poly::from_ints(Var::Y, c)
    }

    fn l(c: &[i64]) -> Poly {
        Poly::from_ints(Var::L, c)
    }

    #[test]
    fn normalization_trims_zeros() {
        let p = y(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(y(&[0, 0]).is_zero());
        assert_eq!(y(&[0, 0]).degree(), None);
    }

    #[test]
    fn derivative_of_square() {
        assert_eq!(y(&[0, 0, 1]).derivative(), y(&[0, 2]));
        assert!(y(&[5]).derivative().is_zero());
    }

    #[test]
    fn gcd_is_monic() {
        assert_eq!(y(&[-1, 0, 1]).gcd(&y(&[-1, 1])).unwrap(), y(&[-1, 1]));
        assert_eq!(y(&[-2, 0, 2]).gcd(&y(&[3, 3])).unwrap(), y(&[1, 1]));
        assert_eq!(y(&[1, 1]).gcd(&y(&[2, 1])).unwrap(), y(&[1]));
        assert!(Poly::zero(Var::Y).gcd(&Poly::zero(Var::Y)).unwrap().is_zero());
    }

    #[test]
    fn resultants() {
        assert_eq!(l(&[0, 1]).resultant(&l(&[2, 1])).unwrap(), rat_int(2));
        // res(l^2 - 1, l - 2) = prod over roots of first of (r - 2) = (1-2)(-1-2) = 3
        assert_eq!(l(&[-1, 0, 1]).resultant(&l(&[-2, 1])).unwrap(), rat_int(3));
        assert_eq!(l(&[-1, 0, 1]).resultant(&l(&[-1, 1])).unwrap(), rat_int(0));
        assert_eq!(l(&[3]).resultant(&l(&[1, 1, 1])).unwrap(), rat_int(9));
        // res(a, b) = (-1)^(deg a deg b) res(b, a)
        let a = l(&[1, 2, 3]);
        let b = l(&[4, 0, 5, 1]);
        assert_eq!(a.resultant(&b).unwrap(), b.resultant(&a).unwrap());
        let c = l(&[1, 2]);
        assert_eq!(c.resultant(&b).unwrap(), -b.resultant(&c).unwrap());
    }

    #[test]
    fn resultant_matches_root_product() {
        // a = (l-1)(l-2)(l+3), monic: res(a, b) = prod b(root)
        let a = &(&l(&[-1, 1]) * &l(&[-2, 1])) * &l(&[3, 1]);
        let b = l(&[7, -1, 2]);
        let expected = b.eval(&rat_int(1)) * b.eval(&rat_int(2)) * b.eval(&rat_int(-3));
        assert_eq!(a.resultant(&b).unwrap(), expected);
    }

    #[test]
    fn mixed_variables_are_rejected() {
        let err = y(&[1]).checked_add(&l(&[1])).unwrap_err();
        assert!(matches!(err, ArithError::VariableMismatch { .. }));
        assert!(y(&[1]).checked_mul(&l(&[1])).is_err());
        assert!(y(&[1]).gcd(&l(&[1])).is_err());
    }

    #[test]
    fn inexact_division_is_an_error() {
        assert_eq!(y(&[1, 0, 1]).exact_div(&y(&[-1, 1])), Err(ArithError::InexactDivision));
        assert_eq!(y(&[1]).exact_div(&Poly::zero(Var::Y)), Err(ArithError::DivisionByZero));
        assert_eq!(y(&[-1, 0, 1]).exact_div(&y(&[-1, 1])).unwrap(), y(&[1, 1]));
    }

    #[test]
    fn shift_and_eval() {
        let p = l(&[1, 0, 1]);
        assert_eq!(p.shift_by_one(), l(&[2, 2, 1]));
        assert_eq!(p.shift(&rat_int(-1)), l(&[2, -2, 1]));
        assert_eq!(p.eval(&rat(1, 2)), rat(5, 4));
        let x_of_y = Poly::from_ints(Var::Y, &[1, -2]);
        let composed = Poly::from_ints(Var::X, &[0, 0, 1]).compose(&x_of_y);
        assert_eq!(composed, y(&[1, -4, 4]));
    }

    #[test]
    fn integer_roots_found() {
        let p = &(&l(&[-3, 1]) * &l(&[5, 1])) * &l(&[0, 2, 0, 1]);
        let roots: Vec<i64> = p.integer_roots().iter().map(|r| r.try_into().unwrap()).collect();
        assert_eq!(roots, [-5, 0, 3]);
        assert!(l(&[1, 0, 1]).integer_roots().is_empty());
        let big = &(&l(&[-1000, 1]) * &l(&[999, 1])) * &(&l(&[-7, 1]) * &l(&[3, 5]));
        let roots: Vec<i64> = big.integer_roots().iter().map(|r| r.try_into().unwrap()).collect();
        assert_eq!(roots, [-999, 7, 1000]);
        assert_eq!(Poly::new(Var::L, vec![rat(-1, 2), rat(1, 4)]).integer_roots().len(), 1);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = l(&[3, -1, 0, 2]);
        let pts: Vec<_> = (-2..3).map(|v| (rat_int(v), p.eval(&rat_int(v)))).collect();
        assert_eq!(Poly::interpolate(Var::L, &pts), p);
        assert!(Poly::interpolate(Var::L, &[]).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(y(&[0, 2, -2]).to_string(), "-2*y^2 + 2*y");
        assert_eq!(Poly::new(Var::L, vec![rat(1, 2), rat(1, 2)]).to_string(), "1/2*l + 1/2");
        assert_eq!(l(&[-1, -1]).to_string(), "-l - 1");
        assert_eq!(Poly::zero(Var::L).to_string(), "0");
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((-9i64..10, 1i64..4), 0..5)
            .prop_map(|cs| Poly::new(Var::Y, cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn gcd_divides_both(p in small_poly(), q in small_poly()) {
            let g = p.gcd(&q).unwrap();
            if !g.is_zero() {
                prop_assert!(p.exact_div(&g).is_ok());
                prop_assert!(q.exact_div(&g).is_ok());
                prop_assert!(g.leading().unwrap().is_one());
            }
        }

        #[test]
        fn exact_div_undoes_mul(p in small_poly(), q in small_poly()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
        }

        #[test]
        fn ring_laws(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!((&p * &q).derivative(), &(&p.derivative() * &q) + &(&p * &q.derivative()));
        }

        #[test]
        fn div_rem_reconstructs(p in small_poly(), q in small_poly()) {
            prop_assume!(!q.is_zero());
            let (quot, rem) = p.div_rem(&q).unwrap();
            prop_assert_eq!(&(&quot * &q) + &rem, p);
            prop_assert!(rem.degree() < q.degree() || rem.is_zero());
        }
    }
}
