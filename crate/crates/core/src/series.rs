//! Truncated power series in `z` whose coefficients are polynomials in
//! `y = e^(-t)`.
//!
//! A [`ZSeries`] of order `N` stores the coefficients of `z^0 ..= z^N` and
//! says nothing about higher powers. Binary operations truncate to the
//! smaller order of their operands and never invent coefficients.
//!
//! Time derivatives act on coefficients as `d/dt = -y d/dy` (see
//! [`time_derivative`]), so everything stays polynomial.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::arith::{ArithError, Poly, Rational, Var};

/// Polynomial in `y = e^(-t)`; `y = 1` is `t = 0` and `y = 0` is `t = ∞`.
pub type YPoly = Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// Division by a series whose `z^0` coefficient is not a nonzero constant.
    NonUnitDivisor,
    Arith(ArithError),
    /// An operation's input does not have the required shape.
    Precondition(&'static str),
    /// The Newton reversion did not settle within its iteration budget.
    NoConvergence { iterations: usize },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonUnitDivisor => f.write_str("divisor has no constant unit term"),
            SeriesError::Arith(e) => write!(f, "{e}"),
            SeriesError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            SeriesError::NoConvergence { iterations } => {
                write!(f, "newton iteration did not converge after {iterations} steps")
            }
        }
    }
}

impl core::error::Error for SeriesError {}

impl From<ArithError> for SeriesError {
    fn from(e: ArithError) -> Self {
        SeriesError::Arith(e)
    }
}

/// `-y dp/dy`, the time derivative of `p(e^(-t))`.
pub fn time_derivative(p: &YPoly) -> YPoly {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| -(c * Rational::from_integer(i.into())))
        .collect();
    Poly::new(p.var().clone(), coeffs)
}

/// Power series `Σ_{n=0}^{N} c_n z^n` known modulo `z^(N+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeries {
    var: Var,
    coeffs: Vec<Poly>,
}

impl ZSeries {
    /// Series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty or a coefficient is not in `var`.
    pub fn new(var: Var, coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the z^0 coefficient");
        assert!(coeffs.iter().all(|c| c.var() == &var), "coefficient variable mismatch");
        ZSeries { var, coeffs }
    }

    pub fn zero(var: Var, order: usize) -> Self {
        ZSeries { coeffs: vec![Poly::zero(var.clone()); order + 1], var }
    }

    /// Series with constant coefficients.
    pub fn from_constants(var: Var, coeffs: &[Rational]) -> Self {
        let coeffs = coeffs.iter().map(|c| Poly::constant(var.clone(), c.clone())).collect();
        Self::new(var, coeffs)
    }

    /// `c * z^k` at the given order.
    pub fn monomial(c: Poly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(c.var().clone(), order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::monomial(Poly::one(var), 0, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient of `z^n`; panics beyond the known order.
    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// Drops coefficients above `order`. Never raises the order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        ZSeries { var: self.var.clone(), coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Zero-padded copy at a higher order, for iterations that then fix the
    /// padded coefficients.
    fn padded(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Poly::zero(self.var.clone()));
        ZSeries { var: self.var.clone(), coeffs }
    }

    fn check(&self, other: &Self) -> Result<(), SeriesError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(ArithError::VariableMismatch { left: self.var.clone(), right: other.var.clone() }.into())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(ZSeries { var: self.var.clone(), coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        let order = self.order().min(other.order());
        let mut coeffs = vec![Poly::zero(self.var.clone()); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(ZSeries { var: self.var.clone(), coeffs })
    }

    /// Every coefficient multiplied by the same polynomial.
    pub fn scale(&self, c: &Poly) -> Result<Self, SeriesError> {
        let coeffs = self.coeffs.iter().map(|a| a.checked_mul(c)).collect::<Result<_, _>>()?;
        Ok(ZSeries { var: self.var.clone(), coeffs })
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        ZSeries { var: self.var.clone(), coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    /// `self^e` by repeated squaring; `self^0 = 1` at the same order.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.var.clone(), self.order());
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

    /// `self / divisor`. The divisor's `z^0` coefficient must be a nonzero
    /// constant.
    pub fn checked_div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        self.check(divisor)?;
        let d0 = divisor.coeffs[0].clone();
        if !d0.is_constant() || d0.is_zero() {
            return Err(SeriesError::NonUnitDivisor);
        }
        let inv = d0.coeff(0).recip();
        let order = self.order().min(divisor.order());
        let mut q: Vec<Poly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..=n {
                if !divisor.coeffs[i].is_zero() && !q[n - i].is_zero() {
                    acc = &acc - &(&divisor.coeffs[i] * &q[n - i]);
                }
            }
            q.push(acc.scale(&inv));
        }
        Ok(ZSeries { var: self.var.clone(), coeffs: q })
    }

    /// Multiplication by `z^k`; the order grows by `k`.
    pub fn mul_z_pow(&self, k: usize) -> Self {
        let mut coeffs = vec![Poly::zero(self.var.clone()); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZSeries { var: self.var.clone(), coeffs }
    }

    /// Division by `z^k`; the order shrinks by `k`. `None` if a coefficient
    /// below `z^k` is nonzero or nothing would remain.
    pub fn div_z_pow(&self, k: usize) -> Option<Self> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZSeries { var: self.var.clone(), coeffs: self.coeffs[k..].to_vec() })
    }

    /// `z d/dz`, i.e. `Σ n c_n z^n`; keeps the order.
    pub fn z_derivative_times_z(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&Rational::from_integer(n.into())))
            .collect();
        ZSeries { var: self.var.clone(), coeffs }
    }

    /// Coefficientwise [`time_derivative`].
    pub fn time_derivative(&self) -> Self {
        ZSeries { var: self.var.clone(), coeffs: self.coeffs.iter().map(time_derivative).collect() }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, var: Var, mut f: impl FnMut(&Poly) -> Poly) -> Self {
        Self::new(var, self.coeffs.iter().map(&mut f).collect())
    }

    /// Substitutes a value for the coefficient variable.
    pub fn eval_coeffs(&self, at: &Rational) -> Vec<Rational> {
        self.coeffs.iter().map(|c| c.eval(at)).collect()
    }
}

impl Neg for &ZSeries {
    type Output = ZSeries;
    fn neg(self) -> ZSeries {
        ZSeries { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! series_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&ZSeries> for &ZSeries {
            type Output = ZSeries;
            fn $method(self, rhs: &ZSeries) -> ZSeries {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

series_binop!(Add, add, checked_add);
series_binop!(Sub, sub, checked_sub);
series_binop!(Mul, mul, checked_mul);

/// The Koebe function `K(z) = z/(1-z)^2 = Σ n z^n` to order `n_max`.
pub fn koebe(order: usize) -> ZSeries {
    let coeffs: Vec<Rational> = (0..=order).map(|n| Rational::from_integer(n.into())).collect();
    ZSeries::from_constants(Var::Y, &coeffs)
}

fn y_poly() -> Poly {
    Poly::identity(Var::Y)
}

/// `G(w) = w - y K(z) (1-w)^2`, whose root is the chain `w(z,t)`.
fn chain_equation(w: &ZSeries, yk: &ZSeries) -> (ZSeries, ZSeries) {
    let one = ZSeries::one(Var::Y, w.order());
    let one_minus_w = &one - w;
    let g = w - &(yk * &(&one_minus_w * &one_minus_w));
    // G'(w) = 1 + 2 y K(z) (1 - w)
    let dg = &one + &(yk * &one_minus_w).scale_rational(&Rational::from_integer(2.into()));
    (g, dg)
}

/// The Löwner chain `w(z,t) = K^{-1}(e^(-t) K(z))` to order `order`, by
/// Newton iteration on `K(w) = y K(z)` with doubling precision from
/// `w_0 = y z`.
pub fn solve_w_newton(order: usize) -> Result<ZSeries, SeriesError> {
    if order == 0 {
        return Err(SeriesError::Precondition("order must be at least 1"));
    }
    let budget = (usize::BITS - (order - 1).leading_zeros()) as usize + 2;
    let mut w = ZSeries::monomial(y_poly(), 1, 1);
    // w is exact modulo z^correct
    let mut correct = 2;
    let mut iterations = 0;
    while correct <= order {
        if iterations == budget {
            return Err(SeriesError::NoConvergence { iterations });
        }
        iterations += 1;
        let target = (2 * correct - 1).min(order);
        let wp = w.padded(target);
        let yk = koebe(target).scale(&y_poly())?;
        let (g, dg) = chain_equation(&wp, &yk);
        w = &wp - &g.checked_div(&dg)?;
        correct = target + 1;
    }
    let w = w.truncate(order);
    let yk = koebe(order).scale(&y_poly())?;
    if !chain_equation(&w, &yk).0.is_zero() {
        return Err(SeriesError::NoConvergence { iterations });
    }
    Ok(w)
}

/// `K(w) - y K(z)`; zero exactly when `w` is the chain to the series' order.
pub fn implicit_residual(w: &ZSeries) -> Result<ZSeries, SeriesError> {
    let order = w.order();
    let one = ZSeries::one(w.var().clone(), order);
    let one_minus_w = &one - w;
    let kw = w.checked_div(&(&one_minus_w * &one_minus_w))?;
    Ok(&kw - &koebe(order).scale(&y_poly())?)
}

/// Logarithmic coefficients: `φ = ln(f(z)/(c z))` where `c` is the `z^1`
/// coefficient of `f`, so `φ(0) = 0`.
///
/// `f` must vanish at `z = 0` and have a nonzero constant `z^1` coefficient.
/// Dividing by `z` costs one order: the result has order `f.order() - 1`.
pub fn series_log_over_z(f: &ZSeries) -> Result<ZSeries, SeriesError> {
    if f.order() < 1 || !f.coeff(0).is_zero() {
        return Err(SeriesError::Precondition("f must have order >= 1 and f(0) = 0"));
    }
    let c = f.coeff(1);
    if !c.is_constant() || c.is_zero() {
        return Err(SeriesError::Precondition("z^1 coefficient must be a nonzero constant"));
    }
    let g = f.div_z_pow(1).expect("f(0) = 0").scale_rational(&c.coeff(0).recip());
    let order = g.order();
    let mut d: Vec<Poly> = vec![Poly::zero(f.var().clone()); order + 1];
    // g' = φ' g  =>  n g_n = Σ_{k=1}^{n} k d_k g_{n-k}
    for n in 1..=order {
        let mut acc = g.coeff(n).scale(&Rational::from_integer(n.into()));
        for k in 1..n {
            acc = &acc - &(&d[k] * g.coeff(n - k)).scale(&Rational::from_integer(k.into()));
        }
        d[n] = acc.scale(&Rational::from_integer(n.into()).recip());
    }
    Ok(ZSeries::new(f.var().clone(), d))
}

/// `exp(φ)` for a series with `φ(0) = 0`.
pub fn series_exp(phi: &ZSeries) -> Result<ZSeries, SeriesError> {
    if !phi.coeff(0).is_zero() {
        return Err(SeriesError::Precondition("exp needs a zero constant term"));
    }
    let order = phi.order();
    let mut e: Vec<Poly> = Vec::with_capacity(order + 1);
    e.push(Poly::one(phi.var().clone()));
    // E' = φ' E  =>  n e_n = Σ_{k=1}^{n} k φ_k e_{n-k}
    for n in 1..=order {
        let mut acc = Poly::zero(phi.var().clone());
        for k in 1..=n {
            acc = &acc + &(phi.coeff(k) * &e[n - k]).scale(&Rational::from_integer(k.into()));
        }
        e.push(acc.scale(&Rational::from_integer(n.into()).recip()));
    }
    Ok(ZSeries::new(phi.var().clone(), e))
}

/// `(z-1) z w' - (z+1) ẇ`, the linear PDE satisfied by the chain.
pub fn pde_residual(w: &ZSeries) -> ZSeries {
    let order = w.order();
    let var = w.var().clone();
    let zw = w.z_derivative_times_z();
    let z_minus_1 = ZSeries::from_constants(var.clone(), &[-Rational::one(), Rational::one()]).padded(order);
    let z_plus_1 = ZSeries::from_constants(var, &[Rational::one(), Rational::one()]).padded(order);
    &(&z_minus_1 * &zw) - &(&z_plus_1 * &w.time_derivative())
}

/// `(1+w) ẇ + (1-w) w`, the Löwner equation `ẇ = -w (1-w)/(1+w)` cleared of
/// its denominator.
pub fn lowner_ode_residual(w: &ZSeries) -> ZSeries {
    let one = ZSeries::one(w.var().clone(), w.order());
    &(&(&one + w) * &w.time_derivative()) + &(&(&one - w) * w)
}
