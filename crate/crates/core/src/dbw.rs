//! The de Branges functions `τ_k^n`, the Weinstein functions `Λ_k^n`, their
//! generating functions and the Milin functional.
//!
//! Everything is a polynomial in `y = e^(-t)`: `Λ_k^n = Σ_{j=k}^{n}
//! a_j^(n,k) y^j` and `τ_k^n = Σ_j (k/j) a_j^(n,k) y^j`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, Poly, Rational, RationalExt, Var};
use crate::lowner::a_poly;
use crate::orthopoly::{gegenbauer_m12, jacobi_poly, x_to_y};
use crate::series::{koebe, solve_w_newton, time_derivative, SeriesError, YPoly, ZSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DbwError {
    /// `(n, k, j)` outside `1 <= k <= j <= n`.
    OutOfRange { n: i64, k: i64, j: i64 },
    Precondition(&'static str),
    Series(SeriesError),
    /// A Weinstein series coefficient was not divisible by `y`.
    NotDivisibleByY { power: usize },
}

impl fmt::Display for DbwError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DbwError::OutOfRange { n, k, j } => write!(f, "index (n={n}, k={k}, j={j}) outside 1 <= k <= j <= n"),
            DbwError::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            DbwError::Series(e) => write!(f, "{e}"),
            DbwError::NotDivisibleByY { power } => write!(f, "coefficient of z^{power} is not divisible by y"),
        }
    }
}

impl core::error::Error for DbwError {}

impl From<SeriesError> for DbwError {
    fn from(e: SeriesError) -> Self {
        DbwError::Series(e)
    }
}

/// `a_j^(n,k) = (-1)^(k+j) C(2j, j-k) C(n+j+1, n-j)`.
pub fn lambda_coeff(n: i64, k: i64, j: i64) -> Result<Rational, DbwError> {
    if !(1 <= k && k <= j && j <= n) {
        return Err(DbwError::OutOfRange { n, k, j });
    }
    let v = binomial(2 * j, j - k) * binomial(n + j + 1, n - j);
    Ok(Rational::from_integer(if (k + j) % 2 == 0 { v } else { -v }))
}

/// All `a_j^(n,k)` with `1 <= k <= j <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaTable {
    n_max: usize,
    // rows[n-1][k-1][j-k]
    rows: Vec<Vec<Vec<Rational>>>,
}

impl LambdaTable {
    pub fn new(n_max: usize) -> Self {
        let rows = (1..=n_max as i64)
            .map(|n| {
                (1..=n)
                    .map(|k| (k..=n).map(|j| lambda_coeff(n, k, j).expect("in range")).collect())
                    .collect()
            })
            .collect();
        LambdaTable { n_max, rows }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, n: usize, k: usize, j: usize) -> Option<&Rational> {
        if !(1 <= k && k <= j && j <= n && n <= self.n_max) {
            return None;
        }
        Some(&self.rows[n - 1][k - 1][j - k])
    }

    /// `(n, k, j, a_j^(n,k))` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.rows.iter().enumerate().flat_map(|(n, ks)| {
            ks.iter()
                .enumerate()
                .flat_map(move |(k, js)| js.iter().enumerate().map(move |(j, v)| (n + 1, k + 1, k + 1 + j, v)))
        })
    }
}

fn check_nk(n: usize, k: usize) {
    assert!(1 <= k && k <= n, "need 1 <= k <= n, got n={n}, k={k}");
}

/// `Λ_k^n = Σ_{j=k}^{n} a_j^(n,k) y^j`.
///
/// # Panics
///
/// Unless `1 <= k <= n`.
pub fn weinstein_poly(n: usize, k: usize) -> YPoly {
    check_nk(n, k);
    let mut coeffs = alloc::vec![Rational::zero(); n + 1];
    for j in k..=n {
        coeffs[j] = lambda_coeff(n as i64, k as i64, j as i64).expect("in range");
    }
    Poly::new(Var::Y, coeffs)
}

fn check_order(k: usize, order: usize) -> Result<(), DbwError> {
    if k == 0 {
        return Err(DbwError::Precondition("k must be at least 1"));
    }
    if order < k + 1 {
        return Err(DbwError::Precondition("order must be at least k + 1"));
    }
    Ok(())
}

/// `W_k = e^t w^(k+1) / (1 - w^2)` from a precomputed chain `w`.
pub fn weinstein_series_from(w: &ZSeries, k: usize) -> Result<ZSeries, DbwError> {
    check_order(k, w.order())?;
    let one = ZSeries::one(Var::Y, w.order());
    let raw = w.pow(k as u32 + 1).checked_div(&(&one - &w.pow(2)))?;
    let coeffs = raw
        .coeffs()
        .iter()
        .enumerate()
        .map(|(power, c)| c.shift_down(1).ok_or(DbwError::NotDivisibleByY { power }))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ZSeries::new(Var::Y, coeffs))
}

/// `W_k(z, t)` to order `order`; its `z^(n+1)` coefficient is `Λ_k^n`.
pub fn weinstein_series(k: usize, order: usize) -> Result<ZSeries, DbwError> {
    check_order(k, order)?;
    weinstein_series_from(&solve_w_newton(order)?, k)
}

/// `W_1, ..., W_{k_max}` from one chain, building `w^(k+1)` incrementally.
pub fn weinstein_series_family(w: &ZSeries, k_max: usize) -> Result<Vec<ZSeries>, DbwError> {
    check_order(k_max, w.order())?;
    let one = ZSeries::one(Var::Y, w.order());
    let inv = one.checked_div(&(&one - &(w * w)))?;
    let mut power = w * w;
    let mut out = Vec::with_capacity(k_max);
    for _ in 1..=k_max {
        let raw = &power * &inv;
        let coeffs = raw
            .coeffs()
            .iter()
            .enumerate()
            .map(|(power, c)| c.shift_down(1).ok_or(DbwError::NotDivisibleByY { power }))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(ZSeries::new(Var::Y, coeffs));
        power = &power * w;
    }
    Ok(out)
}

/// `τ_k^n` as a polynomial in `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauPoly {
    pub n: usize,
    pub k: usize,
    pub poly: YPoly,
}

/// `τ_k^n = Σ_j (k/j) a_j^(n,k) y^j`, the antiderivative of `-k Λ_k^n`
/// vanishing at `y = 0`. `k = n + 1` gives zero.
///
/// # Panics
///
/// Unless `1 <= k <= n + 1`.
pub fn debranges_tau(n: usize, k: usize) -> TauPoly {
    assert!(1 <= k && k <= n + 1, "need 1 <= k <= n+1, got n={n}, k={k}");
    if k == n + 1 {
        return TauPoly { n, k, poly: Poly::zero(Var::Y) };
    }
    let lambda = weinstein_poly(n, k);
    let coeffs = lambda
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, a)| if j == 0 { Rational::zero() } else { a * Rational::new(k.into(), j.into()) })
        .collect();
    TauPoly { n, k, poly: Poly::new(Var::Y, coeffs) }
}

/// `τ_{k+1} - τ_k - τ̇_k/k - τ̇_{k+1}/(k+1)` for given polynomials.
pub fn system_residual_of(k: usize, tau_k: &YPoly, tau_k1: &YPoly) -> YPoly {
    let kr = Rational::from_integer(k.into());
    let k1 = Rational::from_integer((k + 1).into());
    &(&(tau_k1 - tau_k) - &time_derivative(tau_k).scale(&kr.recip())) - &time_derivative(tau_k1).scale(&k1.recip())
}

/// The de Branges system residual at `(n, k)`, `1 <= k <= n`.
pub fn debranges_system_residual(n: usize, k: usize) -> YPoly {
    check_nk(n, k);
    system_residual_of(k, &debranges_tau(n, k).poly, &debranges_tau(n, k + 1).poly)
}

/// `τ̇_k^n(0) = -k Λ_k^n(0)`.
pub fn tau_dot_initial(n: usize, k: usize) -> Rational {
    time_derivative(&debranges_tau(n, k).poly).eval(&Rational::one())
}

/// `B_k = K(z) w^k` from a precomputed chain `w`.
pub fn generating_fn_from(w: &ZSeries, k: usize) -> Result<ZSeries, DbwError> {
    check_order(k, w.order())?;
    Ok(&koebe(w.order()) * &w.pow(k as u32))
}

/// `B_1, ..., B_{k_max}` from one chain, building `w^k` incrementally.
pub fn generating_fn_family(w: &ZSeries, k_max: usize) -> Result<Vec<ZSeries>, DbwError> {
    check_order(k_max, w.order())?;
    let mut acc = koebe(w.order());
    Ok((1..=k_max)
        .map(|_| {
            acc = &acc * w;
            acc.clone()
        })
        .collect())
}

/// `B_k(z, t) = K(z) w(z,t)^k`; its `z^(n+1)` coefficient is `τ_k^n`.
pub fn generating_fn(k: usize, order: usize) -> Result<ZSeries, DbwError> {
    check_order(k, order)?;
    generating_fn_from(&solve_w_newton(order)?, k)
}

/// Coefficient of `y^j` in every `z` coefficient.
fn y_slice(s: &ZSeries, j: usize) -> Vec<Rational> {
    s.coeffs().iter().map(|c| c.coeff(j)).collect()
}

/// Checks that the `y^j` part of `B_k` is
/// `(-1)^(j+k) (2k/(j+k)) C(2j-1, j-k) K(z)^(j+1)` for every `j <= j_max`.
pub fn explicit_gen_check(k: usize, order: usize, j_max: usize) -> Result<bool, DbwError> {
    if j_max > order {
        return Err(DbwError::Precondition("j_max must not exceed the order"));
    }
    let b = generating_fn(k, order)?;
    let kk = koebe(order);
    for j in 0..=j_max {
        let expected = if j < k {
            ZSeries::zero(Var::Y, order)
        } else {
            let (ji, ki) = (j as i64, k as i64);
            let mut c = Rational::new((2 * ki).into(), (ji + ki).into()) * Rational::from_integer(binomial(2 * ji - 1, ji - ki));
            if (j + k) % 2 == 1 {
                c = -c;
            }
            kk.pow(j as u32 + 1).scale_rational(&c)
        };
        if y_slice(&b, j) != expected.eval_coeffs(&Rational::zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Σ_n (Σ_{j<=n} p_j) z^n` for polynomials `p_j` already in `y`.
fn partial_sum_series(terms: impl Iterator<Item = YPoly>, order: usize) -> ZSeries {
    let mut acc = Poly::zero(Var::Y);
    let coeffs = terms
        .take(order + 1)
        .map(|p| {
            acc = &acc + &p;
            acc.clone()
        })
        .collect();
    ZSeries::new(Var::Y, coeffs)
}

/// Checks `B_k = z^(k+1) y^k (Σ_n Σ_{j<=n} P_j^(α,0)(x) z^n)
/// (Σ_n Σ_{j<=n} C_j^(-1/2)(x) z^n)` with `x = 1 - 2y` through `order`,
/// for Jacobi parameter `α`.
pub fn jacobi_decomposition_check_with_alpha(k: usize, order: usize, alpha: &Rational) -> Result<bool, DbwError> {
    check_order(k, order)?;
    let b = generating_fn(k, order)?;
    let inner = order - k - 1;
    let p_sum = partial_sum_series((0..).map(|j| x_to_y(&jacobi_poly(j, alpha))), inner);
    let c_sum = partial_sum_series((0..).map(|j| x_to_y(&gegenbauer_m12(j))), inner);
    let prod = (&p_sum * &c_sum).scale(&Poly::monomial(Var::Y, Rational::one(), k))?.mul_z_pow(k + 1);
    Ok(prod == b)
}

/// [`jacobi_decomposition_check_with_alpha`] with `α = 2k`.
pub fn jacobi_decomposition_check(k: usize, order: usize) -> Result<bool, DbwError> {
    jacobi_decomposition_check_with_alpha(k, order, &Rational::from_integer((2 * k).into()))
}

/// `W_{k+1} = w W_k` through `order`.
pub fn weinstein_recursion_check(k: usize, order: usize) -> Result<bool, DbwError> {
    let w = solve_w_newton(order)?;
    Ok(weinstein_series_from(&w, k + 1)? == &w * &weinstein_series_from(&w, k)?)
}

/// `W_1 = -K(z) ẇ` through `order`.
pub fn weinstein_first_check(order: usize) -> Result<bool, DbwError> {
    let w = solve_w_newton(order)?;
    Ok(weinstein_series_from(&w, 1)? == -&(&koebe(order) * &w.time_derivative()))
}

/// `Ẇ_k + Ẇ_{k+1} = (k+1) W_{k+1} - k W_k` through `order`.
pub fn weinstein_derivative_check(k: usize, order: usize) -> Result<bool, DbwError> {
    let w = solve_w_newton(order)?;
    let wk = weinstein_series_from(&w, k)?;
    let wk1 = weinstein_series_from(&w, k + 1)?;
    let lhs = &wk.time_derivative() + &wk1.time_derivative();
    let rhs = &wk1.scale_rational(&Rational::from_integer((k + 1).into())) - &wk.scale_rational(&Rational::from_integer(k.into()));
    Ok(lhs == rhs)
}

/// `Λ̇_k^n + Λ̇_{k+1}^n - (k+1) Λ_{k+1}^n + k Λ_k^n` on the closed forms,
/// `1 <= k < n`.
pub fn lambda_derivative_residual(n: usize, k: usize) -> YPoly {
    check_nk(n, k + 1);
    let (lk, lk1) = (weinstein_poly(n, k), weinstein_poly(n, k + 1));
    &(&(&time_derivative(&lk) + &time_derivative(&lk1)) - &lk1.scale(&Rational::from_integer((k + 1).into())))
        + &lk.scale(&Rational::from_integer(k.into()))
}

/// `-Σ_{l=1}^{n} (n+1-l) Ȧ_l`, which equals `Λ_1^n`.
pub fn lambda_one_from_chain(n: usize) -> YPoly {
    let mut acc = Poly::zero(Var::Y);
    for l in 1..=n {
        acc = &acc - &time_derivative(&a_poly(l)).scale(&Rational::from_integer((n + 1 - l).into()));
    }
    acc
}

/// `Σ_{k=1}^{n} (n+1-k) (k d_k^2 - 4/k)` for `d = [d_1, d_2, ...]`.
pub fn milin_functional(d: &[Rational], n: usize) -> Result<Rational, DbwError> {
    if d.len() < n {
        return Err(DbwError::Precondition("need at least n logarithmic coefficients"));
    }
    let four = Rational::from_integer(4.into());
    Ok((1..=n)
        .map(|k| {
            let kr = Rational::from_integer(k.into());
            let dk = &d[k - 1];
            Rational::from_integer((n + 1 - k).into()) * (&kr * dk * dk - &four / &kr)
        })
        .sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    Lambda,
    Tau,
    TauDot,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Lambda => "lambda",
            Quantity::Tau => "tau",
            Quantity::TauDot => "tau_dot",
        })
    }
}

/// A sign violation: `Λ < 0`, `τ < 0` or `τ̇ > 0` at some `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityViolation {
    pub quantity: Quantity,
    pub n: usize,
    pub k: usize,
    pub y: Rational,
    pub value: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PositivityReport {
    pub evaluated: usize,
    pub violations: Vec<PositivityViolation>,
}

impl PositivityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exact signs of `Λ_k^n`, `τ_k^n` and `τ̇_k^n` on a grid in `(0, 1)` for
/// `1 <= k <= n <= n_max`.
pub fn positivity_scan(n_max: usize, y_grid: &[Rational]) -> Result<PositivityReport, DbwError> {
    if y_grid.iter().any(|y| !y.is_positive() || *y >= Rational::one()) {
        return Err(DbwError::Precondition("grid values must lie strictly between 0 and 1"));
    }
    let mut report = PositivityReport::default();
    for n in 1..=n_max {
        for k in 1..=n {
            let lambda = weinstein_poly(n, k);
            let tau = debranges_tau(n, k).poly;
            let tau_dot = time_derivative(&tau);
            for y in y_grid {
                for (quantity, poly, want_nonneg) in
                    [(Quantity::Lambda, &lambda, true), (Quantity::Tau, &tau, true), (Quantity::TauDot, &tau_dot, false)]
                {
                    let value = poly.eval(y);
                    report.evaluated += 1;
                    let ok = if want_nonneg { value.is_nonneg() } else { !value.is_positive() };
                    if !ok {
                        report.violations.push(PositivityViolation { quantity, n, k, y: y.clone(), value });
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::series::series_log_over_z;
    use alloc::vec;

    fn y(c: &[i64]) -> Poly {
        Poly::from_ints(Var::Y, c)
    }

    #[test]
    fn lambda_coeff_examples() {
        for n in 1..12i64 {
            for k in 1..=n {
                assert_eq!(lambda_coeff(n, k, k).unwrap(), Rational::from_integer(binomial(n + k + 1, n - k)));
            }
            assert_eq!(lambda_coeff(n, n, n).unwrap(), rat_int(1));
        }
        assert_eq!(lambda_coeff(3, 1, 2).unwrap(), rat_int(-24));
        assert!(lambda_coeff(3, 2, 1).is_err());
        assert!(lambda_coeff(3, 0, 1).is_err());
        assert!(lambda_coeff(3, 1, 4).is_err());
    }

    #[test]
    fn table_signs_alternate() {
        let t = LambdaTable::new(12);
        let mut count = 0;
        for (n, k, j, v) in t.entries() {
            assert_eq!(v.is_positive(), (k + j) % 2 == 0, "({n},{k},{j})");
            assert_eq!(t.get(n, k, j), Some(v));
            count += 1;
        }
        assert_eq!(count, (1..=12).map(|n| n * (n + 1) / 2).sum::<usize>());
        assert_eq!(t.get(3, 2, 1), None);
        assert_eq!(t.get(13, 1, 1), None);
    }

    #[test]
    fn weinstein_poly_examples() {
        assert_eq!(weinstein_poly(2, 1), y(&[0, 4, -4]));
        assert_eq!(weinstein_poly(3, 1), y(&[0, 10, -24, 15]));
        assert_eq!(weinstein_poly(5, 5), Poly::monomial(Var::Y, rat_int(1), 5));
        for n in 1..15 {
            for k in 1..=n {
                let expected = if (n - k) % 2 == 0 { 1 } else { 0 };
                assert_eq!(weinstein_poly(n, k).eval(&rat_int(1)), rat_int(expected), "({n},{k})");
            }
        }
    }

    #[test]
    fn series_matches_closed_form() {
        let order = 14;
        let w = solve_w_newton(order).unwrap();
        for k in 1..order {
            let s = weinstein_series_from(&w, k).unwrap();
            assert_eq!(s.order(), order);
            for p in 0..=k {
                assert!(s.coeff(p).is_zero());
            }
            assert_eq!(s.coeff(k + 1).coeff(k), rat_int(1));
            for n in k..order {
                assert_eq!(s.coeff(n + 1), &weinstein_poly(n, k), "({n},{k})");
            }
        }
        assert_eq!(weinstein_series(1, 3).unwrap().coeff(3), &y(&[0, 4, -4]));
    }

    #[test]
    fn families_match_single_constructions() {
        let w = solve_w_newton(9).unwrap();
        let ws = weinstein_series_family(&w, 8).unwrap();
        let bs = generating_fn_family(&w, 8).unwrap();
        for k in 1..=8 {
            assert_eq!(ws[k - 1], weinstein_series_from(&w, k).unwrap());
            assert_eq!(bs[k - 1], generating_fn_from(&w, k).unwrap());
        }
        assert!(weinstein_series_family(&w, 9).is_err());
    }

    #[test]
    fn initial_weinstein_series_follows_definition() {
        // W_k(z, 0) = z^(k+1) / (1 - z^2)
        for k in 1..5 {
            let vals = weinstein_series(k, 12).unwrap().eval_coeffs(&rat_int(1));
            for (p, v) in vals.iter().enumerate() {
                let expected = if p > k && (p - k - 1) % 2 == 0 { 1 } else { 0 };
                assert_eq!(v, &rat_int(expected), "k={k}, z^{p}");
            }
        }
    }

    #[test]
    fn order_preconditions() {
        assert!(weinstein_series(0, 5).is_err());
        assert!(weinstein_series(3, 3).is_err());
        assert!(generating_fn(2, 2).is_err());
        assert!(explicit_gen_check(1, 4, 5).is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(debranges_tau(2, 1).poly, y(&[0, 4, -2]));
        assert_eq!(debranges_tau(2, 2).poly, y(&[0, 0, 1]));
        assert!(debranges_tau(4, 5).poly.is_zero());
        for n in 1..=20 {
            for k in 1..=n {
                let t = debranges_tau(n, k);
                assert_eq!(t.poly.eval(&rat_int(1)), rat_int((n + 1 - k) as i64), "({n},{k})");
                assert!(t.poly.eval(&rat_int(0)).is_zero());
                assert!(t.poly.degree().unwrap() <= n);
                assert!(t.poly.low_degree().unwrap() >= k);
                assert_eq!(time_derivative(&t.poly), weinstein_poly(n, k).scale(&-rat_int(k as i64)));
            }
        }
    }

    #[test]
    fn system_residuals_vanish() {
        assert!(debranges_system_residual(2, 1).is_zero());
        assert!(debranges_system_residual(3, 2).is_zero());
        for n in 1..=20 {
            for k in 1..=n {
                assert!(debranges_system_residual(n, k).is_zero(), "({n},{k})");
            }
        }
        let bad = &debranges_tau(3, 1).poly + &y(&[0, 0, 1]);
        assert!(!system_residual_of(1, &bad, &debranges_tau(3, 2).poly).is_zero());
    }

    #[test]
    fn tau_dot_initial_values() {
        assert_eq!(tau_dot_initial(2, 1), rat_int(0));
        assert_eq!(tau_dot_initial(3, 1), rat_int(-1));
        assert_eq!(tau_dot_initial(5, 5), rat_int(-5));
        for n in 1..12 {
            assert_eq!(time_derivative(&debranges_tau(n, n).poly), Poly::monomial(Var::Y, rat_int(-(n as i64)), n));
        }
    }

    #[test]
    fn generating_function() {
        let order = 12;
        let w = solve_w_newton(order).unwrap();
        for k in 1..order {
            let b = generating_fn_from(&w, k).unwrap();
            assert!(b.coeff(k).is_zero());
            for n in k..order {
                assert_eq!(b.coeff(n + 1), &debranges_tau(n, k).poly, "({n},{k})");
            }
            // B_k(z, 0) = z^(k+1) / (1-z)^2
            for (p, v) in b.eval_coeffs(&rat_int(1)).iter().enumerate() {
                assert_eq!(v, &rat_int(if p > k { (p - k) as i64 } else { 0 }));
            }
        }
        assert_eq!(generating_fn(1, 3).unwrap().coeff(3), &y(&[0, 4, -2]));
        assert_eq!(generating_fn(2, 3).unwrap().coeff(3), &y(&[0, 0, 1]));
    }

    #[test]
    fn explicit_generating_function() {
        assert!(explicit_gen_check(1, 6, 3).unwrap());
        assert!(explicit_gen_check(2, 8, 4).unwrap());
        assert!(explicit_gen_check(3, 9, 9).unwrap());
        // (k/j) C(2j, j-k) = (2k/(j+k)) C(2j-1, j-k)
        for j in 1..15i64 {
            for k in 1..=j {
                let lhs = rat(k, j) * Rational::from_integer(binomial(2 * j, j - k));
                let rhs = rat(2 * k, j + k) * Rational::from_integer(binomial(2 * j - 1, j - k));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn jacobi_decomposition() {
        assert!(jacobi_decomposition_check(1, 5).unwrap());
        assert!(jacobi_decomposition_check(2, 6).unwrap());
        assert!(jacobi_decomposition_check(3, 10).unwrap());
        assert!(!jacobi_decomposition_check_with_alpha(1, 5, &rat_int(3)).unwrap());
    }

    #[test]
    fn weinstein_identities() {
        assert!(weinstein_first_check(10).unwrap());
        for k in 1..6 {
            assert!(weinstein_recursion_check(k, 10).unwrap());
            assert!(weinstein_derivative_check(k, 10).unwrap());
        }
        for n in 2..15 {
            for k in 1..n {
                assert!(lambda_derivative_residual(n, k).is_zero());
            }
        }
        for n in 1..=30 {
            assert_eq!(lambda_one_from_chain(n), weinstein_poly(n, 1), "n = {n}");
        }
    }

    #[test]
    fn milin_examples() {
        let koebe_d: Vec<Rational> = (1..=10).map(|k| rat(2, k)).collect();
        for n in 1..=10 {
            assert_eq!(milin_functional(&koebe_d, n).unwrap(), rat_int(0));
        }
        let d: Vec<Rational> = (1..=2).map(|k| rat(1, k)).collect();
        assert_eq!(milin_functional(&d, 2).unwrap(), rat(-15, 2));
        assert_eq!(milin_functional(&vec![rat_int(0); 3], 3).unwrap(), rat(-52, 3));
        assert!(milin_functional(&d, 3).is_err());
    }

    #[test]
    fn koebe_log_coefficients_saturate_milin() {
        let d = series_log_over_z(&koebe(9)).unwrap();
        let d: Vec<Rational> = (1..=8).map(|k| d.coeff(k).coeff(0)).collect();
        assert_eq!(milin_functional(&d, 8).unwrap(), rat_int(0));
    }

    #[test]
    fn positivity() {
        let grid: Vec<Rational> = (1..10).map(|i| rat(i, 10)).collect();
        let r = positivity_scan(10, &grid).unwrap();
        assert!(r.passed(), "{:?}", r.violations.first());
        assert_eq!(r.evaluated, 55 * 9 * 3);
        assert_eq!(weinstein_poly(3, 1).eval(&rat(1, 2)), rat(7, 8));
        assert_eq!(debranges_tau(2, 2).poly.eval(&rat(1, 2)), rat(1, 4));
        assert!(positivity_scan(3, &[rat_int(1)]).is_err());
        assert!(positivity_scan(3, &[rat_int(0)]).is_err());
    }
}
