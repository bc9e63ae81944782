//! Coefficients `a_j^(n)` of the Koebe chain, `A_n(t) = Σ_j a_j^(n) y^j`.
//!
//! Two independent constructions live here: [`CoeffTable`] builds the
//! triangle from the first-order recurrence in `n` and the diagonal ratio,
//! while [`ajn_closed`] evaluates the binomial closed form. The differential
//! equations of the `A_n` are exposed as residuals that vanish exactly.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{binomial, factorial, Poly, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexError {
    /// `(n, j)` lies outside `1 <= j <= n`.
    OutOfRange { n: i64, j: i64 },
}

impl fmt::Display for IndexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexError::OutOfRange { n, j } => write!(f, "index (n={n}, j={j}) outside 1 <= j <= n"),
        }
    }
}

impl core::error::Error for IndexError {}

/// Triangle `a_j^(n)` for `1 <= j <= n <= n_max`, built by recurrence.
///
/// Rows are appended by [`CoeffTable::extend_to`], so a sweep over growing
/// `n` reuses earlier work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    // rows[n - 1][j - 1] = a_j^(n)
    rows: Vec<Vec<Rational>>,
}

impl CoeffTable {
    pub fn new() -> Self {
        CoeffTable { rows: Vec::new() }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// Fills rows up to `n_max`:
    /// `a_j^(n) = (n-1+j)/(n-j) a_j^(n-1)` below the diagonal, and
    /// `a_j^(j) = -2 (2j-1)/(j+1) a_{j-1}^(j-1)` from `a_1^(1) = 1`.
    pub fn extend_to(&mut self, n_max: usize) {
        for n in self.rows.len() + 1..=n_max {
            let mut row = Vec::with_capacity(n);
            for j in 1..n {
                let prev = &self.rows[n - 2][j - 1];
                let (n_, j_) = (n as i64, j as i64);
                row.push(prev * Rational::new((n_ - 1 + j_).into(), (n_ - j_).into()));
            }
            let diag = if n == 1 {
                Rational::one()
            } else {
                let prev = &self.rows[n - 2][n - 2];
                let j = n as i64;
                prev * Rational::new((-2 * (2 * j - 1)).into(), (j + 1).into())
            };
            row.push(diag);
            self.rows.push(row);
        }
    }

    pub fn get(&self, n: usize, j: usize) -> Option<&Rational> {
        if j == 0 {
            return None;
        }
        self.rows.get(n.checked_sub(1)?)?.get(j - 1)
    }

    /// `(n, j, a_j^(n))` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(k, a)| (i + 1, k + 1, a)))
    }

    /// `B_n(y)` from the table.
    pub fn poly(&self, n: usize) -> Option<Poly> {
        let row = self.rows.get(n.checked_sub(1)?)?;
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(Rational::from_integer(BigInt::ZERO));
        coeffs.extend(row.iter().cloned());
        Some(Poly::new(Var::Y, coeffs))
    }
}

impl Default for CoeffTable {
    fn default() -> Self {
        Self::new()
    }
}

pub fn ajn_recurrence(n_max: usize) -> CoeffTable {
    let mut t = CoeffTable::new();
    t.extend_to(n_max);
    t
}

/// `a_j^(n) = 2 (-1)^(j+1) C(n+j-1, n-j) (2j-1)! / ((j-1)! (j+1)!)`.
pub fn ajn_closed(n: i64, j: i64) -> Result<Rational, IndexError> {
    if !(1 <= j && j <= n) {
        return Err(IndexError::OutOfRange { n, j });
    }
    let sign = if j % 2 == 1 { 2 } else { -2 };
    let num = BigInt::from(sign) * binomial(n + j - 1, n - j) * factorial(2 * j - 1);
    let den = factorial(j - 1) * factorial(j + 1);
    Ok(Rational::new(num, den))
}

/// `A_n` as a polynomial in `y`, from the closed form.
///
/// Panics if `n == 0`.
pub fn a_poly(n: usize) -> Poly {
    assert!(n >= 1, "A_n is defined for n >= 1");
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(Rational::from_integer(BigInt::ZERO));
    for j in 1..=n {
        coeffs.push(ajn_closed(n as i64, j as i64).expect("in range"));
    }
    Poly::new(Var::Y, coeffs)
}

/// `y^2 (1-y) B'' + y (1-y) B' + (n^2 y - 1) B` for an arbitrary `B`.
pub fn ode_residual_of(n: usize, b: &Poly) -> Poly {
    let y = Poly::identity(Var::Y);
    let one_minus_y = Poly::from_ints(Var::Y, &[1, -1]);
    let n2 = (n * n) as i64;
    let d1 = b.derivative();
    let d2 = d1.derivative();
    &(&(&(&(&y * &y) * &one_minus_y) * &d2) + &(&(&y * &one_minus_y) * &d1))
        + &(&Poly::from_ints(Var::Y, &[-1, n2]) * b)
}

/// `Δ_n(y)`, the ODE residual of `B_n`; identically zero.
pub fn bn_ode_residual(n: usize) -> Poly {
    ode_residual_of(n, &a_poly(n))
}

/// `y (B_n' + B_{n-1}') - n B_n + (n-1) B_{n-1}` for arbitrary polynomials.
pub fn system_residual_of(n: usize, bn: &Poly, bn1: &Poly) -> Poly {
    let y = Poly::identity(Var::Y);
    let n_ = Rational::from_integer(n.into());
    let n1 = Rational::from_integer((n - 1).into());
    &(&(&y * &(&bn.derivative() + &bn1.derivative())) - &bn.scale(&n_)) + &bn1.scale(&n1)
}

/// Residual of the coupled system linking `B_n` and `B_{n-1}`; identically
/// zero for `n >= 2`.
///
/// Panics if `n < 2`.
pub fn coefficient_system_residual(n: usize) -> Poly {
    assert!(n >= 2, "the coupled system starts at n = 2");
    system_residual_of(n, &a_poly(n), &a_poly(n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;
    use crate::series::solve_w_newton;

    fn y(c: &[i64]) -> Poly {
        Poly::from_ints(Var::Y, c)
    }

    #[test]
    fn recurrence_small_entries() {
        let t = ajn_recurrence(6);
        for n in 1..=6 {
            assert_eq!(t.get(n, 1), Some(&rat_int(n as i64)));
        }
        assert_eq!(t.get(2, 2), Some(&rat_int(-2)));
        assert_eq!(t.get(3, 2), Some(&rat_int(-8)));
        assert_eq!(t.get(3, 3), Some(&rat_int(5)));
        assert_eq!(t.get(1, 1), Some(&rat_int(1)));
        assert_eq!(t.get(3, 4), None);
        assert_eq!(t.get(0, 0), None);
        assert_eq!(t.entries().count(), 21);
    }

    #[test]
    fn incremental_extension_matches_fresh_build() {
        let mut t = ajn_recurrence(3);
        t.extend_to(12);
        assert_eq!(t, ajn_recurrence(12));
        t.extend_to(5);
        assert_eq!(t.n_max(), 12);
    }

    #[test]
    fn closed_form_small_entries() {
        assert_eq!(ajn_closed(1, 1), Ok(rat_int(1)));
        assert_eq!(ajn_closed(3, 3), Ok(rat_int(5)));
        assert_eq!(ajn_closed(3, 2), Ok(rat_int(-8)));
        assert_eq!(ajn_closed(2, 3), Err(IndexError::OutOfRange { n: 2, j: 3 }));
        assert!(ajn_closed(3, 0).is_err());
    }

    #[test]
    fn diagonal_alternates_in_sign() {
        let t = ajn_recurrence(20);
        for j in 1..=20 {
            let positive = t.get(j, j).unwrap() > &rat_int(0);
            assert_eq!(positive, j % 2 == 1, "a_{j}^({j})");
        }
    }

    #[test]
    fn closed_form_equals_recurrence() {
        let t = ajn_recurrence(50);
        for (n, j, a) in t.entries() {
            assert_eq!(&ajn_closed(n as i64, j as i64).unwrap(), a, "(n,j)=({n},{j})");
        }
    }

    #[test]
    fn polynomials() {
        assert_eq!(a_poly(1), y(&[0, 1]));
        assert_eq!(a_poly(2), y(&[0, 2, -2]));
        assert_eq!(a_poly(3), y(&[0, 3, -8, 5]));
        assert_eq!(a_poly(1).eval(&rat_int(1)), rat_int(1));
        for n in 2..=50 {
            assert_eq!(a_poly(n).eval(&rat_int(1)), rat_int(0), "B_{n}(1)");
        }
    }

    #[test]
    fn matches_newton_reversion() {
        let w = solve_w_newton(30).unwrap();
        let t = ajn_recurrence(30);
        for n in 1..=30 {
            assert_eq!(w.coeff(n), &a_poly(n), "z^{n}");
            assert_eq!(t.poly(n).unwrap(), a_poly(n));
        }
    }

    #[test]
    fn ode_residuals_vanish() {
        for n in 1..=50 {
            assert!(bn_ode_residual(n).is_zero(), "Δ_{n}");
        }
        for n in 2..=50 {
            assert!(coefficient_system_residual(n).is_zero(), "system at {n}");
        }
    }

    #[test]
    fn residuals_detect_corruption() {
        let corrupted = y(&[1, 2, -2]);
        assert!(!ode_residual_of(2, &corrupted).is_zero());
        assert!(ode_residual_of(2, &y(&[0, 2, -2])).is_zero());
        let b3 = &a_poly(3) + &y(&[0, 0, 1]);
        assert!(!system_residual_of(3, &b3, &a_poly(2)).is_zero());
    }
}
