//! Verification suites. Each suite sweeps one family of identities up to a
//! bound `n_max` and records one [`Check`] per identity instance.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{rat, rat_int, Poly, Rational, Var};
use crate::dbw::{
    debranges_system_residual, debranges_tau, explicit_gen_check, generating_fn_family,
    jacobi_decomposition_check, lambda_one_from_chain, milin_functional, positivity_scan, tau_dot_initial,
    weinstein_poly, weinstein_series_family,
};
use crate::hypsum::{
    a_poly_hypergeometric, gegenbauer_hypergeometric, gosper, bl_antidifference, bl_telescoping_closed,
    bl_telescoping_sum, bl_term, parse_term, verify_certificate, weinstein_hypergeometric, GosperError,
};
use crate::lowner::{a_poly, ajn_closed, ajn_recurrence, bn_ode_residual, coefficient_system_residual};
use crate::orthopoly::{
    askey_gasper_scan, gegenbauer_difference, gegenbauer_difference_check, gegenbauer_m12,
    gegenbauer_x1_expansion, gegenbauer_x1_expansion_check, theorem_d_coeff_scan, uniform_grid,
};
use crate::series::{koebe, series_log_over_z, solve_w_newton, time_derivative};

/// One identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub indices: Vec<i64>,
    pub pass: bool,
    /// Offending value when the check fails.
    pub witness: Option<String>,
}

impl Check {
    fn new(id: &str, indices: &[usize], pass: bool, witness: impl FnOnce() -> String) -> Self {
        Check {
            id: id.to_owned(),
            indices: indices.iter().map(|&i| i as i64).collect(),
            pass,
            witness: if pass { None } else { Some(witness()) },
        }
    }

    /// Passes iff the polynomial is zero; the witness is the polynomial.
    fn zero(id: &str, indices: &[usize], residual: &Poly) -> Self {
        Self::new(id, indices, residual.is_zero(), || residual.to_string())
    }

    fn equal<T: PartialEq + fmt::Display>(id: &str, indices: &[usize], got: &T, expected: &T) -> Self {
        Self::new(id, indices, got == expected, || format!("got {got}, expected {expected}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub n_max: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Lowner,
    Theorem2,
    Theorem3,
    Gegenbauer,
    Hypergeometric,
    Gosper,
    Positivity,
    AskeyGasper,
}

impl Suite {
    /// Every suite except [`Suite::All`], in run order.
    pub const INDIVIDUAL: [Suite; 8] = [
        Suite::Lowner,
        Suite::Theorem2,
        Suite::Theorem3,
        Suite::Gegenbauer,
        Suite::Hypergeometric,
        Suite::Gosper,
        Suite::Positivity,
        Suite::AskeyGasper,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Lowner => "lowner",
            Suite::Theorem2 => "theorem2",
            Suite::Theorem3 => "theorem3",
            Suite::Gegenbauer => "gegenbauer",
            Suite::Hypergeometric => "hypergeometric",
            Suite::Gosper => "gosper",
            Suite::Positivity => "positivity",
            Suite::AskeyGasper => "askey-gasper",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite `{}`", self.0)
    }
}

impl core::error::Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        core::iter::once(Suite::All)
            .chain(Suite::INDIVIDUAL)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_owned()))
    }
}

/// Runs a suite with bound `n_max` (clamped to at least 1).
pub fn run(suite: Suite, n_max: usize) -> Report {
    let n_max = n_max.max(1);
    let checks = match suite {
        Suite::All => Suite::INDIVIDUAL.iter().flat_map(|&s| run(s, n_max).checks).collect(),
        Suite::Lowner => lowner_checks(n_max),
        Suite::Theorem2 => theorem2_checks(n_max),
        Suite::Theorem3 => theorem3_checks(n_max),
        Suite::Gegenbauer => gegenbauer_checks(n_max),
        Suite::Hypergeometric => hypergeometric_checks(n_max),
        Suite::Gosper => gosper_checks(n_max),
        Suite::Positivity => positivity_checks(n_max),
        Suite::AskeyGasper => askey_gasper_checks(n_max),
    };
    Report { suite: suite.name().to_owned(), n_max, checks }
}

/// Closed form against recurrence and the Newton series, plus the
/// differential equations of `A_n`.
pub fn lowner_checks(n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let table = ajn_recurrence(n_max);
    let w = solve_w_newton(n_max).ok();
    out.push(Check::new("newton-converged", &[n_max], w.is_some(), || "no convergence".to_owned()));
    for n in 1..=n_max {
        for j in 1..=n {
            let closed = ajn_closed(n as i64, j as i64).expect("in range");
            let rec = table.get(n, j).expect("in table");
            out.push(Check::equal("ajn-closed-vs-recurrence", &[n, j], rec, &closed));
            if let Some(w) = &w {
                out.push(Check::equal("ajn-closed-vs-newton", &[n, j], &w.coeff(n).coeff(j), &closed));
            }
        }
        out.push(Check::zero("bn-ode", &[n], &bn_ode_residual(n)));
        if n >= 2 {
            out.push(Check::zero("coefficient-system", &[n], &coefficient_system_residual(n)));
        }
    }
    out
}

/// `τ̇ = -kΛ`, the de Branges system, initial and terminal values, and the
/// Weinstein series against the closed form.
pub fn theorem2_checks(n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for k in 1..=n {
            let tau = debranges_tau(n, k).poly;
            let lambda = weinstein_poly(n, k);
            let kr = rat_int(k as i64);
            out.push(Check::zero("tau-dot-equals-minus-k-lambda", &[n, k], &(&time_derivative(&tau) + &lambda.scale(&kr))));
            out.push(Check::zero("debranges-system", &[n, k], &debranges_system_residual(n, k)));
            out.push(Check::equal("tau-initial", &[n, k], &tau.eval(&Rational::one()), &rat_int((n + 1 - k) as i64)));
            out.push(Check::equal("tau-terminal", &[n, k], &tau.eval(&Rational::zero()), &Rational::zero()));
            let parity = if (n - k) % 2 == 0 { -kr } else { Rational::zero() };
            out.push(Check::equal("tau-dot-initial-parity", &[n, k], &tau_dot_initial(n, k), &parity));
        }
        let nn = time_derivative(&debranges_tau(n, n).poly);
        out.push(Check::equal("tau-dot-diagonal", &[n], &nn, &Poly::monomial(Var::Y, rat_int(-(n as i64)), n)));
    }
    out.extend(weinstein_series_checks(n_max));
    out
}

/// `z^(n+1)` coefficients of `e^t w^(k+1)/(1-w^2)` against the closed form,
/// plus the bridge `Λ_1^n = -Σ (n+1-l) Ȧ_l`.
pub fn weinstein_series_checks(n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let order = n_max + 1;
    let w = solve_w_newton(order).expect("newton reversion");
    let family = match weinstein_series_family(&w, n_max) {
        Ok(f) => f,
        Err(e) => {
            out.push(Check::new("weinstein-series", &[n_max], false, || e.to_string()));
            return out;
        }
    };
    for (k, s) in (1..=n_max).zip(&family) {
        for n in k..=n_max {
            out.push(Check::equal("weinstein-series", &[n, k], s.coeff(n + 1), &weinstein_poly(n, k)));
        }
    }
    for n in 1..=n_max {
        out.push(Check::equal("lambda1-from-chain", &[n], &lambda_one_from_chain(n), &weinstein_poly(n, 1)));
    }
    out
}

/// `K(z) w^k` against `τ_k^n`, the explicit hypergeometric expansion in `y`
/// and the Jacobi/Gegenbauer product.
pub fn theorem3_checks(n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let order = n_max + 1;
    let w = solve_w_newton(order).expect("newton reversion");
    let family = generating_fn_family(&w, n_max).expect("order >= k + 1");
    for (k, b) in (1..=n_max).zip(&family) {
        for n in k..=n_max {
            out.push(Check::equal("generating-function", &[n, k], b.coeff(n + 1), &debranges_tau(n, k).poly));
        }
    }
    for k in 1..=4 {
        let ok = explicit_gen_check(k, 9, 8).unwrap_or(false);
        out.push(Check::new("explicit-generating-function", &[k, 8], ok, || "y^j slice mismatch".to_owned()));
    }
    for k in 1..=3 {
        for order in k + 1..=12 {
            let ok = jacobi_decomposition_check(k, order).unwrap_or(false);
            out.push(Check::new("jacobi-decomposition", &[k, order], ok, || "product mismatch".to_owned()));
        }
    }
    out
}

/// The Gegenbauer difference and `x = 1` expansion identities; both fail at
/// `n = 1`, which is recorded as an expected failure.
pub fn gegenbauer_checks(n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 2..=n_max.max(2) {
        let ok = gegenbauer_difference_check(n);
        out.push(Check::new("gegenbauer-difference", &[n], ok, || match gegenbauer_difference(n) {
            Some(p) => format!("got {p}, expected {}", a_poly(n)),
            None => "difference not divisible by x - 1".to_owned(),
        }));
        let ok = gegenbauer_x1_expansion_check(n);
        out.push(Check::new("gegenbauer-x1-expansion", &[n], ok, || {
            format!("got {}, expected {}", gegenbauer_x1_expansion(n), gegenbauer_m12(n))
        }));
    }
    let documented = !gegenbauer_difference_check(1) && !gegenbauer_x1_expansion_check(1);
    out.push(Check::new("gegenbauer-n1-documented-failure", &[1], documented, || {
        "identity unexpectedly holds at n = 1".to_owned()
    }));
    out
}

pub fn hypergeometric_checks(n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(Check::equal("a-poly-2f1", &[n], &a_poly_hypergeometric(n), &a_poly(n)));
        for k in 1..=n {
            out.push(Check::equal("lambda-3f2", &[n, k], &weinstein_hypergeometric(n, k), &weinstein_poly(n, k)));
        }
        if n >= 2 {
            out.push(Check::equal("gegenbauer-2f1", &[n], &gegenbauer_hypergeometric(n), &gegenbauer_m12(n)));
        }
    }
    out
}

/// Gosper on `b_l = (n+1-l) C(l+j-1, l-j)` for `1 <= j <= n`, and known
/// non-summable terms.
pub fn gosper_checks(n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=n_max as i64 {
        for j in 1..=n {
            let idx = [n as usize, j as usize];
            let term = bl_term(n, j);
            let cert = match gosper(&term.ratio()) {
                Ok(c) => c,
                Err(e) => {
                    out.push(Check::new("gosper-certificate", &idx, false, || e.to_string()));
                    continue;
                }
            };
            out.push(Check::new("gosper-certificate", &idx, cert.identity_holds(), || cert.certificate.to_string()));
            out.push(Check::new("gosper-telescoping", &idx, verify_certificate(&term, &cert, j..=n), || {
                cert.certificate.to_string()
            }));
            let s_before = cert.antidifference(&term, j - 1);
            out.push(Check::new("gosper-s-before-start", &idx, s_before == Some(Rational::zero()), || {
                format!("{s_before:?}")
            }));
            let s_last = cert.antidifference(&term, n);
            out.push(Check::new("gosper-matches-closed-antidifference", &idx, s_last == Some(bl_antidifference(n, j, n)), || {
                format!("{s_last:?}")
            }));
            let sum = cert.telescoped_sum(&term, j..=n).unwrap_or_default();
            out.push(Check::equal("gosper-closed-sum", &idx, &sum, &bl_telescoping_closed(n, j)));
            out.push(Check::equal("bl-sum-direct", &idx, &bl_telescoping_sum(n, j), &bl_telescoping_closed(n, j)));
        }
    }
    for src in ["1/fact(l)", "fact(l)"] {
        let term = parse_term(src, &Var::L).expect("well-formed");
        let r = gosper(&term.ratio());
        out.push(Check::new(&format!("not-summable:{src}"), &[], r == Err(GosperError::NotSummable), || {
            format!("{r:?}")
        }));
    }
    out
}

/// Exact signs of `Λ`, `τ`, `τ̇` on `y = 1/10, ..., 9/10`, and the Milin
/// functional of the Koebe function.
pub fn positivity_checks(n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let grid: Vec<Rational> = (1..10).map(|i| rat(i, 10)).collect();
    let report = positivity_scan(n_max, &grid).expect("grid inside (0, 1)");
    for n in 1..=n_max {
        let first = report.violations.iter().find(|v| v.n == n);
        out.push(Check::new("positivity", &[n], first.is_none(), || {
            let v = first.expect("violation");
            format!("{}_{}^{} at y = {} is {}", v.quantity, v.k, v.n, v.y, v.value)
        }));
    }
    let d = series_log_over_z(&koebe(n_max + 1)).expect("koebe is normalized");
    let d: Vec<Rational> = (1..=n_max).map(|k| d.coeff(k).coeff(0)).collect();
    for n in 1..=n_max {
        let m = milin_functional(&d, n).expect("enough coefficients");
        out.push(Check::equal("milin-koebe", &[n], &m, &Rational::zero()));
    }
    out
}

/// Jacobi partial sums `Σ P_j^(2k,0)` for `k <= 8` and the Taylor
/// coefficients of `sqrt(1-2xz+z^2)/(1-z)` on 21 points of `[-1, 1]`.
pub fn askey_gasper_checks(n_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let grid = uniform_grid(&rat_int(-1), &rat_int(1), 21);
    for k in 1..=8 {
        let r = askey_gasper_scan(n_max, k, &grid);
        let first = r.violations.iter().find(|v| v.k == Some(k));
        out.push(Check::new("askey-gasper", &[k, n_max], first.is_none(), || {
            let v = first.expect("violation");
            format!("n = {}, x = {}: {}", v.n, v.x, v.value)
        }));
    }
    let r = theorem_d_coeff_scan(n_max, &grid);
    out.push(Check::new("theorem-d-coefficients", &[n_max], r.passed(), || {
        let v = &r.violations[0];
        format!("n = {}, x = {}: {}", v.n, v.x, v.value)
    }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in core::iter::once(Suite::All).chain(Suite::INDIVIDUAL) {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::INDIVIDUAL {
            let r = run(s, 6);
            assert!(r.pass(), "{s}: {:?}", r.failures().next());
            assert!(!r.checks.is_empty());
            assert_eq!(r.suite, s.name());
        }
    }

    #[test]
    fn all_concatenates() {
        let all = run(Suite::All, 4);
        let total: usize = Suite::INDIVIDUAL.iter().map(|&s| run(s, 4).checks.len()).sum();
        assert_eq!(all.checks.len(), total);
        assert!(all.pass());
    }

    #[test]
    fn failing_check_carries_witness() {
        let c = Check::zero("x", &[1], &Poly::from_ints(Var::Y, &[0, 1]));
        assert!(!c.pass);
        assert_eq!(c.witness.as_deref(), Some("y"));
        let c = Check::zero("x", &[1], &Poly::zero(Var::Y));
        assert_eq!(c.witness, None);
    }
}
