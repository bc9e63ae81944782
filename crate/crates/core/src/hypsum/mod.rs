//! Terminating hypergeometric series, hypergeometric terms and Gosper's
//! algorithm.

mod gosper;
mod pfq;
mod term;

pub use gosper::{gosper, verify_certificate, GosperCertificate, GosperError};
pub use pfq::{Pfq, PfqError};
pub use term::{parse_term, Factor, HypTerm, Linear, ParseError, ParseErrorKind};

use alloc::format;
use alloc::string::String;
use alloc::vec;

use crate::arith::{binomial, rat, rat_int, Poly, Rational, Var};

/// `b_l = (n+1-l) C(l+j-1, l-j)` as a term source string.
pub fn bl_term_source(n: i64, j: i64) -> String {
    format!("({}-l)*binom(l+{},l-{})", n + 1, j - 1, j).replace("+0,", ",").replace("+-", "-")
}

/// The term `b_l` for fixed `(n, j)`.
pub fn bl_term(n: i64, j: i64) -> HypTerm {
    parse_term(&bl_term_source(n, j), &Var::L).expect("well-formed")
}

/// `Σ_{l=j..n} (n+1-l) C(l+j-1, l-j)` by direct summation.
pub fn bl_telescoping_sum(n: i64, j: i64) -> Rational {
    (j..=n).map(|l| Rational::from_integer(binomial(l + j - 1, l - j) * (n + 1 - l))).sum()
}

/// `(j+n)(n+1+j) / (2j(2j+1)) C(n+j-1, n-j)`.
pub fn bl_telescoping_closed(n: i64, j: i64) -> Rational {
    rat((j + n) * (n + 1 + j), 2 * j * (2 * j + 1)) * Rational::from_integer(binomial(n + j - 1, n - j))
}

/// The closed antidifference `s_l = (j+l)(n+1+j+2jn-2jl) / (2j(2j+1)) C(l+j-1, l-j)`.
pub fn bl_antidifference(n: i64, j: i64, l: i64) -> Rational {
    rat((j + l) * (n + 1 + j + 2 * j * n - 2 * j * l), 2 * j * (2 * j + 1))
        * Rational::from_integer(binomial(l + j - 1, l - j))
}

/// `n y 2F1(1-n, n+1; 3; y)`.
pub fn a_poly_hypergeometric(n: usize) -> Poly {
    let n = n as i64;
    let f = Pfq::new(vec![rat_int(1 - n), rat_int(n + 1)], vec![rat_int(3)]);
    let y = Poly::identity(Var::Y);
    &f.eval_poly(&y).expect("terminating") * &Poly::monomial(Var::Y, rat_int(n), 1)
}

/// `y^k C(n+k+1, n-k) 3F2(k+1/2, n+k+2, k-n; k+3/2, 2k+1; y)`.
pub fn weinstein_hypergeometric(n: usize, k: usize) -> Poly {
    let (n, k) = (n as i64, k as i64);
    let f = Pfq::new(vec![rat(2 * k + 1, 2), rat_int(n + k + 2), rat_int(k - n)], vec![rat(2 * k + 3, 2), rat_int(2 * k + 1)]);
    let y = Poly::identity(Var::Y);
    let scale = Rational::from_integer(binomial(n + k + 1, n - k));
    &f.eval_poly(&y).expect("terminating") * &Poly::monomial(Var::Y, scale, k as usize)
}

/// `(1-x) 2F1(1-n, n; 2; (1-x)/2)`, valid for `n >= 2`.
pub fn gegenbauer_hypergeometric(n: usize) -> Poly {
    let n = n as i64;
    let f = Pfq::new(vec![rat_int(1 - n), rat_int(n)], vec![rat_int(2)]);
    let arg = Poly::new(Var::X, vec![rat(1, 2), rat(-1, 2)]);
    &f.eval_poly(&arg).expect("terminating") * &Poly::from_ints(Var::X, &[1, -1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lowner::a_poly;
    use crate::orthopoly::gegenbauer_m12;

    #[test]
    fn term_source() {
        assert_eq!(bl_term_source(7, 3), "(8-l)*binom(l+2,l-3)");
        assert_eq!(bl_term_source(2, 1), "(3-l)*binom(l,l-1)");
        assert_eq!(bl_term(7, 3).eval(4), Some(rat_int(4 * 6)));
    }

    #[test]
    fn telescoping_examples() {
        assert_eq!(bl_telescoping_sum(2, 1), rat_int(4));
        assert_eq!(bl_telescoping_closed(2, 1), rat_int(4));
        for n in 1..12 {
            assert_eq!(bl_telescoping_sum(n, n), rat_int(1));
            assert_eq!(bl_telescoping_closed(n, n), rat_int(1));
        }
        assert_eq!(bl_telescoping_sum(7, 3), bl_telescoping_closed(7, 3));
    }

    #[test]
    fn bl_antidifference_telescopes_and_vanishes_below() {
        for n in 1..=12 {
            for j in 1..=n {
                assert_eq!(bl_antidifference(n, j, j - 1), rat_int(0));
                for l in j..=n {
                    let b = Rational::from_integer(binomial(l + j - 1, l - j) * (n + 1 - l));
                    assert_eq!(bl_antidifference(n, j, l) - bl_antidifference(n, j, l - 1), b);
                }
                assert_eq!(bl_antidifference(n, j, n), bl_telescoping_sum(n, j));
                assert_eq!(bl_telescoping_closed(n, j), bl_telescoping_sum(n, j));
            }
        }
    }

    #[test]
    fn gosper_reproduces_bl_antidifference() {
        for n in 1..=10 {
            for j in 1..=n {
                let t = bl_term(n, j);
                let cert = gosper(&t.ratio()).unwrap();
                assert!(verify_certificate(&t, &cert, j..=n), "({n},{j})");
                for l in j - 1..=n {
                    assert_eq!(cert.antidifference(&t, l), Some(bl_antidifference(n, j, l)), "({n},{j}) at {l}");
                }
            }
        }
    }

    #[test]
    fn hypergeometric_forms() {
        assert_eq!(a_poly_hypergeometric(2), Poly::from_ints(Var::Y, &[0, 2, -2]));
        for n in 1..=30 {
            assert_eq!(a_poly_hypergeometric(n), a_poly(n), "n = {n}");
        }
        for n in 2..=25 {
            assert_eq!(gegenbauer_hypergeometric(n), gegenbauer_m12(n), "n = {n}");
        }
        assert_eq!(weinstein_hypergeometric(2, 1), Poly::from_ints(Var::Y, &[0, 4, -4]));
    }
}
