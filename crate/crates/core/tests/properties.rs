use debranges::arith::{rat, rat_int, Rational, Var};
use debranges::dbw::{debranges_tau, weinstein_poly};
use debranges::hypsum::{gosper, parse_term, verify_certificate};
use proptest::prelude::*;

fn poly_source(coeffs: &[i64]) -> String {
    let terms: Vec<String> = coeffs.iter().enumerate().map(|(i, c)| format!("({c})*l^{i}")).collect();
    terms.join(" + ")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomial_times_geometric_telescopes(
        coeffs in proptest::collection::vec(-4i64..5, 1..4),
        base in prop_oneof![Just(2i64), Just(3), Just(-2)],
        lo in 0i64..4,
        len in 0i64..8,
    ) {
        prop_assume!(coeffs.iter().any(|&c| c != 0));
        let src = format!("({})*{base}^l", poly_source(&coeffs));
        let term = parse_term(&src, &Var::L).unwrap();
        let cert = gosper(&term.ratio()).unwrap();
        let hi = lo + len;
        let zeros_inside = (lo - 1..=hi).any(|l| term.eval(l).map_or(true, |v| v == rat_int(0)));
        prop_assume!(!zeros_inside);
        prop_assert!(verify_certificate(&term, &cert, lo..=hi));
        let direct: Rational = (lo..=hi).map(|l| term.eval(l).unwrap()).sum();
        prop_assert_eq!(cert.telescoped_sum(&term, lo..=hi), Some(direct));
    }

    #[test]
    fn term_display_reparses(n in 1i64..9, j in 1i64..9, shift in -3i64..4) {
        let src = format!("({n}-l)*binom(l+{j},l-{shift})*fact(l+3)/(2*l+1)");
        let term = parse_term(&src, &Var::L).unwrap();
        let again = parse_term(&term.to_string(), &Var::L).unwrap();
        prop_assert_eq!(term.ratio(), again.ratio());
        for l in 0..6 {
            prop_assert_eq!(term.eval(l), again.eval(l));
        }
    }

    #[test]
    fn tau_and_lambda_positive_on_open_interval(n in 1usize..12, num in 1i64..50) {
        let y = rat(num, 50);
        for k in 1..=n {
            prop_assert!(debranges_tau(n, k).poly.eval(&y) > rat_int(0));
            prop_assert!(weinstein_poly(n, k).eval(&y) > rat_int(0));
        }
    }
}
