use num_bigint::BigInt;
use num_traits::One;

use super::Rational;

/// `n!`. Panics for negative `n`.
pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative integer {n}");
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient for any integers `n`, `k`.
///
/// For `n >= 0` this is the usual `C(n, k)`, zero outside `0 <= k <= n`.
/// For negative `n` the upper-negation convention applies:
/// `C(n, k) = (-1)^k C(k - n - 1, k)` for `k >= 0`, and zero for `k < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::ZERO;
    }
    if n < 0 {
        let c = binomial(k - n - 1, k);
        return if k % 2 == 0 { c } else { -c };
    }
    if k > n {
        return BigInt::ZERO;
    }
    let k = k.min(n - k);
    // every partial product C(n-k+i, i) is an integer, so each division is exact
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Generalized binomial `a (a-1) ... (a-m+1) / m!` for rational `a`.
pub fn binomial_rational(a: &Rational, m: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..m {
        acc = acc * (a - Rational::from_integer(i.into())) / Rational::from_integer((i + 1).into());
    }
    acc
}

/// Rising factorial `(a)_j = a (a+1) ... (a+j-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, j: u32) -> Rational {
    (0..j).fold(Rational::one(), |acc, i| acc * (a + Rational::from_integer(i.into())))
}
