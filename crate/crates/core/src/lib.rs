//! Exact arithmetic for the Löwner chain of the Koebe function and the
//! function systems built on it.
//!
//! Every quantity is an exact rational, a polynomial in `y = e^(-t)` with
//! rational coefficients, or a truncated power series in `z` with such
//! polynomial coefficients. Identities are therefore checked by literal
//! equality, never by tolerance.
//!
//! Layout:
//!
//! - [`arith`]: rationals, dense univariate polynomials, rational functions,
//!   binomials and Pochhammer symbols.
//! - [`series`]: truncated power series in `z`, the Koebe function and the
//!   Newton reversion of `K(w) = e^(-t) K(z)`.
//! - [`lowner`]: coefficients `a_j^(n)` of the chain, their recurrences and
//!   differential equations.
//! - [`dbw`]: de Branges functions `τ_k^n`, Weinstein functions `Λ_k^n`, the
//!   generating function `K(z) w^k` and the Milin functional.
//! - [`orthopoly`]: Gegenbauer `C_n^(-1/2)` and Jacobi `P_n^(α,0)`.
//! - [`hypsum`]: terminating `pFq`, a hypergeometric term parser and Gosper's
//!   algorithm.
//! - [`verify`]: verification suites producing [`verify::Report`]s.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

pub mod arith;
pub mod dbw;
pub mod hypsum;
pub mod lowner;
pub mod orthopoly;
pub mod series;
pub mod verify;

pub use arith::{ArithError, Poly, Rational, RationalFunction, Var};
pub use series::ZSeries;
