//! Hypergeometric terms `b_l` built from factorials, binomials, powers and
//! polynomials in one summation variable, plus a parser for them.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr    := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' unary)?
//! atom    := INT | IDENT | 'fact' '(' expr ')'
//!          | 'binom' '(' expr ',' expr ')' | '(' expr ')'
//! ```
//!
//! Sums are only allowed between polynomial subexpressions, factorial and
//! binomial arguments must be linear with integer coefficients, and a
//! non-constant exponent needs a constant base.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{binomial, factorial, Poly, Rational, RationalFunction, Var};

/// `slope * l + offset` with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Linear {
    pub slope: i64,
    pub offset: i64,
}

impl Linear {
    pub fn at(&self, l: i64) -> i64 {
        self.slope * l + self.offset
    }

    fn poly(&self, var: &Var) -> Poly {
        Poly::from_ints(var.clone(), &[self.offset, self.slope])
    }

    fn sub(&self, other: &Linear) -> Linear {
        Linear { slope: self.slope - other.slope, offset: self.offset - other.offset }
    }
}

/// One multiplicative piece of a [`HypTerm`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Constant(Rational),
    /// `poly(l)^exp`.
    Polynomial { poly: Poly, exp: i32 },
    /// `(arg)!^exp`.
    Factorial { arg: Linear, exp: i32 },
    /// `C(top, bottom)^exp`.
    Binomial { top: Linear, bottom: Linear, exp: i32 },
    /// `base^(exponent)`, `base != 0`.
    Power { base: Rational, exponent: Linear },
}

/// Product of [`Factor`]s in the summation variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypTerm {
    var: Var,
    factors: Vec<Factor>,
}

fn rf_pow(r: RationalFunction, exp: i32) -> RationalFunction {
    let base = if exp < 0 { r.recip().expect("nonzero ratio") } else { r };
    let mut acc = RationalFunction::one(base.var().clone());
    for _ in 0..exp.unsigned_abs() {
        acc = &acc * &base;
    }
    acc
}

fn rat_pow(r: &Rational, exp: i64) -> Rational {
    let p = num_traits::pow(r.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// `(arg(l+1))! / (arg(l))!` as a rational function.
fn factorial_ratio(arg: &Linear, var: &Var) -> RationalFunction {
    let a = arg.slope;
    let mut num = Poly::one(var.clone());
    let mut den = Poly::one(var.clone());
    if a > 0 {
        for i in 1..=a {
            num = &num * &Linear { slope: a, offset: arg.offset + i }.poly(var);
        }
    } else {
        for i in 0..-a {
            den = &den * &Linear { slope: a, offset: arg.offset - i }.poly(var);
        }
    }
    RationalFunction::new(num, den).expect("nonzero denominator")
}

impl HypTerm {
    pub fn new(var: Var, factors: Vec<Factor>) -> Self {
        let mut t = HypTerm { var, factors };
        t.canonicalize();
        t
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Folds constants into one leading factor (dropped if it is one) and
    /// removes zero exponents.
    fn canonicalize(&mut self) {
        let mut c = Rational::one();
        let mut rest = Vec::with_capacity(self.factors.len());
        for f in self.factors.drain(..) {
            match f {
                Factor::Constant(v) => c *= v,
                Factor::Polynomial { poly, exp } if poly.is_constant() => {
                    c *= rat_pow(&poly.coeff(0), exp as i64);
                }
                Factor::Polynomial { exp: 0, .. }
                | Factor::Factorial { exp: 0, .. }
                | Factor::Binomial { exp: 0, .. } => {}
                Factor::Power { exponent: Linear { slope: 0, offset }, base } => {
                    c *= rat_pow(&base, offset);
                }
                other => rest.push(other),
            }
        }
        if !c.is_one() {
            rest.insert(0, Factor::Constant(c));
        }
        self.factors = rest;
    }

    /// `b_{l+1} / b_l`.
    pub fn ratio(&self) -> RationalFunction {
        let var = &self.var;
        let mut acc = RationalFunction::one(var.clone());
        for f in &self.factors {
            let r = match f {
                Factor::Constant(_) => continue,
                Factor::Polynomial { poly, exp } => rf_pow(
                    RationalFunction::new(poly.shift_by_one(), poly.clone()).expect("nonzero polynomial"),
                    *exp,
                ),
                Factor::Factorial { arg, exp } => rf_pow(factorial_ratio(arg, var), *exp),
                Factor::Binomial { top, bottom, exp } => {
                    let r = &factorial_ratio(top, var)
                        * &(&factorial_ratio(bottom, var) * &factorial_ratio(&top.sub(bottom), var))
                            .recip()
                            .expect("nonzero");
                    rf_pow(r, *exp)
                }
                Factor::Power { base, exponent } => {
                    RationalFunction::constant(var.clone(), rat_pow(base, exponent.slope))
                }
            };
            acc = &acc * &r;
        }
        acc
    }

    /// `b_l` at an integer point. Binomials follow the extended integer
    /// convention and `1/(-m)! = 0`; `None` where the term has a pole.
    pub fn eval(&self, l: i64) -> Option<Rational> {
        let mut acc = Rational::one();
        for f in &self.factors {
            let (value, exp) = match f {
                Factor::Constant(c) => (c.clone(), 1),
                Factor::Polynomial { poly, exp } => (poly.eval(&Rational::from_integer(l.into())), *exp),
                Factor::Factorial { arg, exp } => {
                    let v = arg.at(l);
                    if v < 0 {
                        if *exp > 0 {
                            return None;
                        }
                        return Some(Rational::zero());
                    }
                    (Rational::from_integer(factorial(v)), *exp)
                }
                Factor::Binomial { top, bottom, exp } => {
                    (Rational::from_integer(binomial(top.at(l), bottom.at(l))), *exp)
                }
                Factor::Power { base, exponent } => (rat_pow(base, exponent.at(l)), 1),
            };
            if value.is_zero() && exp < 0 {
                return None;
            }
            acc *= rat_pow(&value, exp as i64);
        }
        Some(acc)
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Poly::from_ints(Var::new("l"), &[self.offset, self.slope]))
    }
}

/// Why a term failed to parse. Columns are 1-based character positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax { expected: Vec<&'static str>, found: String },
    Semantic(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: ", self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax { expected, found } => {
                f.write_str("expected ")?;
                if expected.len() > 1 {
                    f.write_str("one of ")?;
                }
                for (i, e) in expected.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "; found {found}")
            }
            ParseErrorKind::Semantic(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("number `{v}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_owned(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("digits")), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^(),".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(ParseError {
                column: col,
                kind: ParseErrorKind::Syntax { expected: vec!["number", "identifier", "operator"], found: format!("`{c}`") },
            });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

/// Intermediate value: polynomials stay polynomials until something forces
/// a product form.
#[derive(Clone, Debug)]
enum Value {
    Poly(Poly),
    Term(Vec<Factor>),
}

impl Value {
    fn into_factors(self) -> Vec<Factor> {
        match self {
            Value::Term(f) => f,
            Value::Poly(p) if p.is_constant() => vec![Factor::Constant(p.coeff(0))],
            Value::Poly(p) => vec![Factor::Polynomial { poly: p, exp: 1 }],
        }
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    var: &'a Var,
}

type PResult<T> = Result<T, ParseError>;

fn semantic(column: usize, msg: impl Into<String>) -> ParseError {
    ParseError { column, kind: ParseErrorKind::Semantic(msg.into()) }
}

fn invert(factors: Vec<Factor>, column: usize) -> PResult<Vec<Factor>> {
    factors
        .into_iter()
        .map(|f| {
            Ok(match f {
                Factor::Constant(c) if c.is_zero() => return Err(semantic(column, "division by zero")),
                Factor::Constant(c) => Factor::Constant(c.recip()),
                Factor::Polynomial { poly, exp } => Factor::Polynomial { poly, exp: -exp },
                Factor::Factorial { arg, exp } => Factor::Factorial { arg, exp: -exp },
                Factor::Binomial { top, bottom, exp } => Factor::Binomial { top, bottom, exp: -exp },
                Factor::Power { base, exponent } => Factor::Power { base: base.recip(), exponent },
            })
        })
        .collect()
}

fn linear_of(p: &Poly, column: usize, what: &str) -> PResult<Linear> {
    if p.degree().unwrap_or(0) > 1 {
        return Err(semantic(column, format!("{what} must be linear in the summation variable")));
    }
    let to_int = |c: Rational| -> PResult<i64> {
        if !c.is_integer() {
            return Err(semantic(column, format!("{what} must have integer coefficients")));
        }
        c.to_integer().to_i64().ok_or_else(|| semantic(column, "coefficient too large"))
    };
    Ok(Linear { offset: to_int(p.coeff(0))?, slope: to_int(p.coeff(1))? })
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, c: char, expected: &[&'static str]) -> PResult<()> {
        if self.peek() == &Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            column: self.column(),
            kind: ParseErrorKind::Syntax { expected: expected.to_vec(), found: self.peek().describe() },
        }
    }

    fn expr(&mut self) -> PResult<(Value, usize)> {
        let (mut acc, start) = self.product()?;
        while let Tok::Sym(op @ ('+' | '-')) = *self.peek() {
            let op_col = self.column();
            self.bump();
            let (rhs, rcol) = self.product()?;
            let (Value::Poly(a), Value::Poly(b)) = (&acc, &rhs) else {
                let col = if matches!(acc, Value::Poly(_)) { rcol } else { start };
                let _ = op_col;
                return Err(semantic(col, "sums are only allowed between polynomial expressions"));
            };
            acc = Value::Poly(if op == '+' { a + b } else { a - b });
        }
        Ok((acc, start))
    }

    fn product(&mut self) -> PResult<(Value, usize)> {
        let (mut acc, start) = self.unary()?;
        while let Tok::Sym(op @ ('*' | '/')) = *self.peek() {
            self.bump();
            let (rhs, rcol) = self.unary()?;
            acc = match (acc, rhs, op) {
                (Value::Poly(a), Value::Poly(b), '*') => Value::Poly(&a * &b),
                (Value::Poly(a), Value::Poly(b), '/') if b.is_constant() => {
                    if b.is_zero() {
                        return Err(semantic(rcol, "division by zero"));
                    }
                    Value::Poly(a.scale(&b.coeff(0).recip()))
                }
                (a, b, '*') => {
                    let mut f = a.into_factors();
                    f.extend(b.into_factors());
                    Value::Term(f)
                }
                (a, b, _) => {
                    let mut f = a.into_factors();
                    f.extend(invert(b.into_factors(), rcol)?);
                    Value::Term(f)
                }
            };
        }
        Ok((acc, start))
    }

    fn unary(&mut self) -> PResult<(Value, usize)> {
        if self.peek() == &Tok::Sym('-') {
            let col = self.column();
            self.bump();
            let (v, _) = self.unary()?;
            let v = match v {
                Value::Poly(p) => Value::Poly(-p),
                Value::Term(mut f) => {
                    f.push(Factor::Constant(-Rational::one()));
                    Value::Term(f)
                }
            };
            return Ok((v, col));
        }
        self.power()
    }

    fn power(&mut self) -> PResult<(Value, usize)> {
        let (base, start) = self.atom()?;
        if self.peek() != &Tok::Sym('^') {
            return Ok((base, start));
        }
        self.bump();
        let (exp, ecol) = self.unary()?;
        let Value::Poly(exp) = exp else {
            return Err(semantic(ecol, "exponent must be a polynomial expression"));
        };
        if !exp.is_constant() {
            let lin = linear_of(&exp, ecol, "a variable exponent")?;
            return match base {
                Value::Poly(b) if b.is_constant() && !b.is_zero() => {
                    Ok((Value::Term(vec![Factor::Power { base: b.coeff(0), exponent: lin }]), start))
                }
                _ => Err(semantic(start, "a variable exponent needs a nonzero constant base")),
            };
        }
        let k = exp.coeff(0);
        if !k.is_integer() {
            return Err(semantic(ecol, "exponent must be an integer"));
        }
        let k = k.to_integer().to_i32().filter(|k| k.abs() <= 64).ok_or_else(|| semantic(ecol, "exponent too large"))?;
        let v = match base {
            Value::Poly(p) if k >= 0 => Value::Poly((0..k).fold(Poly::one(self.var.clone()), |acc, _| &acc * &p)),
            Value::Poly(p) if p.is_constant() => {
                if p.is_zero() {
                    return Err(semantic(start, "division by zero"));
                }
                Value::Poly(Poly::constant(self.var.clone(), rat_pow(&p.coeff(0), k as i64)))
            }
            Value::Poly(p) => Value::Term(vec![Factor::Polynomial { poly: p, exp: k }]),
            Value::Term(f) => Value::Term(
                f.into_iter()
                    .map(|f| match f {
                        Factor::Constant(c) => Factor::Constant(rat_pow(&c, k as i64)),
                        Factor::Polynomial { poly, exp } => Factor::Polynomial { poly, exp: exp * k },
                        Factor::Factorial { arg, exp } => Factor::Factorial { arg, exp: exp * k },
                        Factor::Binomial { top, bottom, exp } => Factor::Binomial { top, bottom, exp: exp * k },
                        Factor::Power { base, exponent } => Factor::Power {
                            base,
                            exponent: Linear { slope: exponent.slope * k as i64, offset: exponent.offset * k as i64 },
                        },
                    })
                    .collect(),
            ),
        };
        Ok((v, start))
    }

    fn atom(&mut self) -> PResult<(Value, usize)> {
        let col = self.column();
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok((Value::Poly(Poly::constant(self.var.clone(), Rational::from_integer(v))), col))
            }
            Tok::Ident(name) if name == "fact" => {
                self.bump();
                self.expect('(', &["`(`"])?;
                let (arg, acol) = self.expr()?;
                self.expect(')', &["`)`", "operator"])?;
                let arg = self.linear_arg(arg, acol, "factorial argument")?;
                Ok((Value::Term(vec![Factor::Factorial { arg, exp: 1 }]), col))
            }
            Tok::Ident(name) if name == "binom" => {
                self.bump();
                self.expect('(', &["`(`"])?;
                let (top, tcol) = self.expr()?;
                self.expect(',', &["`,`", "operator"])?;
                let (bottom, bcol) = self.expr()?;
                self.expect(')', &["`)`", "operator"])?;
                let top = self.linear_arg(top, tcol, "binomial argument")?;
                let bottom = self.linear_arg(bottom, bcol, "binomial argument")?;
                Ok((Value::Term(vec![Factor::Binomial { top, bottom, exp: 1 }]), col))
            }
            Tok::Ident(name) => {
                if name != self.var.as_str() {
                    return Err(semantic(col, format!("unknown identifier `{name}` (summation variable is `{}`)", self.var)));
                }
                self.bump();
                Ok((Value::Poly(Poly::identity(self.var.clone())), col))
            }
            Tok::Sym('(') => {
                self.bump();
                let (v, _) = self.expr()?;
                self.expect(')', &["`)`", "operator"])?;
                Ok((v, col))
            }
            _ => Err(self.unexpected(&["number", "identifier", "`fact`", "`binom`", "`(`", "`-`"])),
        }
    }

    fn linear_arg(&self, v: Value, col: usize, what: &str) -> PResult<Linear> {
        match v {
            Value::Poly(p) => linear_of(&p, col, what),
            Value::Term(_) => Err(semantic(col, format!("{what} must be linear in the summation variable"))),
        }
    }
}

/// Parses a term in the summation variable `var`.
pub fn parse_term(src: &str, var: &Var) -> Result<HypTerm, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, var };
    let (v, _) = p.expr()?;
    if p.peek() != &Tok::End {
        return Err(p.unexpected(&["operator", "end of input"]));
    }
    let factors = v.into_factors();
    if factors.iter().any(|f| matches!(f, Factor::Constant(c) if c.is_zero())) {
        return Err(semantic(1, "the term is identically zero"));
    }
    Ok(HypTerm::new(var.clone(), factors))
}

impl fmt::Display for HypTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let lin = |l: &Linear| Poly::from_ints(self.var.clone(), &[l.offset, l.slope]).to_string();
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            let (body, exp) = match factor {
                Factor::Constant(c) => (c.to_string(), 1),
                Factor::Polynomial { poly, exp } => (format!("({poly})"), *exp),
                Factor::Factorial { arg, exp } => (format!("fact({})", lin(arg)), *exp),
                Factor::Binomial { top, bottom, exp } => (format!("binom({}, {})", lin(top), lin(bottom)), *exp),
                Factor::Power { base, exponent } => (format!("({base})^({})", lin(exponent)), 1),
            };
            f.write_str(&body)?;
            if exp != 1 {
                write!(f, "^({exp})")?;
            }
        }
        Ok(())
    }
}
