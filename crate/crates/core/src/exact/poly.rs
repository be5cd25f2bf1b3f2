//! Sparse multivariate polynomials with rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors under the
//! graded-lexicographic order, so two polynomials over the same variables
//! with the same value have identical maps. Variable lists are kept sorted;
//! binary operations work over the union of both operands' variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector, ordered by total degree and then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Monomial(Vec<u32>);

impl Monomial {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Default)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        Self {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Rational::one());
        Self {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Parses expressions such as `(a1*x + a3*z)*x^2*y` or `-1/2*t^3 + 4`.
    /// Juxtaposition multiplies, so `x^2y` reads as `x^2*y`.
    pub fn parse(input: &str) -> Result<Self> {
        let mut p = Parser {
            input,
            chars: input.chars().collect(),
            pos: 0,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Variables with a nonzero exponent in some term.
    pub fn used_vars(&self) -> Vec<&str> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m.0[*i] > 0))
            .map(|(_, v)| v.as_str())
            .collect()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lexicographic order, as
    /// `(variable -> exponent, coefficient)`.
    pub fn terms(&self) -> Vec<(BTreeMap<&str, u32>, &Rational)> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let exps = self
                    .vars
                    .iter()
                    .zip(&m.0)
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| (v.as_str(), e))
                    .collect();
                (exps, c)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.binary_search_by(|v| v.as_str().cmp(name)).ok()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn mentions(&self, var: &str) -> bool {
        self.degree_in(var) > 0
    }

    /// The polynomial `q` with `self = q * var^deg + (terms of other degree in var)`.
    pub fn coefficient(&self, var: &str, deg: u32) -> Poly {
        let Some(i) = self.var_index(var) else {
            return if deg == 0 { self.clone() } else { Poly::zero() };
        };
        let mut out = Poly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            if m.0[i] == deg {
                let mut e = m.0.clone();
                e[i] = 0;
                out.terms.insert(Monomial(e), c.clone());
            }
        }
        out
    }

    /// Re-expresses over `vars` (sorted, a superset of the used variables).
    fn with_vars(&self, vars: &[String]) -> Poly {
        if self.vars == vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.binary_search(v).expect("target variables cover the source"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; vars.len()];
                for (k, &x) in m.0.iter().enumerate() {
                    e[map[k]] = x;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Poly {
            vars: vars.to_vec(),
            terms,
        }
    }

    /// Declares extra variables without changing the value.
    pub fn over(&self, vars: &[String]) -> Poly {
        let mut all: Vec<String> = self.vars.iter().chain(vars).cloned().collect();
        all.sort();
        all.dedup();
        self.with_vars(&all)
    }

    fn aligned(a: &Poly, b: &Poly) -> (Poly, Poly) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let mut all: Vec<String> = a.vars.iter().chain(&b.vars).cloned().collect();
        all.sort();
        all.dedup();
        (a.with_vars(&all), b.with_vars(&all))
    }

    fn add_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one().over(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Evaluates at a point binding every used variable.
    pub fn eval(&self, point: &BTreeMap<String, Rational>) -> Result<Rational> {
        let p = self.specialize(point);
        p.constant_value().ok_or_else(|| {
            Error::UnboundVariable(p.used_vars().first().copied().unwrap_or("?").to_string())
        })
    }

    /// Substitutes values for the bound variables, leaving the rest symbolic.
    pub fn specialize(&self, point: &BTreeMap<String, Rational>) -> Poly {
        let bound: Vec<Option<&Rational>> = self.vars.iter().map(|v| point.get(v)).collect();
        if bound.iter().all(Option::is_none) {
            return self.clone();
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = m.0.clone();
            for (k, b) in bound.iter().enumerate() {
                if let Some(val) = b {
                    if e[k] > 0 {
                        coeff *= num_traits::pow::pow((*val).clone(), e[k] as usize);
                        e[k] = 0;
                    }
                }
            }
            Self::add_term(&mut terms, Monomial(e), coeff);
        }
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Replaces `var` by `value` everywhere.
    pub fn substitute(&self, var: &str, value: &Poly) -> Poly {
        let Some(i) = self.var_index(var) else {
            return self.clone();
        };
        let (me, val) = Self::aligned(self, value);
        let max_e = me.degree_in(var) as usize;
        let mut powers = vec![Poly::one().over(&me.vars)];
        for k in 1..=max_e {
            let next = &powers[k - 1] * &val;
            powers.push(next);
        }
        let mut out = Poly {
            vars: me.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &me.terms {
            let k = m.0[i] as usize;
            let mut e = m.0.clone();
            e[i] = 0;
            if k == 0 {
                Self::add_term(&mut out.terms, Monomial(e), c.clone());
                continue;
            }
            for (pm, pc) in &powers[k].terms {
                let prod: Vec<u32> = e.iter().zip(&pm.0).map(|(a, b)| a + b).collect();
                Self::add_term(&mut out.terms, Monomial(prod), c * pc);
            }
        }
        out
    }

    /// `Some((c, rest))` when `self = c*var + rest` with `c` a nonzero
    /// constant and `rest` free of `var`.
    pub fn solve_linear_for(&self, var: &str) -> Option<(Rational, Poly)> {
        if self.degree_in(var) != 1 {
            return None;
        }
        let c = self.coefficient(var, 1).constant_value()?;
        Some((c, self.coefficient(var, 0)))
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for Poly {}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (mut a, b) = Poly::aligned(self, rhs);
        for (m, c) in b.terms {
            Poly::add_term(&mut a.terms, m, c);
        }
        a
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let (mut a, b) = Poly::aligned(self, rhs);
        for (m, c) in b.terms {
            Poly::add_term(&mut a.terms, m, -c);
        }
        a
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let (a, b) = Poly::aligned(self, rhs);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                Poly::add_term(&mut terms, Monomial(e), ca * cb);
            }
        }
        Poly { vars: a.vars, terms }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(&m.0)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mono.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -self.term()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(c) if c == '(' || c.is_alphanumeric() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            let e: u32 = digits.parse().map_err(|_| self.error("expected an exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits();
                let mut value = Rational::from_integer(num.parse().expect("digits"));
                // `3/2` is a literal; division is not otherwise supported.
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.digits();
                    let den: num_bigint::BigInt =
                        den.parse().map_err(|_| self.error("expected a denominator"))?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Poly::constant(value))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_alphabetic() {
                    self.pos += 1;
                }
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_digit() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Ok(Poly::var(&name))
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, ratio};

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn binomial_square() {
        assert_eq!(p("(x+y)^2"), p("x^2 + 2*x*y + y^2"));
        assert_ne!(p("(x+y)^2"), p("x^2 + y^2"));
    }

    #[test]
    fn evaluation() {
        let point: BTreeMap<String, Rational> =
            [("x".to_string(), rat(2)), ("y".to_string(), rat(3))].into();
        assert_eq!(p("x^2*y").eval(&point).unwrap(), rat(12));
        assert_eq!(
            p("x*z").eval(&point),
            Err(Error::UnboundVariable("z".into()))
        );
    }

    #[test]
    fn product_expands() {
        let lhs = &p("a1*x + a3*z") * &p("x^2*y");
        assert_eq!(lhs, p("a1*x^3*y + a3*x^2*y*z"));
        assert_eq!(lhs.to_string(), "a1*x^3*y + a3*x^2*y*z");
    }

    #[test]
    fn display_order_and_signs() {
        assert_eq!(p("1 - x + 1/2*x^2*y").to_string(), "1/2*x^2*y - x + 1");
        assert_eq!(p("-3").to_string(), "-3");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn implicit_multiplication() {
        assert_eq!(p("x^2y"), p("x^2*y"));
        assert_eq!(p("2(x+1)"), p("2*x + 2"));
        // a name is letters then digits, so `a1x` is `a1*x` but `xz` is one name
        assert_eq!(p("a1x"), p("a1*x"));
        assert_eq!(p("xz").used_vars(), vec!["xz"]);
    }

    #[test]
    fn parse_errors() {
        assert!(Poly::parse("x +").is_err());
        assert!(Poly::parse("(x").is_err());
        assert!(Poly::parse("x^").is_err());
        assert!(Poly::parse("1/0").is_err());
        assert!(Poly::parse("x)").is_err());
    }

    #[test]
    fn substitution_and_coefficients() {
        let f = p("x^2*y + x + 3");
        assert_eq!(f.substitute("x", &p("y+1")), p("(y+1)^2*y + y + 4"));
        assert_eq!(f.coefficient("x", 2), p("y"));
        assert_eq!(f.coefficient("x", 0), p("3"));
        assert_eq!(p("2*x + y*z").solve_linear_for("x"), Some((rat(2), p("y*z"))));
        assert_eq!(p("y*x + 1").solve_linear_for("x"), None);
        assert_eq!(p("x^2 + x").solve_linear_for("x"), None);
    }

    #[test]
    fn partial_specialization() {
        let point: BTreeMap<String, Rational> = [("x".to_string(), ratio(1, 2))].into();
        assert_eq!(p("4*x^2*y + x").specialize(&point), p("y + 1/2"));
    }

    #[test]
    fn degrees() {
        let f = p("x^3*y + y^2");
        assert_eq!(f.total_degree(), 4);
        assert_eq!(f.degree_in("y"), 2);
        assert_eq!(f.degree_in("w"), 0);
        assert!(p("7").is_constant());
        assert_eq!(p("x - x").constant_value(), Some(rat(0)));
        assert_eq!(f.used_vars(), vec!["x", "y"]);
    }
}
