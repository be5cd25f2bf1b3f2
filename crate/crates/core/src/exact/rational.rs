//! Exact rationals.
//!
//! Values whose numerator and denominator fit in an `i64` are held as
//! `num_rational::Ratio<i64>` and combined with its checked operations; on
//! overflow the computation is redone in `num_rational::BigRational`. Every
//! result is stored in the small form whenever it fits, so equal values have
//! equal representations. The string form used by every file format is
//! `"p/q"`, or `"p"` when `q = 1`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone)]
enum Repr {
    Small(Ratio<i64>),
    Big(BigRational),
}

#[derive(Clone)]
pub struct Rational(Repr);

/// Excluding `i64::MIN` keeps negation and reciprocals inside `i64`.
fn fits(r: &Ratio<i64>) -> bool {
    *r.numer() != i64::MIN && *r.denom() != i64::MIN
}

impl Rational {
    fn small(r: Ratio<i64>) -> Self {
        Rational(Repr::Small(r))
    }

    fn from_big(b: BigRational) -> Self {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Self::small(Ratio::new_raw(n, d)),
            _ => Rational(Repr::Big(b)),
        }
    }

    fn big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Repr::Big(b) => b.clone(),
        }
    }

    /// `n/d` in lowest terms. Panics when `d == 0`.
    pub fn new(n: BigInt, d: BigInt) -> Self {
        Self::from_big(BigRational::new(n, d))
    }

    pub fn from_integer(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.numer()),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    /// Always positive.
    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.denom()),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_integer(),
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// Panics on zero.
    pub fn recip(&self) -> Self {
        match &self.0 {
            Repr::Small(r) => {
                assert!(!r.is_zero(), "reciprocal of zero");
                Self::small(r.recip())
            }
            Repr::Big(b) => Self::from_big(b.recip()),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_negative(),
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_positive(),
            Repr::Big(b) => b.is_positive(),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        if n == i64::MIN {
            Self::from_integer(BigInt::from(n))
        } else {
            Self::small(Ratio::from_integer(n))
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a == b,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(r) => {
                0u8.hash(state);
                r.hash(state)
            }
            Repr::Big(b) => {
                1u8.hash(state);
                b.hash(state)
            }
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.big().cmp(&other.big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(self))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(self))
    }
}

macro_rules! binop {
    ($Op:ident, $op:ident, $checked:ident, $Assign:ident, $assign:ident) => {
        impl $Op<&Rational> for &Rational {
            type Output = Rational;
            fn $op(self, rhs: &Rational) -> Rational {
                if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
                    if let Some(r) = a.$checked(b).filter(fits) {
                        return Rational::small(r);
                    }
                }
                Rational::from_big(self.big().$op(rhs.big()))
            }
        }
        impl $Op<Rational> for &Rational {
            type Output = Rational;
            fn $op(self, rhs: Rational) -> Rational {
                self.$op(&rhs)
            }
        }
        impl $Op<&Rational> for Rational {
            type Output = Rational;
            fn $op(self, rhs: &Rational) -> Rational {
                (&self).$op(rhs)
            }
        }
        impl $Op<Rational> for Rational {
            type Output = Rational;
            fn $op(self, rhs: Rational) -> Rational {
                (&self).$op(&rhs)
            }
        }
        impl $Assign<&Rational> for Rational {
            fn $assign(&mut self, rhs: &Rational) {
                *self = (&*self).$op(rhs);
            }
        }
        impl $Assign<Rational> for Rational {
            fn $assign(&mut self, rhs: Rational) {
                *self = (&*self).$op(&rhs);
            }
        }
    };
}

binop!(Add, add, checked_add, AddAssign, add_assign);
binop!(Sub, sub, checked_sub, SubAssign, sub_assign);
binop!(Mul, mul, checked_mul, MulAssign, mul_assign);
binop!(Div, div, checked_div, DivAssign, div_assign);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(r) => Rational::small(-r),
            Repr::Big(b) => Rational::from_big(-b),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Self::small(Ratio::zero())
    }
    fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Small(r) if r.is_zero())
    }
}

impl One for Rational {
    fn one() -> Self {
        Self::small(Ratio::one())
    }
    fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Small(r) if r.is_one())
    }
}

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from(n)
}

/// `n/d` in lowest terms. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::BadRational(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    match &r.0 {
        Repr::Small(x) if x.is_integer() => x.numer().to_string(),
        Repr::Small(x) => format!("{}/{}", x.numer(), x.denom()),
        Repr::Big(b) if b.is_integer() => b.numer().to_string(),
        Repr::Big(b) => format!("{}/{}", b.numer(), b.denom()),
    }
}

/// Integer value of `r`, if it is one and fits.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    r.numer().to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = ratio(6, -4);
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(r.denom(), BigInt::from(2));
        assert_eq!(format_rational(&ratio(0, 7)), "0");
        assert_eq!(ratio(0, 7).denom(), BigInt::from(1));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "5", "-5", "3/7", "-22/7", "123456789012345678901234567891/2"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational(" 4/2 ").unwrap(), rat(2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn overflow_promotes_and_returns() {
        let big = rat(i64::MAX);
        let sum = &big + &big;
        assert_eq!(format_rational(&sum), "18446744073709551614");
        let back = &sum - &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(_)));
        let min = rat(i64::MIN);
        assert!(matches!(min.0, Repr::Big(_)));
        assert_eq!(format_rational(&-&min), "9223372036854775808");
        assert_eq!(&min + &rat(1), rat(i64::MIN + 1));
        assert!(rat(i64::MIN + 1) > min);
        let tiny = ratio(1, i64::MAX);
        assert_eq!(format_rational(&(&tiny * &tiny)), format!("1/{}", BigInt::from(i64::MAX) * BigInt::from(i64::MAX)));
        assert_eq!(&(&tiny * &tiny) / &tiny, tiny);
    }

    #[test]
    fn mixed_order_and_hash() {
        use std::collections::HashSet;
        let huge = parse_rational("100000000000000000000").unwrap();
        assert!(huge > rat(5) && rat(-5) < huge && -&huge < rat(-5));
        let again = &(&huge + &rat(1)) - &rat(1);
        let set: HashSet<Rational> = [huge.clone(), again].into_iter().collect();
        assert_eq!(set.len(), 1);
        assert_eq!(ratio(-3, 4).abs(), ratio(3, 4));
        assert_eq!(ratio(-3, 4).recip(), ratio(-4, 3));
    }
}
