//! Scalar arithmetic: the `Field` trait and its implementations.
//!
//! Everything downstream (polynomials, series, operators, linear algebra)
//! is generic over [`Field`]. Implementations:
//!
//! - [`Rat`]: arbitrary-precision rationals (newtype over `BigRational`)
//! - [`Fp`]: prime fields with a runtime modulus carried inside each element
//! - [`QuadExt`]: quadratic extensions of the rationals
//! - [`AlgExt`]: `Q[x]/(f)` for a monic rational polynomial `f`
//!
//! `Fp` elements created by `Field::zero`/`one`/`from_i64` start out *unbound*
//! (modulus 0, value a signed integer in disguise) and bind to a concrete
//! modulus on first contact with a bound element. Unbound elements must never
//! be inverted; all generic code in this crate combines integer constants with
//! bound data before dividing.

pub mod fp;
mod quad;

pub use fp::{mulmod, Fp};
pub use quad::{AlgExt, QuadExt};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Errors from scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    /// A nonzero element with no inverse. For `Fp` this means the prime
    /// divides a needed denominator (the retry-with-next-prime contract);
    /// for `AlgExt` the payload is a proper factor of the modulus.
    #[error("zero divisor encountered: {0}")]
    ZeroDivisor(String),
    #[error("mixed moduli or incompatible extensions: {0}")]
    DomainMismatch(String),
}

/// A (commutative) field, with operations taken by reference.
pub trait Field: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; errors on zero (and on zero divisors for `Fp`).
    fn inv(&self) -> Result<Self, ArithError>;

    fn add_assign(&mut self, rhs: &Self) {
        *self = Field::add(self, rhs);
    }
    /// `self += a * b`, the fused kernel of all elimination loops.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = Field::add(self, &a.mul(b));
    }
    /// Multiply by an integer constant.
    fn mul_int(&self, n: i64) -> Self {
        self.mul(&Self::from_i64(n))
    }
    /// Divide by a nonzero integer constant. Safe on bound elements only.
    fn div_int(&self, n: i64) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Bind the constant to self's context before inverting.
        let c = self.mul(&Self::from_i64(n));
        Ok(self.mul(&self.mul(&c.inv()?)))
    }
    /// Exact division.
    fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&rhs.inv()?))
    }
    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut touched = false;
        while e > 0 {
            if e & 1 == 1 {
                acc = if touched { acc.mul(&base) } else { base.clone() };
                touched = true;
            }
            base = base.mul(&base);
            e >>= 1;
        }
        if touched {
            acc
        } else {
            Self::one()
        }
    }
}

/// Arbitrary-precision rational scalar.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        Rat(BigRational::new(num, den))
    }
    pub fn from_integer(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
    pub fn recip(&self) -> Self {
        Rat(self.0.recip())
    }
    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
    pub fn as_i64(&self) -> Option<i64> {
        if self.0.denom().is_one() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
}

impl Debug for Rat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", fmt_rat(self))
    }
}

impl std::fmt::Display for Rat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", fmt_rat(self))
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}
impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn inv(&self) -> Result<Self, ArithError> {
        if self.0.is_zero() {
            Err(ArithError::DivisionByZero)
        } else {
            Ok(Rat(self.0.recip()))
        }
    }
    fn div_int(&self, n: i64) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rat(&self.0 / BigRational::from_integer(BigInt::from(n))))
    }
}

/// Rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Rational from an integer.
pub fn rint(n: i64) -> Rat {
    Rat(BigRational::from_integer(BigInt::from(n)))
}

/// Parse "a/b" or "a" into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let num: BigInt = a.trim().parse().ok()?;
        let den: BigInt = b.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Rat(BigRational::new(num, den)))
    } else {
        let num: BigInt = s.parse().ok()?;
        Some(Rat(BigRational::from_integer(num)))
    }
}

/// Render a rational as "a" or "a/b".
pub fn fmt_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Round a rational to f64 (for numeric reports only).
pub fn rat_to_f64(x: &Rat) -> f64 {
    let num = x.numer();
    let den = x.denom();
    let nbits = num.bits() as i64;
    let dbits = den.bits() as i64;
    let shift = (nbits.max(dbits) - 62).max(0) as u64;
    let n2: BigInt = num >> shift;
    let d2: BigInt = den >> shift;
    let nf = n2.to_f64().unwrap_or(f64::NAN);
    let df = d2.to_f64().unwrap_or(f64::NAN);
    if df == 0.0 {
        if num.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    } else {
        nf / df
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_basics() {
        let a = rat(1, 3);
        let b = rat(1, 6);
        assert_eq!(Field::add(&a, &b), rat(1, 2));
        assert_eq!(a.inv().unwrap(), rint(3));
        assert_eq!(parse_rat("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(fmt_rat(&rat(-7, 2)), "-7/2");
        assert_eq!(fmt_rat(&rint(5)), "5");
    }

    #[test]
    fn pow_and_div_int() {
        assert_eq!(rat(2, 1).pow(10), rint(1024));
        assert_eq!(rint(5).div_int(2).unwrap(), rat(5, 2));
        assert_eq!(&rint(3) * &rat(1, 6), rat(1, 2));
    }
}
