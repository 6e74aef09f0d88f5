//! Rational functions over a [`Field`], themselves a [`Field`].
//!
//! Canonical form: denominator monic, gcd(num, den) = 1. Implementing
//! `Field` makes `RatFunc<Rat>` usable as the coefficient domain of
//! parameter-dependent operators (rational functions of `nu = N^2`).

use super::poly::Poly;
use crate::num::{ArithError, Field, Rat};

#[derive(Clone, PartialEq)]
pub struct RatFunc<F: Field> {
    pub num: Poly<F>,
    pub den: Poly<F>,
}

impl<F: Field> std::fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RatFunc { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(num: Poly<F>) -> Self {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }

    pub fn constant(a: F) -> Self {
        RatFunc::from_poly(Poly::constant(a))
    }

    pub fn x() -> Self {
        RatFunc::from_poly(Poly::x())
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        if let Ok(g) = self.num.gcd(&self.den) {
            if g.degree().is_some_and(|d| d > 0) {
                self.num = self.num.div_exact(&g).expect("gcd divides num");
                self.den = self.den.div_exact(&g).expect("gcd divides den");
            }
        }
        if let Ok(l) = self.den.lead().inv() {
            self.num = self.num.scale(&l);
            self.den = self.den.scale(&l);
        }
    }

    pub fn is_poly(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Numerator after clearing, when the function is a polynomial.
    pub fn to_poly(&self) -> Option<Poly<F>> {
        if self.is_poly() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    /// d/dx via the quotient rule.
    pub fn derivative(&self) -> Self {
        let n = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        RatFunc::new(n, self.den.mul(&self.den))
    }

    pub fn eval(&self, x: &F) -> Result<F, ArithError> {
        let d = self.den.eval(x);
        self.num.eval(x).div(&d)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::from_poly(Poly::constant(F::from_i64(n)))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Result<Self, ArithError> {
        if self.num.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(RatFunc::new(self.den.clone(), self.num.clone()))
    }
}

/// Rational functions of the parameter `nu = N^2` over the rationals.
pub type NuRat = RatFunc<Rat>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rint};

    #[test]
    fn field_laws() {
        let x = RatFunc::<Rat>::x();
        let one = RatFunc::<Rat>::one();
        // 1/(x-1) + 1/(x+1) = 2x/(x^2-1)
        let a = x.sub(&one).inv().unwrap();
        let b = x.add(&one).inv().unwrap();
        let s = a.add(&b);
        let expect = RatFunc::new(
            Poly::from_ints(&[0, 2]),
            Poly::from_ints(&[-1, 0, 1]),
        );
        assert_eq!(s, expect);
        assert_eq!(s.mul(&s.inv().unwrap()), one);
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dx (1/x) = -1/x^2
        let x = RatFunc::<Rat>::x();
        let inv = x.inv().unwrap();
        let d = inv.derivative();
        assert_eq!(
            d,
            RatFunc::new(Poly::constant(rint(-1)), Poly::from_ints(&[0, 0, 1]))
        );
        assert_eq!(d.eval(&rint(2)).unwrap(), rat(-1, 4));
    }
}
