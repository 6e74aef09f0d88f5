//! Truncated power series with an exponent shift and ramification.
//!
//! A `Series` holds coefficients of `tau^e` for `e` in `[shift, end)`, where
//! `tau = var^(1/ram)`. Exponents below `end` are exact; nothing is known at
//! `end` or beyond. The shift may be negative (controlled Laurent use inside
//! the Painleve recursion). Derivatives are taken with respect to the
//! *unramified* variable, so `d/dvar tau^e = (e/ram) tau^(e-ram)`.
//!
//! Ramified families (the odd form factors, analytic in `t^(1/2)`) are stored
//! as plain series in the ramified variable; callers track `ram`.

use crate::num::{ArithError, Field, Rat};
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq)]
pub struct Series<F: Field> {
    pub ram: u32,
    /// Exponent (in tau units) of `c[0]`.
    pub shift: i64,
    /// Coefficients for exponents `shift .. shift + c.len()`.
    pub c: Vec<F>,
}

impl<F: Field> std::fmt::Debug for Series<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Series(ram={}, shift={}, {:?} + O(^{}))",
            self.ram,
            self.shift,
            &self.c[..self.c.len().min(8)],
            self.end()
        )
    }
}

impl<F: Field> Series<F> {
    pub fn new(ram: u32, shift: i64, c: Vec<F>) -> Self {
        let mut s = Series { ram, shift, c };
        s.normalize();
        s
    }

    /// The zero series known up to (exclusive) exponent `end`.
    pub fn zero_to(ram: u32, end: i64) -> Self {
        Series {
            ram,
            shift: end,
            c: vec![],
        }
    }

    /// The constant 1 with `prec` known coefficients.
    pub fn one(ram: u32, prec: usize) -> Self {
        let mut c = vec![F::zero(); prec];
        if prec > 0 {
            c[0] = F::one();
        }
        Series { ram, shift: 0, c }
    }

    /// `tau^k` known up to exponent `end`.
    pub fn monomial(ram: u32, k: i64, end: i64) -> Self {
        let mut s = Series::zero_to(ram, end);
        if k < end {
            s.shift = k;
            s.c = vec![F::zero(); (end - k) as usize];
            s.c[0] = F::one();
        }
        s
    }

    /// Series from unramified polynomial coefficients (lowest first).
    pub fn from_poly(p: &super::poly::Poly<F>, ram: u32, end: i64) -> Self {
        let mut c = vec![];
        for (i, x) in p.c.iter().enumerate() {
            let e = i as i64 * ram as i64;
            while (c.len() as i64) < e {
                c.push(F::zero());
            }
            c.push(x.clone());
        }
        let mut s = Series {
            ram,
            shift: 0,
            c,
        };
        s.pad_to(end);
        s.truncate(end);
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let lead = self.c.iter().position(|x| !x.is_zero());
        match lead {
            Some(0) => {}
            Some(k) => {
                self.c.drain(..k);
                self.shift += k as i64;
            }
            None => {
                self.shift += self.c.len() as i64;
                self.c.clear();
            }
        }
    }

    /// First exclusive unknown exponent.
    pub fn end(&self) -> i64 {
        self.shift + self.c.len() as i64
    }

    /// Valuation, or `None` when zero to precision.
    pub fn valuation(&self) -> Option<i64> {
        self.c
            .iter()
            .position(|x| !x.is_zero())
            .map(|k| self.shift + k as i64)
    }

    fn val_or_end(&self) -> i64 {
        self.valuation().unwrap_or_else(|| self.end())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn coeff(&self, e: i64) -> F {
        if e < self.shift || e >= self.end() {
            F::zero()
        } else {
            self.c[(e - self.shift) as usize].clone()
        }
    }

    pub fn truncate(&mut self, end: i64) {
        if end < self.end() {
            let keep = (end - self.shift).max(0) as usize;
            self.c.truncate(keep);
            if self.c.is_empty() {
                self.shift = end.min(self.shift);
            }
        }
    }

    pub fn truncated(&self, end: i64) -> Self {
        let mut s = self.clone();
        s.truncate(end);
        s
    }

    fn pad_to(&mut self, end: i64) {
        while self.end() < end {
            self.c.push(F::zero());
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.ram, rhs.ram, "ramification mismatch");
        let end = self.end().min(rhs.end());
        let shift = self.shift.min(rhs.shift).min(end);
        let mut c = vec![F::zero(); (end - shift) as usize];
        for s in [self, rhs] {
            for (i, x) in s.c.iter().enumerate() {
                let e = s.shift + i as i64;
                if e < end {
                    c[(e - shift) as usize] = c[(e - shift) as usize].add(x);
                }
            }
        }
        Series::new(self.ram, shift, c)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Series {
            ram: self.ram,
            shift: self.shift,
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn scale(&self, a: &F) -> Self {
        Series::new(
            self.ram,
            self.shift,
            self.c.iter().map(|x| x.mul(a)).collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ram, rhs.ram, "ramification mismatch");
        let va = self.val_or_end();
        let vb = rhs.val_or_end();
        let end = (self.end() + vb).min(rhs.end() + va);
        let shift = (va + vb).min(end);
        let mut c = vec![F::zero(); (end - shift) as usize];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let ea = self.shift + i as i64;
            for (j, y) in rhs.c.iter().enumerate() {
                let e = ea + rhs.shift + j as i64;
                if e >= end {
                    break;
                }
                if e >= shift {
                    c[(e - shift) as usize].add_mul_assign(x, y);
                }
            }
        }
        Series::new(self.ram, shift, c)
    }

    /// Multiply by `tau^k`.
    pub fn shift_exp(&self, k: i64) -> Self {
        Series {
            ram: self.ram,
            shift: self.shift + k,
            c: self.c.clone(),
        }
    }

    /// Multiplicative inverse; the leading coefficient must be invertible.
    pub fn invert(&self) -> Result<Self, ArithError> {
        let v = self.valuation().ok_or(ArithError::DivisionByZero)?;
        let lead = self.coeff(v).inv()?;
        let n = (self.end() - v) as usize;
        // u = 1 + higher; invert by the standard recurrence.
        let mut inv = vec![F::zero(); n];
        inv[0] = lead.clone();
        for m in 1..n {
            let mut acc = F::zero();
            for k in 1..=m {
                let a = self.coeff(v + k as i64);
                if !a.is_zero() {
                    acc.add_mul_assign(&a, &inv[m - k]);
                }
            }
            inv[m] = acc.neg().mul(&lead);
        }
        Ok(Series::new(self.ram, -v, inv))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&rhs.invert()?))
    }

    /// Derivative with respect to the unramified variable.
    pub fn derivative(&self) -> Self {
        let r = self.ram as i64;
        let mut c = Vec::with_capacity(self.c.len());
        for (i, x) in self.c.iter().enumerate() {
            let e = self.shift + i as i64;
            if e == 0 {
                c.push(F::zero());
            } else {
                c.push(
                    x.mul_int(e)
                        .div_int(r)
                        .expect("ramification invertible in field"),
                );
            }
        }
        Series::new(self.ram, self.shift - r, c)
    }

    /// Antiderivative in the unramified variable with constant 0; errors on a
    /// `tau^-ram` term (a genuine log would be needed).
    pub fn integrate(&self) -> Result<Self, ArithError> {
        let r = self.ram as i64;
        let mut c = Vec::with_capacity(self.c.len());
        for (i, x) in self.c.iter().enumerate() {
            let e = self.shift + i as i64 + r;
            if e == 0 {
                if x.is_zero() {
                    c.push(F::zero());
                } else {
                    return Err(ArithError::DomainMismatch(
                        "logarithmic term in antiderivative".into(),
                    ));
                }
            } else {
                c.push(x.mul_int(r).div_int(e)?);
            }
        }
        Ok(Series::new(self.ram, self.shift + r, c))
    }

    /// Substitute a series with positive valuation for the variable.
    /// `self` must have no negative exponents.
    pub fn compose(&self, g: &Self) -> Self {
        assert!(self.shift >= 0, "compose needs a regular outer series");
        assert_eq!(self.ram, g.ram);
        let vg = g.val_or_end().max(1);
        let end = g.end().min(vg * self.end());
        let mut acc = Series::zero_to(self.ram, end);
        for i in (0..self.c.len()).rev() {
            acc = acc.mul(g);
            acc.truncate(end);
            acc = acc.add(&Series::new(self.ram, 0, vec![self.c[i].clone()]).truncated(end));
        }
        // account for the shift (x^shift prefactor)
        for _ in 0..self.shift {
            acc = acc.mul(g);
        }
        acc.truncate(end);
        acc
    }

    /// `self^e` for rational `e`; requires constant term 1 at exponent 0.
    /// Solves `(base) y' = e base' y` term by term.
    pub fn pow_rat(&self, e: &Rat) -> Result<Self, ArithError> {
        if self.valuation() != Some(0) || !self.coeff(0).sub(&F::one()).is_zero() {
            return Err(ArithError::DomainMismatch(
                "pow_rat needs constant term 1".into(),
            ));
        }
        let en = e
            .numer()
            .to_i64()
            .ok_or_else(|| ArithError::DomainMismatch("exponent too large".into()))?;
        let ed = e
            .denom()
            .to_i64()
            .ok_or_else(|| ArithError::DomainMismatch("exponent too large".into()))?;
        let n = self.c.len();
        let mut y = vec![F::zero(); n];
        y[0] = F::one();
        // m a_0 y_m = sum_{k=1..m} (e k - (m-k)) a_k y_{m-k}, a_0 = 1
        for m in 1..n {
            let mut acc = F::zero();
            for k in 1..=m {
                let a = &self.c[k];
                if a.is_zero() {
                    continue;
                }
                // coefficient (e*k - (m-k)) = (en*k - ed*(m-k))/ed
                let w = F::from_i64(en * k as i64 - ed * (m - k) as i64);
                acc.add_mul_assign(&a.mul(&w), &y[m - k]);
            }
            y[m] = acc.div_int(ed * m as i64)?;
        }
        Ok(Series::new(self.ram, 0, y))
    }

    pub fn sqrt(&self) -> Result<Self, ArithError> {
        self.pow_rat(&crate::num::rat(1, 2))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Series<G> {
        Series::new(self.ram, self.shift, self.c.iter().map(f).collect())
    }

    /// Coefficients of `tau^0..tau^(n-1)` as a dense vector; requires shift >= 0.
    pub fn dense_prefix(&self, n: usize) -> Vec<F> {
        (0..n as i64).map(|e| self.coeff(e)).collect()
    }
}

impl Series<Rat> {
    /// Reduce a rational series modulo a prime; errors when `p` divides a
    /// denominator (the caller retries with the next prime).
    pub fn reduce_mod(&self, p: u64) -> Result<Series<crate::num::Fp>, ArithError> {
        let mut c = Vec::with_capacity(self.c.len());
        for x in &self.c {
            let dm = x.denom() % num_bigint::BigInt::from(p);
            if dm.is_zero() {
                return Err(ArithError::ZeroDivisor(format!("prime {p} divides denominator")));
            }
            let num = crate::num::Fp::from_int(
                (x.numer() % num_bigint::BigInt::from(p))
                    .to_i64()
                    .unwrap(),
                p,
            );
            let den = crate::num::Fp::from_int(dm.to_i64().unwrap(), p);
            c.push(num.mul(&den.try_inv()?));
        }
        Ok(Series::new(self.ram, self.shift, c))
    }

    pub fn to_f64_prefix(&self, n: usize) -> Vec<f64> {
        assert!(self.shift >= 0);
        (0..n as i64)
            .map(|e| crate::num::rat_to_f64(&self.coeff(e)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rint, Fp};

    fn s(v: &[i64], prec_extra: usize) -> Series<Rat> {
        let mut c: Vec<Rat> = v.iter().map(|&n| rint(n)).collect();
        c.extend(std::iter::repeat(Rat::zero()).take(prec_extra));
        Series::new(1, 0, c)
    }

    #[test]
    fn difference_of_squares() {
        // (1+w)(1-w) to T=2 -> 1 - w^2
        let a = s(&[1, 1, 0], 0);
        let b = s(&[1, -1, 0], 0);
        let p = a.mul(&b);
        assert_eq!(p.coeff(0), rint(1));
        assert_eq!(p.coeff(1), rint(0));
        assert_eq!(p.coeff(2), rint(-1));
        assert_eq!(p.end(), 3);
    }

    #[test]
    fn inverse_contract() {
        let a = s(&[1, 3, -2, 5, 7], 0);
        let inv = a.invert().unwrap();
        let prod = a.mul(&inv);
        assert_eq!(prod.coeff(0), rint(1));
        for e in 1..5 {
            assert_eq!(prod.coeff(e), rint(0));
        }
    }

    #[test]
    fn small_field_reduction() {
        // (1+w)^2 over F_5 -> 1 + 2w + w^2
        let a = Series::<Fp>::new(1, 0, vec![Fp::new(1, 5), Fp::new(1, 5), Fp::new(0, 5)]);
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(0).v, 1);
        assert_eq!(sq.coeff(1).v, 2);
        assert_eq!(sq.coeff(2).v, 1);
    }

    #[test]
    fn binomial_quarter_power() {
        // (1-t)^(1/4) = 1 - t/4 - 3t^2/32 - 7t^3/128 ...
        let base = s(&[1, -1], 6);
        let y = base.pow_rat(&rat(1, 4)).unwrap();
        assert_eq!(y.coeff(1), rat(-1, 4));
        assert_eq!(y.coeff(2), rat(-3, 32));
        assert_eq!(y.coeff(3), rat(-7, 128));
        // roundtrip: fourth power gives back 1 - t
        let y4 = y.mul(&y).mul(&y).mul(&y);
        assert_eq!(y4.coeff(0), rint(1));
        assert_eq!(y4.coeff(1), rint(-1));
        for e in 2..6 {
            assert_eq!(y4.coeff(e), rint(0), "exponent {e}");
        }
    }

    #[test]
    fn ramified_derivative() {
        // d/dt of t^(1/2) = (1/2) t^(-1/2) with ram = 2
        let a = Series::<Rat>::monomial(2, 1, 8);
        let d = a.derivative();
        assert_eq!(d.valuation(), Some(-1));
        assert_eq!(d.coeff(-1), rat(1, 2));
    }

    #[test]
    fn compose_geometric() {
        // 1/(1-x) composed with x = 2t: 1/(1-2t)
        let outer = s(&[1, 1, 1, 1, 1, 1], 0);
        let inner = s(&[0, 2], 4);
        let c = outer.compose(&inner);
        for e in 0..c.end() {
            assert_eq!(c.coeff(e), rint(1i64 << e));
        }
    }
}
