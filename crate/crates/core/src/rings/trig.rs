//! Series in `w` whose coefficients are finite cosine polynomials in an
//! angle, the workhorse for Fourier-mode integration of the angular
//! integrands. Only even functions of the angle are representable.
//!
//! `orders[m][k]` is the coefficient of `w^m cos(k phi)`. Modes above the
//! target series order are dropped eagerly: every factor's mode-k part is
//! `O(w^k)`, so they cannot feed back into retained coefficients.

use super::series::Series;
use crate::num::Field;

#[derive(Clone, PartialEq, Debug)]
pub struct TrigSeries<F: Field> {
    /// Exclusive w-order bound; coefficients of `w^m` for `m < prec` are exact.
    pub prec: usize,
    /// Dense mode table per order, trailing zeros trimmed.
    pub orders: Vec<Vec<F>>,
}

impl<F: Field> TrigSeries<F> {
    pub fn zero(prec: usize) -> Self {
        TrigSeries {
            prec,
            orders: vec![vec![]; prec],
        }
    }

    pub fn constant(a: F, prec: usize) -> Self {
        let mut t = TrigSeries::zero(prec);
        if prec > 0 {
            t.orders[0] = vec![a];
        }
        t.trim();
        t
    }

    /// `c * w^m cos(k phi)`.
    pub fn term(c: F, m: usize, k: usize, prec: usize) -> Self {
        let mut t = TrigSeries::zero(prec);
        if m < prec && !c.is_zero() {
            let mut row = vec![F::zero(); k + 1];
            row[k] = c;
            t.orders[m] = row;
        }
        t
    }

    fn trim(&mut self) {
        for row in &mut self.orders {
            while row.last().is_some_and(|x| x.is_zero()) {
                row.pop();
            }
        }
    }

    pub fn coeff(&self, m: usize, k: usize) -> F {
        self.orders
            .get(m)
            .and_then(|row| row.get(k))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.prec.min(rhs.prec);
        let mut out = TrigSeries::zero(prec);
        for m in 0..prec {
            let a = &self.orders[m];
            let b = &rhs.orders[m];
            let mut row = vec![F::zero(); a.len().max(b.len())];
            for (k, x) in a.iter().enumerate() {
                row[k] = x.clone();
            }
            for (k, x) in b.iter().enumerate() {
                row[k] = row[k].add(x);
            }
            out.orders[m] = row;
        }
        out.trim();
        out
    }

    pub fn neg(&self) -> Self {
        TrigSeries {
            prec: self.prec,
            orders: self
                .orders
                .iter()
                .map(|row| row.iter().map(|x| x.neg()).collect())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, a: &F) -> Self {
        let mut t = TrigSeries {
            prec: self.prec,
            orders: self
                .orders
                .iter()
                .map(|row| row.iter().map(|x| x.mul(a)).collect())
                .collect(),
        };
        t.trim();
        t
    }

    /// Product via `cos a cos b = (cos(a+b) + cos(a-b))/2`, with eager mode
    /// truncation at the working precision.
    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self.prec.min(rhs.prec);
        let mode_cap = prec; // modes above prec cannot contribute later
        let mut out = TrigSeries::zero(prec);
        for (m1, row1) in self.orders.iter().enumerate().take(prec) {
            if row1.is_empty() {
                continue;
            }
            for (m2, row2) in rhs.orders.iter().enumerate() {
                let m = m1 + m2;
                if m >= prec {
                    break;
                }
                if row2.is_empty() {
                    continue;
                }
                let row = &mut out.orders[m];
                for (k1, x) in row1.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (k2, y) in row2.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let p = x.mul(y);
                        let half = p.div_int(2).expect("2 invertible");
                        for k in [k1 + k2, k1.abs_diff(k2)] {
                            if k > mode_cap {
                                continue;
                            }
                            if row.len() <= k {
                                row.resize(k + 1, F::zero());
                            }
                            row[k] = row[k].add(&half);
                        }
                    }
                }
            }
        }
        out.trim();
        out
    }

    /// Substitute `phi -> m phi` (mode remap `k -> m k`).
    pub fn mode_scale(&self, m: usize) -> Self {
        assert!(m >= 1);
        let mut out = TrigSeries::zero(self.prec);
        for (ord, row) in self.orders.iter().enumerate() {
            let mut new_row = vec![F::zero(); row.len() * m + 1];
            for (k, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    new_row[k * m] = new_row[k * m].add(x);
                }
            }
            out.orders[ord] = new_row;
        }
        out.trim();
        out
    }

    /// Cosine-basis coefficient series of mode `k`. Mode 0 is the mean value
    /// over the angle.
    pub fn fourier_coeff(&self, k: usize) -> Series<F> {
        let c: Vec<F> = (0..self.prec).map(|m| self.coeff(m, k)).collect();
        Series::new(1, 0, c)
    }

    /// Multiplicative inverse; order-0 part must be an invertible constant
    /// (mode 0 only).
    pub fn invert(&self) -> Result<Self, crate::num::ArithError> {
        let prec = self.prec;
        assert!(prec > 0);
        if self.orders[0].len() > 1 {
            return Err(crate::num::ArithError::DomainMismatch(
                "constant term must be angle-free".into(),
            ));
        }
        let c0 = self.coeff(0, 0);
        let c0i = c0.inv()?;
        // u = 1 - c0^{-1} self has valuation >= 1; invert by geometric sum
        // with order doubling avoided (plain accumulation is fine here).
        let u = TrigSeries::constant(F::one(), prec).sub(&self.scale(&c0i));
        let mut acc = TrigSeries::constant(F::one(), prec);
        let mut upow = TrigSeries::constant(F::one(), prec);
        for _ in 1..prec {
            upow = upow.mul(&u);
            if upow.orders.iter().all(|r| r.is_empty()) {
                break;
            }
            acc = acc.add(&upow);
        }
        Ok(acc.scale(&c0i))
    }

    /// Square root with order-0 part 1, by Newton iteration order by order.
    pub fn sqrt_one(&self) -> Result<Self, crate::num::ArithError> {
        let prec = self.prec;
        let one = TrigSeries::constant(F::one(), prec);
        if self.coeff(0, 0).sub(&F::one()).is_zero() == false || self.orders[0].len() > 1 {
            return Err(crate::num::ArithError::DomainMismatch(
                "sqrt_one needs order-0 part 1".into(),
            ));
        }
        // y_{n+1} = y_n + (self - y_n^2) / (2 y_n); iterate prec times at
        // fixed precision (each step gains at least one order).
        let mut y = one.clone();
        for _ in 0..prec {
            let err = self.sub(&y.mul(&y));
            if err.orders.iter().all(|r| r.is_empty()) {
                break;
            }
            let corr = err.mul(&y.invert()?).scale(&F::one().div_int(2)?);
            y = y.add(&corr);
        }
        Ok(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, Rat};
    use num_traits::One;

    #[test]
    fn power_reduction_identity() {
        // cos(phi) * cos(phi) = 1/2 + 1/2 cos(2 phi)
        let c = TrigSeries::<Rat>::term(Rat::one(), 0, 1, 4);
        let sq = c.mul(&c);
        assert_eq!(sq.coeff(0, 0), rat(1, 2));
        assert_eq!(sq.coeff(0, 2), rat(1, 2));
        assert_eq!(sq.coeff(0, 1), Rat::from_integer(0.into()));
    }

    #[test]
    fn product_to_sum() {
        // cos(phi) cos(2 phi) = 1/2 cos(phi) + 1/2 cos(3 phi)
        let a = TrigSeries::<Rat>::term(Rat::one(), 0, 1, 4);
        let b = TrigSeries::<Rat>::term(Rat::one(), 0, 2, 4);
        let p = a.mul(&b);
        assert_eq!(p.coeff(0, 1), rat(1, 2));
        assert_eq!(p.coeff(0, 3), rat(1, 2));
    }

    #[test]
    fn scalar_carry_and_mode_scale() {
        // (w cos phi)^2 = w^2 (1/2 + 1/2 cos 2phi)
        let a = TrigSeries::<Rat>::term(Rat::one(), 1, 1, 4);
        let sq = a.mul(&a);
        assert_eq!(sq.coeff(2, 0), rat(1, 2));
        assert_eq!(sq.coeff(2, 2), rat(1, 2));
        // mode scaling: cos phi -> cos 3phi; constants stay fixed
        let m = sq.mode_scale(2);
        assert_eq!(m.coeff(2, 0), rat(1, 2));
        assert_eq!(m.coeff(2, 4), rat(1, 2));
    }

    #[test]
    fn orthogonality_table() {
        // mode-0 of cos(j phi) cos(k phi) = delta_jk / 2 for j,k >= 1
        for j in 1..=12usize {
            for k in 1..=12usize {
                let a = TrigSeries::<Rat>::term(Rat::one(), 0, j, 14);
                let b = TrigSeries::<Rat>::term(Rat::one(), 0, k, 14);
                let m0 = a.mul(&b).fourier_coeff(0);
                let expect = if j == k { rat(1, 2) } else { rat(0, 1) };
                assert_eq!(m0.coeff(0), expect, "j={j} k={k}");
            }
        }
    }
}
