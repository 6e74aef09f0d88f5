//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored lowest degree first; the vector is empty for the
//! zero polynomial and otherwise ends with a nonzero coefficient.

use crate::num::{ArithError, Field, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    pub c: Vec<F>,
}

impl<F: Field> std::fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly{:?}", self.c)
    }
}

impl<F: Field> Poly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn one() -> Self {
        Poly { c: vec![F::one()] }
    }

    pub fn constant(a: F) -> Self {
        Poly::new(vec![a])
    }

    pub fn x() -> Self {
        Poly {
            c: vec![F::zero(), F::one()],
        }
    }

    pub fn monomial(a: F, d: usize) -> Self {
        if a.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![F::zero(); d + 1];
        c[d] = a;
        Poly { c }
    }

    /// From integer coefficients, lowest degree first.
    pub fn from_ints(v: &[i64]) -> Self {
        Poly::new(v.iter().map(|&n| F::from_i64(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn lead(&self) -> F {
        self.c.last().cloned().unwrap_or_else(F::zero)
    }

    /// Order of vanishing at 0; zero polynomial reports `None`.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut c = vec![F::zero(); self.c.len().max(rhs.c.len())];
        for (i, x) in self.c.iter().enumerate() {
            c[i] = x.clone();
        }
        for (i, x) in rhs.c.iter().enumerate() {
            c[i] = c[i].add(x);
        }
        Poly::new(c)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![F::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.c.iter().enumerate() {
                c[i + j].add_mul_assign(x, y);
            }
        }
        Poly::new(c)
    }

    pub fn scale(&self, a: &F) -> Self {
        Poly::new(self.c.iter().map(|x| x.mul(a)).collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![F::zero(); k];
        c.extend_from_slice(&self.c);
        Poly { c }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.c[1..]
                .iter()
                .enumerate()
                .map(|(i, x)| x.mul_int(i as i64 + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Map coefficients into another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.c.iter().map(f).collect())
    }

    /// Division with remainder; errors when the divisor's leading
    /// coefficient is not invertible.
    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self), ArithError> {
        let db = rhs.degree().ok_or(ArithError::DivisionByZero)?;
        let mut r = self.c.clone();
        if r.len() <= db {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - db];
        let binv = rhs.c[db].inv()?;
        for k in (db..r.len()).rev() {
            let c = r[k].mul(&binv);
            if c.is_zero() {
                continue;
            }
            q[k - db] = c.clone();
            for i in 0..=db {
                let t = c.mul(&rhs.c[i]);
                r[k - db + i] = r[k - db + i].sub(&t);
            }
        }
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn div_exact(&self, rhs: &Self) -> Result<Self, ArithError> {
        let (q, r) = self.divrem(rhs)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ArithError::DomainMismatch("inexact division".into()))
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Result<Self, ArithError> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        if let Some(d) = a.degree() {
            let l = a.c[d].inv()?;
            a = a.scale(&l);
        }
        Ok(a)
    }

    /// Make monic; errors on the zero polynomial.
    pub fn monic(&self) -> Result<Self, ArithError> {
        let d = self.degree().ok_or(ArithError::DivisionByZero)?;
        Ok(self.scale(&self.c[d].inv()?))
    }

    /// Substitute `x -> x + a` (Taylor shift).
    pub fn translate(&self, a: &F) -> Self {
        let mut out = Poly::zero();
        for c in self.c.iter().rev() {
            out = out.mul(&Poly::new(vec![a.clone(), F::one()]));
            out = out.add(&Poly::constant(c.clone()));
        }
        out
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut out = Poly::zero();
        for c in self.c.iter().rev() {
            out = out.mul(inner).add(&Poly::constant(c.clone()));
        }
        out
    }

    /// Reverse coefficients: `x^d p(1/x)` for `d = deg p`.
    pub fn reverse(&self) -> Self {
        let mut c = self.c.clone();
        c.reverse();
        Poly::new(c)
    }
}

impl Poly<Rat> {
    /// Content (gcd of numerators over lcm of denominators), positive.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in &self.c {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            num = BigInt::one();
        }
        Rat::new(num, den)
    }

    /// Primitive integer form with positive leading coefficient.
    pub fn primitive(&self) -> Poly<Rat> {
        if self.is_zero() {
            return self.clone();
        }
        let mut p = self.scale(&self.content().recip());
        if p.lead().is_negative() {
            p = p.neg();
        }
        p
    }

    /// Squarefree factorization (Yun): returns `(factor, multiplicity)` pairs
    /// of the primitive part, multiplicity ascending.
    pub fn squarefree_factors(&self) -> Vec<(Poly<Rat>, usize)> {
        let p = match self.degree() {
            None | Some(0) => return vec![],
            _ => self.primitive(),
        };
        let dp = p.derivative();
        let a0 = p.gcd(&dp).expect("gcd over Q");
        let mut b = p.div_exact(&a0).expect("yun b");
        let mut c = dp.div_exact(&a0).expect("yun c");
        let mut out = vec![];
        let mut m = 1usize;
        loop {
            let d = c.sub(&b.derivative());
            if d.is_zero() {
                if b.degree().is_some_and(|x| x > 0) {
                    out.push((b.primitive(), m));
                }
                break;
            }
            let g = b.gcd(&d).expect("yun gcd");
            if g.degree().is_some_and(|x| x > 0) {
                out.push((g.primitive(), m));
            }
            b = b.div_exact(&g).expect("yun step b");
            c = d.div_exact(&g).expect("yun step c");
            m += 1;
            if b.degree() == Some(0) {
                break;
            }
        }
        out
    }

    /// All rational roots with multiplicity, by the rational root theorem
    /// applied to each squarefree factor.
    pub fn rational_roots(&self) -> Vec<(Rat, usize)> {
        let mut out = vec![];
        for (f, m) in self.squarefree_factors() {
            let mut g = f.clone();
            // valuation root
            if let Some(v) = g.valuation() {
                if v > 0 {
                    out.push((Rat::zero(), m));
                    g = Poly::new(g.c[v..].to_vec());
                }
            }
            if g.degree().is_none_or(|d| d == 0) {
                continue;
            }
            let a0 = g.c[0].numer().abs();
            let an = g.lead().numer().abs();
            for p in divisors(&a0) {
                for q in divisors(&an) {
                    for sign in [1i64, -1] {
                        let cand = Rat::new(&p * BigInt::from(sign), q.clone());
                        if g.eval(&cand).is_zero() {
                            out.push((cand.clone(), m));
                            let lin = Poly::new(vec![-cand, Rat::one()]);
                            while lin.divides(&g) {
                                g = g.div_exact(&lin).unwrap();
                            }
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        out.dedup_by(|a, b| a.0 == b.0);
        out
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // Trial division; fine for the integer sizes met in root hunting.
    let mut n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut primes: Vec<(BigInt, u32)> = vec![];
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += 1;
        if primes.iter().map(|x| x.1).sum::<u32>() > 60 || d > BigInt::from(100_000) {
            break;
        }
    }
    if !n.is_one() {
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let base = out.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk = &pk * &p;
            out.extend(base.iter().map(|b| b * &pk));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Pretty-print with an explicit variable name (tests and reports).
pub fn fmt_poly(p: &Poly<Rat>, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = vec![];
    for (i, c) in p.c.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cs = crate::num::fmt_rat(c);
        let term = match i {
            0 => cs,
            1 if cs == "1" => var.to_string(),
            1 if cs == "-1" => format!("-{var}"),
            1 => format!("{cs}*{var}"),
            _ if cs == "1" => format!("{var}^{i}"),
            _ if cs == "-1" => format!("-{var}^{i}"),
            _ => format!("{cs}*{var}^{i}"),
        };
        parts.push(term);
    }
    parts.join(" + ").replace("+ -", "- ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rint;

    fn p(v: &[i64]) -> Poly<Rat> {
        Poly::from_ints(v)
    }

    #[test]
    fn mul_and_divrem() {
        let a = p(&[1, 2, 1]); // (1+x)^2
        let b = p(&[1, 1]);
        assert_eq!(b.mul(&b), a);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, b);
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[1, 1]).pow(2).mul(&p(&[-1, 1]));
        let g = a.gcd(&a.derivative()).unwrap();
        assert_eq!(g, p(&[1, 1]).monic().unwrap());
        let sf = a.squarefree_factors();
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0], (p(&[-1, 1]), 1));
        assert_eq!(sf[1], (p(&[1, 1]), 2));
    }

    #[test]
    fn rational_roots_of_products() {
        // (1-4w)(1-w)(1+2w) has roots 1/4, 1, -1/2
        let a = p(&[1, -4]).mul(&p(&[1, -1])).mul(&p(&[1, 2]));
        let roots = a.rational_roots();
        let vals: Vec<Rat> = roots.iter().map(|r| r.0.clone()).collect();
        assert!(vals.contains(&crate::num::rat(1, 4)));
        assert!(vals.contains(&rint(1)));
        assert!(vals.contains(&crate::num::rat(-1, 2)));
        assert_eq!(vals.len(), 3);
    }

    #[test]
    fn translate_and_reverse() {
        let a = p(&[0, 0, 1]); // x^2
        assert_eq!(a.translate(&rint(1)), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 2, 3]).reverse(), p(&[3, 2, 1]));
    }
}
