//! Algebraic extensions of the rationals.
//!
//! [`QuadExt`] is `Q(theta)` with `theta^2 = u + v*theta`; enough for the
//! complex-multiplication evaluations (j at roots of `k^2+3k+4`, Landen fixed
//! points). [`AlgExt`] is `Q[x]/(f)` for a monic `f` of any degree, used to
//! test apparent singularities at roots of irreducible head-polynomial
//! factors. Neither assumes `f` irreducible: inversion reports a discovered
//! factor as `ArithError::ZeroDivisor` so callers can split and retry.

use super::{fmt_rat, ArithError, Field, Rat};
use std::sync::Arc;

/// Element `a + b*theta` of `Q(theta)`, `theta^2 = u + v*theta`.
#[derive(Clone, PartialEq, Debug)]
pub struct QuadExt {
    pub a: Rat,
    pub b: Rat,
    /// Defining relation coefficients; `(0,0)` on unbound constants.
    pub u: Rat,
    pub v: Rat,
}

impl QuadExt {
    pub fn new(a: Rat, b: Rat, u: Rat, v: Rat) -> Self {
        QuadExt { a, b, u, v }
    }

    /// The generator theta for `theta^2 = u + v*theta`.
    pub fn theta(u: Rat, v: Rat) -> Self {
        QuadExt::new(Rat::zero(), Rat::one(), u, v)
    }

    pub fn constant(a: Rat, u: Rat, v: Rat) -> Self {
        QuadExt::new(a, Rat::zero(), u, v)
    }

    fn is_unbound(&self) -> bool {
        self.b.is_zero() && self.u.is_zero() && self.v.is_zero()
    }

    fn ctx(a: &QuadExt, b: &QuadExt) -> (Rat, Rat) {
        if a.is_unbound() && !b.is_unbound() {
            (b.u.clone(), b.v.clone())
        } else {
            debug_assert!(
                b.is_unbound() || (a.u == b.u && a.v == b.v),
                "mixed quadratic extensions"
            );
            (a.u.clone(), a.v.clone())
        }
    }

    /// The rational part, if the element is rational.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }
}

impl Field for QuadExt {
    fn zero() -> Self {
        QuadExt::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero())
    }
    fn one() -> Self {
        QuadExt::new(Rat::one(), Rat::zero(), Rat::zero(), Rat::zero())
    }
    fn from_i64(n: i64) -> Self {
        QuadExt::new(super::rint(n), Rat::zero(), Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        let (u, v) = QuadExt::ctx(self, rhs);
        QuadExt::new(&self.a + &rhs.a, &self.b + &rhs.b, u, v)
    }
    fn sub(&self, rhs: &Self) -> Self {
        let (u, v) = QuadExt::ctx(self, rhs);
        QuadExt::new(&self.a - &rhs.a, &self.b - &rhs.b, u, v)
    }
    fn mul(&self, rhs: &Self) -> Self {
        let (u, v) = QuadExt::ctx(self, rhs);
        // (a1 + b1 t)(a2 + b2 t) = a1 a2 + b1 b2 u + (a1 b2 + a2 b1 + b1 b2 v) t
        let bb = &self.b * &rhs.b;
        QuadExt::new(
            &(&self.a * &rhs.a) + &(&bb * &u),
            &(&(&self.a * &rhs.b) + &(&rhs.a * &self.b)) + &(&bb * &v),
            u,
            v,
        )
    }
    fn neg(&self) -> Self {
        QuadExt::new(-&self.a, -&self.b, self.u.clone(), self.v.clone())
    }
    fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        // Conjugate over the relation t^2 - v t - u: conj(a + b t) = a + b(v - t).
        // N = (a + bt)(a + bv - bt) = a^2 + abv - b^2 u.
        let n = &(&(&self.a * &self.a) + &(&(&self.a * &self.b) * &self.v))
            - &(&(&self.b * &self.b) * &self.u);
        if n.is_zero() {
            return Err(ArithError::ZeroDivisor("quadratic norm vanishes".into()));
        }
        let conj = QuadExt::new(
            &self.a + &(&self.b * &self.v),
            -&self.b,
            self.u.clone(),
            self.v.clone(),
        );
        let ninv = n.recip();
        Ok(QuadExt::new(
            &conj.a * &ninv,
            &conj.b * &ninv,
            self.u.clone(),
            self.v.clone(),
        ))
    }
}

/// Element of `Q[x]/(f)` with `f` monic, shared behind an `Arc`.
#[derive(Clone, Debug)]
pub struct AlgExt {
    /// Coefficients of the residue, lowest degree first, len < deg f (or 1 for unbound).
    pub c: Vec<Rat>,
    /// Monic modulus coefficients including the leading 1; empty when unbound.
    pub modulus: Arc<Vec<Rat>>,
}

impl PartialEq for AlgExt {
    fn eq(&self, other: &Self) -> bool {
        let d = self.c.len().max(other.c.len());
        (0..d).all(|i| {
            let a = self.c.get(i).cloned().unwrap_or_else(Rat::zero);
            let b = other.c.get(i).cloned().unwrap_or_else(Rat::zero);
            a == b
        })
    }
}

impl AlgExt {
    /// The class of `x` in `Q[x]/(f)`; `f` given lowest-first, monic.
    pub fn generator(f: Arc<Vec<Rat>>) -> Self {
        assert!(f.len() >= 3, "modulus must have degree >= 2");
        assert!(f.last().unwrap() == &Rat::one(), "modulus must be monic");
        AlgExt {
            c: vec![Rat::zero(), Rat::one()],
            modulus: f,
        }
    }

    pub fn from_poly(mut c: Vec<Rat>, f: Arc<Vec<Rat>>) -> Self {
        reduce_mod(&mut c, &f);
        AlgExt { c, modulus: f }
    }

    fn is_unbound(&self) -> bool {
        self.modulus.is_empty()
    }

    fn ctx<'a>(a: &'a AlgExt, b: &'a AlgExt) -> Arc<Vec<Rat>> {
        if a.is_unbound() {
            b.modulus.clone()
        } else {
            debug_assert!(b.is_unbound() || *a.modulus == *b.modulus);
            a.modulus.clone()
        }
    }
}

fn reduce_mod(c: &mut Vec<Rat>, f: &[Rat]) {
    if f.is_empty() {
        return;
    }
    let d = f.len() - 1;
    while c.len() > d {
        let top = c.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = c.len() - d;
        for i in 0..d {
            let t = &top * &f[i];
            c[k + i] = &c[k + i] - &t;
        }
    }
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

impl Field for AlgExt {
    fn zero() -> Self {
        AlgExt {
            c: vec![],
            modulus: Arc::new(vec![]),
        }
    }
    fn one() -> Self {
        AlgExt {
            c: vec![Rat::one()],
            modulus: Arc::new(vec![]),
        }
    }
    fn from_i64(n: i64) -> Self {
        AlgExt {
            c: if n == 0 { vec![] } else { vec![super::rint(n)] },
            modulus: Arc::new(vec![]),
        }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        let m = AlgExt::ctx(self, rhs);
        let mut c = vec![Rat::zero(); self.c.len().max(rhs.c.len())];
        for (i, x) in self.c.iter().enumerate() {
            c[i] = x.clone();
        }
        for (i, x) in rhs.c.iter().enumerate() {
            c[i] = &c[i] + x;
        }
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        AlgExt { c, modulus: m }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let m = AlgExt::ctx(self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return AlgExt {
                c: vec![],
                modulus: m,
            };
        }
        let mut c = vec![Rat::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.c.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] = &c[i + j] + &(x * y);
                }
            }
        }
        reduce_mod(&mut c, &m);
        AlgExt { c, modulus: m }
    }
    fn neg(&self) -> Self {
        AlgExt {
            c: self.c.iter().map(|x| -x).collect(),
            modulus: self.modulus.clone(),
        }
    }
    fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.is_unbound() || self.c.len() == 1 {
            let a = self.c.first().cloned().unwrap_or_else(Rat::zero);
            if a.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            return Ok(AlgExt {
                c: vec![a.recip()],
                modulus: self.modulus.clone(),
            });
        }
        // Extended Euclid on (modulus, self) over Q[x].
        let f: Vec<Rat> = (*self.modulus).clone();
        let (mut r0, mut r1) = (f.clone(), self.c.clone());
        let (mut s0, mut s1): (Vec<Rat>, Vec<Rat>) = (vec![], vec![Rat::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.len() != 1 {
            // Nontrivial gcd: the modulus splits.
            let names: Vec<String> = r0.iter().map(fmt_rat).collect();
            return Err(ArithError::ZeroDivisor(format!(
                "modulus factor [{}]",
                names.join(", ")
            )));
        }
        let lead = r0[0].recip();
        let mut c: Vec<Rat> = s0.iter().map(|x| x * &lead).collect();
        reduce_mod(&mut c, &f);
        Ok(AlgExt {
            c,
            modulus: self.modulus.clone(),
        })
    }
}

fn poly_divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let db = b.len() - 1;
    let mut r: Vec<Rat> = a.to_vec();
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![Rat::zero(); r.len() - db];
    let binv = b[db].recip();
    for k in (db..r.len()).rev() {
        let c = &r[k] * &binv;
        if !c.is_zero() {
            q[k - db] = c.clone();
            for i in 0..=db {
                let t = &c * &b[i];
                r[k - db + i] = &r[k - db + i] - &t;
            }
        }
    }
    while r.last().is_some_and(|x| x.is_zero()) {
        r.pop();
    }
    (q, r)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] = &c[i + j] + &(x * y);
        }
    }
    c
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut c = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        c[i] = x.clone();
    }
    for (i, x) in b.iter().enumerate() {
        c[i] = &c[i] - x;
    }
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rint;

    #[test]
    fn quad_ext_cm_root() {
        // theta^2 = -4 - 3 theta, i.e. a root of k^2 + 3k + 4.
        let t = QuadExt::theta(rint(-4), rint(-3));
        let t2 = t.mul(&t);
        assert_eq!(t2, QuadExt::new(rint(-4), rint(-3), rint(-4), rint(-3)));
        let ti = t.inv().unwrap();
        assert_eq!(t.mul(&ti), QuadExt::constant(rint(1), rint(-4), rint(-3)));
    }

    #[test]
    fn alg_ext_inverse() {
        // Q[x]/(x^3 - 2): invert x.
        let f = Arc::new(vec![rint(-2), rint(0), rint(0), rint(1)]);
        let x = AlgExt::generator(f);
        let xi = x.inv().unwrap();
        assert!(x.mul(&xi).sub(&AlgExt::one()).is_zero());
    }
}
