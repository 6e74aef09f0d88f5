//! Noncommutative algebra of linear differential operators.
//!
//! [`OrePoly`] is an operator `sum c_i(x) D^i` with rational-function
//! coefficients over a generic scalar field `F`; the commutation rule is
//! `D f = f D + f'`. Instantiations:
//!
//! - `OrePoly<Rat>`: ordinary operators over `Q(x)`;
//! - `OrePoly<NuRat>`: the parametric families `L_j(N)`, with scalars
//!   rational in `nu = N^2` (every printed N-dependence is through `N^2`;
//!   odd powers of `N` are rejected at construction).
//!
//! [`DiffOp`] is the cleared polynomial-coefficient presentation used for
//! printing, serialization and diffing against published operators.

pub mod local;
pub mod ratsol;
pub mod structure;

use crate::num::{ArithError, Field, Rat};
use crate::rings::{Poly, RatFunc, Series};
use num_traits::Signed;

#[derive(Clone, PartialEq)]
pub struct OrePoly<F: Field> {
    /// `c[i]` multiplies `D^i`; trailing zeros trimmed.
    pub c: Vec<RatFunc<F>>,
}

impl<F: Field> std::fmt::Debug for OrePoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrePoly(ord={:?})", self.order())
    }
}

pub type OreQ = OrePoly<Rat>;

impl<F: Field> OrePoly<F> {
    pub fn new(mut c: Vec<RatFunc<F>>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        OrePoly { c }
    }

    pub fn zero() -> Self {
        OrePoly { c: vec![] }
    }

    pub fn one() -> Self {
        OrePoly {
            c: vec![RatFunc::one()],
        }
    }

    /// The bare derivation `D`.
    pub fn d() -> Self {
        OrePoly {
            c: vec![RatFunc::zero(), RatFunc::one()],
        }
    }

    /// Multiplication operator by a rational function.
    pub fn mul_op(f: RatFunc<F>) -> Self {
        OrePoly::new(vec![f])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn order(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn ord(&self) -> usize {
        self.order().expect("zero operator has no order")
    }

    pub fn coeff(&self, i: usize) -> RatFunc<F> {
        self.c.get(i).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn lead(&self) -> RatFunc<F> {
        self.c.last().cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut c = vec![RatFunc::zero(); self.c.len().max(rhs.c.len())];
        for (i, x) in self.c.iter().enumerate() {
            c[i] = x.clone();
        }
        for (i, x) in rhs.c.iter().enumerate() {
            c[i] = c[i].add(x);
        }
        OrePoly::new(c)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        OrePoly {
            c: self.c.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn scale(&self, a: &RatFunc<F>) -> Self {
        OrePoly::new(self.c.iter().map(|x| x.mul(a)).collect())
    }

    /// Left-multiply by `D`: `D (sum c_i D^i) = sum (c_i' D^i + c_i D^{i+1})`.
    pub fn d_mul(&self) -> Self {
        let mut c = vec![RatFunc::zero(); self.c.len() + 1];
        for (i, x) in self.c.iter().enumerate() {
            c[i] = c[i].add(&x.derivative());
            c[i + 1] = c[i + 1].add(x);
        }
        OrePoly::new(c)
    }

    /// Operator composition `self . rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut acc = OrePoly::zero();
        let mut dk_rhs = rhs.clone(); // D^k . rhs
        for (i, x) in self.c.iter().enumerate() {
            if i > 0 {
                dk_rhs = dk_rhs.d_mul();
            }
            if !x.is_zero() {
                acc = acc.add(&dk_rhs.scale(x));
            }
        }
        acc
    }

    /// Right division: `self = q . rhs + r` with `ord r < ord rhs`.
    pub fn right_divrem(&self, rhs: &Self) -> Result<(Self, Self), ArithError> {
        let m = rhs.order().ok_or(ArithError::DivisionByZero)?;
        let mut r = self.clone();
        let mut q = OrePoly::zero();
        let lead_inv = rhs.c[m].inv()?;
        while let Some(n) = r.order() {
            if n < m {
                break;
            }
            let f = r.c[n].mul(&lead_inv);
            let mono = {
                let mut c = vec![RatFunc::zero(); n - m + 1];
                c[n - m] = f;
                OrePoly::new(c)
            };
            q = q.add(&mono);
            r = r.sub(&mono.compose(rhs));
        }
        Ok((q, r))
    }

    /// Greatest common right divisor, monic over the function field.
    pub fn gcrd(&self, rhs: &Self) -> Result<Self, ArithError> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.right_divrem(&b)?;
            a = std::mem::replace(&mut b, r);
        }
        if let Some(n) = a.order() {
            let inv = a.c[n].inv()?;
            a = a.scale(&inv);
        }
        Ok(a)
    }

    /// Least common left multiple by a derivative chase in the module
    /// `F(x)[D]/(self) + F(x)[D]/(rhs)`: the first dependence among the
    /// reductions of `D^k` gives the minimal operator with both as right
    /// factors.
    pub fn lclm(&self, rhs: &Self) -> Result<Self, ArithError> {
        let n1 = self.order().ok_or(ArithError::DivisionByZero)?;
        let n2 = rhs.order().ok_or(ArithError::DivisionByZero)?;
        let dim = n1 + n2;
        let mut finder = DependencyFinder::new(dim);
        let mut p = OrePoly::one(); // D^k as an operator
        for _k in 0..=dim + 1 {
            let (_, r1) = p.right_divrem(self)?;
            let (_, r2) = p.right_divrem(rhs)?;
            let mut v = Vec::with_capacity(dim);
            for i in 0..n1 {
                v.push(r1.coeff(i));
            }
            for i in 0..n2 {
                v.push(r2.coeff(i));
            }
            if let Some(dep) = finder.insert(v)? {
                let mut l = OrePoly::new(dep);
                let inv = l.lead().inv()?;
                l = l.scale(&inv);
                return Ok(l);
            }
            p = p.d_mul();
        }
        Err(ArithError::DomainMismatch("lclm dependence not found".into()))
    }

    /// Apply to a series in the (possibly ramified) variable; the operator is
    /// cleared to polynomial form first so coefficients with poles at 0 are
    /// handled exactly.
    pub fn apply(&self, s: &Series<F>) -> Series<F> {
        self.clear_denominators().apply(s)
    }

    /// Cleared polynomial-coefficient presentation.
    pub fn clear_denominators(&self) -> DiffOp<F> {
        let mut den = Poly::<F>::one();
        for x in &self.c {
            let g = den.gcd(&x.den).unwrap_or_else(|_| Poly::one());
            den = den.mul(&x.den.div_exact(&g).unwrap_or_else(|_| Poly::one()));
        }
        let c: Vec<Poly<F>> = self
            .c
            .iter()
            .map(|x| x.num.mul(&den.div_exact(&x.den).expect("lcm divisible")))
            .collect();
        DiffOp::new(c)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> OrePoly<G> {
        OrePoly::new(self.c.iter().map(|x| x.map(f)).collect())
    }
}

/// Incremental Gaussian elimination over the rational function field,
/// tracking the expression of each inserted vector in terms of the
/// originals. `insert` returns the dependence coefficients when the new
/// vector is in the span of the previous ones.
pub struct DependencyFinder<F: Field> {
    dim: usize,
    rows: Vec<(Vec<RatFunc<F>>, Vec<RatFunc<F>>)>, // (reduced vector, combination)
    count: usize,
}

impl<F: Field> DependencyFinder<F> {
    pub fn new(dim: usize) -> Self {
        DependencyFinder {
            dim,
            rows: vec![],
            count: 0,
        }
    }

    pub fn insert(&mut self, v: Vec<RatFunc<F>>) -> Result<Option<Vec<RatFunc<F>>>, ArithError> {
        assert_eq!(v.len(), self.dim);
        let mut v = v;
        let mut comb = vec![RatFunc::<F>::zero(); self.count + 1];
        comb[self.count] = RatFunc::one();
        self.count += 1;
        for (row, rcomb) in &self.rows {
            let pivot = row.iter().position(|x| !x.is_zero()).unwrap();
            if v[pivot].is_zero() {
                continue;
            }
            let f = v[pivot].div(&row[pivot])?;
            for i in 0..self.dim {
                let t = f.mul(&row[i]);
                v[i] = v[i].sub(&t);
            }
            for i in 0..rcomb.len() {
                let t = f.mul(&rcomb[i]);
                if i < comb.len() {
                    comb[i] = comb[i].sub(&t);
                }
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            Ok(Some(comb))
        } else {
            self.rows.push((v, comb));
            Ok(None)
        }
    }
}

/// Cleared-denominator operator with polynomial coefficients.
#[derive(Clone, PartialEq)]
pub struct DiffOp<F: Field> {
    pub c: Vec<Poly<F>>,
}

impl<F: Field> std::fmt::Debug for DiffOp<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "DiffOp(ord={:?}, degs={:?})",
            self.order(),
            self.c.iter().map(|p| p.degree()).collect::<Vec<_>>()
        )
    }
}

impl<F: Field> DiffOp<F> {
    pub fn new(mut c: Vec<Poly<F>>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        DiffOp { c }
    }

    pub fn order(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn ord(&self) -> usize {
        self.order().expect("zero operator")
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Poly<F> {
        self.c.get(i).cloned().unwrap_or_else(Poly::zero)
    }

    /// Head polynomial (coefficient of the highest derivative).
    pub fn head(&self) -> Poly<F> {
        self.c.last().cloned().unwrap_or_else(Poly::zero)
    }

    pub fn to_ore(&self) -> OrePoly<F> {
        OrePoly::new(self.c.iter().map(|p| RatFunc::from_poly(p.clone())).collect())
    }

    /// Apply to a series in `tau` with `x = tau^ram`.
    pub fn apply(&self, s: &Series<F>) -> Series<F> {
        let ram = s.ram;
        let mut acc: Option<Series<F>> = None;
        let mut d = s.clone();
        for (i, p) in self.c.iter().enumerate() {
            if i > 0 {
                d = d.derivative();
            }
            if p.is_zero() {
                continue;
            }
            let pe = (p.deg_or_zero() as i64 + 1) * ram as i64 + d.end().abs() + 1;
            let ps = Series::from_poly(p, ram, pe);
            let term = ps.mul(&d);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.unwrap_or_else(|| Series::zero_to(ram, s.end()))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> DiffOp<G> {
        DiffOp::new(self.c.iter().map(|p| p.map(f)).collect())
    }
}

impl DiffOp<Rat> {
    /// Integer-primitive form, leading polynomial's leading coefficient
    /// positive: the normalization used for diffing against printed
    /// operators.
    pub fn normalize(&self) -> Self {
        if self.c.is_empty() {
            return self.clone();
        }
        let mut content: Option<Rat> = None;
        for p in &self.c {
            if p.is_zero() {
                continue;
            }
            let c = p.content();
            content = Some(match content {
                None => c,
                Some(prev) => {
                    // gcd of rationals: gcd(n1/d1, n2/d2) = gcd(n1, n2)/lcm(d1, d2)
                    use num_integer::Integer;
                    Rat::new(
                        prev.numer().gcd(c.numer()),
                        prev.denom().lcm(c.denom()),
                    )
                }
            });
        }
        let mut scale = content.unwrap().recip();
        if self.c.last().unwrap().lead().is_negative() {
            scale = -scale;
        }
        DiffOp::new(self.c.iter().map(|p| p.scale(&scale)).collect())
    }

    pub fn reduce_mod(&self, p: u64) -> Result<DiffOp<crate::num::Fp>, ArithError> {
        use crate::num::Fp;
        use num_bigint::BigInt;
        use num_traits::ToPrimitive;
        use num_traits::Zero as _;
        let pb = BigInt::from(p);
        let mut out = vec![];
        for poly in &self.c {
            let mut cc = vec![];
            for x in &poly.c {
                let dm = x.denom() % &pb;
                if dm.is_zero() {
                    return Err(ArithError::ZeroDivisor(format!(
                        "prime {p} divides denominator"
                    )));
                }
                let num = Fp::from_int((x.numer() % &pb).to_i64().unwrap(), p);
                let den = Fp::from_int(dm.to_i64().unwrap(), p);
                cc.push(num.mul(&den.try_inv()?));
            }
            out.push(Poly::new(cc));
        }
        Ok(DiffOp::new(out))
    }
}

impl DiffOp<crate::num::Fp> {
    /// Scale so the head polynomial is monic.
    pub fn normalize_monic(&self) -> Self {
        if self.c.is_empty() {
            return self.clone();
        }
        let inv = self.head().lead().inv().expect("prime field");
        DiffOp::new(self.c.iter().map(|p| p.scale(&inv)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rint};
    use crate::rings::PolyQ;

    fn d() -> OreQ {
        OrePoly::d()
    }

    fn t() -> RatFunc<Rat> {
        RatFunc::x()
    }

    #[test]
    fn leibniz_rule() {
        // D . t = t D + 1
        let dt = d().compose(&OrePoly::mul_op(t()));
        assert_eq!(dt.coeff(0), RatFunc::one());
        assert_eq!(dt.coeff(1), t());
        // D . D = D^2
        let d2 = d().compose(&d());
        assert_eq!(d2.order(), Some(2));
        assert_eq!(d2.coeff(2), RatFunc::one());
        assert!(d2.coeff(1).is_zero() && d2.coeff(0).is_zero());
    }

    #[test]
    fn divrem_reconstruction() {
        // (D^2 + 1) = D . D + 1
        let l = d().compose(&d()).add(&OrePoly::one());
        let (q, r) = l.right_divrem(&d()).unwrap();
        assert_eq!(q, d());
        assert_eq!(r, OrePoly::one());
        // right_divrem(compose(A,B), B) = (A, 0)
        let a = d().compose(&d()).add(&OrePoly::mul_op(t()));
        let b = d().add(&OrePoly::mul_op(t().mul(&t())));
        let ab = a.compose(&b);
        let (q2, r2) = ab.right_divrem(&b).unwrap();
        assert!(r2.is_zero());
        assert_eq!(q2, a);
    }

    #[test]
    fn gcrd_euclidean_step() {
        // gcrd(D.(D-1), (D+1).(D-1)) = D - 1
        let dm1 = d().sub(&OrePoly::one());
        let l = d().compose(&dm1);
        let m = d().add(&OrePoly::one()).compose(&dm1);
        let g = l.gcrd(&m).unwrap();
        assert_eq!(g, dm1);
        // idempotence
        assert_eq!(l.gcrd(&l).unwrap().scale(&l.lead()), l);
    }

    #[test]
    fn lclm_of_d_and_d_minus_one() {
        // lclm(D, D-1) = D^2 - D (annihilates 1 and e^t)
        let l = d().lclm(&d().sub(&OrePoly::one())).unwrap();
        let cleared = l.clear_denominators().normalize();
        assert_eq!(cleared.c, vec![PolyQ::zero(), PolyQ::from_ints(&[-1]), PolyQ::from_ints(&[1])]);
    }

    #[test]
    fn apply_kills_constructed_solution() {
        // (1-4w)D - 4 annihilates 1/(1-4w)
        let l = DiffOp::new(vec![PolyQ::from_ints(&[-4]), PolyQ::from_ints(&[1, -4])]);
        let geo = Series::new(1, 0, (0..20).map(|k| rint(4i64.pow(k))).collect());
        let out = l.apply(&geo);
        assert!(out.is_zero(), "{:?}", out);
        // apply(D, constant) = 0
        let dop = DiffOp::new(vec![PolyQ::zero(), PolyQ::one()]);
        let mut cst = vec![rint(0); 5];
        cst[0] = rint(7);
        assert!(dop.apply(&Series::new(1, 0, cst)).is_zero());
    }

    #[test]
    fn normalize_primitive_sign() {
        let l = DiffOp::new(vec![
            PolyQ::from_ints(&[0, 2]).scale(&rat(1, 3)),
            PolyQ::from_ints(&[-2]).scale(&rat(1, 3)),
        ])
        .normalize();
        assert_eq!(l.c[0], PolyQ::from_ints(&[0, -1]));
        assert_eq!(l.c[1], PolyQ::from_ints(&[1]));
    }
}
