//! Local analysis at singular points: indicial polynomials, Frobenius
//! series, the exact apparent-singularity decision, and head-polynomial
//! factor reports.

use super::DiffOp;
use crate::num::{AlgExt, Field, Fp, Rat};
use crate::rings::{Poly, PolyQ};
use num_traits::{One, ToPrimitive};

/// Expansion point for local analysis.
#[derive(Clone, Debug, PartialEq)]
pub enum Point<F: Field> {
    Finite(F),
    Infinity,
}

/// Scalar fields whose elements can be recognized as small integers
/// (local exponents are always small in this crate).
pub trait ExponentField: Field {
    fn as_i64(&self) -> Option<i64>;
}

impl ExponentField for Rat {
    fn as_i64(&self) -> Option<i64> {
        if self.denom().is_one() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

impl ExponentField for Fp {
    fn as_i64(&self) -> Option<i64> {
        if self.p == 0 {
            return Some(self.v as i64);
        }
        // symmetric lift for small representatives
        if self.v < (1 << 20) {
            Some(self.v as i64)
        } else if self.p - self.v < (1 << 20) {
            Some(-((self.p - self.v) as i64))
        } else {
            None
        }
    }
}

impl ExponentField for AlgExt {
    fn as_i64(&self) -> Option<i64> {
        match self.c.len() {
            0 => Some(0),
            1 => self.c[0].as_i64(),
            _ => None,
        }
    }
}

/// Outcome of the indicial computation at a point.
#[derive(Clone, Debug)]
pub struct Indicial<F: Field> {
    /// Indicial polynomial in the local exponent.
    pub poly: Poly<F>,
    /// True when the Newton polygon has only slope zero (regular or
    /// regular-singular point).
    pub regular: bool,
}

/// Translate the operator so the finite point sits at the origin, or swap in
/// `x = 1/s` for infinity (`D_x = -s^2 D_s`).
pub fn localize<F: Field>(op: &DiffOp<F>, point: &Point<F>) -> DiffOp<F> {
    match point {
        Point::Finite(a) => {
            if a.is_zero() {
                op.clone()
            } else {
                DiffOp::new(op.c.iter().map(|p| p.translate(a)).collect())
            }
        }
        Point::Infinity => {
            use crate::rings::RatFunc;
            let s2d = super::OrePoly::new(vec![
                RatFunc::zero(),
                RatFunc::from_poly(Poly::monomial(F::one().neg(), 2)),
            ]);
            let mut acc = super::OrePoly::zero();
            let mut power = super::OrePoly::one();
            for (i, p) in op.c.iter().enumerate() {
                if i > 0 {
                    power = s2d.compose(&power);
                }
                if p.is_zero() {
                    continue;
                }
                // p(1/s) = reverse(p)(s) / s^deg
                let d = p.deg_or_zero();
                let coeff = RatFunc::new(p.reverse(), Poly::monomial(F::one(), d));
                acc = acc.add(&power.scale(&coeff));
            }
            acc.clear_denominators()
        }
    }
}

/// Indicial polynomial at the origin of a localized operator.
pub fn indicial_at_origin<F: Field>(op: &DiffOp<F>) -> Indicial<F> {
    let q = op.ord();
    let mut m = i64::MAX;
    for (i, p) in op.c.iter().enumerate() {
        if let Some(v) = p.valuation() {
            m = m.min(v as i64 - i as i64);
        }
    }
    let val_q = op.c[q].valuation().expect("head nonzero") as i64;
    let regular = m == val_q - q as i64;
    let mut ind = Poly::zero();
    for (i, p) in op.c.iter().enumerate() {
        if let Some(v) = p.valuation() {
            if v as i64 - i as i64 == m {
                let falling = falling_factorial::<F>(i);
                ind = ind.add(&falling.scale(&p.coeff(v)));
            }
        }
    }
    Indicial { poly: ind, regular }
}

/// `e (e-1) ... (e-i+1)` as a polynomial in `e`.
fn falling_factorial<F: Field>(i: usize) -> Poly<F> {
    let mut p = Poly::one();
    for r in 0..i {
        p = p.mul(&Poly::new(vec![F::from_i64(-(r as i64)), F::one()]));
    }
    p
}

/// Indicial data at an arbitrary point.
pub fn indicial<F: Field>(op: &DiffOp<F>, point: &Point<F>) -> Indicial<F> {
    indicial_at_origin(&localize(op, point))
}

/// The operator applied to `x^e` reads `sum_k P_k(e) x^(e+m+k)`; returns
/// `(m, [P_0, P_1, ...])` up to offset `kmax`. `P_0` is the indicial
/// polynomial.
pub fn symbol_family<F: Field>(op: &DiffOp<F>, kmax: usize) -> (i64, Vec<Poly<F>>) {
    let mut m = i64::MAX;
    for (i, p) in op.c.iter().enumerate() {
        if let Some(v) = p.valuation() {
            m = m.min(v as i64 - i as i64);
        }
    }
    let mut fam = vec![Poly::zero(); kmax + 1];
    for (i, p) in op.c.iter().enumerate() {
        let falling = falling_factorial::<F>(i);
        for (d, c) in p.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = d as i64 - i as i64 - m;
            if k >= 0 && (k as usize) <= kmax {
                fam[k as usize] = fam[k as usize].add(&falling.scale(c));
            }
        }
    }
    (m, fam)
}

/// One log-free Frobenius candidate.
#[derive(Clone, Debug)]
pub struct FrobeniusSolution<F: Field> {
    pub exponent: i64,
    /// Coefficients of `x^(exponent+m)`, `m = 0..`.
    pub coeffs: Vec<F>,
    /// Resonant orders where the recurrence degenerated with a nonzero
    /// right-hand side (a logarithm is forced there).
    pub obstructed_at: Vec<i64>,
}

/// Frobenius basis data at a localized origin.
#[derive(Clone, Debug)]
pub struct FrobeniusBasis<F: Field> {
    pub indicial: Poly<F>,
    pub regular: bool,
    /// Integer-exponent log-free candidates (one per integer root).
    pub solutions: Vec<FrobeniusSolution<F>>,
    /// Indicial roots that are not recognizably integers, as a count.
    pub non_integer_exponents: usize,
}

/// Integer roots of a polynomial over `F`, scanned on `[lo, hi]`.
fn integer_roots<F: ExponentField>(p: &Poly<F>, lo: i64, hi: i64) -> Vec<i64> {
    let mut out = vec![];
    for e in lo..=hi {
        if p.eval(&F::from_i64(e)).is_zero() {
            out.push(e);
        }
    }
    out
}

/// Log-free Frobenius expansion at the origin for each integer exponent,
/// to `order` coefficients each.
pub fn frobenius<F: ExponentField>(op: &DiffOp<F>, order: usize) -> FrobeniusBasis<F> {
    let q = op.ord();
    let ind = indicial_at_origin(op);
    // bound for integer-exponent scan: |sum of roots| via the subleading
    // coefficient when available, else a generous default
    let deg = ind.poly.deg_or_zero();
    let mut hi = 64i64;
    if deg >= 1 {
        let lead = ind.poly.coeff(deg);
        let sub = ind.poly.coeff(deg - 1);
        if let Some(s) = sub.neg().div(&lead).ok().and_then(|x| x.as_i64()) {
            hi = hi.max(s.abs() + q as i64 + 8);
        }
    }
    let roots = integer_roots(&ind.poly, -hi, hi);
    let non_integer = deg.saturating_sub(roots.len());
    let (_, fam) = symbol_family(op, order);
    let mut sols = vec![];
    for &rho in &roots {
        let mut coeffs = vec![F::zero(); order];
        let mut obstructed = vec![];
        coeffs[0] = F::one();
        for mm in 1..order {
            let mut rhs = F::zero();
            for k in 1..=mm.min(fam.len() - 1) {
                if fam[k].is_zero() || coeffs[mm - k].is_zero() {
                    continue;
                }
                let w = fam[k].eval(&F::from_i64(rho + (mm - k) as i64));
                rhs.add_mul_assign(&w, &coeffs[mm - k]);
            }
            let p0 = fam[0].eval(&F::from_i64(rho + mm as i64));
            if p0.is_zero() {
                if !rhs.is_zero() {
                    obstructed.push(rho + mm as i64);
                }
                coeffs[mm] = F::zero();
            } else {
                coeffs[mm] = rhs.neg().div(&p0).expect("nonzero fam0");
            }
        }
        sols.push(FrobeniusSolution {
            exponent: rho,
            coeffs,
            obstructed_at: obstructed,
        });
    }
    FrobeniusBasis {
        indicial: ind.poly,
        regular: ind.regular,
        solutions: sols,
        non_integer_exponents: non_integer,
    }
}

/// Reason a point fails to be apparent.
#[derive(Clone, Debug, PartialEq)]
pub enum ApparentVerdict {
    Apparent,
    Irregular,
    NonIntegerExponent,
    NegativeOrRepeatedExponent,
    LogObstruction(i64),
}

/// Exact apparent-singularity decision at a localized origin: all exponents
/// must be distinct nonnegative integers and every resonance obstruction
/// must vanish. The expansion order is `max exponent + order + 10`.
pub fn is_apparent_at_origin<F: ExponentField>(op: &DiffOp<F>) -> ApparentVerdict {
    let q = op.ord();
    let ind = indicial_at_origin(op);
    if !ind.regular {
        return ApparentVerdict::Irregular;
    }
    let deg = ind.poly.deg_or_zero();
    let mut hi = 64i64;
    if deg >= 1 {
        let lead = ind.poly.coeff(deg);
        if let Some(s) = ind
            .poly
            .coeff(deg - 1)
            .neg()
            .div(&lead)
            .ok()
            .and_then(|x| x.as_i64())
        {
            hi = hi.max(s.abs() + q as i64 + 8);
        }
    }
    let roots = integer_roots(&ind.poly, -hi, hi);
    if roots.len() < deg {
        return ApparentVerdict::NonIntegerExponent;
    }
    if roots.iter().any(|&r| r < 0) {
        return ApparentVerdict::NegativeOrRepeatedExponent;
    }
    // distinctness: deg = #roots and integer_roots dedups by construction,
    // but a repeated root shrinks the count below deg
    let max_root = *roots.iter().max().unwrap();
    let order = (max_root as usize) + q + 10;
    let basis = frobenius(op, order);
    for sol in &basis.solutions {
        if let Some(&at) = sol.obstructed_at.first() {
            return ApparentVerdict::LogObstruction(at);
        }
    }
    ApparentVerdict::Apparent
}

/// Apparent-singularity decision at a rational point.
pub fn is_apparent(op: &DiffOp<Rat>, at: &Rat) -> ApparentVerdict {
    is_apparent_at_origin(&localize(op, &Point::Finite(at.clone())))
}

/// Apparent decision at a root of an irreducible factor `f`, by moving to
/// `Q[x]/(f)`.
pub fn is_apparent_algebraic(op: &DiffOp<Rat>, f: &PolyQ) -> ApparentVerdict {
    let fm = f.monic().expect("nonzero factor");
    let modulus = std::sync::Arc::new(fm.c.clone());
    let theta = AlgExt::generator(modulus.clone());
    let lifted: DiffOp<AlgExt> = op.map(|x| AlgExt::from_poly(vec![x.clone()], modulus.clone()));
    let local = DiffOp::new(lifted.c.iter().map(|p| p.translate(&theta)).collect());
    is_apparent_at_origin(&local)
}

/// Factor of a head polynomial with its multiplicity and classification slot.
#[derive(Clone, Debug)]
pub struct HeadFactor {
    pub poly: PolyQ,
    pub multiplicity: usize,
    /// True when the factor came from the supplied catalog.
    pub from_catalog: bool,
}

/// Squarefree factorization of the head polynomial refined by catalog trial
/// division, rational-root and quadratic extraction; residual factors are
/// reported unfactored.
#[derive(Clone, Debug)]
pub struct SingularPointReport {
    pub head: PolyQ,
    pub factors: Vec<HeadFactor>,
}

pub fn singular_points(op: &DiffOp<Rat>, catalog: &[PolyQ]) -> SingularPointReport {
    let head = op.head().primitive();
    let mut factors: Vec<HeadFactor> = vec![];
    for (sf, mult) in head.squarefree_factors() {
        let mut rest = sf.clone();
        // catalog trial division first
        for cat in catalog {
            let catp = cat.primitive();
            if catp.degree().is_none_or(|d| d == 0) {
                continue;
            }
            while catp.divides(&rest) {
                rest = rest.div_exact(&catp).unwrap();
                push_factor(&mut factors, catp.clone(), mult, true);
            }
        }
        // rational roots
        for (root, _) in rest.rational_roots() {
            let lin = PolyQ::new(vec![-root.clone(), Rat::from_integer(1.into())]).primitive();
            while lin.divides(&rest) {
                rest = rest.div_exact(&lin).unwrap();
                push_factor(&mut factors, lin.clone(), mult, false);
            }
        }
        match rest.degree() {
            None | Some(0) => {}
            Some(2) => push_factor(&mut factors, rest.primitive(), mult, false),
            Some(_) => push_factor(&mut factors, rest.primitive(), mult, false),
        }
    }
    SingularPointReport { head, factors }
}

fn push_factor(factors: &mut Vec<HeadFactor>, poly: PolyQ, multiplicity: usize, from_catalog: bool) {
    for f in factors.iter_mut() {
        if f.poly == poly && f.from_catalog == from_catalog && f.multiplicity == multiplicity {
            // repeated squarefree factor inside one multiplicity class:
            // fold multiplicities (can only happen via repeated division)
        }
    }
    factors.push(HeadFactor {
        poly,
        multiplicity,
        from_catalog,
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rint};
    use crate::rings::PolyQ;

    fn op(coeffs: Vec<PolyQ>) -> DiffOp<Rat> {
        DiffOp::new(coeffs)
    }

    #[test]
    fn td_minus_one_has_exponent_one() {
        // tD - 1 at 0: exponent {1}, apparent (analytic solution t)
        let l = op(vec![PolyQ::from_ints(&[-1]), PolyQ::from_ints(&[0, 1])]);
        let ind = indicial(&l, &Point::Finite(Rat::zero()));
        assert!(ind.regular);
        // indicial rho - 1
        assert_eq!(ind.poly, PolyQ::from_ints(&[-1, 1]));
        assert_eq!(is_apparent(&l, &Rat::zero()), ApparentVerdict::Apparent);
    }

    #[test]
    fn curly_l_at_zero_is_log_resonant() {
        // (1-t)t D^2 + (1-2t) D - 1/4: exponents {0,0} at t = 0, log case
        let l = op(vec![
            PolyQ::new(vec![rat(-1, 4)]),
            PolyQ::from_ints(&[1, -2]),
            PolyQ::from_ints(&[0, 1, -1]),
        ]);
        let ind = indicial(&l, &Point::Finite(Rat::zero()));
        assert_eq!(ind.poly, PolyQ::from_ints(&[0, 0, 1]));
        let verdict = is_apparent(&l, &Rat::zero());
        // double root zero -> integer root count 1 < deg 2
        assert_eq!(verdict, ApparentVerdict::NonIntegerExponent);
    }

    #[test]
    fn bessel_irregular_at_infinity() {
        // B = D^2 + D/x - 1/4, cleared: 4x D^2 + 4 D - x; irregular at infinity
        let b = op(vec![
            PolyQ::from_ints(&[0, -1]),
            PolyQ::from_ints(&[4]),
            PolyQ::from_ints(&[0, 4]),
        ]);
        let ind = indicial(&b, &Point::Infinity);
        assert!(!ind.regular);
    }

    #[test]
    fn ordinary_point_is_fully_regular() {
        let l = op(vec![PolyQ::from_ints(&[1]), PolyQ::zero(), PolyQ::from_ints(&[1])]);
        let ind = indicial(&l, &Point::Finite(rint(0)));
        assert!(ind.regular);
        assert_eq!(ind.poly, PolyQ::from_ints(&[0, 1, -1]).neg()); // rho(rho-1)
    }

    #[test]
    fn singular_point_report_with_catalog() {
        // head (t^2 - 34t + 1) t^2 from the Apery operator shape
        let head = PolyQ::from_ints(&[1, -34, 1]).mul(&PolyQ::from_ints(&[0, 0, 1]));
        let l = op(vec![PolyQ::one(), head.clone()]);
        let rep = singular_points(&l, &[]);
        let descs: Vec<(usize, usize)> = rep
            .factors
            .iter()
            .map(|f| (f.poly.deg_or_zero(), f.multiplicity))
            .collect();
        assert!(descs.contains(&(1, 2)), "t^2 factor: {descs:?}");
        assert!(descs.contains(&(2, 1)), "quadratic factor: {descs:?}");
    }
}
