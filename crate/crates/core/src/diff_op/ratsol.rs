//! Rational solutions of linear differential operators and the resulting
//! factorization into order-one right factors.

use super::local::{indicial, localize, Point};
use super::{DiffOp, OrePoly};
use crate::num::{ArithError, Field, Rat};
use crate::rings::{Matrix, Poly, PolyQ, RatFunc};

/// Denominator exponents allowed at each finite singular point: the most
/// negative integer root of the local indicial polynomial.
fn denominator_bound(op: &DiffOp<Rat>) -> (PolyQ, Vec<(Rat, usize)>) {
    let head = op.head();
    let mut den = PolyQ::one();
    let mut spots = vec![];
    for (root, _) in head.rational_roots() {
        let ind = indicial(op, &Point::Finite(root.clone()));
        let mut emin = 0i64;
        for e in integer_roots_of(&ind.poly) {
            emin = emin.min(e);
        }
        if emin < 0 {
            let lin = PolyQ::new(vec![-root.clone(), Rat::from_integer(1.into())]);
            den = den.mul(&lin.pow((-emin) as usize));
            spots.push((root, (-emin) as usize));
        }
    }
    (den, spots)
}

fn integer_roots_of(p: &PolyQ) -> Vec<i64> {
    p.rational_roots()
        .into_iter()
        .filter_map(|(r, _)| {
            use super::local::ExponentField;
            r.as_i64()
        })
        .collect()
}

/// All rational-function solutions of `op`, exactly verified. The search is
/// bounded by local exponents; with an irregular point at infinity a fixed
/// fallback degree cap is used and absence is only "under the bounds".
pub fn rational_solutions(op: &DiffOp<Rat>) -> Result<Vec<RatFunc<Rat>>, ArithError> {
    let (den, _) = denominator_bound(op);
    let inf = indicial(op, &Point::Infinity);
    let mut deg_cap: i64 = den.deg_or_zero() as i64;
    if inf.regular {
        let roots = integer_roots_of(&inf.poly);
        match roots.iter().min() {
            Some(&rmin) => deg_cap += (-rmin).max(0),
            None => return Ok(vec![]), // no integer exponent at infinity
        }
    } else {
        deg_cap += op.ord() as i64 + 10;
    }
    if deg_cap < 0 {
        return Ok(vec![]);
    }
    // solve for polynomial z with y = z / den
    let ore = op.to_ore();
    let m = ore
        .compose(&OrePoly::mul_op(RatFunc::new(Poly::one(), den.clone())))
        .clear_denominators();
    let deg_cap = deg_cap as usize;
    let mut rows_len = 0usize;
    let mut cols: Vec<PolyQ> = vec![];
    for k in 0..=deg_cap {
        let mono = Poly::monomial(Rat::from_integer(1.into()), k);
        let image = apply_to_poly(&m, &mono);
        rows_len = rows_len.max(image.c.len());
        cols.push(image);
    }
    let rows_len = rows_len.max(1); // keep column count when all images vanish
    let mut rows = vec![vec![Rat::from_integer(0.into()); cols.len()]; rows_len];
    for (j, img) in cols.iter().enumerate() {
        for (i, c) in img.c.iter().enumerate() {
            rows[i][j] = c.clone();
        }
    }
    let basis = crate::rings::nullspace_rat(&Matrix::from_rows(rows));
    let mut out = vec![];
    for v in basis {
        let z = PolyQ::new(v);
        if z.is_zero() {
            continue;
        }
        let y = RatFunc::new(z, den.clone());
        // exact verification
        let mut acc = RatFunc::<Rat>::zero();
        let mut dy = y.clone();
        for (i, p) in op.c.iter().enumerate() {
            if i > 0 {
                dy = dy.derivative();
            }
            if !p.is_zero() {
                acc = acc.add(&RatFunc::from_poly(p.clone()).mul(&dy));
            }
        }
        if acc.is_zero() {
            out.push(y);
        }
    }
    Ok(out)
}

fn apply_to_poly(op: &DiffOp<Rat>, p: &PolyQ) -> PolyQ {
    let mut acc = PolyQ::zero();
    let mut d = p.clone();
    for (i, c) in op.c.iter().enumerate() {
        if i > 0 {
            d = d.derivative();
        }
        if !c.is_zero() && !d.is_zero() {
            acc = acc.add(&c.mul(&d));
        }
    }
    acc
}

/// Outcome of the order-one peeling loop.
#[derive(Clone, Debug)]
pub struct FactorChain {
    /// Order-one right factors, rightmost first.
    pub factors: Vec<DiffOp<Rat>>,
    /// The rational solution that produced each factor.
    pub witnesses: Vec<RatFunc<Rat>>,
    /// Irreducible-so-far left quotient when peeling stalled, `None` when
    /// the chain is complete.
    pub leftover: Option<DiffOp<Rat>>,
}

impl FactorChain {
    pub fn complete(&self) -> bool {
        self.leftover.is_none()
    }

    /// Compose the chain back (leftover leftmost) for the reconstruction
    /// check.
    pub fn compose(&self) -> OrePoly<Rat> {
        let mut acc = match &self.leftover {
            Some(l) => l.to_ore(),
            None => OrePoly::one(),
        };
        for f in self.factors.iter().rev() {
            acc = acc.compose(&f.to_ore());
        }
        acc
    }
}

/// Repeatedly find a rational solution `y`, peel the right factor
/// `D - y'/y`, right-divide and recurse. A partial chain is a valid result.
pub fn factor_first_order_chain(op: &DiffOp<Rat>) -> Result<FactorChain, ArithError> {
    let mut current = op.to_ore();
    let mut factors = vec![];
    let mut witnesses = vec![];
    loop {
        let Some(n) = current.order() else {
            break;
        };
        if n == 0 {
            break;
        }
        let cur_cleared = current.clear_denominators().normalize();
        let sols = rational_solutions(&cur_cleared)?;
        let Some(y) = sols.first() else {
            return Ok(FactorChain {
                factors,
                witnesses,
                leftover: Some(cur_cleared),
            });
        };
        // right factor D - y'/y
        let ratio = y.derivative().div(y)?;
        let factor = OrePoly::new(vec![ratio.neg(), RatFunc::one()]);
        let (q, r) = current.right_divrem(&factor)?;
        if !r.is_zero() {
            return Err(ArithError::DomainMismatch(
                "peeled factor does not divide".into(),
            ));
        }
        factors.push(factor.clear_denominators().normalize());
        witnesses.push(y.clone());
        current = q;
        if current.order() == Some(0) {
            break;
        }
    }
    Ok(FactorChain {
        factors,
        witnesses,
        leftover: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rint;

    #[test]
    fn constructed_first_order() {
        // D - a'/a with a = t^2/(t-1) has solution a
        let a = RatFunc::new(PolyQ::from_ints(&[0, 0, 1]), PolyQ::from_ints(&[-1, 1]));
        let ore = OrePoly::new(vec![a.derivative().div(&a).unwrap().neg(), RatFunc::one()]);
        let op = ore.clear_denominators().normalize();
        let sols = rational_solutions(&op).unwrap();
        assert_eq!(sols.len(), 1);
        let ratio = sols[0].div(&a).unwrap();
        assert_eq!(ratio.num.degree(), Some(0));
        assert_eq!(ratio.den.degree(), Some(0));
    }

    #[test]
    fn d_squared_has_one_and_t() {
        let op = DiffOp::new(vec![PolyQ::zero(), PolyQ::zero(), PolyQ::one()]);
        let sols = rational_solutions(&op).unwrap();
        assert_eq!(sols.len(), 2);
        let chain = factor_first_order_chain(&op).unwrap();
        assert!(chain.complete());
        assert_eq!(chain.factors.len(), 2);
        let recomposed = chain.compose().clear_denominators().normalize();
        assert_eq!(recomposed.c, op.c);
    }

    #[test]
    fn no_rational_solution_reported_as_leftover() {
        // D^2 + 1 (solutions sin, cos) has no rational solutions
        let op = DiffOp::new(vec![PolyQ::one(), PolyQ::zero(), PolyQ::one()]);
        assert!(rational_solutions(&op).unwrap().is_empty());
        let chain = factor_first_order_chain(&op).unwrap();
        assert!(!chain.complete());
        assert_eq!(chain.leftover.as_ref().unwrap().ord(), 2);
        let _ = rint(0);
    }
}
