//! Structural operations: symmetric powers, operator equivalence
//! (intertwiners), image operators, and the specialization of parametric
//! families.

use super::{DependencyFinder, DiffOp, OrePoly};
use crate::num::{rint, ArithError, Field, Rat};
use crate::rings::{Matrix, NuRat, Poly, RatFunc};

/// Symmetric `j`-th power of a second-order operator: the minimal operator
/// annihilating all products `y1^a y2^(j-a)` of solutions, computed by
/// reducing derivatives of `y^j` in the module with basis
/// `y^(j-i) (y')^i`.
pub fn sym_power<F: Field>(l: &OrePoly<F>, j: usize) -> Result<OrePoly<F>, ArithError> {
    if l.order() != Some(2) {
        return Err(ArithError::DomainMismatch(
            "sym_power expects a second-order operator".into(),
        ));
    }
    if j == 0 {
        return Ok(OrePoly::d());
    }
    if j == 1 {
        return Ok(l.clone());
    }
    let lead_inv = l.c[2].inv()?;
    let a = l.c[0].mul(&lead_inv); // y'' = -b y' - a y
    let b = l.c[1].mul(&lead_inv);
    let dim = j + 1;
    // v[i] multiplies the basis monomial y^(j-i) (y')^i
    let mut v: Vec<RatFunc<F>> = vec![RatFunc::zero(); dim];
    v[0] = RatFunc::one();
    let mut finder = DependencyFinder::new(dim);
    for _k in 0..=dim + 1 {
        if let Some(dep) = finder.insert(v.clone())? {
            let mut op = OrePoly::new(dep);
            let inv = op.lead().inv()?;
            op = op.scale(&inv);
            return Ok(op);
        }
        // differentiate: d(v_i . m_i) = v_i' m_i + v_i (d m_i)
        // d m_i = (j-i) m_{i+1} - i b m_i - i a m_{i-1}
        let mut nv: Vec<RatFunc<F>> = v.iter().map(|x| x.derivative()).collect();
        for i in 0..dim {
            if v[i].is_zero() {
                continue;
            }
            if i + 1 < dim {
                let t = v[i].mul(&RatFunc::from_poly(Poly::constant(F::from_i64(
                    (j - i) as i64,
                ))));
                nv[i + 1] = nv[i + 1].add(&t);
            }
            if i > 0 {
                let ib = v[i].mul(&b).mul(&RatFunc::from_poly(Poly::constant(
                    F::from_i64(i as i64),
                )));
                nv[i] = nv[i].sub(&ib);
                let ia = v[i].mul(&a).mul(&RatFunc::from_poly(Poly::constant(
                    F::from_i64(i as i64),
                )));
                nv[i - 1] = nv[i - 1].sub(&ia);
            }
        }
        v = nv;
    }
    Err(ArithError::DomainMismatch("sym_power dependence not found".into()))
}

/// Reduce the operator `p` modulo `m` and return the remainder coefficient
/// vector of length `ord m`.
fn reduce_vec<F: Field>(p: &OrePoly<F>, m: &OrePoly<F>) -> Result<Vec<RatFunc<F>>, ArithError> {
    let (_, r) = p.right_divrem(m)?;
    Ok((0..m.ord()).map(|i| r.coeff(i)).collect())
}

/// Minimal operator annihilating `q(y)` for all solutions `y` of `m`.
pub fn image_operator<F: Field>(
    m: &OrePoly<F>,
    q: &OrePoly<F>,
) -> Result<OrePoly<F>, ArithError> {
    let n = m.order().ok_or(ArithError::DivisionByZero)?;
    if reduce_vec(q, m)?.iter().all(|x| x.is_zero()) {
        return Err(ArithError::DomainMismatch(
            "operator maps every solution to zero".into(),
        ));
    }
    let mut finder = DependencyFinder::new(n);
    let mut p = q.clone(); // D^k . q
    for _k in 0..=n + 1 {
        if let Some(dep) = finder.insert(reduce_vec(&p, m)?)? {
            let mut op = OrePoly::new(dep);
            let inv = op.lead().inv()?;
            return Ok(op.scale(&inv));
        }
        p = p.d_mul();
    }
    Err(ArithError::DomainMismatch("image dependence not found".into()))
}

/// Check the intertwining identity `l . u = v . m` exactly.
pub fn verify_intertwiner<F: Field>(
    l: &OrePoly<F>,
    m: &OrePoly<F>,
    u: &OrePoly<F>,
    v: &OrePoly<F>,
) -> bool {
    l.compose(u).sub(&v.compose(m)).is_zero()
}

/// Search for `u` with polynomial coefficients, `ord u <= ord_bound`,
/// `deg <= deg_bound`, such that `rem(l . u, m) = 0`; then
/// `v = quo(l . u, m)` intertwines. Returns the normalized minimal
/// solution, or `None` when the bounded space contains none.
pub fn search_intertwiner(
    l: &OrePoly<Rat>,
    m: &OrePoly<Rat>,
    ord_bound: usize,
    deg_bound: usize,
) -> Result<Option<(OrePoly<Rat>, OrePoly<Rat>)>, ArithError> {
    let n = m.order().ok_or(ArithError::DivisionByZero)?;
    let cols = (ord_bound + 1) * (deg_bound + 1);
    // remainder of l . (t^d D^i) mod m, as n rational functions each
    let mut rem_cols: Vec<Vec<RatFunc<Rat>>> = Vec::with_capacity(cols);
    for i in 0..=ord_bound {
        for dpow in 0..=deg_bound {
            let mut c = vec![RatFunc::zero(); i + 1];
            c[i] = RatFunc::from_poly(Poly::monomial(Rat::one(), dpow));
            let u = OrePoly::new(c);
            rem_cols.push(reduce_vec(&l.compose(&u), m)?);
        }
    }
    // common denominator per remainder slot, then polynomial equations
    let mut rows: Vec<Vec<Rat>> = vec![];
    for slot in 0..n {
        let mut den = Poly::<Rat>::one();
        for col in &rem_cols {
            let g = den.gcd(&col[slot].den)?;
            den = den.mul(&col[slot].den.div_exact(&g)?);
        }
        let cleared: Vec<Poly<Rat>> = rem_cols
            .iter()
            .map(|col| col[slot].num.mul(&den.div_exact(&col[slot].den).unwrap()))
            .collect();
        let max_deg = cleared.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
        for d in 0..=max_deg {
            rows.push(cleared.iter().map(|p| p.coeff(d)).collect());
        }
    }
    let basis = crate::rings::nullspace_rat(&Matrix::from_rows(rows));
    if basis.is_empty() {
        return Ok(None);
    }
    // pick the solution of minimal operator order, then minimal degree
    let build = |v: &Vec<Rat>| -> OrePoly<Rat> {
        let mut coeffs = vec![Poly::zero(); ord_bound + 1];
        for i in 0..=ord_bound {
            let mut c = vec![];
            for dpow in 0..=deg_bound {
                c.push(v[i * (deg_bound + 1) + dpow].clone());
            }
            coeffs[i] = Poly::new(c);
        }
        OrePoly::new(coeffs.into_iter().map(RatFunc::from_poly).collect())
    };
    let mut best: Option<OrePoly<Rat>> = None;
    for v in &basis {
        let u = build(v);
        if u.is_zero() {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => u.order() < b.order(),
        };
        if better {
            best = Some(u);
        }
    }
    let Some(u) = best else { return Ok(None) };
    let (v, r) = l.compose(&u).right_divrem(m)?;
    debug_assert!(r.is_zero());
    // normalize: clear denominators of u to primitive integer form
    let ucleared = u.clear_denominators().normalize();
    let u = ucleared.to_ore();
    let (v2, _) = l.compose(&u).right_divrem(m)?;
    let _ = v;
    Ok(Some((u, v2)))
}

/// Specialize a parametric operator at `nu = n^2`.
pub fn specialize_nu(op: &OrePoly<NuRat>, n: i64) -> OrePoly<Rat> {
    let nu = rint(n * n);
    op.map(|x: &NuRat| x.eval(&nu).expect("nu-denominator vanished at integer N"))
}

/// Lift an ordinary rational-function scalar into the `nu`-parametric field.
pub fn const_nu(x: &Rat) -> NuRat {
    RatFunc::constant(x.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;
    use crate::rings::PolyQ;

    fn d() -> OrePoly<Rat> {
        OrePoly::d()
    }

    #[test]
    fn sym_one_is_identity() {
        let l = d().compose(&d()).add(&OrePoly::mul_op(RatFunc::x()));
        assert_eq!(sym_power(&l, 1).unwrap(), l);
    }

    #[test]
    fn sym_square_of_constant_operator() {
        // L = D^2 - 1 has solutions e^t, e^-t; Sym^2 annihilates e^2t, 1, e^-2t
        // => minimal operator D^3 - 4D
        let l = d().compose(&d()).sub(&OrePoly::one());
        let s = sym_power(&l, 2).unwrap().clear_denominators().normalize();
        assert_eq!(
            s.c,
            vec![
                PolyQ::zero(),
                PolyQ::from_ints(&[-4]),
                PolyQ::zero(),
                PolyQ::from_ints(&[1])
            ]
        );
    }

    #[test]
    fn image_of_identity_and_derivative() {
        let l = d().compose(&d()).add(&OrePoly::mul_op(RatFunc::x()));
        assert_eq!(image_operator(&l, &OrePoly::one()).unwrap(), l.clone().scale(&l.lead().inv().unwrap()));
        // Derivatives of solutions of D^2 are the constants, so the
        // *minimal* annihilator of the image is D itself.
        let d2 = d().compose(&d());
        let img = image_operator(&d2, &d()).unwrap();
        assert_eq!(img.clear_denominators().normalize().c, d().clear_denominators().normalize().c);
    }

    #[test]
    fn trivial_intertwiner() {
        let l = d().compose(&d()).add(&OrePoly::mul_op(RatFunc::x()));
        assert!(verify_intertwiner(&l, &l, &OrePoly::one(), &OrePoly::one()));
        // (D, D^2) with bounds 0 -> none
        let got = search_intertwiner(&d(), &d().compose(&d()), 0, 0).unwrap();
        assert!(got.is_none());
    }

    #[test]
    fn search_finds_self_equivalence() {
        let l = d()
            .compose(&d())
            .add(&OrePoly::mul_op(RatFunc::x()).compose(&d()));
        let (u, v) = search_intertwiner(&l, &l, 0, 0).unwrap().unwrap();
        assert!(verify_intertwiner(&l, &l, &u, &v));
        assert_eq!(u.coeff(0), RatFunc::constant(rat(1, 1)));
    }
}
