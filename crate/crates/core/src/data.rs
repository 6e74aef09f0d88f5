//! Published operator families and singularity catalogs, entered verbatim.
//!
//! The parametric operators carry `nu = N^2` symbolically (every printed
//! N-dependence is through `N^2`; nothing here can express an odd power of
//! `N`). Builders mirror the displayed formulas term by term rather than
//! pre-combined normal forms, so each entry can be eyeballed against its
//! source.

use crate::diff_op::OrePoly;
use crate::num::{rat, rint, Field, Rat};
use crate::rings::{NuRat, Poly, PolyQ, RatFunc};

/// Rational functions of `t` over `Q(nu)`: the parametric coefficient field.
pub type ParamCoeff = RatFunc<NuRat>;
/// Parametric differential operator in `t`.
pub type ParamOp = OrePoly<NuRat>;
/// Ordinary operator over `Q(t)`.
pub type OpQ = OrePoly<Rat>;

// ---- small expression helpers ----

fn qc(n: i64, d: i64) -> ParamCoeff {
    RatFunc::constant(RatFunc::constant(rat(n, d)))
}

/// The main variable `t` as a parametric coefficient.
fn tv() -> ParamCoeff {
    RatFunc::from_poly(Poly::new(vec![NuRat::zero(), NuRat::one()]))
}

/// The parameter `nu = N^2`.
fn nuv() -> ParamCoeff {
    RatFunc::constant(RatFunc::from_poly(Poly::new(vec![
        Rat::zero(),
        Rat::one(),
    ])))
}

fn pc(v: &[(i64, i64)]) -> ParamCoeff {
    // polynomial in t with rational coefficients, lowest degree first
    RatFunc::from_poly(Poly::new(
        v.iter().map(|&(n, d)| RatFunc::constant(rat(n, d))).collect(),
    ))
}

fn ore(c: Vec<ParamCoeff>) -> ParamOp {
    OrePoly::new(c)
}

fn d(c: &ParamCoeff, e: u64) -> ParamCoeff {
    c.pow(e)
}

/// `q(t)` with integer coefficients as an ordinary rational function.
pub fn qt(v: &[i64]) -> RatFunc<Rat> {
    RatFunc::from_poly(PolyQ::from_ints(v))
}

fn oq(c: Vec<RatFunc<Rat>>) -> OpQ {
    OrePoly::new(c)
}

// ---- the lattice form-factor families ----

/// `L_1 = Dt` (annihilates the even ladder base `f^(0) = 1`).
pub fn l1() -> ParamOp {
    ore(vec![ParamCoeff::zero(), ParamCoeff::one()])
}

/// Second-order operator for `f^(1)_{N,N}`.
pub fn l2_n() -> ParamOp {
    let t = tv();
    let tm1 = t.sub(&qc(1, 1));
    let c1 = pc(&[(-1, 1), (2, 1)]).div(&tm1.mul(&t)).unwrap();
    let c0 = qc(-1, 4)
        .div(&t)
        .unwrap()
        .add(&qc(1, 4).div(&tm1).unwrap())
        .sub(&nuv().div(&d(&t, 2).mul(&qc(4, 1))).unwrap());
    ore(vec![c0, c1, ParamCoeff::one()])
}

/// Third-order operator for `f^(2)_{N,N}` (with `L_1`).
pub fn l3_n() -> ParamOp {
    let t = tv();
    let tm1 = t.sub(&qc(1, 1));
    let c2 = pc(&[(-1, 1), (2, 1)])
        .mul(&qc(4, 1))
        .div(&tm1.mul(&t))
        .unwrap();
    let c1 = pc(&[(2, 1), (-15, 1), (14, 1)])
        .div(&d(&tm1, 2).mul(&d(&t, 2)))
        .unwrap()
        .sub(&nuv().div(&d(&t, 2)).unwrap());
    let c0 = pc(&[(5, 1), (-15, 1), (8, 1)])
        .div(&d(&tm1, 3).mul(&d(&t, 2)).mul(&qc(2, 1)))
        .unwrap()
        .sub(&nuv().div(&d(&t, 3)).unwrap());
    ore(vec![c0, c1, c2, ParamCoeff::one()])
}

/// Fourth-order operator for `f^(3)_{N,N}` (with `L_2`).
pub fn l4_n() -> ParamOp {
    let t = tv();
    let tm1 = t.sub(&qc(1, 1));
    // L_{4,0}
    let a3 = pc(&[(-1, 1), (2, 1)])
        .mul(&qc(10, 1))
        .div(&tm1.mul(&t))
        .unwrap();
    let a2 = pc(&[(46, 1), (-241, 1), (241, 1)])
        .div(&d(&tm1, 2).mul(&d(&t, 2)).mul(&qc(2, 1)))
        .unwrap();
    let a1 = pc(&[(-1, 1), (2, 1)])
        .mul(&pc(&[(9, 1), (-122, 1), (122, 1)]))
        .div(&d(&tm1, 3).mul(&d(&t, 3)))
        .unwrap();
    let a0 = pc(&[(-1, 1), (5, 1)])
        .mul(&pc(&[(-4, 1), (5, 1)]))
        .mul(&qc(81, 16))
        .div(&d(&t, 3).mul(&d(&tm1, 3)))
        .unwrap();
    // L_{4,2}
    let b2 = qc(5, 2).div(&d(&t, 2)).unwrap();
    let b1 = pc(&[(23, 1), (-32, 1)])
        .div(&tm1.mul(&d(&t, 3)).mul(&qc(2, 1)))
        .unwrap()
        .neg();
    let b0 = pc(&[(8, 1), (-17, 1)])
        .mul(&qc(9, 8))
        .div(&tm1.mul(&d(&t, 4)))
        .unwrap()
        .neg();
    let nu = nuv();
    let nu2t4 = d(&nu, 2).mul(&qc(9, 16)).div(&d(&t, 4)).unwrap();
    ore(vec![
        a0.sub(&nu.mul(&b0)).add(&nu2t4),
        a1.sub(&nu.mul(&b1)),
        a2.sub(&nu.mul(&b2)),
        a3,
        ParamCoeff::one(),
    ])
}

/// The symmetric square of `L_2(N)` as displayed (for diffing against the
/// computed one).
pub fn sym2_l2_printed() -> ParamOp {
    let t = tv();
    let tm1 = t.sub(&qc(1, 1));
    let nu = nuv();
    let c2 = pc(&[(-1, 1), (2, 1)])
        .mul(&qc(3, 1))
        .div(&tm1.mul(&t))
        .unwrap();
    let c1 = pc(&[(1, 1), (-7, 1), (7, 1)])
        .div(&d(&tm1, 2).mul(&d(&t, 2)))
        .unwrap()
        .sub(&nu.div(&t).unwrap());
    let c0 = pc(&[(1, 1), (-2, 1)])
        .mul(&qc(1, 2))
        .div(&d(&tm1, 2).mul(&d(&t, 2)))
        .unwrap()
        .neg()
        .sub(&nu.div(&tm1.mul(&d(&t, 2))).unwrap());
    ore(vec![c0, c1, c2, ParamCoeff::one()])
}

/// Intertwiner `U(N)`: `L_3(N) U(N) = V(N) Sym^2(L_2(N))`.
pub fn u_n() -> ParamOp {
    let t = tv();
    let tm1 = t.sub(&qc(1, 1));
    let nu = nuv();
    ore(vec![
        qc(1, 1).add(&pc(&[(1, 1), (-1, 1)]).mul(&nu).div(&t).unwrap()),
        pc(&[(-1, 1), (3, 1)]),
        tm1.mul(&t),
    ])
}

/// Intertwiner `V(N)`.
pub fn v_n() -> ParamOp {
    let t = tv();
    let tm1 = t.sub(&qc(1, 1));
    let nu = nuv();
    ore(vec![
        pc(&[(-1, 1), (5, 1)])
            .mul(&pc(&[(-4, 1), (5, 1)]))
            .div(&tm1.mul(&t))
            .unwrap()
            .sub(&tm1.mul(&nu).div(&t).unwrap()),
        pc(&[(-5, 1), (11, 1)]),
        tm1.mul(&t),
    ])
}

/// Intertwiner `A(N)`: `L_4(N) A(N) = B(N) Sym^3(L_2(N))`.
pub fn a_n() -> ParamOp {
    let t = tv();
    let tm1 = t.sub(&qc(1, 1));
    let nu = nuv();
    ore(vec![
        pc(&[(-1, 1), (2, 1)])
            .mul(&qc(9, 8))
            .div(&tm1.mul(&t))
            .unwrap()
            .sub(
                &pc(&[(-1, 1), (2, 1)])
                    .mul(&qc(9, 8))
                    .mul(&nu)
                    .div(&d(&t, 2))
                    .unwrap(),
            ),
        pc(&[(6, 1), (-41, 1), (41, 1)])
            .div(&tm1.mul(&t).mul(&qc(4, 1)))
            .unwrap()
            .sub(&tm1.mul(&qc(9, 4)).mul(&nu).div(&t).unwrap()),
        pc(&[(-1, 1), (2, 1)]).mul(&qc(7, 2)),
        tm1.mul(&t),
    ])
}

/// Intertwiner `B(N)`.
pub fn b_n() -> ParamOp {
    let t = tv();
    let tm1 = t.sub(&qc(1, 1));
    let nu = nuv();
    ore(vec![
        pc(&[(-1, 1), (2, 1)])
            .mul(&pc(&[(16, 1), (-125, 1), (125, 1)]))
            .mul(&qc(9, 8))
            .div(&d(&tm1, 2).mul(&d(&t, 2)))
            .unwrap()
            .sub(
                &pc(&[(-9, 1), (10, 1)])
                    .mul(&qc(9, 8))
                    .mul(&nu)
                    .div(&d(&t, 2))
                    .unwrap(),
            ),
        pc(&[(6, 1), (-29, 1), (29, 1)])
            .mul(&qc(21, 4))
            .div(&tm1.mul(&t))
            .unwrap()
            .sub(&tm1.mul(&qc(9, 4)).mul(&nu).div(&t).unwrap()),
        pc(&[(-1, 1), (2, 1)]).mul(&qc(23, 2)),
        tm1.mul(&t),
    ])
}

/// `Q(N)` mapping `Sym^3(L_2(N))` solutions onto `M_4(N)` solutions, printed
/// for N = 0, 1, 2.
pub fn q_map(n: usize) -> OpQ {
    match n {
        0 => oq(vec![
            qt(&[0, 1]).sub(&RatFunc::constant(rat(1, 2))),
            qt(&[0, -1, 1]),
        ]),
        1 => oq(vec![
            RatFunc::from_poly(PolyQ::from_ints(&[1, -2, 2]).scale(&rat(3, 4)))
                .div(&qt(&[0, 1]))
                .unwrap(),
            RatFunc::from_poly(Poly::new(vec![
                rat(-9, 2),
                rat(41, 2),
                rint(-28),
                rint(12),
            ])),
            qt(&[0, 1])
                .mul(&qt(&[-1, 1]))
                .mul(&qt(&[3, -7, 4]))
                .mul(&RatFunc::constant(rint(3))),
            qt(&[-1, 1]).pow(3).mul(&qt(&[0, 0, 2])),
        ]),
        2 => oq(vec![
            RatFunc::from_poly(PolyQ::from_ints(&[24, -314, 497, -260, 14, 12]))
                .div(&qt(&[0, 0, -16]))
                .unwrap(),
            RatFunc::from_poly(PolyQ::from_ints(&[252, -738, 577, -97, -12, 18]))
                .div(&qt(&[0, -24]))
                .unwrap(),
            qt(&[-1, 1])
                .mul(&qt(&[15, -1, -35, 15, 6]))
                .mul(&RatFunc::constant(rat(1, 2))),
            qt(&[-1, 1])
                .pow(3)
                .mul(&qt(&[3, 8, 3]))
                .mul(&qt(&[0, 1]))
                .mul(&RatFunc::constant(rat(1, 3))),
        ]),
        _ => panic!("Q(N) printed only for N = 0, 1, 2"),
    }
}

/// The hypergeometric deformation base `curly L = (1-t)t D^2 + (1-2t) D - 1/4`.
pub fn curly_l() -> OpQ {
    oq(vec![
        RatFunc::constant(rat(-1, 4)),
        qt(&[1, -2]),
        qt(&[0, 1, -1]),
    ])
}

/// `L_E = 4t D^2 + 4 D - 1/(t-1)`, the complete elliptic integral E operator.
pub fn l_e() -> OpQ {
    oq(vec![
        RatFunc::constant(rint(-1)).div(&qt(&[-1, 1])).unwrap(),
        RatFunc::constant(rint(4)),
        qt(&[0, 4]),
    ])
}

// ---- scaled operators (variable x) ----

/// Modified Bessel operator `B = D^2 + D/x - 1/4`.
pub fn bessel_b() -> OpQ {
    oq(vec![
        RatFunc::constant(rat(-1, 4)),
        RatFunc::constant(rint(1)).div(&qt(&[0, 1])).unwrap(),
        RatFunc::constant(rint(1)),
    ])
}

pub fn l1_scal() -> OpQ {
    oq(vec![RatFunc::zero(), RatFunc::constant(rint(1))])
}

/// `L_2^scal = 4x D^2 + 4 D - x = 4x B`.
pub fn l2_scal() -> OpQ {
    oq(vec![qt(&[0, -1]), RatFunc::constant(rint(4)), qt(&[0, 4])])
}

/// `L_3^scal = 2x^3 D^3 + 8x^2 D^2 - 2(x-1)(x+1)x D - 2`.
pub fn l3_scal() -> OpQ {
    oq(vec![
        RatFunc::constant(rint(-2)),
        qt(&[0, 2, 0, -2]),
        qt(&[0, 0, 8]),
        qt(&[0, 0, 0, 2]),
    ])
}

/// `L_4^scal = 16x^4 D^4 + 96x^3 D^3 + 40(2-x^2)x^2 D^2 + 8(x^2-2)x D
///  + 9x^4 - 8x^2 + 16`.
pub fn l4_scal() -> OpQ {
    oq(vec![
        RatFunc::from_poly(PolyQ::from_ints(&[16, 0, -8, 0, 9])),
        qt(&[0, -16, 0, 8]),
        qt(&[0, 0, 80, 0, -40]),
        qt(&[0, 0, 0, 96]),
        qt(&[0, 0, 0, 0, 16]),
    ])
}

/// `L_5^scal` as displayed.
pub fn l5_scal() -> OpQ {
    oq(vec![
        RatFunc::from_poly(PolyQ::from_ints(&[-10, 0, 8, 0, -24])),
        RatFunc::from_poly(PolyQ::from_ints(&[0, 10, 0, -24, 0, 8])),
        RatFunc::from_poly(PolyQ::from_ints(&[0, 0, -32, 0, 26])),
        RatFunc::from_poly(PolyQ::from_ints(&[0, 0, 0, -14, 0, -10])),
        qt(&[0, 0, 0, 0, 10]),
        qt(&[0, 0, 0, 0, 0, 2]),
    ])
}

/// The displayed witness pair for `L_3^scal (x D^2 + 2D - x) =
/// (2x^4 D^2 + 12x^3 D - 2x^4 + 8x^2) Sym^2(B)`.
pub fn scaled_sym2_witness() -> (OpQ, OpQ) {
    let u = oq(vec![qt(&[0, -1]), RatFunc::constant(rint(2)), qt(&[0, 1])]);
    let v = oq(vec![
        RatFunc::from_poly(PolyQ::from_ints(&[0, 0, 8, 0, -2])),
        qt(&[0, 0, 0, 12]),
        qt(&[0, 0, 0, 0, 2]),
    ]);
    (u, v)
}

/// The Apery operator for the zeta(3) recurrences.
pub fn apery() -> OpQ {
    oq(vec![
        qt(&[-5, 1]),
        qt(&[1, -112, 7]),
        qt(&[0, 3, -153, 6]),
        qt(&[0, 0, 1, -34, 1]),
    ])
}

/// The Appendix F family `L_n` annihilating the triple integrals `I_n(z)`.
pub fn beukers_ln(n: i64) -> OpQ {
    let nn1 = n * (n + 1);
    let x = qt(&[0, 1]);
    let xm1 = qt(&[-1, 1]);
    let c3 = qt(&[-2, 6]).div(&xm1.mul(&x)).unwrap();
    let c2 = RatFunc::from_poly(Poly::new(vec![
        rint(-2 * nn1),
        rint(n * n + n - 5),
        rint(7),
    ]))
    .div(&xm1.pow(2).mul(&x.pow(2)))
    .unwrap();
    let c1 = RatFunc::from_poly(Poly::new(vec![rint(2 * nn1), rint(0), rint(1)]))
        .div(&xm1.pow(2).mul(&x.pow(3)))
        .unwrap();
    let c0 = RatFunc::from_poly(Poly::new(vec![
        rint(nn1 * (n - 1) * (n + 2)),
        rint(nn1 * (n * n + n + 1)),
    ]))
    .div(&xm1.pow(2).mul(&x.pow(4)))
    .unwrap();
    oq(vec![c0, c1, c2, c3, RatFunc::constant(rint(1))])
}

// ---- singularity catalogs ----

fn wp(v: &[i64]) -> PolyQ {
    PolyQ::from_ints(v)
}

/// Head-polynomial singularity factors of the `Phi_H^(n)` ODEs, n = 3..6
/// (exact lists; the float-scan lists for 7 and 8 live in
/// [`phi_h_float_factors`]).
pub fn phi_h_singularities(n: usize) -> Vec<PolyQ> {
    match n {
        3 => vec![
            wp(&[0, 1]),
            wp(&[1, -4]),
            wp(&[1, 4]),
            wp(&[1, -1]),
            wp(&[1, 2]),
            wp(&[1, 3, 4]),
        ],
        4 => vec![
            wp(&[0, 1]),
            wp(&[1, -4]),
            wp(&[1, 4]),
            wp(&[1, -2]),
            wp(&[1, 2]),
        ],
        5 => vec![
            wp(&[0, 1]),
            wp(&[1, -4]),
            wp(&[1, 4]),
            wp(&[1, -1]),
            wp(&[1, 1]),
            wp(&[1, 2]),
            wp(&[1, 3, 4]),
            wp(&[1, -3, 1]),
            wp(&[1, 2, -4]),
            wp(&[1, 4, 8]),
            wp(&[1, -7, 5, -4]),
            wp(&[1, -1, -3, 4]),
            wp(&[1, 8, 20, 15, 4]),
        ],
        6 => vec![
            wp(&[0, 1]),
            wp(&[1, -4]),
            wp(&[1, 4]),
            wp(&[1, -2]),
            wp(&[1, 2]),
            wp(&[1, -1]),
            wp(&[1, 1]),
            wp(&[1, -5]),
            wp(&[1, 5]),
            wp(&[1, -3]),
            wp(&[1, 3]),
            wp(&[1, 3, 4]),
            wp(&[1, -3, 4]),
            wp(&[1, 0, -10, 0, 29]),
        ],
        _ => panic!("exact singularity list printed for n = 3..6 only"),
    }
}

/// The additional (beyond the diagonal-model) singular factors for n = 5, 6.
pub fn phi_h_extra_singularities(n: usize) -> Vec<PolyQ> {
    match n {
        5 => vec![wp(&[1, 3, 4]), wp(&[1, 4, 8]), wp(&[1, -7, 5, -4])],
        6 => vec![wp(&[1, 3, 4]), wp(&[1, -3, 4]), wp(&[1, -5]), wp(&[1, 5])],
        _ => panic!("extra lists printed for n = 5, 6 only"),
    }
}

/// Float-recognized singular factors for n = 7, 8.
pub fn phi_h_float_factors(n: usize) -> Vec<PolyQ> {
    match n {
        7 => vec![
            wp(&[1, -4]),
            wp(&[1, -5, 6, -1]),
            wp(&[1, 2, -8, -8]),
            wp(&[1, 4]),
            wp(&[1, 1]),
            wp(&[0, 1]),
            wp(&[1, 2, -1, -1]),
            wp(&[1, -3, 1]),
            wp(&[1, 2, -4]),
            wp(&[1, -7, 5, -4]),
            wp(&[1, -3, -10, 35, 5, -62, 17, 32, -16]),
            wp(&[1, 8, 15, -21, -60, 16, 96, 64]),
            wp(&[1, -4, -16, -48, 32, -128]),
            wp(&[1, -10, 35, -51, 21, -4]),
            wp(&[1, 7, 26, 7, 4]),
            wp(&[1, 8, 20, 15, 4]),
            wp(&[1, 12, 54, 112, 105, 35, 4]),
        ],
        8 => vec![
            wp(&[1, -2]),
            wp(&[1, 2]),
            wp(&[1, 0, -2]),
            wp(&[1, -4]),
            wp(&[1, -4, 2]),
            wp(&[1, 4]),
            wp(&[1, 3]),
            wp(&[0, 1]),
            wp(&[1, 4, 2]),
            wp(&[1, 0, -8]),
            wp(&[1, -3]),
            wp(&[1, -1]),
            wp(&[1, 1]),
            wp(&[1, -5]),
            wp(&[1, 0, 2]),
            wp(&[1, 0, -26, 0, 242, 0, -960, 0, 1685, 0, -1138]),
            wp(&[1, 0, -10, 0, 32]),
            wp(&[1, 0, -30, 0, 56, 0, -1312]),
            wp(&[1, -6, 10]),
            wp(&[1, -6, 8, -4]),
            wp(&[1, 5]),
            wp(&[1, 6, 10]),
            wp(&[1, 6, 8, 4]),
        ],
        _ => panic!("float lists recorded for n = 7, 8 only"),
    }
}

/// Polynomials whose roots carry complex multiplication, with the integer
/// value of the modular j-function.
pub fn cm_tagged() -> Vec<(PolyQ, i64)> {
    vec![
        (wp(&[1, 3, 4]), -3375),
        (wp(&[1, -3, 4]), -3375),
        (wp(&[1, 0, -8]), 1728),
        (wp(&[1, 0, -32]), 287496),
    ]
}

/// Known-singularity prefactor `z_0` of the mod-prime ansatz for
/// `Phi_H^(5)` (variable `w`).
pub fn z0_phi5() -> PolyQ {
    [
        wp(&[1, 1]),
        wp(&[1, -1]),
        wp(&[1, 2]),
        wp(&[1, -3, 1]),
        wp(&[1, 2, -4]),
        wp(&[1, 3, 4]),
        wp(&[1, 4, 8]),
        wp(&[1, -7, 5, -4]),
        wp(&[1, -1, -3, 4]),
        wp(&[1, 8, 20, 15, 4]),
    ]
    .iter()
    .fold(PolyQ::one(), |acc, p| acc.mul(p))
}

/// `z_0` of the mod-prime ansatz for `Phi_H^(6)` (variable `x = w^2`).
pub fn z0_phi6() -> PolyQ {
    [
        wp(&[1, -25]),
        wp(&[1, -9]),
        wp(&[1, -4]),
        wp(&[1, -1]),
        wp(&[1, -1, 16]),
        wp(&[1, -10, 29]),
    ]
    .iter()
    .fold(PolyQ::one(), |acc, p| acc.mul(p))
}

/// The printed apparent-singularities polynomial `P_5(w)` in the head of the
/// minimal order-five `Phi_H^(3)` ODE.
pub fn p5_apparent() -> PolyQ {
    wp(&[
        -5,
        21,
        428,
        5364,
        -82416,
        -299504,
        714944,
        3127872,
        -8220672,
        -25858048,
        -7077888,
        31424512,
        -42467328,
        -31457280,
        -4194304,
        4194304,
    ])
}

/// The printed apparent polynomial `P_6(x)`, `x = 16 w^2`, for `Phi_H^(4)`.
pub fn p6_apparent() -> PolyQ {
    wp(&[128, 2233, -2847, 3143, -3601, 144, -64])
}

/// Full printed head polynomial of the minimal `Phi_H^(3)` operator:
/// `w^3 (1-4w)^4 (1+4w)^2 (1-w)(1+2w)(1+3w+4w^2) P_5(w)`.
pub fn phi3_head() -> PolyQ {
    wp(&[0, 1])
        .pow(3)
        .mul(&wp(&[1, -4]).pow(4))
        .mul(&wp(&[1, 4]).pow(2))
        .mul(&wp(&[1, -1]))
        .mul(&wp(&[1, 2]))
        .mul(&wp(&[1, 3, 4]))
        .mul(&p5_apparent())
}

/// Full printed head of the minimal `Phi_H^(4)` operator in `x = 16w^2`:
/// `64 (x-4)(1-x)^4 x^4 P_6(x)`.
pub fn phi4_head() -> PolyQ {
    wp(&[-4, 1])
        .mul(&wp(&[1, -1]).pow(4))
        .mul(&wp(&[0, 1]).pow(4))
        .mul(&p6_apparent())
        .scale(&rint(64))
}

/// Default reproduction primes: the two the appendix reports, plus larger
/// safety primes.
pub const DEFAULT_PRIMES: [u64; 4] = [27449, 32749, 2147483647, 4294967291];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diff_op::structure::specialize_nu;

    #[test]
    fn parametric_operators_specialize() {
        for n in 0..3 {
            let l2 = specialize_nu(&l2_n(), n);
            assert_eq!(l2.order(), Some(2));
            let l3 = specialize_nu(&l3_n(), n);
            assert_eq!(l3.order(), Some(3));
            let l4 = specialize_nu(&l4_n(), n);
            assert_eq!(l4.order(), Some(4));
        }
    }

    #[test]
    fn l2_scal_is_4x_bessel() {
        let b = bessel_b().clear_denominators().normalize();
        let l2s = l2_scal().clear_denominators().normalize();
        assert_eq!(b.c, l2s.c);
    }

    #[test]
    fn catalogs_are_consistent() {
        assert_eq!(phi_h_singularities(5).len(), 13);
        assert_eq!(z0_phi5().deg_or_zero(), 21);
        assert_eq!(z0_phi6().deg_or_zero(), 8);
        assert_eq!(phi3_head().deg_or_zero(), 3 + 4 + 2 + 1 + 1 + 2 + 15);
        assert_eq!(phi4_head().deg_or_zero(), 1 + 4 + 4 + 6);
    }
}
