//! Prime field with runtime modulus.
//!
//! Each element carries its modulus, so `Fp` satisfies the context-free
//! [`Field`](super::Field) trait. Elements with modulus 0 are *unbound*
//! integer constants (value stored as a signed i64 in two's complement);
//! they bind to the other operand's modulus on contact. Inverting an
//! unbound element other than ±1 is a bug and panics.

use super::{ArithError, Field};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    /// Residue in `[0, p)` when bound; a signed constant when `p == 0`.
    pub v: u64,
    /// Modulus, or 0 for an unbound integer constant.
    pub p: u64,
}

impl std::fmt::Debug for Fp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.p == 0 {
            write!(f, "{}~", self.v as i64)
        } else {
            write!(f, "{} (mod {})", self.v, self.p)
        }
    }
}

#[inline]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn reduce_i64(n: i64, p: u64) -> u64 {
    let r = (n % p as i64 + p as i64) as u64;
    if r >= p {
        r - p
    } else {
        r
    }
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Self {
        debug_assert!(p > 1);
        Fp { v: v % p, p }
    }

    pub fn from_int(n: i64, p: u64) -> Self {
        Fp {
            v: reduce_i64(n, p),
            p,
        }
    }

    #[inline]
    pub fn is_bound(&self) -> bool {
        self.p != 0
    }

    /// Bind an unbound constant to modulus `p`; no-op when already bound.
    #[inline]
    pub fn bind(&self, p: u64) -> Self {
        if self.p != 0 {
            debug_assert_eq!(self.p, p, "mixed moduli");
            *self
        } else {
            Fp::from_int(self.v as i64, p)
        }
    }

    fn common(a: &Fp, b: &Fp) -> (Fp, Fp) {
        match (a.p, b.p) {
            (0, 0) => (*a, *b),
            (0, p) => (a.bind(p), *b),
            (p, 0) => (*a, b.bind(p)),
            (p, q) => {
                assert_eq!(p, q, "mixed moduli {p} vs {q}");
                (*a, *b)
            }
        }
    }

    /// Modular inverse via extended Euclid; errors when `gcd != 1`.
    pub fn try_inv(&self) -> Result<Fp, ArithError> {
        if self.p == 0 {
            return match self.v as i64 {
                1 => Ok(*self),
                -1 => Ok(*self),
                0 => Err(ArithError::DivisionByZero),
                _ => panic!("inverse of unbound Fp constant {}", self.v as i64),
            };
        }
        if self.v == 0 {
            return Err(ArithError::DivisionByZero);
        }
        let p = self.p;
        let (mut r0, mut r1) = (p as i128, self.v as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        if r0 != 1 {
            return Err(ArithError::ZeroDivisor(format!(
                "gcd({}, {}) = {}",
                self.v, p, r0
            )));
        }
        let s = ((s0 % p as i128) + p as i128) as u64;
        Ok(Fp {
            v: if s >= p { s - p } else { s },
            p,
        })
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp { v: 0, p: 0 }
    }
    fn one() -> Self {
        Fp { v: 1, p: 0 }
    }
    fn from_i64(n: i64) -> Self {
        Fp { v: n as u64, p: 0 }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        let (a, b) = Fp::common(self, rhs);
        if a.p == 0 {
            return Fp {
                v: ((a.v as i64).checked_add(b.v as i64)).expect("unbound overflow") as u64,
                p: 0,
            };
        }
        let s = a.v + b.v;
        Fp {
            v: if s >= a.p { s - a.p } else { s },
            p: a.p,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        let (a, b) = Fp::common(self, rhs);
        if a.p == 0 {
            return Fp {
                v: ((a.v as i64).checked_sub(b.v as i64)).expect("unbound overflow") as u64,
                p: 0,
            };
        }
        let s = if a.v >= b.v {
            a.v - b.v
        } else {
            a.v + a.p - b.v
        };
        Fp { v: s, p: a.p }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = Fp::common(self, rhs);
        if a.p == 0 {
            return Fp {
                v: ((a.v as i64).checked_mul(b.v as i64)).expect("unbound overflow") as u64,
                p: 0,
            };
        }
        Fp {
            v: mulmod(a.v, b.v, a.p),
            p: a.p,
        }
    }
    fn neg(&self) -> Self {
        if self.p == 0 {
            Fp {
                v: (self.v as i64).wrapping_neg() as u64,
                p: 0,
            }
        } else if self.v == 0 {
            *self
        } else {
            Fp {
                v: self.p - self.v,
                p: self.p,
            }
        }
    }
    fn inv(&self) -> Result<Self, ArithError> {
        self.try_inv()
    }
    fn mul_int(&self, n: i64) -> Self {
        if self.p == 0 {
            return Fp {
                v: ((self.v as i64).checked_mul(n)).expect("unbound overflow") as u64,
                p: 0,
            };
        }
        self.mul(&Fp::from_int(n, self.p))
    }
    fn div_int(&self, n: i64) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::DivisionByZero);
        }
        if self.p == 0 {
            let v = self.v as i64;
            if v % n == 0 {
                return Ok(Fp {
                    v: (v / n) as u64,
                    p: 0,
                });
            }
            panic!("inexact unbound division {v}/{n}");
        }
        Ok(self.mul(&Fp::from_int(n, self.p).try_inv()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops_mod_7() {
        let a = Fp::new(3, 7);
        let b = Fp::new(5, 7);
        assert_eq!(a.add(&b).v, 1);
        assert_eq!(a.mul(&b).v, 1);
        assert_eq!(a.try_inv().unwrap().v, 5);
        assert_eq!(a.sub(&b).v, 5);
    }

    #[test]
    fn unbound_constants_bind() {
        let one = Fp::one();
        let a = Fp::new(6, 7);
        assert_eq!(one.add(&a).v, 0);
        let minus2 = Fp::from_i64(-2);
        assert_eq!(minus2.mul(&a).v, (-12i64).rem_euclid(7) as u64);
    }

    #[test]
    fn large_modulus_mul() {
        let p = (1u64 << 61) - 1;
        let a = Fp::new(p - 3, p);
        let b = Fp::new(p - 5, p);
        assert_eq!(a.mul(&b).v, 15);
    }
}
