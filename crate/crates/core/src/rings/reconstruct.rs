//! Chinese remaindering and balanced rational reconstruction, the lifting
//! half of the mod-prime fit strategy.

use crate::num::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReconstructError {
    #[error("primes must be pairwise distinct")]
    RepeatedPrime,
    #[error("no admissible rational below the Wang bound; add more primes")]
    BoundExceeded,
}

/// Combine residues `(value mod prime)` into a residue modulo the product.
pub fn crt(residues: &[(u64, u64)]) -> Result<(BigInt, BigInt), ReconstructError> {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for &(v, p) in residues {
        let pb = BigInt::from(p);
        if (&m % &pb).is_zero() && m > BigInt::one() {
            return Err(ReconstructError::RepeatedPrime);
        }
        // solve x' = x (mod m), x' = v (mod p)
        let inv = mod_inverse(&m, &pb).ok_or(ReconstructError::RepeatedPrime)?;
        let delta = ((BigInt::from(v) - &x) % &pb + &pb) % &pb;
        let t = (delta * inv) % &pb;
        x += &m * t;
        m *= pb;
        x = ((x % &m) + &m) % &m;
    }
    Ok((x, m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(((e.x % m) + m) % m)
    } else {
        None
    }
}

/// Balanced rational reconstruction: the unique `n/d` with
/// `|n|, d <= sqrt(M/2)` congruent to `x` mod `M`, when it exists.
pub fn rational_reconstruct_big(x: &BigInt, m: &BigInt) -> Result<Rat, ReconstructError> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), ((x % m) + m) % m);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        (r0, r1) = (r1.clone(), &r0 - &q * &r1);
        (t0, t1) = (t1.clone(), &t0 - &q * &t1);
    }
    if t1.is_zero() || t1.abs() > bound {
        return Err(ReconstructError::BoundExceeded);
    }
    // verify: r1/t1 reduces x mod m
    let num = if t1.is_negative() { -&r1 } else { r1.clone() };
    let den = t1.abs();
    if !den.gcd(&num).is_one() && !(&num % &den.gcd(&num)).is_zero() {
        return Err(ReconstructError::BoundExceeded);
    }
    let g = num.gcd(&den);
    let (num, den) = (&num / &g, &den / &g);
    // final congruence check
    let check = (&num - x * &den) % m;
    if !check.is_zero() {
        return Err(ReconstructError::BoundExceeded);
    }
    Ok(Rat::new(num, den))
}

/// CRT-combine residues of one rational across several primes and
/// reconstruct it.
pub fn rational_reconstruct(residues: &[(u64, u64)]) -> Result<Rat, ReconstructError> {
    let (x, m) = crt(residues)?;
    rational_reconstruct_big(&x, &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rint};

    #[test]
    fn reconstruct_one_third() {
        // 3*5 = 15 = 1 (mod 7), 3*4 = 12 = 1 (mod 11): residues of 1/3
        let r = rational_reconstruct(&[(5, 7), (4, 11)]).unwrap();
        assert_eq!(r, rat(1, 3));
    }

    #[test]
    fn reconstruct_small_integer() {
        let r = rational_reconstruct(&[(6, 7), (6, 11)]).unwrap();
        assert_eq!(r, rint(6));
    }

    #[test]
    fn bound_exceeded_is_an_error() {
        // bound = floor(sqrt(7/2)) = 1; 3 mod 7 has no |n|,d <= 1 form
        assert_eq!(
            rational_reconstruct(&[(3, 7)]),
            Err(ReconstructError::BoundExceeded)
        );
    }

    #[test]
    fn roundtrip_random_rationals() {
        let primes = [2147483647u64, 2147483629, 2147483587];
        let mut seed = 0x9E3779B97F4A7C15u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) as i64
        };
        for _ in 0..50 {
            let n = next() % 1_000_000;
            let mut d = next() % 1_000_000;
            if d == 0 {
                d = 1;
            }
            let d = d.abs();
            let x = rat(n, d);
            let mut residues = vec![];
            for &p in &primes {
                let num = ((n % p as i64) + p as i64) as u64 % p;
                let den = ((d % p as i64) + p as i64) as u64 % p;
                let deninv = crate::num::Fp::new(den, p).try_inv().unwrap().v;
                residues.push((crate::num::mulmod(num, deninv, p), p));
            }
            assert_eq!(rational_reconstruct(&residues).unwrap(), x);
        }
    }
}
