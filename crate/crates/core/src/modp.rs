//! Word-sized prime field arithmetic, CRT and rational reconstruction.
//!
//! Used to find solutions of large linear systems quickly; every solution
//! obtained this way is verified exactly over the rationals by the caller.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::Rational;

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue (`p` prime).
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

pub fn int(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

pub fn rational(c: &Rational, p: u64) -> Option<u64> {
    let d = int(c.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mul(int(c.numer(), p), inv(d, p), p))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // these bases are deterministic for all 64-bit integers
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The `count` largest primes below `2^62`, in decreasing order.
pub fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = (1u64 << 62) - 1;
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

/// Combine `residue mod p` into the running `(value, modulus)` pair.
pub fn crt_push(value: &BigInt, modulus: &BigInt, residue: u64, p: u64) -> BigInt {
    // value + modulus * t ≡ residue (mod p)
    let current = int(value, p);
    let m_mod = int(modulus, p);
    let t = mul(sub(residue, current, p), inv(m_mod, p), p);
    value + modulus * BigInt::from(t)
}

/// Recover `n/d` from `a mod m` with `|n|, d <= sqrt(m/2)`.
pub fn reconstruct(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let a = a.mod_floor(m);
    if a.is_zero() {
        return Some(Rational::zero());
    }
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let (num, den) = if t1.sign() == Sign::Minus { (-r1, -t1) } else { (r1, t1) };
    if !num.gcd(&den).is_one() {
        return None;
    }
    Some(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime_and_large() {
        let ps = primes(3);
        assert_eq!(ps.len(), 3);
        assert!(ps.iter().all(|&p| p > (1u64 << 61)));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007u64 * 3));
    }

    #[test]
    fn reconstruction_roundtrip() {
        let ps = primes(2);
        let target = Rational::new(BigInt::from(-125), BigInt::from(576));
        let mut value = BigInt::zero();
        let mut modulus = BigInt::one();
        for &p in &ps {
            let r = rational(&target, p).unwrap();
            value = crt_push(&value, &modulus, r, p);
            modulus *= BigInt::from(p);
        }
        assert_eq!(reconstruct(&value, &modulus), Some(target));
    }

    #[test]
    fn modular_basics() {
        let p = 101;
        assert_eq!(mul(inv(7, p), 7, p), 1);
        assert_eq!(sub(3, 5, p), 99);
        assert_eq!(rational(&Rational::new(1.into(), 2.into()), p), Some(51));
        assert_eq!(rational(&Rational::new(1.into(), 101.into()), p), None);
    }
}
