use alloc::vec::Vec;

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc = 1u128 % m128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Distinct prime factors, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// Smallest primitive root modulo the odd prime `p`.
pub fn primitive_root(p: u64) -> Result<u64> {
    check_odd_prime(p)?;
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .ok_or(Error::NotOddPrime(p))
}

/// Z_p with a fixed primitive root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
    pub g: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        Ok(PrimeField { p, g: primitive_root(p)? })
    }

    /// g^e mod p.
    pub fn exp(&self, e: u64) -> u64 {
        pow_mod(self.g, e, self.p)
    }

    /// Discrete log base g by table walk; intended for desk-scale p.
    pub fn log(&self, x: u64) -> Result<u64> {
        let x = x % self.p;
        if x == 0 {
            return Err(Error::LogOfZero);
        }
        let mut y = 1;
        for e in 0..self.p - 1 {
            if y == x {
                return Ok(e);
            }
            y = y * self.g % self.p;
        }
        unreachable!("g is a primitive root")
    }

    pub fn is_residue(&self, x: u64) -> bool {
        let x = x % self.p;
        x != 0 && pow_mod(x, (self.p - 1) / 2, self.p) == 1
    }
}
