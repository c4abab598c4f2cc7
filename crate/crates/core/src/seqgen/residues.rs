use alloc::vec;

use crate::error::{Error, Result};
use crate::field::{is_prime, pow_mod, prime_factors};
use crate::sequence::BinarySequence;

fn check_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// Binary Legendre sequence: `s_0 = 0`, `s_i = 1` iff `i` is a nonzero
/// quadratic residue mod `p`.
pub fn legendre(p: u64) -> Result<BinarySequence> {
    check_odd_prime(p)?;
    let mut bits = vec![0u8; p as usize];
    for i in 1..p {
        bits[(i * i % p) as usize] = 1;
    }
    Ok(BinarySequence::from_bits_unchecked(bits))
}

fn hall_parameter(p: u64) -> Option<u64> {
    if p <= 27 || !(p - 27).is_multiple_of(4) {
        return None;
    }
    let a2 = (p - 27) / 4;
    let a = (1..).take_while(|a: &u64| a * a <= a2).last()?;
    (a * a == a2).then_some(a)
}

/// Smallest primitive root `g` mod `p` with `ind_g(3) ≡ 1 (mod 6)`.
pub fn hall_primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) || hall_parameter(p).is_none() {
        return Err(Error::HallNotDefined(p));
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .filter(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .find(|&g| {
            let mut x = 1;
            let mut e = 0;
            while x != 3 {
                x = x * g % p;
                e += 1;
            }
            e % 6 == 1
        })
        .ok_or(Error::HallNotDefined(p))
}

/// Hall sextic-residue sequence: `s_i = 1` iff `i ∈ C_0 ∪ C_1 ∪ C_3`, with
/// `C_j = {g^(6k+j)}` for the primitive root of [`hall_primitive_root`].
pub fn hall(p: u64) -> Result<BinarySequence> {
    let g = hall_primitive_root(p)?;
    let mut bits = vec![0u8; p as usize];
    let mut x = 1u64;
    for e in 0..p - 1 {
        if matches!(e % 6, 0 | 1 | 3) {
            bits[x as usize] = 1;
        }
        x = x * g % p;
    }
    Ok(BinarySequence::from_bits_unchecked(bits))
}
