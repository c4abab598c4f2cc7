use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{default_primitive_poly, prime_factors};
use crate::poly2::Poly2;
use crate::sequence::BinarySequence;

/// m-sequence of the primitive `modulus` (degree k) from `seed = s_0 … s_{k-1}`.
///
/// With `modulus = x^k + Σ c_j x^j` the sequence obeys
/// `s_{i+k} = Σ_{j<k} c_j s_{i+j}`. Without a seed, `0…01` is used.
pub fn m_sequence(modulus: &Poly2, seed: Option<&[u8]>) -> Result<BinarySequence> {
    let k = match modulus.degree() {
        Some(k) if (2..=24).contains(&k) => k,
        found => {
            return Err(Error::DegreeMismatch { expected: 2, found });
        }
    };
    let mut state: Vec<u8> = match seed {
        Some(s) => {
            if s.len() != k {
                return Err(Error::LengthMismatch { expected: k, found: s.len() });
            }
            s.iter().map(|b| b & 1).collect()
        }
        None => {
            let mut s = alloc::vec![0u8; k];
            s[k - 1] = 1;
            s
        }
    };
    if state.iter().all(|&b| b == 0) {
        return Err(Error::ZeroSeed);
    }
    let taps: Vec<usize> = (0..k).filter(|&j| modulus.coeff(j)).collect();
    let period = (1usize << k) - 1;
    state.reserve(period + k);
    for i in 0..period {
        let next = taps.iter().fold(0u8, |acc, &j| acc ^ state[i + j]);
        state.push(next);
    }
    // the register state must first return to the seed after exactly 2^k - 1 steps
    let window_eq = |a: usize, b: usize| state[a..a + k] == state[b..b + k];
    let full = window_eq(0, period)
        && prime_factors(period as u64)
            .into_iter()
            .all(|q| !window_eq(0, period / q as usize));
    if !full {
        return Err(Error::NonPrimitiveModulus { degree: k as u32, order: 0 });
    }
    state.truncate(period);
    Ok(BinarySequence::from_bits_unchecked(state))
}

/// m-sequence of degree `k` on the built-in primitive polynomial, seed `0…01`.
pub fn m_sequence_default(k: u32) -> Result<BinarySequence> {
    m_sequence(&default_primitive_poly(k)?, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn poly(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    #[test]
    fn hand_computed() {
        let s = m_sequence(&poly("x^3+x+1"), Some(&[0, 0, 1])).unwrap();
        assert_eq!(s.to_string(), "0010111");
        let s = m_sequence(&poly("x^2+x+1"), Some(&[0, 1])).unwrap();
        assert_eq!(s.to_string(), "011");
        assert_eq!(m_sequence_default(4).unwrap().to_string(), "000100110101111");
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(m_sequence(&poly("x^3+x+1"), Some(&[0, 0, 0])), Err(Error::ZeroSeed));
        assert!(matches!(
            m_sequence(&poly("x^4+x^3+x^2+x+1"), None),
            Err(Error::NonPrimitiveModulus { .. })
        ));
        assert!(m_sequence(&poly("x^3+x+1"), Some(&[0, 1])).is_err());
    }

    #[test]
    fn every_default_degree_has_full_period() {
        for k in 2..=16 {
            let s = m_sequence_default(k).unwrap();
            assert_eq!(s.len(), (1 << k) - 1);
            assert_eq!(s.weight(), 1 << (k - 1));
        }
    }
}
