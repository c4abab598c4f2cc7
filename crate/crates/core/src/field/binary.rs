use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly2::Poly2;

/// Largest supported extension degree; tables for k = 24 take ~128 MiB.
pub const MAX_BINARY_DEGREE: u32 = 24;

// One low-weight primitive polynomial per degree, as bit masks (bit i = x^i).
const PRIMITIVE: [u32; 23] = [
    0b111,                              // 2: x^2+x+1
    0b1011,                             // 3: x^3+x+1
    0b1_0011,                           // 4: x^4+x+1
    0b10_0101,                          // 5: x^5+x^2+1
    0b100_0011,                         // 6: x^6+x+1
    0b1000_0011,                        // 7: x^7+x+1
    0b1_0001_1101,                      // 8: x^8+x^4+x^3+x^2+1
    0b10_0001_0001,                     // 9: x^9+x^4+1
    0b100_0000_1001,                    // 10: x^10+x^3+1
    0b1000_0000_0101,                   // 11: x^11+x^2+1
    0b1_0000_0101_0011,                 // 12: x^12+x^6+x^4+x+1
    0b10_0000_0001_1011,                // 13: x^13+x^4+x^3+x+1
    0b100_0100_0100_0011,               // 14: x^14+x^10+x^6+x+1
    0b1000_0000_0000_0011,              // 15: x^15+x+1
    0b1_0001_0000_0000_1011,            // 16: x^16+x^12+x^3+x+1
    0b10_0000_0000_0000_1001,           // 17: x^17+x^3+1
    0b100_0000_0000_1000_0001,          // 18: x^18+x^7+1
    0b1000_0000_0000_0010_0111,         // 19: x^19+x^5+x^2+x+1
    0b1_0000_0000_0000_0000_1001,       // 20: x^20+x^3+1
    0b10_0000_0000_0000_0000_0101,      // 21: x^21+x^2+1
    0b100_0000_0000_0000_0000_0011,     // 22: x^22+x+1
    0b1000_0000_0000_0000_0010_0001,    // 23: x^23+x^5+1
    0b1_0000_0000_0000_0000_1000_0111,  // 24: x^24+x^7+x^2+x+1
];

/// Built-in primitive polynomial of degree `k` (2 ≤ k ≤ 24).
pub fn default_primitive_poly(k: u32) -> Result<Poly2> {
    if !(2..=MAX_BINARY_DEGREE).contains(&k) {
        return Err(Error::InvalidParameter {
            name: "degree",
            reason: alloc::format!("{k} outside 2..=24"),
        });
    }
    Ok(Poly2::from_mask(PRIMITIVE[(k - 2) as usize] as u64))
}

/// GF(2^k) in polynomial basis, with exp/log tables over a primitive element.
///
/// Elements are `u32` bit masks of their coefficients in the basis
/// `1, α, …, α^(k-1)` where α is a root of the modulus.
#[derive(Clone, Debug)]
pub struct BinaryField {
    k: u32,
    modulus: Poly2,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl BinaryField {
    /// Builds the tables and checks that the modulus is primitive.
    pub fn new(k: u32, modulus: Poly2) -> Result<Self> {
        if !(2..=MAX_BINARY_DEGREE).contains(&k) {
            return Err(Error::InvalidParameter {
                name: "degree",
                reason: alloc::format!("{k} outside 2..=24"),
            });
        }
        if modulus.degree() != Some(k as usize) {
            return Err(Error::DegreeMismatch { expected: k, found: modulus.degree() });
        }
        let mask = modulus.words()[0] as u32;
        let order = (1u32 << k) - 1;
        let top = 1u32 << k;
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![u32::MAX; 1 << k];
        let mut x = 1u32;
        for i in 0..order {
            if i > 0 && x == 1 {
                return Err(Error::NonPrimitiveModulus { degree: k, order: i as u64 });
            }
            exp.push(x);
            log[x as usize] = i;
            x <<= 1;
            if x & top != 0 {
                x ^= mask;
            }
        }
        if x != 1 {
            // α is not even a unit of order dividing 2^k-1: the modulus is reducible
            return Err(Error::NonPrimitiveModulus { degree: k, order: 0 });
        }
        Ok(BinaryField { k, modulus, exp, log })
    }

    /// Field built on the default primitive polynomial of degree `k`.
    pub fn with_default(k: u32) -> Result<Self> {
        BinaryField::new(k, default_primitive_poly(k)?)
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &Poly2 {
        &self.modulus
    }

    /// Multiplicative group order, 2^k − 1.
    pub fn order(&self) -> u32 {
        self.exp.len() as u32
    }

    /// α^i, with `i` reduced modulo the group order.
    pub fn exp(&self, i: u64) -> u32 {
        self.exp[(i % self.exp.len() as u64) as usize]
    }

    pub fn log(&self, x: u32) -> Result<u32> {
        if x == 0 {
            return Err(Error::LogOfZero);
        }
        Ok(self.log[x as usize])
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.exp.len();
        let s = self.log[a as usize] as usize + self.log[b as usize] as usize;
        self.exp[if s >= n { s - n } else { s }]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.exp.len() as u64;
        let l = self.log[a as usize] as u64;
        self.exp[((l * (e % n)) % n) as usize]
    }

    /// Relative trace from GF(2^from_k) down to GF(2^to_k): Σ x^(2^(to_k·i)) for
    /// i < from_k/to_k. `x` is assumed to lie in GF(2^from_k).
    pub fn relative_trace(&self, x: u32, from_k: u32, to_k: u32) -> Result<u32> {
        if to_k == 0 || !from_k.is_multiple_of(to_k) || !self.k.is_multiple_of(from_k) {
            return Err(Error::NotASubfield { k: from_k, sub_k: to_k });
        }
        if x == 0 {
            return Ok(0);
        }
        let n = self.exp.len() as u64;
        let mut l = self.log[x as usize] as u64;
        let step = 1u64 << to_k;
        let mut acc = 0u32;
        for _ in 0..from_k / to_k {
            acc ^= self.exp[l as usize];
            l = (l * step) % n;
        }
        Ok(acc)
    }

    /// Trace of `x` onto the subfield GF(2^sub_k).
    pub fn trace_to_subfield(&self, x: u32, sub_k: u32) -> Result<u32> {
        self.relative_trace(x, self.k, sub_k)
    }

    /// Whether `x` lies in the subfield GF(2^sub_k).
    pub fn in_subfield(&self, x: u32, sub_k: u32) -> bool {
        self.pow(x, 1u64 << sub_k) == x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf8() -> BinaryField {
        BinaryField::new(3, "x^3+x+1".parse().unwrap()).unwrap()
    }

    #[test]
    fn small_tables() {
        let f = gf8();
        assert_eq!(f.exp(0), 1);
        // α^3 = α + 1
        assert_eq!(f.exp(3), 0b011);
        assert_eq!(f.log(0b011).unwrap(), 3);
        assert_eq!(f.log(1).unwrap(), 0);
        assert_eq!(f.log(0), Err(Error::LogOfZero));
    }

    #[test]
    fn non_primitive_modulus_rejected() {
        // root of x^4+x^3+x^2+x+1 has order 5
        let err = BinaryField::new(4, "x^4+x^3+x^2+x+1".parse().unwrap()).unwrap_err();
        assert!(matches!(err, Error::NonPrimitiveModulus { degree: 4, order: 5 }));
        // reducible: x^4+1 = (x+1)^4
        assert!(BinaryField::new(4, "x^4+1".parse().unwrap()).is_err());
        assert!(matches!(
            BinaryField::new(4, "x^3+x+1".parse().unwrap()),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn builtin_table_is_primitive() {
        for k in 2..=20 {
            BinaryField::with_default(k).unwrap_or_else(|e| panic!("k={k}: {e}"));
        }
    }

    #[test]
    fn trace_examples() {
        let f4 = BinaryField::new(2, "x^2+x+1".parse().unwrap()).unwrap();
        // α + α^2 = 1 in GF(4)
        assert_eq!(f4.trace_to_subfield(f4.exp(1), 1).unwrap(), 1);
        assert_eq!(f4.trace_to_subfield(0, 1).unwrap(), 0);

        let f64 = BinaryField::with_default(6).unwrap();
        // GF(8) inside GF(64) is generated by α^9
        for i in 0..7u64 {
            let x = f64.exp(9 * i);
            assert!(f64.in_subfield(x, 3));
            assert_eq!(f64.trace_to_subfield(x, 3).unwrap(), 0);
        }
        assert!(matches!(f64.trace_to_subfield(5, 4), Err(Error::NotASubfield { .. })));
    }

    #[test]
    fn trace_lands_in_subfield() {
        let f = BinaryField::with_default(8).unwrap();
        for i in 0..255u64 {
            let t = f.trace_to_subfield(f.exp(i), 4).unwrap();
            assert!(f.in_subfield(t, 4));
            let b = f.trace_to_subfield(f.exp(i), 1).unwrap();
            assert!(b <= 1);
        }
    }

    #[test]
    fn log_inverts_exp() {
        for k in [3, 8, 12] {
            let f = BinaryField::with_default(k).unwrap();
            for i in 0..f.order() {
                assert_eq!(f.log(f.exp(i as u64)).unwrap(), i);
            }
        }
    }

    proptest! {
        #[test]
        fn exp_is_homomorphic(i in 0u64..4095, j in 0u64..4095) {
            let f = BinaryField::with_default(12).unwrap();
            prop_assert_eq!(f.mul(f.exp(i), f.exp(j)), f.exp((i + j) % 4095));
        }

        #[test]
        fn trace_is_linear(x in 0u32..4096, y in 0u32..4096) {
            let f = BinaryField::with_default(12).unwrap();
            for sub in [1, 2, 3, 4, 6] {
                let lhs = f.trace_to_subfield(x ^ y, sub).unwrap();
                let rhs = f.trace_to_subfield(x, sub).unwrap() ^ f.trace_to_subfield(y, sub).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
