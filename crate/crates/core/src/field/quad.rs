use crate::error::Result;
use crate::field::prime::{pow_mod, prime_factors, primitive_root};

/// GF(p^2) as pairs `a + b·x` modulo `x^2 − t` for the smallest non-residue `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadExtField {
    pub p: u64,
    pub t: u64,
    /// Primitive element as `(a, b)`.
    pub theta: (u64, u64),
}

impl QuadExtField {
    pub fn new(p: u64) -> Result<Self> {
        // also validates p
        primitive_root(p)?;
        let t = (2..p)
            .find(|&t| pow_mod(t, (p - 1) / 2, p) == p - 1)
            .expect("odd primes have non-residues");
        let mut f = QuadExtField { p, t, theta: (0, 1) };
        let order = p * p - 1;
        let factors = prime_factors(order);
        'search: for b in 1..p {
            for a in 0..p {
                let c = (a, b);
                if factors.iter().all(|&q| f.pow(c, order / q) != (1, 0)) {
                    f.theta = c;
                    break 'search;
                }
            }
        }
        Ok(f)
    }

    pub fn mul(&self, x: (u64, u64), y: (u64, u64)) -> (u64, u64) {
        let p = self.p as u128;
        let (a, b) = (x.0 as u128, x.1 as u128);
        let (c, d) = (y.0 as u128, y.1 as u128);
        let re = (a * c + (self.t as u128) * (b * d % p)) % p;
        let im = (a * d + b * c) % p;
        (re as u64, im as u64)
    }

    pub fn pow(&self, mut x: (u64, u64), mut e: u64) -> (u64, u64) {
        let mut acc = (1, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        acc
    }

    /// theta^j.
    pub fn theta_pow(&self, j: u64) -> (u64, u64) {
        self.pow(self.theta, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf9() {
        let f = QuadExtField::new(3).unwrap();
        assert_eq!(f.t, 2);
        assert_eq!(f.theta, (1, 1));
        // (1+x)^4 = 2
        assert_eq!(f.theta_pow(4), (2, 0));
    }

    #[test]
    fn residue_modulus_rejected() {
        // -1 = 4 is a residue mod 5, so x^2+1 is reducible; t = 2 is used
        let f = QuadExtField::new(5).unwrap();
        assert_eq!(f.t, 2);
    }

    #[test]
    fn theta_norm_in_base_field() {
        for p in [3u64, 5, 7, 11, 13, 19, 23] {
            let f = QuadExtField::new(p).unwrap();
            let n = f.theta_pow(p + 1);
            assert_eq!(n.1, 0, "p={p}");
            assert_ne!(n.0, 0);
            // order exactly p^2 - 1
            let mut x = (1, 0);
            for j in 1..p * p - 1 {
                x = f.mul(x, f.theta);
                assert_ne!(x, (1, 0), "p={p} j={j}");
            }
            assert_eq!(f.mul(x, f.theta), (1, 0));
        }
    }
}
