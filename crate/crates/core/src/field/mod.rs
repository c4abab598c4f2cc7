//! Exact arithmetic: GF(2^k) with log/exp tables, prime fields and GF(p^2).

mod binary;
mod prime;
mod quad;

pub use binary::{default_primitive_poly, BinaryField, MAX_BINARY_DEGREE};
pub use prime::{gcd, is_prime, mod_inverse, pow_mod, prime_factors, primitive_root, PrimeField};
pub use quad::QuadExtField;
