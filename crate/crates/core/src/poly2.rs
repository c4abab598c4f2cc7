//! Polynomials over GF(2), packed 64 coefficients per word.
//!
//! Coefficient `i` is bit `i % 64` of word `i / 64`. The word vector never
//! carries trailing zero words, so equality is structural. The zero
//! polynomial has no degree: [`Poly2::degree`] returns `None`, which stands
//! in for minus infinity.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    words: Vec<u64>,
}

/// `dst ^= src << shift`, growing `dst` as needed.
pub(crate) fn xor_shifted(dst: &mut Vec<u64>, src: &[u64], shift: usize) {
    if src.is_empty() {
        return;
    }
    let ws = shift / 64;
    let bs = shift % 64;
    let need = ws + src.len() + 1;
    if dst.len() < need {
        dst.resize(need, 0);
    }
    if bs == 0 {
        for (i, &w) in src.iter().enumerate() {
            dst[ws + i] ^= w;
        }
    } else {
        for (i, &w) in src.iter().enumerate() {
            dst[ws + i] ^= w << bs;
            dst[ws + i + 1] ^= w >> (64 - bs);
        }
    }
}

fn trim(words: &mut Vec<u64>) {
    while words.last() == Some(&0) {
        words.pop();
    }
}

fn degree_of(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .rposition(|&w| w != 0)
        .map(|i| i * 64 + 63 - words[i].leading_zeros() as usize)
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { words: Vec::new() }
    }

    pub fn one() -> Self {
        Poly2 { words: vec![1] }
    }

    /// The monomial `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut p = Poly2::zero();
        p.set_coeff(n, true);
        p
    }

    pub fn from_words(mut words: Vec<u64>) -> Self {
        trim(&mut words);
        Poly2 { words }
    }

    /// Builds a polynomial from coefficients, lowest degree first.
    pub fn from_coeffs<I: IntoIterator<Item = bool>>(coeffs: I) -> Self {
        let mut words = Vec::new();
        for (i, c) in coeffs.into_iter().enumerate() {
            if i / 64 >= words.len() {
                words.push(0);
            }
            if c {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Poly2::from_words(words)
    }

    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Poly2::zero();
        for &e in exps {
            p.set_coeff(e, !p.coeff(e));
        }
        p
    }

    /// Builds a polynomial from a small integer bit mask (bit i = coefficient of x^i).
    pub fn from_mask(mask: u64) -> Self {
        Poly2::from_words(vec![mask])
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        degree_of(&self.words)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        if value {
            if i / 64 >= self.words.len() {
                self.words.resize(i / 64 + 1, 0);
            }
            self.words[i / 64] |= 1 << (i % 64);
        } else if i / 64 < self.words.len() {
            self.words[i / 64] &= !(1 << (i % 64));
            trim(&mut self.words);
        }
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * 64 + b);
                w &= w - 1;
            }
        }
        out
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Remainder and quotient of Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly2) -> (Poly2, Poly2) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.words.clone();
        let mut quot: Vec<u64> = Vec::new();
        let mut top = degree_of(&rem);
        while let Some(dr) = top {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            xor_shifted(&mut rem, &divisor.words, shift);
            if shift / 64 >= quot.len() {
                quot.resize(shift / 64 + 1, 0);
            }
            quot[shift / 64] |= 1 << (shift % 64);
            trim(&mut rem);
            top = degree_of(&rem);
        }
        (Poly2::from_words(quot), Poly2::from_words(rem))
    }

    pub fn rem(&self, divisor: &Poly2) -> Poly2 {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor. `gcd(a, 0) = a`.
    pub fn gcd(a: &Poly2, b: &Poly2) -> Poly2 {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        // every nonzero GF(2) polynomial is already monic
        a
    }

    /// `self(x^n)`.
    pub fn compose_power(&self, n: usize) -> Poly2 {
        let mut p = Poly2::zero();
        for e in self.exponents() {
            p.set_coeff(e * n, true);
        }
        p
    }

    /// `x^len · self(1/x)`; `len` must be at least the degree.
    pub fn reciprocal_with_len(&self, len: usize) -> Poly2 {
        let mut p = Poly2::zero();
        for e in self.exponents() {
            assert!(e <= len, "reciprocal length below degree");
            p.set_coeff(len - e, true);
        }
        p
    }

    /// Reciprocal with respect to the polynomial's own degree.
    pub fn reciprocal(&self) -> Poly2 {
        match self.degree() {
            Some(d) => self.reciprocal_with_len(d),
            None => Poly2::zero(),
        }
    }

    /// Ascending coefficient bit string: `"1101"` is `1 + x + x^3`.
    pub fn to_bitstring(&self) -> String {
        match self.degree() {
            None => String::from("0"),
            Some(d) => (0..=d).map(|i| if self.coeff(i) { '1' } else { '0' }).collect(),
        }
    }

    pub fn parse_bitstring(s: &str) -> Result<Poly2> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(alloc::format!(
                    "unexpected character {other:?} in bit string"
                ))),
            })
            .collect::<Result<Vec<bool>>>()
            .map(Poly2::from_coeffs)
    }

    /// Parses the human form, e.g. `"x^3 + x + 1"` or `"x^8+x^1+1"`.
    pub fn parse_human(s: &str) -> Result<Poly2> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if compact == "0" {
            return Ok(Poly2::zero());
        }
        let mut p = Poly2::zero();
        for term in compact.split('+') {
            let e = match term {
                "1" => 0,
                "x" | "X" => 1,
                t if t.starts_with("x^") || t.starts_with("X^") => t[2..]
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad exponent in term {t:?}")))?,
                t => return Err(Error::Parse(alloc::format!("bad term {t:?}"))),
            };
            p.set_coeff(e, !p.coeff(e));
        }
        Ok(p)
    }
}

impl FromStr for Poly2 {
    type Err = Error;

    /// Accepts either the bit-string form or the human form.
    fn from_str(s: &str) -> Result<Poly2> {
        let t = s.trim();
        if !t.is_empty() && t.chars().all(|c| c == '0' || c == '1') {
            Poly2::parse_bitstring(t)
        } else {
            Poly2::parse_human(t)
        }
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps = self.exponents();
        if exps.is_empty() {
            return f.write_str("0");
        }
        for (i, &e) in exps.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

impl Add for &Poly2 {
    type Output = Poly2;

    fn add(self, rhs: &Poly2) -> Poly2 {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        Poly2::from_words(words)
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: &Poly2) -> Poly2 {
        let (sparse, dense) = if self.weight() <= rhs.weight() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = Vec::new();
        for e in sparse.exponents() {
            xor_shifted(&mut words, &dense.words, e);
        }
        Poly2::from_words(words)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    #[test]
    fn gcd_examples() {
        // x^4+x^3+x^2+1 = (x+1)(x^3+x+1)
        assert_eq!(Poly2::gcd(&p("x^4+x^3+x^2+1"), &p("x^3+x+1")), p("x^3+x+1"));
        assert_eq!(Poly2::gcd(&p("x^2+1"), &p("x+1")), p("x+1"));
        let q = p("x^5+x^2+1");
        assert_eq!(Poly2::gcd(&q, &Poly2::zero()), q);
        assert_eq!(Poly2::gcd(&Poly2::zero(), &q), q);
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Poly2::zero().degree(), None);
        assert_eq!(Poly2::one().degree(), Some(0));
        assert_eq!(Poly2::monomial(130).degree(), Some(130));
    }

    #[test]
    fn text_forms() {
        let q = p("1101");
        assert_eq!(q, p("x^3+x+1"));
        assert_eq!(q.to_string(), "x^3+x+1");
        assert_eq!(q.to_bitstring(), "1101");
        assert_eq!(p("x^8 + x^7 + x^6 + x^4 + x^2 + x^1 + 1").to_string(), "x^8+x^7+x^6+x^4+x^2+x+1");
        assert_eq!(p("0"), Poly2::zero());
        assert_eq!(p("1"), Poly2::one());
        assert!("x^a+1".parse::<Poly2>().is_err());
        assert!("y+1".parse::<Poly2>().is_err());
    }

    #[test]
    fn compose_and_reciprocal() {
        let c = p("x^8+x^7+x^6+x^4+x^2+x+1");
        assert_eq!(
            c.compose_power(15),
            p("x^120+x^105+x^90+x^60+x^30+x^15+1")
        );
        assert_eq!(p("x^3+x+1").reciprocal(), p("x^3+x^2+1"));
    }

    #[test]
    fn division_identity() {
        let a = p("x^70+x^64+x^3+1");
        let d = p("x^5+x^2+1");
        let (q, r) = a.div_rem(&d);
        assert!(r.degree().is_none_or(|dr| dr < 5));
        assert_eq!(&(&q * &d) + &r, a);
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly2> {
        proptest::collection::vec(any::<bool>(), 0..=max_deg + 1).prop_map(Poly2::from_coeffs)
    }

    proptest! {
        #[test]
        fn gcd_scales_by_common_factor(a in arb_poly(16), b in arb_poly(16), c in arb_poly(16)) {
            prop_assume!(!c.is_zero());
            let lhs = Poly2::gcd(&(&a * &c), &(&b * &c));
            let rhs = &c * &Poly2::gcd(&a, &b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn text_roundtrip(a in arb_poly(200)) {
            prop_assert_eq!(a.to_string().parse::<Poly2>().unwrap(), a.clone());
            prop_assert_eq!(a.to_bitstring().parse::<Poly2>().unwrap(), a);
        }
    }
}
