//! Polynomials over GF(2), packed like bit vectors: bit i is the coefficient
//! of x^i. Used for check and generator polynomials of cyclic codes.

use crate::bits::BitVec;
use crate::error::{Error, Result};
use std::fmt;

/// Binary polynomial. The zero polynomial has an empty word list; otherwise
/// the top word is nonzero, so `degree` is well defined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitPoly {
    words: Vec<u64>,
}

impl BitPoly {
    pub fn zero() -> Self {
        BitPoly { words: Vec::new() }
    }

    pub fn one() -> Self {
        BitPoly { words: vec![1] }
    }

    /// x^n.
    pub fn x_pow(n: usize) -> Self {
        let mut p = BitPoly::zero();
        p.set_coeff(n);
        p
    }

    /// x^n + 1, the modulus of length-n cyclic codes.
    pub fn x_pow_plus_one(n: usize) -> Self {
        let mut p = BitPoly::x_pow(n);
        p.set_coeff(0);
        p
    }

    pub fn from_coeffs(coeffs: &[usize]) -> Self {
        let mut p = BitPoly::zero();
        for &c in coeffs {
            p.set_coeff(c);
        }
        p
    }

    /// Interpret a bit vector as coefficients, index i giving x^i.
    pub fn from_bitvec(v: &BitVec) -> Self {
        BitPoly::from_coeffs(&v.ones())
    }

    /// Coefficient vector of fixed length `n`; fails if the degree is n or more.
    pub fn to_bitvec(&self, n: usize) -> Result<BitVec> {
        if let Some(d) = self.degree() {
            if d >= n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: d + 1,
                });
            }
        }
        BitVec::from_ones(n, &self.coeffs())
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + (63 - last.leading_zeros() as usize))
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn coeffs(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &word) in self.words.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                out.push(wi * 64 + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    fn set_coeff(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn add(&self, other: &BitPoly) -> BitPoly {
        let mut words = self.words.clone();
        if words.len() < other.words.len() {
            words.resize(other.words.len(), 0);
        }
        for (i, w) in other.words.iter().enumerate() {
            words[i] ^= w;
        }
        let mut p = BitPoly { words };
        p.normalize();
        p
    }

    /// XOR `other << shift` into `self` (coefficient shift, i.e. times x^shift).
    fn xor_shifted(&mut self, other: &BitPoly, shift: usize) {
        let (off, sh) = (shift / 64, shift % 64);
        let need = other.words.len() + off + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[off + i] ^= w << sh;
            if sh != 0 {
                self.words[off + i + 1] ^= w >> (64 - sh);
            }
        }
        self.normalize();
    }

    pub fn mul(&self, other: &BitPoly) -> BitPoly {
        let mut acc = BitPoly::zero();
        for i in self.coeffs() {
            acc.xor_shifted(other, i);
        }
        acc
    }

    /// Long division: returns (quotient, remainder).
    pub fn divmod(&self, divisor: &BitPoly) -> Result<(BitPoly, BitPoly)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let mut rem = self.clone();
        let mut quot = BitPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quot.set_coeff(shift);
            rem.xor_shifted(divisor, shift);
        }
        Ok((quot, rem))
    }

    /// Exact quotient; a nonzero remainder is an error.
    pub fn quotient_exact(&self, divisor: &BitPoly) -> Result<BitPoly> {
        let (q, r) = self.divmod(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonzeroRemainder)
        }
    }

    pub fn gcd(&self, other: &BitPoly) -> BitPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    /// Coefficient reversal x^deg * p(1/x). The degree drops when the constant
    /// term of `p` is zero, e.g. x^2 + x reverses to x + 1.
    pub fn reciprocal(&self) -> Result<BitPoly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        let mut out = BitPoly::zero();
        for i in self.coeffs() {
            out.set_coeff(d - i);
        }
        Ok(out)
    }
}

impl fmt::Display for BitPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for i in self.coeffs() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BitPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitPoly({self})")
    }
}
