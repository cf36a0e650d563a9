//! Table-driven arithmetic for GF(2^m).
//!
//! A field element is an integer bitmask: bit i carries the coefficient of
//! alpha^i in the polynomial basis, where alpha is a root of the chosen
//! primitive polynomial. A tuple such as 1101 read left to right is therefore
//! the mask 0b1011, i.e. 1 + alpha + alpha^3. Building the exponent table
//! doubles as the primitivity check: if any power of alpha repeats before
//! step 2^m - 1, table construction fails.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Largest supported extension degree. Tables are dense, so memory grows as
/// 2^m; 24 keeps the worst case around 128 MB.
pub const MAX_DEGREE: u32 = 24;

/// One primitive polynomial per degree, indexed by m. These are the classic
/// table choices (x^4 + x + 1, x^8 + x^4 + x^3 + x^2 + 1, and so on); every
/// entry is revalidated whenever a table is built from it.
const DEFAULT_POLYS: [u64; MAX_DEGREE as usize + 1] = [
    0x0,       // unused
    0x3,       // x + 1
    0x7,       // x^2 + x + 1
    0xB,       // x^3 + x + 1
    0x13,      // x^4 + x + 1
    0x25,      // x^5 + x^2 + 1
    0x43,      // x^6 + x + 1
    0x89,      // x^7 + x^3 + 1
    0x11D,     // x^8 + x^4 + x^3 + x^2 + 1
    0x211,     // x^9 + x^4 + 1
    0x409,     // x^10 + x^3 + 1
    0x805,     // x^11 + x^2 + 1
    0x1053,    // x^12 + x^6 + x^4 + x + 1
    0x201B,    // x^13 + x^4 + x^3 + x + 1
    0x4443,    // x^14 + x^10 + x^6 + x + 1
    0x8003,    // x^15 + x + 1
    0x1100B,   // x^16 + x^12 + x^3 + x + 1
    0x20009,   // x^17 + x^3 + 1
    0x40081,   // x^18 + x^7 + 1
    0x80027,   // x^19 + x^5 + x^2 + x + 1
    0x100009,  // x^20 + x^3 + 1
    0x200005,  // x^21 + x^2 + 1
    0x400003,  // x^22 + x + 1
    0x800021,  // x^23 + x^5 + 1
    0x1000087, // x^24 + x^7 + x^2 + x + 1
];

/// Degree and defining polynomial of a field, prior to any validation of
/// primitivity (that happens in [`FieldTable::new`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub m: u32,
    /// Bitmask of the defining polynomial, bit i for x^i; bit m must be set.
    pub poly: u64,
}

impl FieldSpec {
    pub fn new(m: u32, poly: u64) -> Result<Self> {
        if m == 0 || m > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { m, max: MAX_DEGREE });
        }
        let good_degree = poly >> m == 1;
        let nonzero_constant = poly & 1 == 1;
        if !good_degree || !nonzero_constant {
            return Err(Error::DegreeMismatch { expected: m, poly });
        }
        Ok(FieldSpec { m, poly })
    }

    /// The stock primitive polynomial for degree `m`.
    pub fn default_for(m: u32) -> Result<Self> {
        if m == 0 || m > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { m, max: MAX_DEGREE });
        }
        FieldSpec::new(m, DEFAULT_POLYS[m as usize])
    }
}

/// Exponent and logarithm tables for one field.
pub struct FieldTable {
    spec: FieldSpec,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl std::fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FieldTable(m={}, poly={:#x})",
            self.spec.m, self.spec.poly
        )
    }
}

const NO_LOG: u32 = u32::MAX;

impl FieldTable {
    /// Build both tables by repeated multiplication by alpha. Fails with
    /// `NotPrimitive` at the first repeated value, which happens exactly when
    /// the polynomial is not primitive.
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let spec = FieldSpec::new(spec.m, spec.poly)?;
        let order = (1usize << spec.m) - 1;
        let mut exp = vec![0u32; order];
        let mut log = vec![NO_LOG; 1 << spec.m];
        let mut x: u64 = 1;
        for (i, e) in exp.iter_mut().enumerate() {
            if log[x as usize] != NO_LOG {
                return Err(Error::NotPrimitive { first_repeat: i });
            }
            *e = x as u32;
            log[x as usize] = i as u32;
            x <<= 1;
            if x >> spec.m & 1 == 1 {
                x ^= spec.poly;
            }
        }
        Ok(FieldTable { spec, exp, log })
    }

    pub fn with_default_poly(m: u32) -> Result<Self> {
        FieldTable::new(FieldSpec::default_for(m)?)
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn m(&self) -> u32 {
        self.spec.m
    }

    /// Number of nonzero elements, 2^m - 1.
    pub fn order(&self) -> usize {
        self.exp.len()
    }

    /// alpha^e, with the exponent reduced mod the group order.
    pub fn alpha_pow(&self, e: usize) -> u32 {
        self.exp[e % self.order()]
    }

    /// Discrete log of a nonzero element; `None` for zero.
    pub fn log(&self, a: u32) -> Option<usize> {
        let l = *self.log.get(a as usize)?;
        (l != NO_LOG).then_some(l as usize)
    }

    /// Addition is coefficientwise XOR.
    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!(self.in_field(a) && self.in_field(b));
        a ^ b
    }

    /// Multiplication through the log tables; zero is absorbing.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(self.in_field(a) && self.in_field(b));
        if a == 0 || b == 0 {
            return 0;
        }
        let la = self.log[a as usize] as usize;
        let lb = self.log[b as usize] as usize;
        self.exp[(la + lb) % self.order()]
    }

    fn in_field(&self, a: u32) -> bool {
        (a as u64) < (1u64 << self.spec.m)
    }

    /// The subfield GF(2^s) inside this field, as the element list
    /// `[0, beta^0, beta^1, ...]` with beta = alpha^((2^m-1)/(2^s-1)).
    /// Requires s to divide m.
    pub fn subfield(&self, s: u32) -> Result<Vec<u32>> {
        if s == 0 || s > self.spec.m || !self.spec.m.is_multiple_of(s) {
            return Err(Error::NotASubfield { s, m: self.spec.m });
        }
        let sub_order = (1usize << s) - 1;
        let step = self.order() / sub_order;
        let mut out = Vec::with_capacity(sub_order + 1);
        out.push(0);
        for k in 0..sub_order {
            out.push(self.exp[k * step]);
        }
        Ok(out)
    }
}
