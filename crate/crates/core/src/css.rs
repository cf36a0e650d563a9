//! CSS quantum codes from nested pairs of classical codes.
//!
//! Given C2 nested in C1, the pair encodes k1 - k2 logical qubits. Bit-flip
//! (X) errors are handled through C1's parity checks (h_z); phase-flip (Z)
//! errors through the generator matrix of C2 (h_x), which doubles as a
//! parity-check matrix for the dual of C2. Everything here stays at the
//! classical check-matrix level; no quantum state is ever materialized.

use crate::binmat::BitMatrix;
use crate::codes::{CodeOrigin, LdpcCode};
use crate::error::{Error, Result};

pub struct CssCode {
    c1: LdpcCode,
    c2: LdpcCode,
    h_x: BitMatrix,
    h_z: BitMatrix,
    k_quantum: usize,
}

impl CssCode {
    /// Build a CSS pair after verifying the nesting C2 inside C1. On
    /// failure the error carries a basis codeword of C2 outside C1.
    pub fn new(c1: LdpcCode, c2: LdpcCode) -> Result<Self> {
        if c1.n() != c2.n() {
            return Err(Error::LengthMismatch {
                expected: c1.n(),
                got: c2.n(),
            });
        }
        let basis2 = c2.codeword_basis();
        for r in 0..basis2.rows() {
            let b = basis2.row(r);
            if !c1.h().mul_vec(&b)?.is_zero() {
                return Err(Error::NotNested { witness: b });
            }
        }
        // Canonical form: reduced row echelon of C2's codeword basis.
        let ech = basis2.echelon();
        assert_eq!(ech.rank, c2.k(), "codeword basis rows are independent");
        let mut h_x = BitMatrix::zeros(ech.rank, c1.n());
        for r in 0..ech.rank {
            h_x.set_row(r, &ech.rref.row(r));
        }
        let h_z = c1.h().clone();
        assert!(
            h_x.mul_transpose(&h_z).unwrap().is_zero(),
            "nesting forces h_x and h_z to be orthogonal"
        );
        let k_quantum = c1.k() - c2.k();
        Ok(CssCode {
            c1,
            c2,
            h_x,
            h_z,
            k_quantum,
        })
    }

    /// The standard pipeline: C2 is the row-split of the given cyclic code.
    /// Nesting holds because every original check is the sum of its
    /// fragments, but it is verified anyway.
    pub fn from_row_split(code: &LdpcCode, q: usize) -> Result<Self> {
        if code.cyclic_structure().is_none() {
            return Err(Error::NotCyclicInput);
        }
        let c2 = code.split_rows(q)?;
        Self::new(code.clone(), c2)
    }

    pub fn c1(&self) -> &LdpcCode {
        &self.c1
    }

    pub fn c2(&self) -> &LdpcCode {
        &self.c2
    }

    /// Phase-error checks: canonical generator matrix of C2.
    pub fn h_x(&self) -> &BitMatrix {
        &self.h_x
    }

    /// Bit-error checks: parity-check matrix of C1.
    pub fn h_z(&self) -> &BitMatrix {
        &self.h_z
    }

    pub fn check_matrices(&self) -> (&BitMatrix, &BitMatrix) {
        (&self.h_x, &self.h_z)
    }

    pub fn n(&self) -> usize {
        self.c1.n()
    }

    /// Number of logical qubits, k1 - k2.
    pub fn k_quantum(&self) -> usize {
        self.k_quantum
    }

    /// The classical code correcting phase errors: dual of C2, presented by
    /// h_x as its parity-check matrix.
    pub fn phase_code(&self) -> LdpcCode {
        LdpcCode::from_parity_check(
            self.h_x.clone(),
            CodeOrigin::Derived {
                base: Box::new(self.c2.origin().clone()),
                transform: "dual".into(),
            },
        )
    }

    /// Non-degenerate distance bound min(d(C1), d(dual of C2)), by brute
    /// force where no formula value is recorded. Fails with
    /// DimensionTooLarge when either search space exceeds the cap.
    pub fn distance_bound(&self, cap: usize) -> Result<usize> {
        let d1 = match self.c1.params().d_known {
            Some(b) => b.value,
            None => self.c1.min_distance_bruteforce(cap)?,
        };
        let d2 = self.phase_code().min_distance_bruteforce(cap)?;
        Ok(d1.min(d2))
    }
}

impl Clone for CssCode {
    fn clone(&self) -> Self {
        CssCode {
            c1: self.c1.clone(),
            c2: self.c2.clone(),
            h_x: self.h_x.clone(),
            h_z: self.h_z.clone(),
            k_quantum: self.k_quantum,
        }
    }
}

impl std::fmt::Debug for CssCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CssCode([[{}, {}]])", self.n(), self.k_quantum)
    }
}
