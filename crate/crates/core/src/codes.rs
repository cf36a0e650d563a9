//! Linear codes given by parity-check matrices, including the two
//! finite-geometry families.
//!
//! The Euclidean-geometry code of order s uses the incidence vectors of the
//! 2^2s - 1 origin-avoiding lines of EG(2, 2^s) as parity checks; the
//! projective variant uses all lines of PG(2, 2^s). Both matrices are built
//! as the cyclic shift orbit of one base line and then checked, row set
//! against enumerated line set, so the cyclic shortcut can never silently
//! produce a wrong matrix.

use crate::binmat::BitMatrix;
use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::geometry::{EgPlane, Line, PgPlane};
use crate::gf2m::FieldSpec;
use crate::poly::BitPoly;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

/// Default cap on code dimension for exhaustive codeword walks (2^k words).
pub const DISTANCE_CAP: usize = 22;

/// How a code came to be; derived codes keep the chain of transforms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CodeOrigin {
    Eg {
        s: u32,
        poly: u64,
        /// Exponents of the base point and base direction.
        base: (usize, usize),
    },
    Pg {
        s: u32,
        poly: u64,
        /// Indices of the two base points.
        base: (usize, usize),
    },
    Derived {
        base: Box<CodeOrigin>,
        transform: String,
    },
    Explicit,
}

impl fmt::Display for CodeOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeOrigin::Eg { s, poly, base } => {
                write!(
                    f,
                    "eg(s={s}, poly={poly:#x}, base=({}, {}))",
                    base.0, base.1
                )
            }
            CodeOrigin::Pg { s, poly, base } => {
                write!(
                    f,
                    "pg(s={s}, poly={poly:#x}, base=({}, {}))",
                    base.0, base.1
                )
            }
            CodeOrigin::Derived { base, transform } => write!(f, "{transform} of {base}"),
            CodeOrigin::Explicit => f.write_str("explicit"),
        }
    }
}

/// Where a recorded minimum distance came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceProvenance {
    /// Closed-form value for the geometry families.
    Formula,
    /// Exhaustive search over all codewords.
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBound {
    pub value: usize,
    pub provenance: DistanceProvenance,
}

/// Summary parameters of a parity-check matrix, always recomputed from the
/// matrix itself.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeParams {
    /// Set of distinct row weights.
    pub rho: BTreeSet<usize>,
    /// Set of distinct column weights.
    pub gamma: BTreeSet<usize>,
    /// Maximum number of shared rows over all column pairs.
    pub lambda: usize,
    /// Total number of ones.
    pub ones: u64,
    /// Fraction of ones.
    pub density: f64,
    pub d_known: Option<DistanceBound>,
}

impl CodeParams {
    pub fn from_matrix(h: &BitMatrix, d_known: Option<DistanceBound>) -> Self {
        let p = h.profile();
        CodeParams {
            rho: p.row_weight_set(),
            gamma: p.col_weight_set(),
            lambda: p.lambda,
            ones: p.ones,
            density: p.density(),
            d_known,
        }
    }
}

/// Generator and check polynomial of a cyclic code: g * h = x^n + 1 and
/// deg h = k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicStructure {
    pub g: BitPoly,
    pub h: BitPoly,
}

/// A binary linear code presented by a parity-check matrix. The matrix may
/// have redundant rows; `k` is always n minus the computed rank.
pub struct LdpcCode {
    h: BitMatrix,
    n: usize,
    k: usize,
    origin: CodeOrigin,
    params: CodeParams,
    cyclic: OnceLock<Option<CyclicStructure>>,
}

impl Clone for LdpcCode {
    fn clone(&self) -> Self {
        LdpcCode {
            h: self.h.clone(),
            n: self.n,
            k: self.k,
            origin: self.origin.clone(),
            params: self.params.clone(),
            cyclic: self.cyclic.clone(),
        }
    }
}

impl PartialEq for LdpcCode {
    fn eq(&self, other: &Self) -> bool {
        self.h == other.h && self.origin == other.origin
    }
}

impl fmt::Debug for LdpcCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LdpcCode(n={}, k={}, rows={}, origin={})",
            self.n,
            self.k,
            self.h.rows(),
            self.origin
        )
    }
}

impl LdpcCode {
    /// Wrap an explicit parity-check matrix, computing rank and parameters.
    pub fn from_parity_check(h: BitMatrix, origin: CodeOrigin) -> Self {
        Self::with_distance(h, origin, None)
    }

    pub(crate) fn with_distance(
        h: BitMatrix,
        origin: CodeOrigin,
        d: Option<DistanceBound>,
    ) -> Self {
        let n = h.cols();
        let k = n - h.echelon().rank;
        let params = CodeParams::from_matrix(&h, d);
        LdpcCode {
            h,
            n,
            k,
            origin,
            params,
            cyclic: OnceLock::new(),
        }
    }

    /// The Euclidean-geometry code of order s with the standard base line.
    pub fn eg(s: u32) -> Result<Self> {
        Self::eg_with(s, None, None)
    }

    /// EG construction with an optional field polynomial and base choice.
    /// `base` gives the exponents of the base point p0 and direction p1; the
    /// default is (n - 1, 1), i.e. the line through alpha^(n-1) with
    /// direction alpha.
    pub fn eg_with(s: u32, spec: Option<FieldSpec>, base: Option<(usize, usize)>) -> Result<Self> {
        let plane = match spec {
            Some(spec) => EgPlane::with_spec(s, spec)?,
            None => EgPlane::new(s)?,
        };
        let n = plane.n();
        let (e0, e1) = base.unwrap_or((n - 1, 1));
        for e in [e0, e1] {
            if e >= n {
                return Err(Error::OutOfRange {
                    what: "base exponent",
                    value: e,
                    limit: n,
                });
            }
        }
        let f = plane.field();
        let base_line = plane.line(f.alpha_pow(e0), f.alpha_pow(e1))?;
        if base_line.contains_origin() {
            return Err(Error::BaseLineThroughOrigin);
        }
        let h = shift_orbit(&base_line, n)?;
        check_orbit_against_lines(&h, &plane.lines_avoiding_origin(), n)?;
        let d = DistanceBound {
            value: (1 << s) + 1,
            provenance: DistanceProvenance::Formula,
        };
        let origin = CodeOrigin::Eg {
            s,
            poly: plane.field().spec().poly,
            base: (e0, e1),
        };
        Ok(Self::with_distance(h, origin, Some(d)))
    }

    /// The projective-geometry code of order s with the standard base line.
    pub fn pg(s: u32) -> Result<Self> {
        Self::pg_with(s, None, None)
    }

    /// PG construction with an optional field polynomial and base point pair
    /// (point indices; default (0, 1)).
    pub fn pg_with(s: u32, spec: Option<FieldSpec>, base: Option<(usize, usize)>) -> Result<Self> {
        let plane = match spec {
            Some(spec) => PgPlane::with_spec(s, spec)?,
            None => PgPlane::new(s)?,
        };
        let n = plane.n();
        let (p0, p1) = base.unwrap_or((0, 1));
        let base_line = plane.line(p0, p1)?;
        let h = shift_orbit(&base_line, n)?;
        check_orbit_against_lines(&h, &plane.all_lines(), n)?;
        let d = DistanceBound {
            value: (1 << s) + 2,
            provenance: DistanceProvenance::Formula,
        };
        let origin = CodeOrigin::Pg {
            s,
            poly: plane.field().spec().poly,
            base: (p0, p1),
        };
        Ok(Self::with_distance(h, origin, Some(d)))
    }

    pub fn h(&self) -> &BitMatrix {
        &self.h
    }

    /// Block length.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension, n - rank(H).
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn origin(&self) -> &CodeOrigin {
        &self.origin
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    /// Basis of the codeword space, one codeword per row (k rows).
    pub fn codeword_basis(&self) -> BitMatrix {
        self.h.null_space()
    }

    /// Generator and check polynomial, if this code is cyclic. Computed once
    /// and cached; `None` means the code failed the cyclicity checks.
    pub fn cyclic_structure(&self) -> Option<&CyclicStructure> {
        self.cyclic.get_or_init(|| self.compute_cyclic()).as_ref()
    }

    fn compute_cyclic(&self) -> Option<CyclicStructure> {
        let xn1 = BitPoly::x_pow_plus_one(self.n);
        let basis = self.codeword_basis();
        let mut g = xn1.clone();
        for r in 0..basis.rows() {
            g = g.gcd(&BitPoly::from_bitvec(&basis.row(r)));
        }
        // For a cyclic code the gcd of the codewords with x^n + 1 is the
        // generator, whose degree is n - k.
        if g.degree() != Some(self.n - self.k) {
            return None;
        }
        let h = xn1.quotient_exact(&g).ok()?;
        // Shifting a basis codeword must stay in the code.
        for r in 0..basis.rows() {
            let shifted = basis.row(r).rotated(1);
            if !self.h.mul_vec(&shifted).ok()?.is_zero() {
                return None;
            }
        }
        debug_assert_eq!(g.mul(&h), xn1);
        Some(CyclicStructure { g, h })
    }

    /// Multiply the message polynomial by the generator. Requires a cyclic
    /// code and a message of length k.
    pub fn encode(&self, msg: &BitVec) -> Result<BitVec> {
        let cyc = self.cyclic_structure().ok_or(Error::NotCyclicInput)?;
        if msg.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                got: msg.len(),
            });
        }
        BitPoly::from_bitvec(msg).mul(&cyc.g).to_bitvec(self.n)
    }

    /// The dual code, presented by the generator matrix of this code as its
    /// parity-check matrix: rows x^t * g for t = k-1 down to 0. Requires a
    /// cyclic code.
    pub fn dual(&self) -> Result<LdpcCode> {
        let cyc = self.cyclic_structure().ok_or(Error::NotCyclicInput)?;
        let mut h = BitMatrix::zeros(self.k, self.n);
        if self.k > 0 {
            let gv = cyc.g.to_bitvec(self.n)?;
            for (row, t) in (0..self.k).rev().enumerate() {
                h.set_row(row, &gv.rotated(t));
            }
        }
        let origin = CodeOrigin::Derived {
            base: Box::new(self.origin.clone()),
            transform: "dual".into(),
        };
        Ok(Self::from_parity_check(h, origin))
    }

    /// Check polynomial of the dual code, x^n + 1 over the reciprocal of h.
    pub fn dual_check_poly(&self) -> Result<BitPoly> {
        let cyc = self.cyclic_structure().ok_or(Error::NotCyclicInput)?;
        let g_perp = cyc.h.reciprocal()?;
        BitPoly::x_pow_plus_one(self.n).quotient_exact(&g_perp)
    }

    /// True minimum distance by walking all 2^k codewords in Gray-code order.
    pub fn min_distance_bruteforce(&self, cap: usize) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::ZeroDimension);
        }
        check_walk_dim(self.k, cap)?;
        let basis = basis_rows(&self.h);
        let mut current = BitVec::zeros(self.n);
        let mut best = usize::MAX;
        for counter in 1u64..1 << self.k {
            current.xor_assign(&basis[counter.trailing_zeros() as usize]);
            best = best.min(current.weight());
        }
        Ok(best)
    }
}

pub(crate) fn check_walk_dim(k: usize, cap: usize) -> Result<()> {
    if k > cap || k >= 63 {
        return Err(Error::DimensionTooLarge { k, cap });
    }
    Ok(())
}

pub(crate) fn basis_rows(h: &BitMatrix) -> Vec<BitVec> {
    let basis = h.null_space();
    (0..basis.rows()).map(|r| basis.row(r)).collect()
}

/// n x n matrix whose row i is the base incidence vector with every index
/// shifted down by i (mod n).
fn shift_orbit(base: &Line, n: usize) -> Result<BitMatrix> {
    let v = base.incidence_vector(n)?;
    let mut h = BitMatrix::zeros(n, n);
    for i in 0..n {
        h.set_row(i, &v.rotated((n - i) % n));
    }
    Ok(h)
}

/// The orbit rows must be exactly the incidence vectors of the enumerated
/// lines, as sets.
fn check_orbit_against_lines(h: &BitMatrix, lines: &[Line], n: usize) -> Result<()> {
    if lines.len() != n {
        return Err(Error::ShiftOrbitMismatch {
            detail: format!("expected {n} lines, enumeration found {}", lines.len()),
        });
    }
    let mut line_set: HashSet<Vec<u64>> = HashSet::with_capacity(n);
    for line in lines {
        line_set.insert(line.incidence_vector(n)?.words().to_vec());
    }
    let mut row_set: HashSet<Vec<u64>> = HashSet::with_capacity(n);
    for r in 0..n {
        row_set.insert(h.row_words(r).to_vec());
    }
    if row_set.len() != n {
        return Err(Error::ShiftOrbitMismatch {
            detail: format!("orbit has only {} distinct rows", row_set.len()),
        });
    }
    if row_set != line_set {
        return Err(Error::ShiftOrbitMismatch {
            detail: "orbit rows differ from the enumerated line set".into(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The full parity-check matrix of the order-2 Euclidean construction.
    pub(crate) const EG4_ROWS: [&str; 15] = [
        "000000011010001",
        "000000110100010",
        "000001101000100",
        "000011010001000",
        "000110100010000",
        "001101000100000",
        "011010001000000",
        "110100010000000",
        "101000100000001",
        "010001000000011",
        "100010000000110",
        "000100000001101",
        "001000000011010",
        "010000000110100",
        "100000001101000",
    ];

    pub(crate) fn eg4_matrix() -> BitMatrix {
        BitMatrix::from_bit_strings(&EG4_ROWS).unwrap()
    }

    #[test]
    fn eg_order2_matches_the_golden_matrix() {
        let code = LdpcCode::eg(2).unwrap();
        assert_eq!(code.h(), &eg4_matrix());
        assert_eq!((code.n(), code.k()), (15, 7));
        assert_eq!(code.h().rank(), 8);
        let p = code.params();
        assert_eq!(p.rho, BTreeSet::from([4]));
        assert_eq!(p.gamma, BTreeSet::from([4]));
        assert_eq!(p.lambda, 1);
        assert_eq!(p.ones, 60);
        assert_eq!(
            p.d_known,
            Some(DistanceBound {
                value: 5,
                provenance: DistanceProvenance::Formula
            })
        );
    }

    #[test]
    fn eg_order3_parameters() {
        let code = LdpcCode::eg(3).unwrap();
        assert_eq!((code.n(), code.k()), (63, 37));
        assert_eq!(code.h().rank(), 26);
        let p = code.params();
        assert_eq!(p.rho, BTreeSet::from([8]));
        assert_eq!(p.gamma, BTreeSet::from([8]));
        assert_eq!(p.lambda, 1);
        // Density 2^s / (2^2s - 1).
        assert!((p.density - 8.0 / 63.0).abs() < 1e-12);
    }

    #[test]
    fn pg_order2_and_3_parameters() {
        let code = LdpcCode::pg(2).unwrap();
        assert_eq!((code.n(), code.k()), (21, 11));
        assert_eq!(code.h().rank(), 10);
        let p = code.params();
        assert_eq!(p.rho, BTreeSet::from([5]));
        assert_eq!(p.gamma, BTreeSet::from([5]));
        assert_eq!(p.lambda, 1);
        assert!((p.density - 5.0 / 21.0).abs() < 1e-12);
        assert_eq!(p.d_known.unwrap().value, 6);

        let code3 = LdpcCode::pg(3).unwrap();
        assert_eq!((code3.n(), code3.k()), (73, 45));
        assert_eq!(code3.h().rank(), 28);
        assert_eq!(code3.params().rho, BTreeSet::from([9]));
        assert!((code3.params().density - 9.0 / 73.0).abs() < 1e-12);
    }

    #[test]
    fn params_recompute_to_the_same_values() {
        for code in [LdpcCode::eg(2).unwrap(), LdpcCode::pg(2).unwrap()] {
            let again = CodeParams::from_matrix(code.h(), code.params().d_known);
            assert_eq!(&again, code.params());
        }
    }

    #[test]
    fn every_h_row_is_a_dual_codeword() {
        let code = LdpcCode::eg(2).unwrap();
        let dual = code.dual().unwrap();
        assert_eq!(dual.k(), 8);
        // Rows of H are parity checks, i.e. codewords of the dual.
        for r in 0..code.h().rows() {
            assert!(dual.h().mul_vec(&code.h().row(r)).unwrap().is_zero());
        }
    }

    #[test]
    fn base_line_through_origin_is_rejected() {
        // p0 = alpha^0 = 1 with direction 1 gives {1 + eta}, which hits 0.
        let err = LdpcCode::eg_with(2, None, Some((0, 0))).unwrap_err();
        assert_eq!(err, Error::BaseLineThroughOrigin);
    }

    #[test]
    fn alternate_base_gives_the_same_code_up_to_row_order() {
        // Any origin-avoiding base line spans the same orbit.
        let a = LdpcCode::eg(2).unwrap();
        let b = LdpcCode::eg_with(2, None, Some((3, 2))).unwrap();
        let rows_a: HashSet<Vec<u64>> = (0..15).map(|r| a.h().row_words(r).to_vec()).collect();
        let rows_b: HashSet<Vec<u64>> = (0..15).map(|r| b.h().row_words(r).to_vec()).collect();
        assert_eq!(rows_a, rows_b);
        assert_eq!(b.k(), 7);
    }

    #[test]
    fn non_primitive_spec_fails_construction() {
        let spec = FieldSpec {
            m: 4,
            poly: 0b10101,
        };
        let err = LdpcCode::eg_with(2, Some(spec), None).unwrap_err();
        assert!(matches!(err, Error::NotPrimitive { .. }));
    }

    #[test]
    fn cyclic_structure_of_the_geometry_codes() {
        let code = LdpcCode::eg(2).unwrap();
        let cyc = code.cyclic_structure().expect("EG codes are cyclic");
        assert_eq!(cyc.h.degree(), Some(7));
        assert_eq!(cyc.g.degree(), Some(8));
        assert_eq!(cyc.g.mul(&cyc.h), BitPoly::x_pow_plus_one(15));

        let pg = LdpcCode::pg(2).unwrap();
        let cyc = pg.cyclic_structure().expect("PG codes are cyclic");
        assert_eq!(cyc.h.degree(), Some(11));
    }

    #[test]
    fn shift_closure_fails_for_a_non_cyclic_code() {
        let h = crate::decoder::gallager_example();
        let code = LdpcCode::from_parity_check(h, CodeOrigin::Explicit);
        assert!(code.cyclic_structure().is_none());
        assert!(matches!(
            code.encode(&BitVec::zeros(code.k())),
            Err(Error::NotCyclicInput)
        ));
        assert!(matches!(code.dual(), Err(Error::NotCyclicInput)));
    }

    #[test]
    fn encoding_produces_codewords() {
        let code = LdpcCode::eg(2).unwrap();
        let zero = code.encode(&BitVec::zeros(7)).unwrap();
        assert!(zero.is_zero());
        // The unit message encodes to the generator itself.
        let unit = BitVec::from_ones(7, &[0]).unwrap();
        let g = code.cyclic_structure().unwrap().g.clone();
        assert_eq!(code.encode(&unit).unwrap(), g.to_bitvec(15).unwrap());
        // Every message encodes to something with zero syndrome.
        for seed in 0u32..128 {
            let msg = BitVec::from_ones(
                7,
                &(0..7).filter(|i| seed >> i & 1 == 1).collect::<Vec<_>>(),
            )
            .unwrap();
            let cw = code.encode(&msg).unwrap();
            assert!(code.h().mul_vec(&cw).unwrap().is_zero());
        }
        assert!(matches!(
            code.encode(&BitVec::zeros(6)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn brute_force_distances() {
        assert_eq!(
            LdpcCode::eg(2)
                .unwrap()
                .min_distance_bruteforce(22)
                .unwrap(),
            5
        );
        assert_eq!(
            LdpcCode::pg(2)
                .unwrap()
                .min_distance_bruteforce(22)
                .unwrap(),
            6
        );
    }

    #[test]
    fn distance_cap_is_enforced() {
        let code = LdpcCode::eg(3).unwrap(); // k = 37
        assert!(matches!(
            code.min_distance_bruteforce(22),
            Err(Error::DimensionTooLarge { k: 37, cap: 22 })
        ));
        let full = LdpcCode::from_parity_check(BitMatrix::identity(4), CodeOrigin::Explicit);
        assert!(matches!(
            full.min_distance_bruteforce(22),
            Err(Error::ZeroDimension)
        ));
    }

    #[test]
    fn orbit_check_rejects_foreign_rows() {
        // Fabricated mismatch: rows of the true matrix against a line list
        // where one line was replaced.
        let h = eg4_matrix();
        let plane = EgPlane::new(2).unwrap();
        let mut lines = plane.lines_avoiding_origin();
        lines[0] = Line::new(vec![0, 1, 2, 3], false);
        let err = check_orbit_against_lines(&h, &lines, 15).unwrap_err();
        assert!(matches!(err, Error::ShiftOrbitMismatch { .. }));

        let short = &lines[..14];
        assert!(matches!(
            check_orbit_against_lines(&h, short, 15),
            Err(Error::ShiftOrbitMismatch { .. })
        ));
    }
}
