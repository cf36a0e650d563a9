//! Dense GF(2) matrices packed into 64-bit words, with row-reduction based
//! linear algebra: rank, reduced row echelon form, null spaces, and the
//! weight/overlap profile used to judge low-density structure.

use crate::bits::{words_for, BitVec, WORD_BITS};
use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// Row-major bit matrix. Rows are stored as contiguous word runs so row
/// operations are word-wide XORs.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    words: Vec<u64>,
}

/// Result of Gaussian elimination: the reduced row echelon form, its rank,
/// and the pivot column of each of the first `rank` rows.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rref: BitMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Weight and overlap profile of a matrix.
///
/// `lambda` is the maximum number of rows in which any two distinct columns
/// both have a one. A parity-check matrix in the low-density sense has
/// constant row weight, constant column weight, and `lambda <= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub rows: usize,
    pub cols: usize,
    pub row_weights: Vec<usize>,
    pub col_weights: Vec<usize>,
    pub lambda: usize,
    pub ones: u64,
}

impl Profile {
    /// Fraction of entries that are one.
    pub fn density(&self) -> f64 {
        if self.rows == 0 || self.cols == 0 {
            return 0.0;
        }
        self.ones as f64 / (self.rows as f64 * self.cols as f64)
    }

    pub fn row_weight_set(&self) -> BTreeSet<usize> {
        self.row_weights.iter().copied().collect()
    }

    pub fn col_weight_set(&self) -> BTreeSet<usize> {
        self.col_weights.iter().copied().collect()
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols);
        BitMatrix {
            rows,
            cols,
            wpr,
            words: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[BitVec]) -> Result<Self> {
        let cols = rows.first().map_or(0, BitVec::len);
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            m.words[i * m.wpr..(i + 1) * m.wpr].copy_from_slice(r.words());
        }
        Ok(m)
    }

    /// Build from strings of '0'/'1', one string per row.
    pub fn from_bit_strings(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<BitVec> = rows
            .iter()
            .map(|s| BitVec::parse(s))
            .collect::<Result<_>>()?;
        BitMatrix::from_rows(&parsed)
    }

    /// Build from per-row lists of column indices carrying a one.
    pub fn from_row_supports(rows: usize, cols: usize, supports: &[Vec<usize>]) -> Result<Self> {
        if supports.len() != rows {
            return Err(Error::LengthMismatch {
                expected: rows,
                got: supports.len(),
            });
        }
        let mut m = BitMatrix::zeros(rows, cols);
        for (i, support) in supports.iter().enumerate() {
            for &j in support {
                if j >= cols {
                    return Err(Error::OutOfRange {
                        what: "column index",
                        value: j,
                        limit: cols,
                    });
                }
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        self.words[r * self.wpr + c / WORD_BITS] >> (c % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(
            r < self.rows && c < self.cols,
            "index ({r},{c}) out of range"
        );
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.words[r * self.wpr + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(r).to_vec())
    }

    pub fn set_row(&mut self, r: usize, v: &BitVec) {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        self.words[r * self.wpr..(r + 1) * self.wpr].copy_from_slice(v.words());
    }

    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.words[r * self.wpr..(r + 1) * self.wpr]
    }

    pub fn row_support(&self, r: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &word) in self.row_words(r).iter().enumerate() {
            let mut w = word;
            while w != 0 {
                out.push(wi * WORD_BITS + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.wpr {
            self.words.swap(a * self.wpr + w, b * self.wpr + w);
        }
    }

    /// XOR row `src` into row `dst` in place.
    fn xor_rows(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let wpr = self.wpr;
        let (s, d) = if src < dst {
            let (lo, hi) = self.words.split_at_mut(dst * wpr);
            (&lo[src * wpr..src * wpr + wpr], &mut hi[..wpr])
        } else {
            let (lo, hi) = self.words.split_at_mut(src * wpr);
            (&hi[..wpr], &mut lo[dst * wpr..dst * wpr + wpr])
        };
        for w in 0..wpr {
            d[w] ^= s[w];
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_support(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Matrix-vector product over GF(2): returns `self * v` as a column of
    /// length `rows`.
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let parity = self
                .row_words(r)
                .iter()
                .zip(v.words())
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
            if parity & 1 == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// `self * other^T`, an (rows x other.rows) matrix.
    pub fn mul_transpose(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut out = BitMatrix::zeros(self.rows, other.rows);
        for r in 0..self.rows {
            for c in 0..other.rows {
                let parity = self
                    .row_words(r)
                    .iter()
                    .zip(other.row_words(c))
                    .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
                if parity & 1 == 1 {
                    out.set(r, c, true);
                }
            }
        }
        Ok(out)
    }

    /// Gaussian elimination to reduced row echelon form.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0usize;
        for c in 0..m.cols {
            if next == m.rows {
                break;
            }
            let Some(p) = (next..m.rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            m.swap_rows(next, p);
            for r in 0..m.rows {
                if r != next && m.get(r, c) {
                    m.xor_rows(next, r);
                }
            }
            pivots.push(c);
            next += 1;
        }
        Echelon {
            rref: m,
            rank: next,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank
    }

    /// Basis of the right null space, one vector per row. The number of rows
    /// equals `cols - rank`.
    pub fn null_space(&self) -> BitMatrix {
        let ech = self.echelon();
        let pivots = &ech.pivots;
        let mut is_pivot = vec![false; self.cols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = BitMatrix::zeros(free.len(), self.cols);
        for (bi, &f) in free.iter().enumerate() {
            basis.set(bi, f, true);
            for (ri, &p) in pivots.iter().enumerate() {
                if ech.rref.get(ri, f) {
                    basis.set(bi, p, true);
                }
            }
        }
        basis
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok(self.echelon().contains(v))
    }

    /// Weight and pairwise column overlap profile.
    ///
    /// The overlap pass walks every pair of ones inside each row, so the cost
    /// is the sum of `w_r * (w_r - 1) / 2` over rows. That is cheap exactly
    /// when the matrix is sparse, which is the intended use.
    pub fn profile(&self) -> Profile {
        let row_weights: Vec<usize> = (0..self.rows).map(|r| self.row_weight(r)).collect();
        let mut col_weights = vec![0usize; self.cols];
        let ones: u64 = row_weights.iter().map(|&w| w as u64).sum();
        for r in 0..self.rows {
            for c in self.row_support(r) {
                col_weights[c] += 1;
            }
        }

        // Pair occupancy bitmap plus an overflow map for pairs seen more than
        // once; lambda is exact even when overlaps exceed one.
        let lambda = if self.cols < 2 {
            0
        } else {
            let npairs = self.cols * (self.cols - 1) / 2;
            let mut seen = vec![0u64; words_for(npairs)];
            let mut extra: HashMap<usize, usize> = HashMap::new();
            let mut any = false;
            for r in 0..self.rows {
                let support = self.row_support(r);
                for (i, &a) in support.iter().enumerate() {
                    // Index of pair (a, b) in the upper-triangle enumeration.
                    let base = a * (2 * self.cols - a - 1) / 2;
                    for &b in &support[i + 1..] {
                        let idx = base + b - a - 1;
                        let (w, bit) = (idx / WORD_BITS, 1u64 << (idx % WORD_BITS));
                        if seen[w] & bit == 0 {
                            seen[w] |= bit;
                            any = true;
                        } else {
                            *extra.entry(idx).or_insert(0) += 1;
                        }
                    }
                }
            }
            match extra.values().max() {
                Some(&over) => 1 + over,
                None if any => 1,
                None => 0,
            }
        };

        Profile {
            rows: self.rows,
            cols: self.cols,
            row_weights,
            col_weights,
            lambda,
            ones,
        }
    }

    /// Copy with the listed columns removed.
    pub fn delete_columns(&self, cols: &[usize]) -> Result<BitMatrix> {
        let drop: BTreeSet<usize> = cols.iter().copied().collect();
        if let Some(&bad) = drop.iter().find(|&&c| c >= self.cols) {
            return Err(Error::OutOfRange {
                what: "column index",
                value: bad,
                limit: self.cols,
            });
        }
        let keep: Vec<usize> = (0..self.cols).filter(|c| !drop.contains(c)).collect();
        let mut out = BitMatrix::zeros(self.rows, keep.len());
        for r in 0..self.rows {
            for (nc, &oc) in keep.iter().enumerate() {
                if self.get(r, oc) {
                    out.set(r, nc, true);
                }
            }
        }
        Ok(out)
    }

    /// Copy without all-zero rows; also reports which row indices were kept.
    pub fn drop_zero_rows(&self) -> (BitMatrix, Vec<usize>) {
        let kept: Vec<usize> = (0..self.rows)
            .filter(|&r| self.row_words(r).iter().any(|&w| w != 0))
            .collect();
        let mut out = BitMatrix::zeros(kept.len(), self.cols);
        for (nr, &or) in kept.iter().enumerate() {
            out.words[nr * out.wpr..(nr + 1) * out.wpr].copy_from_slice(self.row_words(or));
        }
        (out, kept)
    }
}

impl Echelon {
    /// Reduce `v` against the pivot rows; membership in the row space is
    /// equivalent to reducing to zero.
    pub fn contains(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.rref.cols, "vector length mismatch");
        let mut rem = v.clone();
        for (ri, &p) in self.pivots.iter().enumerate() {
            if rem.get(p) {
                rem.xor_assign(&self.rref.row(ri));
            }
        }
        rem.is_zero()
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_random(rows: usize, cols: usize, seed: u64) -> BitMatrix {
        // Tiny xorshift so the property loops do not need a full RNG stack.
        let mut state = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if next() & 1 == 1 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    #[test]
    fn identity_rank_and_null_space() {
        let id = BitMatrix::identity(5);
        let ech = id.echelon();
        assert_eq!(ech.rank, 5);
        assert_eq!(ech.pivots, vec![0, 1, 2, 3, 4]);
        assert_eq!(ech.rref, id);
        assert_eq!(id.null_space().rows(), 0);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = BitMatrix::from_bit_strings(&["1100", "0110", "1010", "0001"]).unwrap();
        // Row 3 = row 1 + row 2, so rank is 3.
        assert_eq!(m.rank(), 3);
        let ns = m.null_space();
        assert_eq!(ns.rows(), 1);
        assert!(m.mul_vec(&ns.row(0)).unwrap().is_zero());
    }

    #[test]
    fn null_space_vectors_annihilate() {
        let m = small_random(7, 12, 3);
        let ns = m.null_space();
        assert_eq!(ns.rows(), 12 - m.rank());
        for r in 0..ns.rows() {
            assert!(m.mul_vec(&ns.row(r)).unwrap().is_zero());
        }
        assert_eq!(ns.rank(), ns.rows());
    }

    #[test]
    fn row_space_membership() {
        let m = BitMatrix::from_bit_strings(&["10110", "01011"]).unwrap();
        let sum = {
            let mut v = m.row(0);
            v.xor_assign(&m.row(1));
            v
        };
        assert!(m.row_space_contains(&sum).unwrap());
        assert!(m.row_space_contains(&BitVec::zeros(5)).unwrap());
        assert!(!m
            .row_space_contains(&BitVec::parse("00001").unwrap())
            .unwrap());
        assert!(matches!(
            m.row_space_contains(&BitVec::zeros(4)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn profile_counts_weights_and_overlap() {
        let m = BitMatrix::from_bit_strings(&["1100", "1010", "0110"]).unwrap();
        let p = m.profile();
        assert_eq!(p.row_weights, vec![2, 2, 2]);
        assert_eq!(p.col_weights, vec![2, 2, 2, 0]);
        assert_eq!(p.ones, 6);
        assert_eq!(p.lambda, 1);
        assert_eq!(p.density(), 0.5);
    }

    #[test]
    fn lambda_counts_repeated_pairs_exactly() {
        let m = BitMatrix::from_bit_strings(&["110", "110", "110"]).unwrap();
        assert_eq!(m.profile().lambda, 3);
        let z = BitMatrix::zeros(2, 2);
        assert_eq!(z.profile().lambda, 0);
        let single = BitMatrix::from_bit_strings(&["10", "01"]).unwrap();
        assert_eq!(single.profile().lambda, 0);
    }

    #[test]
    fn lambda_matches_transpose_product_on_random_matrices() {
        for seed in 0..20 {
            let m = small_random(6, 9, seed);
            let p = m.profile();
            // Independent overlap computation straight from the definition.
            let mut expect = 0usize;
            for a in 0..9 {
                for b in a + 1..9 {
                    let overlap = (0..6).filter(|&r| m.get(r, a) && m.get(r, b)).count();
                    expect = expect.max(overlap);
                }
            }
            assert_eq!(p.lambda, expect, "seed {seed}");
        }
    }

    #[test]
    fn delete_columns_and_drop_zero_rows() {
        let m = BitMatrix::from_bit_strings(&["10110", "01000", "00110"]).unwrap();
        let cut = m.delete_columns(&[1, 3]).unwrap();
        assert_eq!(cut.rows(), 3);
        assert_eq!(cut.cols(), 3);
        assert_eq!(cut.row(0).to_string(), "110");
        assert_eq!(cut.row(1).to_string(), "000");
        let (kept, idx) = cut.drop_zero_rows();
        assert_eq!(kept.rows(), 2);
        assert_eq!(idx, vec![0, 2]);
        assert!(matches!(
            m.delete_columns(&[7]),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn mul_transpose_matches_manual_dot_products() {
        let a = small_random(4, 10, 11);
        let b = small_random(5, 10, 12);
        let p = a.mul_transpose(&b).unwrap();
        for r in 0..4 {
            for c in 0..5 {
                let dot = (0..10).filter(|&j| a.get(r, j) && b.get(c, j)).count();
                assert_eq!(p.get(r, c), dot % 2 == 1);
            }
        }
    }

    #[test]
    fn transpose_involution() {
        let m = small_random(6, 13, 5);
        assert_eq!(m.transpose().transpose(), m);
    }

    proptest! {
        #[test]
        fn rank_plus_nullity_is_cols(rows in 1usize..8, cols in 1usize..12, seed in 0u64..500) {
            let m = small_random(rows, cols, seed);
            let ech = m.echelon();
            prop_assert_eq!(ech.rank + m.null_space().rows(), cols);
            prop_assert!(ech.rank <= rows.min(cols));
            // rref preserves the row space.
            for r in 0..rows {
                prop_assert!(ech.contains(&m.row(r)));
            }
        }

        #[test]
        fn profile_ones_equals_weight_sums(rows in 1usize..8, cols in 1usize..12, seed in 0u64..200) {
            let m = small_random(rows, cols, seed);
            let p = m.profile();
            let by_rows: usize = p.row_weights.iter().sum();
            let by_cols: usize = p.col_weights.iter().sum();
            prop_assert_eq!(by_rows, by_cols);
            prop_assert_eq!(p.ones as usize, by_rows);
        }
    }
}
