//! Structure-preserving transforms on parity-check matrices.
//!
//! Splitting distributes the ones of each row (or column) round-robin over q
//! fragment rows (or columns), in ascending index order: the t-th one goes to
//! fragment t mod q. Fragments of a row XOR back to the original row, so the
//! split code's checks span the original checks and the split code is nested
//! inside the original one. Puncturing removes the points of one line of the
//! code and drops the checks that become empty.

use crate::binmat::BitMatrix;
use crate::bits::BitVec;
use crate::codes::{CodeOrigin, LdpcCode};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitDirection {
    Rows,
    Columns,
}

/// A splitting instruction, mostly for serialized pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub q: usize,
    pub direction: SplitDirection,
}

impl SplitSpec {
    pub fn apply(&self, h: &BitMatrix) -> Result<BitMatrix> {
        match self.direction {
            SplitDirection::Rows => split_rows(h, self.q),
            SplitDirection::Columns => split_columns(h, self.q),
        }
    }
}

fn check_split_factor(q: usize) -> Result<()> {
    if q < 2 {
        return Err(Error::BadSplitFactor { q });
    }
    Ok(())
}

/// Split every column into q fragment columns; column j becomes columns
/// q*j .. q*j+q-1. The result has the same rows and q times the columns.
pub fn split_columns(h: &BitMatrix, q: usize) -> Result<BitMatrix> {
    check_split_factor(q)?;
    let mut out = BitMatrix::zeros(h.rows(), h.cols() * q);
    let mut zero_fragments = 0usize;
    for j in 0..h.cols() {
        let mut t = 0usize;
        for i in 0..h.rows() {
            if h.get(i, j) {
                out.set(i, j * q + t % q, true);
                t += 1;
            }
        }
        if t < q {
            zero_fragments += q - t;
        }
    }
    if zero_fragments > 0 {
        log::warn!("column split by {q} produced {zero_fragments} all-zero fragment columns");
    }
    Ok(out)
}

/// Split every row into q fragment rows; row i becomes rows
/// q*i .. q*i+q-1. The result has q times the rows and the same columns.
pub fn split_rows(h: &BitMatrix, q: usize) -> Result<BitMatrix> {
    check_split_factor(q)?;
    let mut out = BitMatrix::zeros(h.rows() * q, h.cols());
    let mut zero_fragments = 0usize;
    for i in 0..h.rows() {
        let support = h.row_support(i);
        for (t, &j) in support.iter().enumerate() {
            out.set(i * q + t % q, j, true);
        }
        if support.len() < q {
            zero_fragments += q - support.len();
        }
    }
    if zero_fragments > 0 {
        log::warn!("row split by {q} produced {zero_fragments} all-zero fragment rows");
    }
    Ok(out)
}

/// Remove the coordinates of `line` and drop any checks left empty. The line
/// must be one of the rows of `h`. Returns the trimmed matrix and the indices
/// of the surviving rows.
pub fn puncture(h: &BitMatrix, line: &BitVec) -> Result<(BitMatrix, Vec<usize>)> {
    if line.len() != h.cols() {
        return Err(Error::LengthMismatch {
            expected: h.cols(),
            got: line.len(),
        });
    }
    if !(0..h.rows()).any(|r| h.row_words(r) == line.words()) {
        return Err(Error::LineNotInCode);
    }
    Ok(h.delete_columns(&line.ones())?.drop_zero_rows())
}

fn derived(code: &LdpcCode, transform: String) -> CodeOrigin {
    CodeOrigin::Derived {
        base: Box::new(code.origin().clone()),
        transform,
    }
}

impl LdpcCode {
    /// Column-split this code's parity-check matrix by q.
    pub fn split_columns(&self, q: usize) -> Result<LdpcCode> {
        let h = split_columns(self.h(), q)?;
        Ok(LdpcCode::from_parity_check(
            h,
            derived(self, format!("split_cols(q={q})")),
        ))
    }

    /// Row-split this code's parity-check matrix by q. The result is a
    /// subcode of this code.
    pub fn split_rows(&self, q: usize) -> Result<LdpcCode> {
        let h = split_rows(self.h(), q)?;
        Ok(LdpcCode::from_parity_check(
            h,
            derived(self, format!("split_rows(q={q})")),
        ))
    }

    /// Puncture on an explicit line, which must be one of the parity checks.
    pub fn puncture(&self, line: &BitVec) -> Result<LdpcCode> {
        let (h, _kept) = puncture(self.h(), line)?;
        Ok(LdpcCode::from_parity_check(
            h,
            derived(self, "puncture".into()),
        ))
    }

    /// Puncture on row `row` of the parity-check matrix.
    pub fn puncture_row(&self, row: usize) -> Result<LdpcCode> {
        if row >= self.h().rows() {
            return Err(Error::OutOfRange {
                what: "row index",
                value: row,
                limit: self.h().rows(),
            });
        }
        self.puncture(&self.h().row(row))
    }
}
