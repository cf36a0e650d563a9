//! Reader and writer for the plain-text alist sparse-matrix format.
//!
//! Layout: "n m" (columns, then rows), the two maximum weights, the n column
//! weights, the m row weights, then one line per column listing 1-based row
//! indices padded with zeros to the maximum column weight, then one line per
//! row listing 1-based column indices padded to the maximum row weight. The
//! writer emits exactly that with single spaces; the reader accepts any
//! whitespace and tolerates padding zeros anywhere in an index list.

use crate::binmat::BitMatrix;
use crate::error::{Error, Result};
use std::fmt::Write as _;

pub fn write_alist(h: &BitMatrix) -> String {
    let (m, n) = (h.rows(), h.cols());
    let row_supports: Vec<Vec<usize>> = (0..m).map(|r| h.row_support(r)).collect();
    let mut col_supports: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (r, support) in row_supports.iter().enumerate() {
        for &c in support {
            col_supports[c].push(r);
        }
    }
    let max_col = col_supports.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = row_supports.iter().map(Vec::len).max().unwrap_or(0);

    let mut out = String::new();
    let _ = writeln!(out, "{n} {m}");
    let _ = writeln!(out, "{max_col} {max_row}");
    push_counts(&mut out, col_supports.iter().map(Vec::len));
    push_counts(&mut out, row_supports.iter().map(Vec::len));
    for support in &col_supports {
        push_indices(&mut out, support, max_col);
    }
    for support in &row_supports {
        push_indices(&mut out, support, max_row);
    }
    out
}

fn push_counts(out: &mut String, counts: impl Iterator<Item = usize>) {
    let mut first = true;
    for c in counts {
        if !first {
            out.push(' ');
        }
        let _ = write!(out, "{c}");
        first = false;
    }
    out.push('\n');
}

fn push_indices(out: &mut String, support: &[usize], width: usize) {
    for i in 0..width {
        if i > 0 {
            out.push(' ');
        }
        // Entries are 1-based; zero pads short lists.
        let v = support.get(i).map_or(0, |&x| x + 1);
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

pub fn read_alist(text: &str) -> Result<BitMatrix> {
    let mut tokens = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad alist token {t:?}")))
    });
    let mut next = |what: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("alist truncated before {what}")))?
    };

    let n = next("column count")?;
    let m = next("row count")?;
    let max_col = next("max column weight")?;
    let max_row = next("max row weight")?;
    let col_weights: Vec<usize> = (0..n)
        .map(|_| next("column weights"))
        .collect::<Result<_>>()?;
    let row_weights: Vec<usize> = (0..m).map(|_| next("row weights")).collect::<Result<_>>()?;
    if let Some(&w) = col_weights.iter().find(|&&w| w > max_col.max(m)) {
        return Err(Error::Parse(format!("column weight {w} exceeds bounds")));
    }
    if let Some(&w) = row_weights.iter().find(|&&w| w > max_row.max(n)) {
        return Err(Error::Parse(format!("row weight {w} exceeds bounds")));
    }

    let mut h = BitMatrix::zeros(m, n);
    for (c, &declared) in col_weights.iter().enumerate() {
        let mut seen = 0usize;
        for _ in 0..max_col {
            let v = next("column index lists")?;
            if v == 0 {
                continue;
            }
            if v > m {
                return Err(Error::Parse(format!(
                    "row index {v} out of range 1..={m} in column {c}"
                )));
            }
            if h.get(v - 1, c) {
                return Err(Error::Parse(format!("duplicate entry ({v}, {c})")));
            }
            h.set(v - 1, c, true);
            seen += 1;
        }
        if seen != declared {
            return Err(Error::Parse(format!(
                "column {c} lists {seen} entries but declares weight {declared}"
            )));
        }
    }

    // The row section is redundant; read it and insist it agrees.
    for (r, &declared) in row_weights.iter().enumerate() {
        let mut listed = Vec::new();
        for _ in 0..max_row {
            let v = next("row index lists")?;
            if v == 0 {
                continue;
            }
            if v > n {
                return Err(Error::Parse(format!(
                    "column index {v} out of range 1..={n} in row {r}"
                )));
            }
            listed.push(v - 1);
        }
        listed.sort_unstable();
        listed.dedup();
        if listed != h.row_support(r) || listed.len() != declared {
            return Err(Error::Parse(format!(
                "row section disagrees with column section at row {r}"
            )));
        }
    }

    if tokens.next().is_some() {
        return Err(Error::Parse("trailing data after alist body".into()));
    }
    Ok(h)
}
