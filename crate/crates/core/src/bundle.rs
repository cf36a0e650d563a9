//! Versioned JSON bundles for codes and CSS pairs.
//!
//! A bundle stores the parity-check matrix as hex-packed little-endian row
//! strings plus explicit dimensions, the origin chain, the parameter summary,
//! and (for cyclic codes) the generator and check polynomials as exponent
//! lists. Loading re-derives rank, parameters, and cyclic structure from the
//! matrix and refuses bundles whose stored summaries disagree, so a bundle
//! can never smuggle in wrong metadata.

use crate::binmat::BitMatrix;
use crate::bits::BitVec;
use crate::codes::{CodeOrigin, CodeParams, LdpcCode};
use crate::css::CssCode;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub const FORMAT: u32 = 1;

/// Bit matrix as hex rows: bit i of a row sits in bit i % 8 of byte i / 8.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackedMatrix {
    pub rows: usize,
    pub cols: usize,
    pub row_hex: Vec<String>,
}

impl PackedMatrix {
    pub fn pack(h: &BitMatrix) -> Self {
        PackedMatrix {
            rows: h.rows(),
            cols: h.cols(),
            row_hex: (0..h.rows())
                .map(|r| hex::encode(h.row(r).to_bytes()))
                .collect(),
        }
    }

    pub fn unpack(&self) -> Result<BitMatrix> {
        if self.row_hex.len() != self.rows {
            return Err(Error::LengthMismatch {
                expected: self.rows,
                got: self.row_hex.len(),
            });
        }
        let rows: Vec<BitVec> = self
            .row_hex
            .iter()
            .map(|s| {
                let bytes =
                    hex::decode(s).map_err(|e| Error::Parse(format!("bad row hex: {e}")))?;
                BitVec::from_bytes(self.cols, &bytes)
            })
            .collect::<Result<_>>()?;
        if self.rows == 0 {
            return Ok(BitMatrix::zeros(0, self.cols));
        }
        BitMatrix::from_rows(&rows)
    }
}

/// Generator and check polynomial as ascending exponent lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicPolys {
    pub g: Vec<usize>,
    pub h: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeBundle {
    pub format: u32,
    pub kind: String,
    pub origin: CodeOrigin,
    pub h: PackedMatrix,
    pub params: CodeParams,
    pub cyclic: Option<CyclicPolys>,
}

impl CodeBundle {
    pub fn from_code(code: &LdpcCode) -> Self {
        CodeBundle {
            format: FORMAT,
            kind: "code".into(),
            origin: code.origin().clone(),
            h: PackedMatrix::pack(code.h()),
            params: code.params().clone(),
            cyclic: code.cyclic_structure().map(|cyc| CyclicPolys {
                g: cyc.g.coeffs(),
                h: cyc.h.coeffs(),
            }),
        }
    }

    pub fn into_code(self) -> Result<LdpcCode> {
        if self.format != FORMAT {
            return Err(Error::BundleFormat {
                found: self.format,
                expected: FORMAT,
            });
        }
        if self.kind != "code" {
            return Err(Error::Parse(format!(
                "expected a code bundle, found kind {:?}",
                self.kind
            )));
        }
        let h = self.h.unpack()?;
        let code = LdpcCode::with_distance(h, self.origin, self.params.d_known);
        let fresh = CodeParams::from_matrix(code.h(), self.params.d_known);
        if fresh != self.params {
            return Err(Error::Parse(
                "stored parameters disagree with the stored matrix".into(),
            ));
        }
        match (&self.cyclic, code.cyclic_structure()) {
            (None, _) => {}
            (Some(stored), Some(cyc)) => {
                if stored.g != cyc.g.coeffs() || stored.h != cyc.h.coeffs() {
                    return Err(Error::Parse(
                        "stored cyclic polynomials disagree with the stored matrix".into(),
                    ));
                }
            }
            (Some(_), None) => {
                return Err(Error::Parse(
                    "bundle claims cyclic structure the stored matrix does not have".into(),
                ));
            }
        }
        Ok(code)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CssBundle {
    pub format: u32,
    pub kind: String,
    pub c1: CodeBundle,
    pub c2: CodeBundle,
    pub k_quantum: usize,
}

impl CssBundle {
    pub fn from_css(css: &CssCode) -> Self {
        CssBundle {
            format: FORMAT,
            kind: "css".into(),
            c1: CodeBundle::from_code(css.c1()),
            c2: CodeBundle::from_code(css.c2()),
            k_quantum: css.k_quantum(),
        }
    }

    /// Rebuilds the pair, re-verifying nesting and the logical qubit count.
    pub fn into_css(self) -> Result<CssCode> {
        if self.format != FORMAT {
            return Err(Error::BundleFormat {
                found: self.format,
                expected: FORMAT,
            });
        }
        if self.kind != "css" {
            return Err(Error::Parse(format!(
                "expected a css bundle, found kind {:?}",
                self.kind
            )));
        }
        let css = CssCode::new(self.c1.into_code()?, self.c2.into_code()?)?;
        if css.k_quantum() != self.k_quantum {
            return Err(Error::Parse(format!(
                "bundle claims {} logical qubits, matrices give {}",
                self.k_quantum,
                css.k_quantum()
            )));
        }
        Ok(css)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Either bundle kind, as found in incoming JSON. Short-lived carrier, so
/// the size gap between the variants is not worth an indirection.
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Bundle {
    Code(CodeBundle),
    Css(CssBundle),
}

/// Parse a JSON bundle of either kind, dispatching on the "kind" field.
pub fn parse_bundle(text: &str) -> Result<Bundle> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    match value.get("kind").and_then(|k| k.as_str()) {
        Some("code") => Ok(Bundle::Code(serde_json::from_value(value)?)),
        Some("css") => Ok(Bundle::Css(serde_json::from_value(value)?)),
        Some(other) => Err(Error::Parse(format!("unknown bundle kind {other:?}"))),
        None => Err(Error::Parse("bundle is missing its kind field".into())),
    }
}
