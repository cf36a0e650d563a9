//! Low-density parity-check codes from finite-geometry incidence structures.
//!
//! The library builds cyclic LDPC codes whose parity checks are the lines of
//! Euclidean and projective planes over GF(2^s), applies structure-preserving
//! transforms (row/column splitting, puncturing), assembles CSS quantum codes
//! from nested pairs, decodes with one-step majority-logic bit flipping, and
//! runs reproducible Monte Carlo channel simulations. The `cli` module wires
//! everything into the `geoldpc` binary; `alist` and `bundle` provide the
//! on-disk formats.

pub mod alist;
pub mod binmat;
pub mod bits;
pub mod bundle;
pub mod cli;
pub mod codes;
pub mod css;
pub mod decoder;
pub mod error;
pub mod geometry;
pub mod gf2m;
pub mod poly;
pub mod simulate;
pub mod transforms;

pub use binmat::{BitMatrix, Echelon, Profile};
pub use bits::BitVec;
pub use bundle::{parse_bundle, Bundle, CodeBundle, CssBundle};
pub use codes::{
    CodeOrigin, CodeParams, CyclicStructure, DistanceBound, DistanceProvenance, LdpcCode,
};
pub use css::CssCode;
pub use decoder::{
    bitflip_decode, nearest_codeword_oracle, DecodeResult, Decoder, FlipPolicy, FlipRule,
    OracleDecode,
};
pub use error::{Error, Result};
pub use gf2m::{FieldSpec, FieldTable};
pub use poly::BitPoly;
pub use simulate::{
    run_bsc_sim, run_bsc_sim_range, run_css_sim, run_css_sim_oracle, run_css_sim_range,
    ChannelSpec, SimReport,
};
pub use transforms::{SplitDirection, SplitSpec};
