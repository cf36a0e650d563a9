//! Hard-decision bit-flip decoding.
//!
//! Each round tallies, for every bit, the number of unsatisfied checks it
//! appears in, then flips a set of bits chosen by the active rule: `Max`
//! flips every bit attaining the round's maximum tally, `Threshold(t)` flips
//! every bit whose tally exceeds t. Decoding succeeds when the syndrome
//! reaches zero; it fails after `max_iter` rounds, or for the threshold rule
//! as soon as no tally clears the bar.

use crate::binmat::BitMatrix;
use crate::bits::BitVec;
use crate::codes::check_walk_dim;
use crate::error::{Error, Result};
use std::str::FromStr;

/// Which bits to flip each round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipRule {
    /// Flip every bit with the maximum tally of unsatisfied checks.
    Max,
    /// Flip every bit whose tally strictly exceeds the threshold.
    Threshold(u32),
}

impl FromStr for FlipRule {
    type Err = Error;

    /// Accepts "max" or "threshold:N".
    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("max") {
            return Ok(FlipRule::Max);
        }
        if let Some(t) = s.strip_prefix("threshold:") {
            let t = t
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad threshold in flip rule {s:?}")))?;
            return Ok(FlipRule::Threshold(t));
        }
        Err(Error::Parse(format!(
            "unknown flip rule {s:?}, expected \"max\" or \"threshold:N\""
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlipPolicy {
    pub rule: FlipRule,
    pub max_iter: usize,
}

impl Default for FlipPolicy {
    fn default() -> Self {
        FlipPolicy {
            rule: FlipRule::Max,
            max_iter: 50,
        }
    }
}

/// Outcome of a decode call. `word` is the final state whether or not
/// decoding succeeded; `iterations` counts flip rounds actually performed.
/// `flip_counts_last` holds the last round's tallies (all zero if the input
/// was already a codeword).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    pub word: BitVec,
    pub iterations: usize,
    pub success: bool,
    pub flip_counts_last: Vec<u32>,
}

/// Reusable decoder for one parity-check matrix; precomputes row supports.
pub struct Decoder<'a> {
    h: &'a BitMatrix,
    supports: Vec<Vec<u32>>,
}

impl<'a> Decoder<'a> {
    pub fn new(h: &'a BitMatrix) -> Self {
        let supports = (0..h.rows())
            .map(|r| h.row_support(r).into_iter().map(|j| j as u32).collect())
            .collect();
        Decoder { h, supports }
    }

    pub fn decode(&self, received: &BitVec, policy: FlipPolicy) -> Result<DecodeResult> {
        if received.len() != self.h.cols() {
            return Err(Error::LengthMismatch {
                expected: self.h.cols(),
                got: received.len(),
            });
        }
        let mut word = received.clone();
        let mut counts = vec![0u32; self.h.cols()];
        let mut iterations = 0;
        loop {
            let syn = self.h.mul_vec(&word)?;
            if syn.is_zero() {
                return Ok(DecodeResult {
                    word,
                    iterations,
                    success: true,
                    flip_counts_last: counts,
                });
            }
            if iterations == policy.max_iter {
                return Ok(DecodeResult {
                    word,
                    iterations,
                    success: false,
                    flip_counts_last: counts,
                });
            }
            counts.fill(0);
            for r in syn.ones() {
                for &j in &self.supports[r] {
                    counts[j as usize] += 1;
                }
            }
            let flips: Vec<usize> = match policy.rule {
                FlipRule::Max => {
                    let top = *counts.iter().max().expect("nonempty");
                    counts
                        .iter()
                        .enumerate()
                        .filter(|&(_, &c)| c == top && top > 0)
                        .map(|(j, _)| j)
                        .collect()
                }
                FlipRule::Threshold(t) => counts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| c > t)
                    .map(|(j, _)| j)
                    .collect(),
            };
            if flips.is_empty() {
                // The threshold rule can stall; report failure, not an error.
                return Ok(DecodeResult {
                    word,
                    iterations,
                    success: false,
                    flip_counts_last: counts,
                });
            }
            for j in flips {
                word.flip(j);
            }
            iterations += 1;
        }
    }
}

/// One-shot decode without keeping the decoder around.
pub fn bitflip_decode(
    h: &BitMatrix,
    received: &BitVec,
    policy: FlipPolicy,
) -> Result<DecodeResult> {
    Decoder::new(h).decode(received, policy)
}

/// Syndrome of a word, H * w over GF(2).
pub fn syndrome(h: &BitMatrix, word: &BitVec) -> Result<BitVec> {
    h.mul_vec(word)
}

/// Result of exhaustive nearest-codeword search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleDecode {
    pub codeword: BitVec,
    pub distance: usize,
    /// False if another codeword attains the same distance.
    pub unique: bool,
}

/// Walk all 2^k codewords and return one at minimum Hamming distance from
/// `received`. Intended as a ground-truth oracle for small codes; errors if
/// k exceeds `cap`.
pub fn nearest_codeword_oracle(
    h: &BitMatrix,
    received: &BitVec,
    cap: usize,
) -> Result<OracleDecode> {
    if received.len() != h.cols() {
        return Err(Error::LengthMismatch {
            expected: h.cols(),
            got: received.len(),
        });
    }
    let basis = h.null_space();
    let k = basis.rows();
    check_walk_dim(k, cap)?;
    let rows: Vec<BitVec> = (0..k).map(|r| basis.row(r)).collect();
    let mut current = BitVec::zeros(h.cols());
    let mut best = current.clone();
    let mut best_d = received.weight();
    let mut unique = true;
    for counter in 1u64..1 << k {
        current.xor_assign(&rows[counter.trailing_zeros() as usize]);
        let d = current.hamming(received);
        if d < best_d {
            best_d = d;
            best = current.clone();
            unique = true;
        } else if d == best_d {
            unique = false;
        }
    }
    Ok(OracleDecode {
        codeword: best,
        distance: best_d,
        unique,
    })
}

/// The classic 20-bit low-density example matrix with uniform column weight
/// 3 and row weight 4, used as a decoder fixture.
pub fn gallager_example() -> BitMatrix {
    const ROWS: [[usize; 4]; 15] = [
        [0, 1, 2, 3],
        [4, 5, 6, 7],
        [8, 9, 10, 11],
        [12, 13, 14, 15],
        [16, 17, 18, 19],
        [0, 4, 8, 12],
        [1, 5, 9, 16],
        [2, 6, 13, 17],
        [3, 10, 14, 18],
        [7, 11, 15, 19],
        [0, 5, 11, 17],
        [1, 6, 10, 15],
        [2, 7, 12, 18],
        [3, 8, 13, 16],
        [4, 9, 14, 19],
    ];
    let supports: Vec<Vec<usize>> = ROWS.iter().map(|r| r.to_vec()).collect();
    BitMatrix::from_row_supports(15, 20, &supports).expect("fixture is valid")
}
