//! Seeded Monte Carlo decoding runs over memoryless channels.
//!
//! Reproducibility contract: trial i draws from ChaCha8 seeded with
//! `seed ^ i`, so any partition of the trial range can run serially or in
//! parallel and produce identical reports. Within a trial the draw order is
//! fixed: for the classical channel, ceil(k/64) words of message bits, then
//! one coin per transmitted bit; for the X/Z channel, n X coins then n Z
//! coins. A coin is `(next_u64() >> 11) * 2^-53 < p`. Reports carry raw
//! integer counts only, so merging partial runs is exact.

use crate::binmat::Echelon;
use crate::bits::BitVec;
use crate::codes::LdpcCode;
use crate::css::CssCode;
use crate::decoder::{nearest_codeword_oracle, Decoder, FlipPolicy};
use crate::error::{Error, Result};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use std::ops::Range;

/// Memoryless channel description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelSpec {
    /// Binary symmetric channel: each bit flips with probability p.
    Bsc { p: f64 },
    /// Independent bit-flip and phase-flip errors for CSS codes.
    PauliXz { px: f64, pz: f64 },
}

impl ChannelSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ChannelSpec::Bsc { p } => check_prob(p),
            ChannelSpec::PauliXz { px, pz } => {
                check_prob(px)?;
                check_prob(pz)
            }
        }
    }
}

fn check_prob(value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::InvalidProbability { value })
    }
}

/// Outcome of a simulation run. All fields are exact counts; the rate
/// accessors divide on demand so merged reports stay bit-exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimReport {
    pub trials: u64,
    /// Residual wrong bits after decoding, summed over trials, counted
    /// whether or not the decoder declared success.
    pub bit_errors: u64,
    /// Trials whose outcome was not the transmitted word (classical) or not
    /// a logical identity (CSS).
    pub word_failures: u64,
    pub total_iterations: u64,
    pub decode_calls: u64,
    /// CSS only: trials whose residual X error fell outside C2.
    pub x_failures: Option<u64>,
    /// CSS only: trials whose residual Z error fell outside the dual of C1.
    pub z_failures: Option<u64>,
    pub seed: u64,
    pub block_length: usize,
}

impl SimReport {
    pub fn ber(&self) -> f64 {
        if self.trials == 0 || self.block_length == 0 {
            return 0.0;
        }
        self.bit_errors as f64 / (self.trials as f64 * self.block_length as f64)
    }

    pub fn fer(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        self.word_failures as f64 / self.trials as f64
    }

    pub fn mean_iterations(&self) -> f64 {
        if self.decode_calls == 0 {
            return 0.0;
        }
        self.total_iterations as f64 / self.decode_calls as f64
    }

    /// Combine reports from disjoint trial ranges of the same run.
    pub fn merge(&self, other: &SimReport) -> Result<SimReport> {
        if self.seed != other.seed {
            return Err(Error::ReportMismatch { what: "seed" });
        }
        if self.block_length != other.block_length {
            return Err(Error::ReportMismatch {
                what: "block length",
            });
        }
        let (x_failures, z_failures) = match (
            self.x_failures,
            self.z_failures,
            other.x_failures,
            other.z_failures,
        ) {
            (Some(a), Some(b), Some(c), Some(d)) => (Some(a + c), Some(b + d)),
            (None, None, None, None) => (None, None),
            _ => {
                return Err(Error::ReportMismatch {
                    what: "channel kind",
                })
            }
        };
        Ok(SimReport {
            trials: self.trials + other.trials,
            bit_errors: self.bit_errors + other.bit_errors,
            word_failures: self.word_failures + other.word_failures,
            total_iterations: self.total_iterations + other.total_iterations,
            decode_calls: self.decode_calls + other.decode_calls,
            x_failures,
            z_failures,
            seed: self.seed,
            block_length: self.block_length,
        })
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Counts {
    bit_errors: u64,
    word_failures: u64,
    total_iterations: u64,
    decode_calls: u64,
    x_failures: u64,
    z_failures: u64,
}

impl Counts {
    fn add(self, other: Counts) -> Counts {
        Counts {
            bit_errors: self.bit_errors + other.bit_errors,
            word_failures: self.word_failures + other.word_failures,
            total_iterations: self.total_iterations + other.total_iterations,
            decode_calls: self.decode_calls + other.decode_calls,
            x_failures: self.x_failures + other.x_failures,
            z_failures: self.z_failures + other.z_failures,
        }
    }

    fn report(self, trials: u64, seed: u64, block_length: usize, css: bool) -> SimReport {
        SimReport {
            trials,
            bit_errors: self.bit_errors,
            word_failures: self.word_failures,
            total_iterations: self.total_iterations,
            decode_calls: self.decode_calls,
            x_failures: css.then_some(self.x_failures),
            z_failures: css.then_some(self.z_failures),
            seed,
            block_length,
        }
    }
}

fn substream(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ trial)
}

#[inline]
fn coin(rng: &mut ChaCha8Rng, p: f64) -> bool {
    const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
    ((rng.next_u64() >> 11) as f64) * SCALE < p
}

fn random_message(rng: &mut ChaCha8Rng, k: usize) -> BitVec {
    let words = (0..k.div_ceil(64)).map(|_| rng.next_u64()).collect();
    BitVec::from_words(k, words)
}

fn random_error(rng: &mut ChaCha8Rng, n: usize, p: f64) -> BitVec {
    let mut e = BitVec::zeros(n);
    for i in 0..n {
        if coin(rng, p) {
            e.flip(i);
        }
    }
    e
}

/// One codeword per message bit: generator-polynomial shifts for cyclic
/// codes (so sampling agrees with polynomial encoding), otherwise the
/// canonical null-space basis.
fn message_basis(code: &LdpcCode) -> Vec<BitVec> {
    if code.k() > 0 {
        if let Some(cyc) = code.cyclic_structure() {
            let gv = cyc
                .g
                .to_bitvec(code.n())
                .expect("deg g <= n - 1 when k > 0");
            return (0..code.k()).map(|i| gv.rotated(i)).collect();
        }
    }
    let b = code.codeword_basis();
    (0..b.rows()).map(|r| b.row(r)).collect()
}

fn bsc_trial(
    n: usize,
    basis: &[BitVec],
    dec: &Decoder<'_>,
    policy: FlipPolicy,
    p: f64,
    seed: u64,
    trial: u64,
) -> Counts {
    let mut rng = substream(seed, trial);
    let msg = random_message(&mut rng, basis.len());
    let mut cw = BitVec::zeros(n);
    for i in msg.ones() {
        cw.xor_assign(&basis[i]);
    }
    let mut received = cw.clone();
    for i in 0..n {
        if coin(&mut rng, p) {
            received.flip(i);
        }
    }
    let res = dec.decode(&received, policy).expect("lengths agree");
    Counts {
        bit_errors: res.word.hamming(&cw) as u64,
        word_failures: (res.word != cw) as u64,
        total_iterations: res.iterations as u64,
        decode_calls: 1,
        x_failures: 0,
        z_failures: 0,
    }
}

/// Classical run over the binary symmetric channel, parallel over trials.
pub fn run_bsc_sim(
    code: &LdpcCode,
    policy: FlipPolicy,
    p: f64,
    trials: u64,
    seed: u64,
) -> Result<SimReport> {
    check_prob(p)?;
    let basis = message_basis(code);
    let dec = Decoder::new(code.h());
    let counts = (0..trials)
        .into_par_iter()
        .map(|t| bsc_trial(code.n(), &basis, &dec, policy, p, seed, t))
        .reduce(Counts::default, Counts::add);
    Ok(counts.report(trials, seed, code.n(), false))
}

/// Serial run over an explicit trial index range; merging range reports
/// reproduces the full run exactly.
pub fn run_bsc_sim_range(
    code: &LdpcCode,
    policy: FlipPolicy,
    p: f64,
    range: Range<u64>,
    seed: u64,
) -> Result<SimReport> {
    check_prob(p)?;
    let basis = message_basis(code);
    let dec = Decoder::new(code.h());
    let mut counts = Counts::default();
    let trials = range.end.saturating_sub(range.start);
    for t in range {
        counts = counts.add(bsc_trial(code.n(), &basis, &dec, policy, p, seed, t));
    }
    Ok(counts.report(trials, seed, code.n(), false))
}

struct CssContext<'a> {
    n: usize,
    dec_x: Decoder<'a>,
    dec_z: Decoder<'a>,
    in_c2: Echelon,
    in_c1_dual: Echelon,
}

impl<'a> CssContext<'a> {
    fn new(css: &'a CssCode) -> Self {
        CssContext {
            n: css.n(),
            // X errors are decoded against C1's checks, Z errors against
            // the phase checks.
            dec_x: Decoder::new(css.h_z()),
            dec_z: Decoder::new(css.h_x()),
            // Logical success is membership modulo stabilizers: residual X
            // in C2 = rowspace(h_x), residual Z in dual(C1) = rowspace(h_z).
            in_c2: css.h_x().echelon(),
            in_c1_dual: css.h_z().echelon(),
        }
    }

    fn trial(&self, policy: FlipPolicy, px: f64, pz: f64, seed: u64, trial: u64) -> Counts {
        let mut rng = substream(seed, trial);
        let ex = random_error(&mut rng, self.n, px);
        let ez = random_error(&mut rng, self.n, pz);
        let rx = self.dec_x.decode(&ex, policy).expect("lengths agree");
        let rz = self.dec_z.decode(&ez, policy).expect("lengths agree");
        let x_ok = self.in_c2.contains(&rx.word);
        let z_ok = self.in_c1_dual.contains(&rz.word);
        Counts {
            bit_errors: rx.word.or(&rz.word).weight() as u64,
            word_failures: !(x_ok && z_ok) as u64,
            total_iterations: (rx.iterations + rz.iterations) as u64,
            decode_calls: 2,
            x_failures: !x_ok as u64,
            z_failures: !z_ok as u64,
        }
    }
}

/// CSS run with independent X and Z error channels, parallel over trials.
pub fn run_css_sim(
    css: &CssCode,
    policy: FlipPolicy,
    px: f64,
    pz: f64,
    trials: u64,
    seed: u64,
) -> Result<SimReport> {
    check_prob(px)?;
    check_prob(pz)?;
    let ctx = CssContext::new(css);
    let counts = (0..trials)
        .into_par_iter()
        .map(|t| ctx.trial(policy, px, pz, seed, t))
        .reduce(Counts::default, Counts::add);
    Ok(counts.report(trials, seed, css.n(), true))
}

/// Serial CSS run over an explicit trial index range.
pub fn run_css_sim_range(
    css: &CssCode,
    policy: FlipPolicy,
    px: f64,
    pz: f64,
    range: Range<u64>,
    seed: u64,
) -> Result<SimReport> {
    check_prob(px)?;
    check_prob(pz)?;
    let ctx = CssContext::new(css);
    let mut counts = Counts::default();
    let trials = range.end.saturating_sub(range.start);
    for t in range {
        counts = counts.add(ctx.trial(policy, px, pz, seed, t));
    }
    Ok(counts.report(trials, seed, css.n(), true))
}

/// CSS run decoded by the exhaustive nearest-codeword oracle instead of bit
/// flipping, to separate decoder weakness from code capability. Serial; the
/// error channel and success criteria match `run_css_sim`.
pub fn run_css_sim_oracle(
    css: &CssCode,
    px: f64,
    pz: f64,
    trials: u64,
    seed: u64,
    cap: usize,
) -> Result<SimReport> {
    check_prob(px)?;
    check_prob(pz)?;
    let n = css.n();
    let in_c2 = css.h_x().echelon();
    let in_c1_dual = css.h_z().echelon();
    let mut counts = Counts::default();
    for t in 0..trials {
        let mut rng = substream(seed, t);
        let ex = random_error(&mut rng, n, px);
        let ez = random_error(&mut rng, n, pz);
        // The most likely error estimate is ex minus the nearest codeword,
        // so the residual after correction is that codeword itself.
        let resx = nearest_codeword_oracle(css.h_z(), &ex, cap)?.codeword;
        let resz = nearest_codeword_oracle(css.h_x(), &ez, cap)?.codeword;
        let x_ok = in_c2.contains(&resx);
        let z_ok = in_c1_dual.contains(&resz);
        counts = counts.add(Counts {
            bit_errors: resx.or(&resz).weight() as u64,
            word_failures: !(x_ok && z_ok) as u64,
            total_iterations: 0,
            decode_calls: 2,
            x_failures: !x_ok as u64,
            z_failures: !z_ok as u64,
        });
    }
    Ok(counts.report(trials, seed, n, true))
}
