//! Command-line front end.
//!
//! Subcommands construct, transform, css, inspect, decode, simulate, and
//! export pass codes between each other as JSON bundles over stdin/stdout or
//! files. Input format is auto-detected: JSON bundles start with '{', plain
//! 0/1 row dumps contain only bit characters (comment lines starting with
//! '#' are skipped, so pretty output pipes back in), anything else is read
//! as alist. All output for fixed flags is byte-identical across runs;
//! failures print "error[category]: message" on stderr and exit nonzero.

use crate::alist::{read_alist, write_alist};
use crate::binmat::BitMatrix;
use crate::bits::BitVec;
use crate::bundle::{parse_bundle, Bundle, CodeBundle, CssBundle};
use crate::codes::{CodeOrigin, CodeParams, DistanceProvenance, LdpcCode};
use crate::css::CssCode;
use crate::decoder::{bitflip_decode, FlipPolicy};
use crate::error::{Error, Result};
use crate::gf2m::FieldSpec;
use crate::simulate::{run_bsc_sim, run_css_sim, SimReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "geoldpc",
    version,
    about = "Finite-geometry LDPC codes: construction, transforms, CSS pairs, decoding, simulation"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a geometry code from scratch.
    Construct(ConstructArgs),
    /// Split or puncture the parity-check matrix of an existing code.
    Transform(TransformArgs),
    /// Build a CSS pair by row-splitting a cyclic code.
    Css(CssArgs),
    /// Report parameters of a code or CSS bundle.
    Inspect(InspectArgs),
    /// Run the bit-flip decoder on one word.
    Decode(DecodeArgs),
    /// Monte Carlo decoding runs over seeded random channels.
    Simulate(SimulateArgs),
    /// Convert between bundle formats.
    Export(ExportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Geometry {
    Eg,
    Pg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    /// Comment header plus 0/1 matrix rows.
    Pretty,
    /// Versioned JSON bundle.
    Json,
    /// alist sparse-matrix text.
    Alist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TransformOp {
    SplitRows,
    SplitCols,
    Puncture,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    geometry: Geometry,
    /// Geometry order: the plane is over GF(2^s).
    #[arg(long)]
    s: u32,
    /// Primitive polynomial for the ambient field, in hex (e.g. 0x13).
    #[arg(long, value_parser = parse_hex)]
    primpoly: Option<u64>,
    /// Base point: exponent (eg) or point index (pg).
    #[arg(long)]
    base_p0: Option<usize>,
    /// Base direction exponent (eg) or second point index (pg).
    #[arg(long)]
    base_p1: Option<usize>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: OutFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long, value_enum)]
    op: TransformOp,
    /// Split factor for the split operations.
    #[arg(long)]
    q: Option<usize>,
    /// Parity-check row index naming the line to puncture on.
    #[arg(long)]
    line: Option<usize>,
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: OutFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CssArgs {
    /// Row-split factor used to derive the nested code.
    #[arg(long)]
    split_rows: usize,
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: OutFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InspectArgs {
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Exit nonzero unless row weight, column weight, and overlap satisfy
    /// the low-density definition.
    #[arg(long)]
    check_ldpc: bool,
    #[arg(long, value_enum, default_value = "pretty")]
    format: OutFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Received word as a 0/1 string.
    #[arg(long)]
    word: String,
    /// Flip rule: "max" or "threshold:N".
    #[arg(long, default_value = "max")]
    policy: String,
    #[arg(long, default_value_t = 50)]
    max_iter: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    format: OutFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Crossover probability; for CSS input this sets both --px and --pz.
    #[arg(long)]
    p: Option<f64>,
    /// Bit-flip error probability (CSS input).
    #[arg(long)]
    px: Option<f64>,
    /// Phase-flip error probability (CSS input).
    #[arg(long)]
    pz: Option<f64>,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "max")]
    policy: String,
    #[arg(long, default_value_t = 50)]
    max_iter: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    format: OutFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_hex(s: &str) -> std::result::Result<u64, String> {
    let digits = s
        .strip_prefix("0x")
        .or_else(|| s.strip_prefix("0X"))
        .unwrap_or(s);
    u64::from_str_radix(digits, 16).map_err(|e| format!("bad hex value {s:?}: {e}"))
}

/// Entry point used by the binary.
pub fn cli_main() -> ExitCode {
    install_logger();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.category());
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Command::Construct(a) => construct(a),
        Command::Transform(a) => transform(a),
        Command::Css(a) => css(a),
        Command::Inspect(a) => inspect(a),
        Command::Decode(a) => decode(a),
        Command::Simulate(a) => simulate(a),
        Command::Export(a) => export(a),
    }
}

// ---- input plumbing ----------------------------------------------------

#[allow(clippy::large_enum_variant)]
enum Loaded {
    Code(LdpcCode),
    Css(CssCode),
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn write_output(path: Option<&PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::write(p, content)?),
        _ => {
            std::io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

enum TextKind {
    Json,
    BitRows,
    Alist,
}

fn detect(text: &str) -> TextKind {
    if text.trim_start().starts_with('{') {
        return TextKind::Json;
    }
    let mut saw_row = false;
    for line in text.lines() {
        let l = line.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        if !l.bytes().all(|b| b == b'0' || b == b'1') {
            return TextKind::Alist;
        }
        saw_row = true;
    }
    if saw_row {
        TextKind::BitRows
    } else {
        TextKind::Alist
    }
}

fn parse_bit_rows(text: &str) -> Result<BitMatrix> {
    let rows: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    BitMatrix::from_bit_strings(&rows)
}

fn load_any(text: &str) -> Result<Loaded> {
    match detect(text) {
        TextKind::Json => match parse_bundle(text)? {
            Bundle::Code(b) => Ok(Loaded::Code(b.into_code()?)),
            Bundle::Css(b) => Ok(Loaded::Css(b.into_css()?)),
        },
        TextKind::BitRows => Ok(Loaded::Code(LdpcCode::from_parity_check(
            parse_bit_rows(text)?,
            CodeOrigin::Explicit,
        ))),
        TextKind::Alist => Ok(Loaded::Code(LdpcCode::from_parity_check(
            read_alist(text)?,
            CodeOrigin::Explicit,
        ))),
    }
}

fn load_code(text: &str) -> Result<LdpcCode> {
    match load_any(text)? {
        Loaded::Code(code) => Ok(code),
        Loaded::Css(_) => Err(Error::Parse(
            "expected a code, found a css bundle; pass one of its component codes".into(),
        )),
    }
}

// ---- rendering ---------------------------------------------------------

fn provenance_label(p: DistanceProvenance) -> &'static str {
    match p {
        DistanceProvenance::Formula => "formula",
        DistanceProvenance::BruteForce => "brute-force",
    }
}

fn code_header(code: &LdpcCode) -> String {
    let mut s = String::new();
    let p = code.params();
    let _ = writeln!(s, "# origin: {}", code.origin());
    let _ = writeln!(
        s,
        "# rows={} n={} rank={} k={}",
        code.h().rows(),
        code.n(),
        code.n() - code.k(),
        code.k()
    );
    let _ = writeln!(
        s,
        "# rho={:?} gamma={:?} lambda={}",
        p.rho, p.gamma, p.lambda
    );
    let _ = writeln!(s, "# ones={} density={:.6}", p.ones, p.density);
    if let Some(d) = p.d_known {
        let _ = writeln!(s, "# d={} ({})", d.value, provenance_label(d.provenance));
    }
    if let Some(cyc) = code.cyclic_structure() {
        let _ = writeln!(s, "# g(x) = {}", cyc.g);
        let _ = writeln!(s, "# h(x) = {}", cyc.h);
    }
    s
}

fn code_pretty(code: &LdpcCode) -> String {
    format!("{}{}", code_header(code), code.h())
}

fn code_output(code: &LdpcCode, format: OutFormat) -> Result<String> {
    match format {
        OutFormat::Pretty => Ok(code_pretty(code)),
        OutFormat::Json => Ok(format!("{}\n", CodeBundle::from_code(code).to_json()?)),
        OutFormat::Alist => Ok(write_alist(code.h())),
    }
}

fn css_pretty(css: &CssCode) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# css [[{}, {}]]", css.n(), css.k_quantum());
    let _ = writeln!(
        s,
        "# c1: n={} k={}, origin: {}",
        css.c1().n(),
        css.c1().k(),
        css.c1().origin()
    );
    let _ = writeln!(
        s,
        "# c2: n={} k={}, origin: {}",
        css.c2().n(),
        css.c2().k(),
        css.c2().origin()
    );
    if let Some(cyc) = css.c2().cyclic_structure() {
        let _ = writeln!(s, "# c2 h(x) = {}", cyc.h);
        if let Ok(hp) = css.c2().dual_check_poly() {
            let _ = writeln!(s, "# c2 dual check polynomial = {}", hp);
        }
    }
    let _ = writeln!(s, "# h_z: {}x{}", css.h_z().rows(), css.h_z().cols());
    let _ = write!(s, "{}", css.h_z());
    let _ = writeln!(s, "# h_x: {}x{}", css.h_x().rows(), css.h_x().cols());
    let _ = write!(s, "{}", css.h_x());
    s
}

fn css_output(css: &CssCode, format: OutFormat) -> Result<String> {
    match format {
        OutFormat::Pretty => Ok(css_pretty(css)),
        OutFormat::Json => Ok(format!("{}\n", CssBundle::from_css(css).to_json()?)),
        OutFormat::Alist => Err(Error::Parse(
            "a css pair has two check matrices; use --format json or pretty".into(),
        )),
    }
}

fn report_pretty(r: &SimReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "trials: {}", r.trials);
    let _ = writeln!(s, "block_length: {}", r.block_length);
    let _ = writeln!(s, "seed: {}", r.seed);
    let _ = writeln!(s, "bit_errors: {}", r.bit_errors);
    let _ = writeln!(s, "word_failures: {}", r.word_failures);
    if let (Some(x), Some(z)) = (r.x_failures, r.z_failures) {
        let _ = writeln!(s, "x_failures: {x}");
        let _ = writeln!(s, "z_failures: {z}");
    }
    let _ = writeln!(s, "decode_calls: {}", r.decode_calls);
    let _ = writeln!(s, "total_iterations: {}", r.total_iterations);
    let _ = writeln!(s, "ber: {}", r.ber());
    let _ = writeln!(s, "fer: {}", r.fer());
    let _ = writeln!(s, "mean_iterations: {}", r.mean_iterations());
    s
}

fn report_json(r: &SimReport) -> Result<String> {
    let value = json!({
        "trials": r.trials,
        "block_length": r.block_length,
        "seed": r.seed,
        "bit_errors": r.bit_errors,
        "word_failures": r.word_failures,
        "x_failures": r.x_failures,
        "z_failures": r.z_failures,
        "decode_calls": r.decode_calls,
        "total_iterations": r.total_iterations,
        "ber": r.ber(),
        "fer": r.fer(),
        "mean_iterations": r.mean_iterations(),
    });
    Ok(format!("{}\n", serde_json::to_string_pretty(&value)?))
}

// ---- subcommands -------------------------------------------------------

fn construct(a: ConstructArgs) -> Result<ExitCode> {
    let code = match a.geometry {
        Geometry::Eg => {
            let spec = a
                .primpoly
                .map(|poly| FieldSpec::new(2 * a.s, poly))
                .transpose()?;
            let n = (1usize << (2 * a.s)) - 1;
            let base = match (a.base_p0, a.base_p1) {
                (None, None) => None,
                (p0, p1) => Some((p0.unwrap_or(n - 1), p1.unwrap_or(1))),
            };
            LdpcCode::eg_with(a.s, spec, base)?
        }
        Geometry::Pg => {
            let spec = a
                .primpoly
                .map(|poly| FieldSpec::new(3 * a.s, poly))
                .transpose()?;
            let base = match (a.base_p0, a.base_p1) {
                (None, None) => None,
                (p0, p1) => Some((p0.unwrap_or(0), p1.unwrap_or(1))),
            };
            LdpcCode::pg_with(a.s, spec, base)?
        }
    };
    write_output(a.out.as_ref(), &code_output(&code, a.format)?)?;
    Ok(ExitCode::SUCCESS)
}

fn transform(a: TransformArgs) -> Result<ExitCode> {
    let code = load_code(&read_input(a.input.as_ref())?)?;
    let derived = match a.op {
        TransformOp::SplitRows => {
            let q =
                a.q.ok_or_else(|| Error::Parse("--q is required for split-rows".into()))?;
            code.split_rows(q)?
        }
        TransformOp::SplitCols => {
            let q =
                a.q.ok_or_else(|| Error::Parse("--q is required for split-cols".into()))?;
            code.split_columns(q)?
        }
        TransformOp::Puncture => {
            let line = a
                .line
                .ok_or_else(|| Error::Parse("--line is required for puncture".into()))?;
            code.puncture_row(line)?
        }
    };
    write_output(a.out.as_ref(), &code_output(&derived, a.format)?)?;
    Ok(ExitCode::SUCCESS)
}

fn css(a: CssArgs) -> Result<ExitCode> {
    let code = load_code(&read_input(a.input.as_ref())?)?;
    let css = CssCode::from_row_split(&code, a.split_rows)?;
    write_output(a.out.as_ref(), &css_output(&css, a.format)?)?;
    Ok(ExitCode::SUCCESS)
}

fn ldpc_violation(p: &CodeParams) -> Option<String> {
    if p.lambda > 1 {
        Some(format!("lambda={} exceeds 1", p.lambda))
    } else if p.rho.len() > 1 {
        Some(format!("row weights are not constant: {:?}", p.rho))
    } else if p.gamma.len() > 1 {
        Some(format!("column weights are not constant: {:?}", p.gamma))
    } else {
        None
    }
}

fn inspect(a: InspectArgs) -> Result<ExitCode> {
    match load_any(&read_input(a.input.as_ref())?)? {
        Loaded::Code(code) => {
            let out = match a.format {
                OutFormat::Pretty => code_header(&code),
                OutFormat::Json => {
                    let p = code.params();
                    let value = json!({
                        "kind": "code",
                        "origin": serde_json::to_value(code.origin())?,
                        "rows": code.h().rows(),
                        "n": code.n(),
                        "rank": code.n() - code.k(),
                        "k": code.k(),
                        "rho": p.rho,
                        "gamma": p.gamma,
                        "lambda": p.lambda,
                        "ones": p.ones,
                        "density": p.density,
                        "d_known": p.d_known.map(|d| json!({
                            "value": d.value,
                            "provenance": provenance_label(d.provenance),
                        })),
                        "cyclic": code.cyclic_structure().map(|cyc| json!({
                            "g": cyc.g.coeffs(),
                            "h": cyc.h.coeffs(),
                        })),
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value)?)
                }
                OutFormat::Alist => {
                    return Err(Error::Parse(
                        "inspect reports parameters; use export for alist".into(),
                    ))
                }
            };
            write_output(a.out.as_ref(), &out)?;
            if a.check_ldpc {
                if let Some(msg) = ldpc_violation(code.params()) {
                    eprintln!("error[ldpc_check]: {msg}");
                    return Ok(ExitCode::FAILURE);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Loaded::Css(css) => {
            if a.check_ldpc {
                return Err(Error::Parse(
                    "--check-ldpc applies to a single code; inspect c1 or c2 instead".into(),
                ));
            }
            let out = match a.format {
                OutFormat::Pretty => {
                    let mut s = String::new();
                    let _ = writeln!(s, "# css [[{}, {}]]", css.n(), css.k_quantum());
                    let _ = writeln!(
                        s,
                        "# c1: n={} k={}, origin: {}",
                        css.c1().n(),
                        css.c1().k(),
                        css.c1().origin()
                    );
                    let _ = writeln!(
                        s,
                        "# c2: n={} k={}, origin: {}",
                        css.c2().n(),
                        css.c2().k(),
                        css.c2().origin()
                    );
                    let _ = writeln!(
                        s,
                        "# h_z: {}x{}  h_x: {}x{}",
                        css.h_z().rows(),
                        css.h_z().cols(),
                        css.h_x().rows(),
                        css.h_x().cols()
                    );
                    s
                }
                OutFormat::Json => {
                    let value = json!({
                        "kind": "css",
                        "n": css.n(),
                        "k_quantum": css.k_quantum(),
                        "k1": css.c1().k(),
                        "k2": css.c2().k(),
                        "h_z_rows": css.h_z().rows(),
                        "h_x_rows": css.h_x().rows(),
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value)?)
                }
                OutFormat::Alist => {
                    return Err(Error::Parse(
                        "inspect reports parameters; use export for alist".into(),
                    ))
                }
            };
            write_output(a.out.as_ref(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn decode(a: DecodeArgs) -> Result<ExitCode> {
    let code = load_code(&read_input(a.input.as_ref())?)?;
    let word = BitVec::parse(&a.word)?;
    let policy = FlipPolicy {
        rule: a.policy.parse()?,
        max_iter: a.max_iter,
    };
    let res = bitflip_decode(code.h(), &word, policy)?;
    let out = match a.format {
        OutFormat::Pretty => format!(
            "success: {}\niterations: {}\nword: {}\n",
            res.success, res.iterations, res.word
        ),
        OutFormat::Json => {
            let value = json!({
                "success": res.success,
                "iterations": res.iterations,
                "word": res.word.to_string(),
                "flip_counts_last": res.flip_counts_last,
            });
            format!("{}\n", serde_json::to_string_pretty(&value)?)
        }
        OutFormat::Alist => return Err(Error::Parse("decode output is not a matrix".into())),
    };
    write_output(a.out.as_ref(), &out)?;
    Ok(ExitCode::SUCCESS)
}

fn simulate(a: SimulateArgs) -> Result<ExitCode> {
    let policy = FlipPolicy {
        rule: a.policy.parse()?,
        max_iter: a.max_iter,
    };
    let report =
        match load_any(&read_input(a.input.as_ref())?)? {
            Loaded::Code(code) => {
                if a.px.is_some() || a.pz.is_some() {
                    return Err(Error::Parse(
                        "--px/--pz apply to css input; use --p for a classical code".into(),
                    ));
                }
                let p =
                    a.p.ok_or_else(|| Error::Parse("--p is required for a classical code".into()))?;
                run_bsc_sim(&code, policy, p, a.trials, a.seed)?
            }
            Loaded::Css(css) => {
                let px = a.px.or(a.p).ok_or_else(|| {
                    Error::Parse("--px (or --p) is required for css input".into())
                })?;
                let pz = a.pz.or(a.p).ok_or_else(|| {
                    Error::Parse("--pz (or --p) is required for css input".into())
                })?;
                run_css_sim(&css, policy, px, pz, a.trials, a.seed)?
            }
        };
    let out = match a.format {
        OutFormat::Pretty => report_pretty(&report),
        OutFormat::Json => report_json(&report)?,
        OutFormat::Alist => return Err(Error::Parse("simulation reports are not matrices".into())),
    };
    write_output(a.out.as_ref(), &out)?;
    Ok(ExitCode::SUCCESS)
}

fn export(a: ExportArgs) -> Result<ExitCode> {
    let out = match load_any(&read_input(a.input.as_ref())?)? {
        Loaded::Code(code) => code_output(&code, a.format)?,
        Loaded::Css(css) => css_output(&css, a.format)?,
    };
    write_output(a.out.as_ref(), &out)?;
    Ok(ExitCode::SUCCESS)
}

// ---- logging -----------------------------------------------------------

struct StderrLogger;

impl log::Log for StderrLogger {
    fn enabled(&self, metadata: &log::Metadata) -> bool {
        metadata.level() <= log::Level::Warn
    }

    fn log(&self, record: &log::Record) {
        if self.enabled(record.metadata()) {
            eprintln!(
                "{}: {}",
                record.level().as_str().to_lowercase(),
                record.args()
            );
        }
    }

    fn flush(&self) {}
}

static LOGGER: StderrLogger = StderrLogger;

fn install_logger() {
    if log::set_logger(&LOGGER).is_ok() {
        log::set_max_level(log::LevelFilter::Warn);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn input_kind_detection() {
        assert!(matches!(detect("  {\"kind\": \"code\"}"), TextKind::Json));
        assert!(matches!(detect("0101\n1010\n"), TextKind::BitRows));
        assert!(matches!(
            detect("# comment\n0101\n1010\n"),
            TextKind::BitRows
        ));
        assert!(matches!(detect("4 2\n2 2\n"), TextKind::Alist));
        assert!(matches!(detect(""), TextKind::Alist));
    }

    #[test]
    fn pretty_output_parses_back_as_bit_rows() {
        let code = LdpcCode::eg(2).unwrap();
        let text = code_pretty(&code);
        let back = parse_bit_rows(&text).unwrap();
        assert_eq!(&back, code.h());
    }

    #[test]
    fn hex_parsing_accepts_prefixes() {
        assert_eq!(parse_hex("0x13").unwrap(), 0x13);
        assert_eq!(parse_hex("13").unwrap(), 0x13);
        assert_eq!(parse_hex("0X11D").unwrap(), 0x11D);
        assert!(parse_hex("xyz").is_err());
    }

    #[test]
    fn ldpc_violation_messages() {
        let good = LdpcCode::eg(2).unwrap();
        assert_eq!(ldpc_violation(good.params()), None);
        let bad = LdpcCode::from_parity_check(
            BitMatrix::from_bit_strings(&["110", "110", "110"]).unwrap(),
            CodeOrigin::Explicit,
        );
        let msg = ldpc_violation(bad.params()).unwrap();
        assert!(msg.contains("lambda=3"));
    }

    #[test]
    fn verify_cli_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
