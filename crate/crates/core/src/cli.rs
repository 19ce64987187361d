//! Command-line front end. [`run`] parses an argument vector, writes the
//! result to the given streams and returns the process exit code.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::chebyshev::{cheb, cheb_normalized, verify_chebyshev_identities, ChebyshevKind};
use crate::continuant::{continuant, continuant_symbolic, difference_orbit, monodromy, monodromy_symbolic};
use crate::continuant::{ContinuantMethod, CyclicSequence, Mat2};
use crate::hankel::{moments_from_sequence, verify_hankel, HankelFamily};
use crate::matrixalg::SquareMatrix;
use crate::ring::{parse_int_list, MultiPoly, Ring};
use crate::rotundus::{
    rotundus, rotundus_matrix, rotundus_symbolic, verify_pfaffian_identity, verify_pfaffian_identity_symbolic,
    MatrixKind, PfaffianIdentityReport, RotundusMethod, SYMBOLIC_PFAFFIAN_MAX_N,
};
use crate::triangulation::{enumerate_centrally_symmetric, enumerate_triangulations, solve_rotundus, Dedup};
use crate::verify::{verify_suite, Fault, Suite, SuiteConfig};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

// Size limits keeping every command interactive.
const MAX_SYMBOLIC_N: usize = 16;
const MAX_SYMBOLIC_DET_N: usize = 12;
const MAX_MATCHING_N: usize = 30;
const MAX_NUMERIC_PF_N: usize = 10;
const MAX_POLY_MATRIX_DIM: usize = 12;
const MAX_INT_MATRIX_DIM: usize = 200;
const MAX_PF_MATRIX_DIM: usize = 20;
const MAX_POLYGON: usize = 14;
const MAX_SEARCH_SPACE: u128 = 100_000_000;
const MAX_CHEBYSHEV_N: usize = 10_000;
const MAX_CHEBYSHEV_VERIFY_N: usize = 20;
const MAX_HANKEL_COUNT: usize = 64;
const MAX_SUITE_N: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "rotundus", version, about = "Exact continuants, rotundus polynomials and their identities")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Continuant K_n of a sequence or of symbolic a1..an.
    Continuant(ContinuantArgs),
    /// Rotundus R_n = K_n - K_{n-2}(a2..a_{n-1}).
    Rotundus(RotundusArgs),
    /// Pfaffian of the rotundus matrix or of a given skew-symmetric matrix.
    Pfaffian(MatrixArgs),
    /// Determinant of the rotundus matrix or of a given matrix.
    Det(MatrixArgs),
    /// Triangulations of a convex polygon.
    Triangulate(TriangulateArgs),
    /// Positive integer solutions of R_n = 0.
    Solve(SolveArgs),
    /// Chebyshev polynomials.
    Chebyshev(ChebyshevArgs),
    /// Moment sequence from Hankel determinant conditions.
    Hankel(HankelArgs),
    /// Seeded batch verification of every identity.
    Verify(VerifyArgs),
}

#[derive(Clone, Debug)]
struct IntList(Vec<BigInt>);

fn int_list(s: &str) -> Result<IntList, String> {
    parse_int_list(s).map(IntList).map_err(|e| e.to_string())
}

/// Either `--values` or `--n` (symbolic).
#[derive(Args, Debug)]
struct Input {
    /// Comma-separated integers, e.g. 5,2,2,2,1.
    #[arg(long, value_parser = int_list, conflicts_with_all = ["symbolic", "n"])]
    values: Option<IntList>,
    /// Use the variables a1..an.
    #[arg(long, requires = "n")]
    symbolic: bool,
    /// Number of variables in symbolic mode.
    #[arg(long)]
    n: Option<usize>,
}

enum Source {
    Values(Vec<BigInt>),
    Symbolic(usize),
}

impl Input {
    fn source(&self) -> Result<Source, CliError> {
        match (&self.values, self.n) {
            (Some(v), _) => Ok(Source::Values(v.0.clone())),
            (None, Some(n)) => Ok(Source::Symbolic(n)),
            (None, None) => Err(CliError::usage("one of --values or --symbolic --n is required")),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CMethod {
    #[value(alias = "determinant")]
    Det,
    Euler,
    #[value(alias = "recurrence")]
    Rec,
}

impl From<CMethod> for ContinuantMethod {
    fn from(m: CMethod) -> Self {
        match m {
            CMethod::Det => Self::Determinant,
            CMethod::Euler => Self::Euler,
            CMethod::Rec => Self::Recurrence,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RMethod {
    #[value(alias = "definition")]
    Def,
    #[value(alias = "cyclic_euler", alias = "cyclic-euler")]
    Cyclic,
    Trace,
    #[value(alias = "pfaffian", alias = "pfaffian_square")]
    Pf,
}

impl From<RMethod> for RotundusMethod {
    fn from(m: RMethod) -> Self {
        match m {
            RMethod::Def => Self::Definition,
            RMethod::Cyclic => Self::CyclicEuler,
            RMethod::Trace => Self::Trace,
            RMethod::Pf => Self::PfaffianSquare,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Skew,
    Symmetric,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CKind {
    #[value(alias = "T", alias = "t")]
    First,
    #[value(alias = "U", alias = "u")]
    Second,
}

#[derive(Args, Debug)]
struct ContinuantArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum)]
    method: Option<CMethod>,
    /// Print the monodromy matrix instead of K_n.
    #[arg(long, conflicts_with = "orbit")]
    monodromy: bool,
    /// Print V_0..V_{steps+1} of V_{i+1} = a_i V_i - V_{i-1}.
    #[arg(long, value_name = "STEPS", requires = "values")]
    orbit: Option<usize>,
    #[arg(long, default_value = "0", allow_negative_numbers = true)]
    v0: BigInt,
    #[arg(long, default_value = "1", allow_negative_numbers = true)]
    v1: BigInt,
}

#[derive(Args, Debug)]
struct RotundusArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, conflicts_with = "verify_identities")]
    method: Option<RMethod>,
    /// Check det(Omega_n) = R_n^2 and pf(Omega_n)^2 = R_n^2.
    #[arg(long)]
    verify_identities: bool,
}

#[derive(Args, Debug)]
struct MatrixArgs {
    #[command(flatten)]
    input: Input,
    /// Which rotundus matrix to build from the input.
    #[arg(long, value_enum, default_value = "skew")]
    kind: Kind,
    /// A matrix as JSON, or @path to a JSON file.
    #[arg(long, conflicts_with_all = ["values", "symbolic", "n", "kind"])]
    matrix: Option<String>,
}

#[derive(Args, Debug)]
struct TriangulateArgs {
    /// Number of polygon vertices.
    #[arg(long)]
    n: usize,
    /// Print quiddity sequences instead of diagonals.
    #[arg(long)]
    quiddities: bool,
    /// Only centrally symmetric triangulations (n even).
    #[arg(long)]
    centrally_symmetric: bool,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    n: usize,
    /// Largest entry searched.
    #[arg(long)]
    max: u64,
    /// Keep only totally positive solutions.
    #[arg(long)]
    tp: bool,
    #[arg(long)]
    up_to_rotation: bool,
    /// Also merge reversed sequences (implies --up-to-rotation).
    #[arg(long)]
    up_to_reflection: bool,
}

#[derive(Args, Debug)]
struct ChebyshevArgs {
    #[arg(long, value_enum)]
    kind: CKind,
    #[arg(long)]
    n: usize,
    /// 2T_n(x/2) or U_n(x/2).
    #[arg(long)]
    normalized: bool,
    /// Check the continuant, rotundus, determinant and trace identities up to n.
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct HankelArgs {
    /// Coefficients a_0, a_1, ...
    #[arg(long, value_parser = int_list)]
    sequence: IntList,
    /// Number of moments C_0..C_{count-1}.
    #[arg(long)]
    count: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `all` or a comma-separated list of suite names.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Deliberately corrupt a construction to exercise failure reporting.
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<FaultArg>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FaultArg {
    OmegaSign,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        Self::Usage(msg.into())
    }

    /// A library error attributed to the flag that caused it.
    fn flag(flag: &str, e: impl std::fmt::Display) -> Self {
        Self::Usage(format!("{flag}: {e}"))
    }
}

type CliResult = Result<bool, CliError>;

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, text: impl std::fmt::Display, value: Value) {
        // write errors on stdout (e.g. a closed pipe) are not actionable
        let _ = if self.json {
            writeln!(self.out, "{value}")
        } else {
            writeln!(self.out, "{text}")
        };
    }
}

/// Parse `argv` (including the program name) and execute it.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    let mut ctx = Ctx { json: cli.json, out };
    let result = match cli.command {
        Command::Continuant(a) => cmd_continuant(&mut ctx, a),
        Command::Rotundus(a) => cmd_rotundus(&mut ctx, a),
        Command::Pfaffian(a) => cmd_matrix(&mut ctx, a, true),
        Command::Det(a) => cmd_matrix(&mut ctx, a, false),
        Command::Triangulate(a) => cmd_triangulate(&mut ctx, a),
        Command::Solve(a) => cmd_solve(&mut ctx, a),
        Command::Chebyshev(a) => cmd_chebyshev(&mut ctx, a),
        Command::Hankel(a) => cmd_hankel(&mut ctx, a),
        Command::Verify(a) => cmd_verify(&mut ctx, a),
    };
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VERIFY,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn check_bound(flag: &str, value: usize, max: usize, what: &str) -> Result<(), CliError> {
    if value > max {
        return Err(CliError::usage(format!("{flag}: {what} {value} exceeds the supported maximum {max}")));
    }
    Ok(())
}

fn check_nonempty(values: &[BigInt]) -> Result<(), CliError> {
    if values.is_empty() {
        return Err(CliError::usage("--values: the sequence must not be empty"));
    }
    Ok(())
}

fn ints_json(values: &[BigInt]) -> Value {
    json!(values.iter().map(ToString::to_string).collect::<Vec<_>>())
}

/// Element types the CLI can print.
trait Show: Ring {
    fn text(&self) -> String;
    fn json(&self) -> Value;
}

impl Show for BigInt {
    fn text(&self) -> String {
        self.to_string()
    }

    fn json(&self) -> Value {
        json!(self.to_string())
    }
}

impl Show for MultiPoly {
    fn text(&self) -> String {
        self.to_string()
    }

    fn json(&self) -> Value {
        self.to_json()
    }
}

fn mat2_json<T: Show>(m: &Mat2<T>) -> Value {
    json!(m.entries.iter().map(|r| r.iter().map(Show::json).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn mat2_text<T: Show>(m: &Mat2<T>) -> String {
    m.entries
        .iter()
        .map(|r| format!("[{}, {}]", r[0].text(), r[1].text()))
        .collect::<Vec<_>>()
        .join("\n")
}

fn method_name<M: serde::Serialize>(m: M) -> Value {
    serde_json::to_value(m).expect("method enums serialize")
}

fn cmd_continuant(ctx: &mut Ctx, a: ContinuantArgs) -> CliResult {
    match a.input.source()? {
        Source::Values(values) => {
            check_nonempty(&values)?;
            let n = values.len();
            if let Some(steps) = a.orbit {
                check_bound("--orbit", steps, 100_000, "step count")?;
                let seq = CyclicSequence::new(values.clone()).map_err(|e| CliError::flag("--values", e))?;
                let mut orbit = vec![a.v0.clone(), a.v1.clone()];
                orbit.extend(difference_orbit(&seq, &a.v0, &a.v1, steps));
                let text = orbit.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                ctx.emit(text, json!({ "values": ints_json(&values), "orbit": ints_json(&orbit) }));
                return Ok(true);
            }
            if a.monodromy {
                let seq = CyclicSequence::new(values.clone()).map_err(|e| CliError::flag("--values", e))?;
                let m = monodromy(&seq);
                ctx.emit(mat2_text(&m), json!({ "n": n, "monodromy": mat2_json(&m) }));
                return Ok(true);
            }
            let method: ContinuantMethod = a.method.map_or(ContinuantMethod::Recurrence, Into::into);
            if method == ContinuantMethod::Euler {
                check_bound("--values", n, MAX_MATCHING_N, "length")?;
            }
            let k = continuant(&values, method);
            let value = json!({ "n": n, "method": method_name(method), "value": k.to_string() });
            ctx.emit(k, value);
        }
        Source::Symbolic(n) => {
            if a.orbit.is_some() {
                return Err(CliError::usage("--orbit: requires --values"));
            }
            let method: ContinuantMethod = a.method.map_or(ContinuantMethod::Euler, Into::into);
            let bound = if method == ContinuantMethod::Determinant {
                MAX_SYMBOLIC_DET_N
            } else {
                MAX_SYMBOLIC_N
            };
            check_bound("--n", n, bound, "symbolic size")?;
            if a.monodromy {
                let m = monodromy_symbolic(n);
                ctx.emit(mat2_text(&m), json!({ "n": n, "monodromy": mat2_json(&m) }));
                return Ok(true);
            }
            let k = continuant_symbolic(n, method);
            let value = json!({ "n": n, "method": method_name(method), "polynomial": k.to_json() });
            ctx.emit(&k, value);
        }
    }
    Ok(true)
}

fn report_text<T: Show>(r: &PfaffianIdentityReport<T>) -> String {
    let sign = r.sign.map_or("undetermined".to_string(), |s| format!("{s:+}"));
    [
        format!("n = {}", r.n),
        format!("R_n = {}", r.rotundus.text()),
        format!("det(Omega_n) = {}", r.determinant.text()),
        format!("pf(Omega_n) = {}", r.pfaffian.text()),
        format!("det(Omega_n) = R_n^2: {}", r.det_matches),
        format!("pf(Omega_n)^2 = R_n^2: {}", r.pf_square_matches),
        format!("pf(Omega_n) / R_n: {sign}"),
    ]
    .join("\n")
}

fn report_json<T: Show>(r: &PfaffianIdentityReport<T>) -> Value {
    json!({
        "n": r.n,
        "rotundus": r.rotundus.json(),
        "determinant": r.determinant.json(),
        "pfaffian": r.pfaffian.json(),
        "det_matches": r.det_matches,
        "pf_square_matches": r.pf_square_matches,
        "sign": r.sign,
        "holds": r.holds(),
    })
}

fn cmd_rotundus(ctx: &mut Ctx, a: RotundusArgs) -> CliResult {
    let source = a.input.source()?;
    if a.verify_identities {
        let holds = match source {
            Source::Values(values) => {
                check_nonempty(&values)?;
                check_bound("--values", values.len(), MAX_NUMERIC_PF_N, "length")?;
                let r = verify_pfaffian_identity(&values).map_err(|e| CliError::flag("--values", e))?;
                ctx.emit(report_text(&r), report_json(&r));
                r.holds()
            }
            Source::Symbolic(n) => {
                if n == 0 {
                    return Err(CliError::usage("--n: must be >= 1"));
                }
                check_bound("--n", n, SYMBOLIC_PFAFFIAN_MAX_N, "symbolic size")?;
                let r = verify_pfaffian_identity_symbolic(n).map_err(|e| CliError::flag("--n", e))?;
                ctx.emit(report_text(&r), report_json(&r));
                r.holds()
            }
        };
        return Ok(holds);
    }
    let method: RotundusMethod = a.method.map_or(RotundusMethod::Definition, Into::into);
    match source {
        Source::Values(values) => {
            check_nonempty(&values)?;
            match method {
                RotundusMethod::CyclicEuler => check_bound("--values", values.len(), MAX_MATCHING_N, "length")?,
                RotundusMethod::PfaffianSquare => check_bound("--values", values.len(), MAX_NUMERIC_PF_N, "length")?,
                _ => {}
            }
            let r = rotundus(&values, method).map_err(|e| CliError::flag("--values", e))?;
            let value = json!({ "n": values.len(), "method": method_name(method), "value": r.to_string() });
            ctx.emit(r, value);
        }
        Source::Symbolic(n) => {
            if n == 0 {
                return Err(CliError::usage("--n: must be >= 1"));
            }
            let bound = match method {
                RotundusMethod::PfaffianSquare => SYMBOLIC_PFAFFIAN_MAX_N,
                _ => MAX_SYMBOLIC_N,
            };
            check_bound("--n", n, bound, "symbolic size")?;
            let r = rotundus_symbolic(n, method).map_err(|e| CliError::flag("--n", e))?;
            let value = json!({ "n": n, "method": method_name(method), "polynomial": r.to_json() });
            ctx.emit(&r, value);
        }
    }
    Ok(true)
}

fn read_matrix_arg(arg: &str) -> Result<Value, CliError> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::flag("--matrix", format!("{path}: {e}")))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| CliError::flag("--matrix", e))
}

fn matrix_op<T: Show>(m: &SquareMatrix<T>, pfaffian: bool, flag: &str) -> Result<T, CliError> {
    if pfaffian {
        m.pfaffian().map_err(|e| CliError::flag(flag, e))
    } else {
        Ok(m.det())
    }
}

fn cmd_matrix(ctx: &mut Ctx, a: MatrixArgs, pfaffian: bool) -> CliResult {
    let op = if pfaffian { "pfaffian" } else { "determinant" };
    if let Some(arg) = &a.matrix {
        let raw = read_matrix_arg(arg)?;
        let dim_bound = |dim: usize, max: usize| check_bound("--matrix", dim, max, "dimension");
        // integer entries are strings, polynomial entries are objects
        if let Ok(m) = serde_json::from_value::<SquareMatrix<BigInt>>(raw.clone()) {
            dim_bound(m.dim(), if pfaffian { MAX_PF_MATRIX_DIM } else { MAX_INT_MATRIX_DIM })?;
            let v = matrix_op(&m, pfaffian, "--matrix")?;
            ctx.emit(&v, json!({ "dim": m.dim(), op: v.json() }));
            return Ok(true);
        }
        let m = serde_json::from_value::<SquareMatrix<MultiPoly>>(raw).map_err(|e| CliError::flag("--matrix", e))?;
        dim_bound(m.dim(), if pfaffian { MAX_PF_MATRIX_DIM } else { MAX_POLY_MATRIX_DIM })?;
        let v = matrix_op(&m, pfaffian, "--matrix")?;
        ctx.emit(&v, json!({ "dim": m.dim(), op: v.json() }));
        return Ok(true);
    }
    let kind = match a.kind {
        Kind::Skew => MatrixKind::Skew,
        Kind::Symmetric => MatrixKind::Symmetric,
    };
    if pfaffian && kind == MatrixKind::Symmetric {
        return Err(CliError::usage("--kind: the Pfaffian needs the skew matrix"));
    }
    match a.input.source()? {
        Source::Values(values) => {
            check_nonempty(&values)?;
            let max = if pfaffian { MAX_NUMERIC_PF_N } else { MAX_INT_MATRIX_DIM / 2 };
            check_bound("--values", values.len(), max, "length")?;
            let m = rotundus_matrix(&(), &values, kind);
            let v = matrix_op(&m, pfaffian, "--values")?;
            ctx.emit(&v, json!({ "n": values.len(), "kind": method_name(kind), op: v.json() }));
        }
        Source::Symbolic(n) => {
            if n == 0 {
                return Err(CliError::usage("--n: must be >= 1"));
            }
            let max = if pfaffian { SYMBOLIC_PFAFFIAN_MAX_N } else { MAX_POLY_MATRIX_DIM / 2 };
            check_bound("--n", n, max, "symbolic size")?;
            let m = rotundus_matrix(&n, &MultiPoly::variables(n), kind);
            let v = matrix_op(&m, pfaffian, "--n")?;
            ctx.emit(&v, json!({ "n": n, "kind": method_name(kind), op: v.json() }));
        }
    }
    Ok(true)
}

fn cmd_triangulate(ctx: &mut Ctx, a: TriangulateArgs) -> CliResult {
    if a.n < 3 {
        return Err(CliError::usage(format!("--n: a polygon needs at least 3 vertices, got {}", a.n)));
    }
    check_bound("--n", a.n, MAX_POLYGON, "polygon size")?;
    let tris = if a.centrally_symmetric {
        if a.n % 2 == 1 {
            return Err(CliError::usage(format!(
                "--centrally-symmetric: needs an even number of vertices, got --n {}",
                a.n
            )));
        }
        enumerate_centrally_symmetric(a.n)
    } else {
        enumerate_triangulations(a.n)
    }
    .map_err(|e| CliError::flag("--n", e))?;
    if ctx.json {
        let list: Vec<Value> = tris.iter().map(|t| t.to_json()).collect();
        ctx.emit("", json!({ "n": a.n, "count": tris.len(), "triangulations": list }));
        return Ok(true);
    }
    let lines: Vec<String> = tris
        .iter()
        .map(|t| {
            if a.quiddities {
                t.quiddity().to_string()
            } else {
                t.diagonals()
                    .iter()
                    .map(|(i, j)| format!("{i}-{j}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        })
        .collect();
    let mut text = lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    text.push_str(&format!("# {} triangulations", tris.len()));
    ctx.emit(text, Value::Null);
    Ok(true)
}

fn cmd_solve(ctx: &mut Ctx, a: SolveArgs) -> CliResult {
    if a.n == 0 {
        return Err(CliError::usage("--n: must be >= 1"));
    }
    if a.max == 0 {
        return Err(CliError::usage("--max: must be >= 1"));
    }
    let space = (a.max as u128).checked_pow(a.n as u32).unwrap_or(u128::MAX);
    if space > MAX_SEARCH_SPACE {
        return Err(CliError::usage(format!(
            "--max: search space {}^{} exceeds {MAX_SEARCH_SPACE} candidates",
            a.max, a.n
        )));
    }
    let dedup = Dedup::from_flags(a.up_to_rotation, a.up_to_reflection);
    let raw = solve_rotundus(a.n, a.max, a.tp, Dedup::None).map_err(|e| CliError::flag("--n", e))?;
    let raw_count = raw.len();
    let rotation_count = Dedup::Rotation.apply(raw.clone()).len();
    let reflection_count = Dedup::RotationReflection.apply(raw.clone()).len();
    let shown = dedup.apply(raw);
    let dedup_name = match dedup {
        Dedup::None => "none",
        Dedup::Rotation => "rotation",
        Dedup::RotationReflection => "rotation_reflection",
    };
    let mut text: Vec<String> = shown.iter().map(ToString::to_string).collect();
    text.push(format!(
        "# {raw_count} solutions, {rotation_count} up to rotation, {reflection_count} up to rotation and reflection"
    ));
    let value = json!({
        "n": a.n,
        "max_entry": a.max,
        "totally_positive_only": a.tp,
        "dedup": dedup_name,
        "raw_count": raw_count,
        "rotation_count": rotation_count,
        "rotation_reflection_count": reflection_count,
        "solutions": shown,
    });
    ctx.emit(text.join("\n"), value);
    Ok(true)
}

fn cmd_chebyshev(ctx: &mut Ctx, a: ChebyshevArgs) -> CliResult {
    let kind = match a.kind {
        CKind::First => ChebyshevKind::First,
        CKind::Second => ChebyshevKind::Second,
    };
    if a.verify {
        if a.n < 2 {
            return Err(CliError::usage("--n: identity checks need n >= 2"));
        }
        check_bound("--n", a.n, MAX_CHEBYSHEV_VERIFY_N, "order")?;
        let report = verify_chebyshev_identities(a.n).map_err(|e| CliError::flag("--n", e))?;
        let text: Vec<String> = report
            .rows
            .iter()
            .map(|r| {
                let rel = r.first_second_relation.map_or("-".to_string(), |b| b.to_string());
                format!(
                    "n={} U~=K:{} T~=R:{} det=T~^2:{} trace:{} 2T=U-U:{}",
                    r.n, r.second_kind_continuant, r.first_kind_rotundus, r.pfaffian_formula, r.trace_formula, rel
                )
            })
            .collect();
        let holds = report.holds();
        ctx.emit(text.join("\n"), json!({ "rows": report.rows, "holds": holds }));
        return Ok(holds);
    }
    check_bound("--n", a.n, MAX_CHEBYSHEV_N, "order")?;
    let p = if a.normalized {
        cheb_normalized(kind, a.n)
    } else {
        cheb(kind, a.n)
    };
    let mut value = serde_json::to_value(&p).expect("polynomial serializes");
    value["kind"] = method_name(kind);
    value["n"] = json!(a.n);
    value["normalized"] = json!(a.normalized);
    ctx.emit(&p, value);
    Ok(true)
}

fn cmd_hankel(ctx: &mut Ctx, a: HankelArgs) -> CliResult {
    if a.count == 0 {
        return Err(CliError::usage("--count: must be >= 1"));
    }
    check_bound("--count", a.count, MAX_HANKEL_COUNT, "moment count")?;
    let seq = &a.sequence.0;
    let moments = moments_from_sequence(seq, a.count).map_err(|e| match e {
        Error::InsufficientSequence { .. } | Error::VanishingCofactor { .. } => CliError::flag("--sequence", e),
        other => CliError::flag("--count", other),
    })?;
    let report = verify_hankel(&moments, seq);
    let mut text = vec![moments.values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")];
    for c in &report.checks {
        let family = match c.family {
            HankelFamily::A => "A",
            HankelFamily::B => "B",
        };
        let status = if c.holds { "ok" } else { "FAILED" };
        text.push(format!("det {family}_{} = {} (expected {}) {status}", c.k, c.determinant, c.expected));
    }
    let holds = report.holds();
    ctx.emit(
        text.join("\n"),
        json!({ "moments": moments, "checks": report.checks, "holds": holds }),
    );
    Ok(holds)
}

fn cmd_verify(ctx: &mut Ctx, a: VerifyArgs) -> CliResult {
    if a.n_max < 2 {
        return Err(CliError::usage(format!("--n-max: must be >= 2, got {}", a.n_max)));
    }
    check_bound("--n-max", a.n_max, MAX_SUITE_N, "size bound")?;
    let mut config = SuiteConfig::new(a.n_max, a.seed);
    if a.suite != "all" {
        config.suites = a
            .suite
            .split(',')
            .map(str::parse::<Suite>)
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::flag("--suite", e))?;
    }
    config.fault = a.inject_fault.map(|FaultArg::OmegaSign| Fault::OmegaSign);
    let report = verify_suite(&config).map_err(|e| CliError::flag("--n-max", e))?;
    let value = serde_json::to_value(&report).expect("report serializes");
    let passed = report.passed();
    ctx.emit(&report, value);
    Ok(passed)
}
