//! The rotundus `R_n = K_n(a_1..a_n) - K_{n-2}(a_2..a_{n-1})`, the
//! cyclically invariant companion of the continuant.
//!
//! Four routes are provided and must agree:
//!
//! * the defining difference of continuants;
//! * the cyclic Euler rule: a sum over matchings of the `n`-cycle;
//! * the trace of the monodromy matrix;
//! * the Pfaffian of the `2n x 2n` skew matrix `[[E, C], [-C, E]]`, whose
//!   determinant is `R_n^2`.
//!
//! The convention-true Pfaffian differs from `R_n` by a sign. Tabulating
//! symbolically for `n <= 8` gives `pf = (-1)^{n(n-1)/2} R_n`
//! (`+, -, -, +, +, -, -, +`); only `pf^2 = R_n^2` is a theorem, so the
//! Pfaffian route normalizes its sign against the definition.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::continuant::{continuant_of, continuant_signed_len, cycle_matchings, monodromy_of, ContinuantMethod};
use crate::matrixalg::{block_skew, block_symmetric, tridiagonal, SquareMatrix};
use crate::ring::{MultiPoly, Ring};
use crate::{Error, Result};

/// Largest `n` for which the symbolic Pfaffian route is attempted.
pub const SYMBOLIC_PFAFFIAN_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RotundusMethod {
    Definition,
    CyclicEuler,
    Trace,
    PfaffianSquare,
}

impl RotundusMethod {
    pub const ALL: [RotundusMethod; 4] = [
        Self::Definition,
        Self::CyclicEuler,
        Self::Trace,
        Self::PfaffianSquare,
    ];
}

impl FromStr for RotundusMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "def" | "definition" => Ok(Self::Definition),
            "cyclic" | "cyclic_euler" => Ok(Self::CyclicEuler),
            "trace" => Ok(Self::Trace),
            "pf" | "pfaffian" | "pfaffian_square" => Ok(Self::PfaffianSquare),
            other => Err(Error::InvalidArgument(format!(
                "unknown rotundus method `{other}` (expected def, cyclic, trace or pf)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Skew,
    Symmetric,
}

fn rotundus_definition<T: Ring>(ctx: &T::Ctx, entries: &[T]) -> T {
    let n = entries.len();
    let full = continuant_of(ctx, entries, ContinuantMethod::Recurrence);
    let inner = if n >= 2 {
        continuant_signed_len(ctx, entries, 1, n as isize - 2)
    } else {
        T::zero(ctx)
    };
    full.minus(&inner)
}

/// `R_n` of arbitrary ring entries. Requires `n >= 1`.
pub fn rotundus_of<T: Ring>(ctx: &T::Ctx, entries: &[T], method: RotundusMethod) -> Result<T> {
    if entries.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(match method {
        RotundusMethod::Definition => rotundus_definition(ctx, entries),
        RotundusMethod::CyclicEuler => cycle_matchings(entries.len())
            .iter()
            .fold(T::zero(ctx), |acc, m| acc.plus(&m.weight(ctx, entries))),
        RotundusMethod::Trace => monodromy_of(ctx, entries).trace(),
        RotundusMethod::PfaffianSquare => {
            let pf = rotundus_matrix(ctx, entries, MatrixKind::Skew).pfaffian()?;
            let reference = rotundus_definition(ctx, entries);
            if pf.negated() == reference {
                pf.negated()
            } else {
                pf
            }
        }
    })
}

pub fn rotundus(values: &[BigInt], method: RotundusMethod) -> Result<BigInt> {
    rotundus_of(&(), values, method)
}

/// Symbolic `R_n(a1, ..., an)`.
pub fn rotundus_symbolic(n: usize, method: RotundusMethod) -> Result<MultiPoly> {
    if method == RotundusMethod::PfaffianSquare && n > SYMBOLIC_PFAFFIAN_MAX_N {
        return Err(Error::TooLarge {
            what: "symbolic Pfaffian order n",
            value: n,
            bound: SYMBOLIC_PFAFFIAN_MAX_N,
        });
    }
    rotundus_of(&n, &MultiPoly::variables(n), method)
}

/// The `2n x 2n` matrix `[[E, C], [-C, E]]` (skew) or `[[E', C], [C, E']]`
/// (symmetric), `C` the tridiagonal continuant matrix of the entries.
pub fn rotundus_matrix<T: Ring>(ctx: &T::Ctx, entries: &[T], kind: MatrixKind) -> SquareMatrix<T> {
    let c = tridiagonal(ctx, entries);
    let one = T::one(ctx);
    match kind {
        MatrixKind::Skew => block_skew(&one, &one, &c),
        MatrixKind::Symmetric => block_symmetric(&one, &one, &c),
    }
    .expect("continuant matrix has dimension >= 1")
}

/// Outcome of checking `det(Ω_n) = R_n^2` and `pf(Ω_n)^2 = R_n^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct PfaffianIdentityReport<T: Ring> {
    pub n: usize,
    pub rotundus: T,
    pub determinant: T,
    pub pfaffian: T,
    pub det_matches: bool,
    pub pf_square_matches: bool,
    /// `pf / R_n` when `R_n != 0`.
    pub sign: Option<i8>,
}

impl<T: Ring> PfaffianIdentityReport<T> {
    pub fn holds(&self) -> bool {
        self.det_matches && self.pf_square_matches
    }
}

pub fn verify_pfaffian_identity_of<T: Ring>(ctx: &T::Ctx, entries: &[T]) -> Result<PfaffianIdentityReport<T>> {
    let omega = rotundus_matrix(ctx, entries, MatrixKind::Skew);
    verify_pfaffian_identity_with(ctx, entries, &omega)
}

/// Same check against a caller-supplied matrix in place of `Ω_n`.
pub fn verify_pfaffian_identity_with<T: Ring>(
    ctx: &T::Ctx,
    entries: &[T],
    omega: &SquareMatrix<T>,
) -> Result<PfaffianIdentityReport<T>> {
    let r = rotundus_of(ctx, entries, RotundusMethod::Definition)?;
    let r2 = r.square();
    let determinant = omega.det();
    let pfaffian = omega.pfaffian()?;
    let sign = if r.is_zero() {
        None
    } else if pfaffian == r {
        Some(1)
    } else if pfaffian == r.negated() {
        Some(-1)
    } else {
        None
    };
    Ok(PfaffianIdentityReport {
        n: entries.len(),
        det_matches: determinant == r2,
        pf_square_matches: pfaffian.square() == r2,
        rotundus: r,
        determinant,
        pfaffian,
        sign,
    })
}

pub fn verify_pfaffian_identity(values: &[BigInt]) -> Result<PfaffianIdentityReport<BigInt>> {
    verify_pfaffian_identity_of(&(), values)
}

pub fn verify_pfaffian_identity_symbolic(n: usize) -> Result<PfaffianIdentityReport<MultiPoly>> {
    verify_pfaffian_identity_of(&n, &MultiPoly::variables(n))
}

/// `det` of the symmetric variant and the expected `(-1)^n (R_n^2 - 4)`.
pub fn symmetric_remark_of<T: Ring>(ctx: &T::Ctx, entries: &[T]) -> Result<(T, T)> {
    let r = rotundus_of(ctx, entries, RotundusMethod::Definition)?;
    let mut expected = r.square().minus(&T::from_i64(ctx, 4));
    if entries.len() % 2 == 1 {
        expected = expected.negated();
    }
    let det = rotundus_matrix(ctx, entries, MatrixKind::Symmetric).det();
    Ok((det, expected))
}
