//! Chebyshev polynomials and their continuant, rotundus, Pfaffian and trace
//! expressions.
//!
//! The identities are checked on the normalized polynomials
//! `Ũ_n(x) = U_n(x/2)` and `T̃_n(x) = 2 T_n(x/2)`, which have integer
//! coefficients and satisfy `P̃_{n+1} = x P̃_n - P̃_{n-1}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::continuant::{continuant_symbolic, monodromy_of, ContinuantMethod};
use crate::ring::{Rational, Ring};
use crate::rotundus::{rotundus_matrix, rotundus_symbolic, MatrixKind, RotundusMethod};
use crate::{Error, Result};

/// Dense univariate polynomial; `coeffs[k]` multiplies `x^k`. Trailing
/// zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

pub type IntPoly = UniPoly<BigInt>;
pub type RatPoly = UniPoly<Rational>;

impl<C: Ring<Ctx = ()>> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn x() -> Self {
        Self::new(vec![C::zero(&()), C::one(&())])
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(|| C::zero(&()))
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(&()), |acc, c| acc.times(x).plus(c))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..len).map(|k| f(&self.coeff(k), &rhs.coeff(k))).collect())
    }
}

impl IntPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> RatPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl RatPoly {
    /// `p(s x)`.
    pub fn scale_argument(&self, s: &Rational) -> Self {
        let mut power = Rational::from_integer(1.into());
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &power);
            power *= s;
        }
        Self::new(out)
    }
}

impl<C: Ring<Ctx = ()>> Ring for UniPoly<C> {
    type Ctx = ();
    const EXACT_DIVISION: bool = C::EXACT_DIVISION;

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        Self { coeffs: Vec::new() }
    }
    fn one(_: &()) -> Self {
        Self::constant(C::one(&()))
    }
    fn from_int(_: &(), v: &BigInt) -> Self {
        Self::constant(C::from_int(&(), v))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, C::plus)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, C::minus)
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(&());
        }
        let mut out = vec![C::zero(&()); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Self::new(out)
    }
    fn negated(&self) -> Self {
        Self::new(self.coeffs.iter().map(C::negated).collect())
    }

    /// Long division; `None` unless the remainder is zero and every
    /// quotient coefficient exists in the coefficient ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let dd = rhs.degree()?;
        let lead = rhs.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Some(Self::zero(&()));
        };
        if nd < dd {
            return None;
        }
        let mut quot = vec![C::zero(&()); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let q = c.exact_div(&lead)?;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].minus(&q.times(b));
            }
            quot[k] = q;
        }
        if rem.iter().all(Ring::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }
}

/// Descending powers, e.g. `8x^4 - 8x^2 + 1`.
impl<C: Ring<Ctx = ()> + Signed + fmt::Display> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            let unit = mag == <C as Ring>::one(&());
            if k == 0 || !unit {
                let text = mag.to_string();
                if k > 0 && text.contains('/') {
                    write!(f, "({text})")?;
                } else {
                    f.write_str(&text)?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("UniPoly").field(&self.coeffs).finish()
    }
}

impl Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        serde_json::json!({ "coefficients": coeffs }).serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChebyshevKind {
    First,
    Second,
}

impl FromStr for ChebyshevKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" | "T" | "t" => Ok(Self::First),
            "second" | "U" | "u" => Ok(Self::Second),
            other => Err(Error::InvalidArgument(format!(
                "unknown Chebyshev kind `{other}` (expected first or second)"
            ))),
        }
    }
}

fn three_term(p0: IntPoly, p1: IntPoly, step: &IntPoly, n: usize) -> IntPoly {
    if n == 0 {
        return p0;
    }
    let (mut prev, mut cur) = (p0, p1);
    for _ in 1..n {
        let next = step.times(&cur).minus(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `T_n` or `U_n` from `P_{n+1} = 2x P_n - P_{n-1}`.
pub fn cheb(kind: ChebyshevKind, n: usize) -> IntPoly {
    let x = IntPoly::x();
    let two_x = IntPoly::from_i64(&[0, 2]);
    let p1 = match kind {
        ChebyshevKind::First => x,
        ChebyshevKind::Second => two_x.clone(),
    };
    three_term(IntPoly::from_i64(&[1]), p1, &two_x, n)
}

/// `T̃_n(x) = 2 T_n(x/2)` or `Ũ_n(x) = U_n(x/2)`.
pub fn cheb_normalized(kind: ChebyshevKind, n: usize) -> IntPoly {
    let p0 = match kind {
        ChebyshevKind::First => IntPoly::from_i64(&[2]),
        ChebyshevKind::Second => IntPoly::from_i64(&[1]),
    };
    three_term(p0, IntPoly::x(), &IntPoly::x(), n)
}

/// Per-order outcome of the five identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChebyshevRow {
    pub n: usize,
    /// `Ũ_n = K_n(x, ..., x)`
    pub second_kind_continuant: bool,
    /// `T̃_n = R_n(x, ..., x)`
    pub first_kind_rotundus: bool,
    /// `det Ω_n(x, ..., x) = T̃_n^2`
    pub pfaffian_formula: bool,
    /// `T̃_n = tr [[x, 1], [-1, 0]]^n`
    pub trace_formula: bool,
    /// `2 T_n = U_n - U_{n-2}`, from `n = 2`
    pub first_second_relation: Option<bool>,
}

impl ChebyshevRow {
    pub fn holds(&self) -> bool {
        self.second_kind_continuant
            && self.first_kind_rotundus
            && self.pfaffian_formula
            && self.trace_formula
            && self.first_second_relation.unwrap_or(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChebyshevReport {
    pub rows: Vec<ChebyshevRow>,
}

impl ChebyshevReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(ChebyshevRow::holds)
    }
}

pub fn chebyshev_row(n: usize) -> Result<ChebyshevRow> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be >= 1".into()));
    }
    let x = IntPoly::x();
    let diag = vec![x.clone(); n];
    let u = cheb_normalized(ChebyshevKind::Second, n);
    let t = cheb_normalized(ChebyshevKind::First, n);

    let k_collapsed = continuant_symbolic(n, ContinuantMethod::Euler).eval_in(&(), &diag)?;
    let r_collapsed = rotundus_symbolic(n, RotundusMethod::CyclicEuler)?.eval_in(&(), &diag)?;
    let det = rotundus_matrix(&(), &diag, MatrixKind::Skew).det();
    let trace = monodromy_of(&(), &diag).trace();
    let relation = (n >= 2).then(|| {
        cheb(ChebyshevKind::First, n).times(&IntPoly::from_i64(&[2]))
            == cheb(ChebyshevKind::Second, n).minus(&cheb(ChebyshevKind::Second, n - 2))
    });
    Ok(ChebyshevRow {
        n,
        second_kind_continuant: k_collapsed == u,
        first_kind_rotundus: r_collapsed == t,
        pfaffian_formula: det == t.square(),
        trace_formula: trace == t,
        first_second_relation: relation,
    })
}

pub fn verify_chebyshev_identities(n_max: usize) -> Result<ChebyshevReport> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(format!("n_max must be >= 2, got {n_max}")));
    }
    Ok(ChebyshevReport {
        rows: (1..=n_max).map(chebyshev_row).collect::<Result<_>>()?,
    })
}
