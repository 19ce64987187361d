//! Moment sequences `C_0, C_1, ...` pinned down by Hankel determinants:
//! `det A_k = 1` for the `(k+1) x (k+1)` matrix on `C_0..C_{2k}` and
//! `det B_k = K_{k+1}(a_0..a_k)` for the `k x k` matrix on `C_1..C_{2k-1}`.
//!
//! Each condition is linear in its newest moment, which sits in the bottom
//! right corner with the previous Hankel determinant as cofactor.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::continuant::{continuant, ContinuantMethod};
use crate::matrixalg::SquareMatrix;
use crate::ring::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence {
    pub values: Vec<Rational>,
}

impl MomentSequence {
    pub fn from_integers(values: &[i64]) -> Self {
        Self {
            values: values.iter().map(|&v| Rational::from_integer(v.into())).collect(),
        }
    }

    /// The moments as integers, if they all are.
    pub fn as_integers(&self) -> Option<Vec<BigInt>> {
        self.values
            .iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect()
    }
}

impl Serialize for MomentSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let text: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        text.serialize(s)
    }
}

/// Hankel matrix `H[i][j] = C_{offset+i+j}` of the given size.
fn hankel(moments: &[Rational], offset: usize, size: usize) -> SquareMatrix<Rational> {
    SquareMatrix::from_fn(&(), size, |i, j| moments[offset + i + j].clone())
}

/// Solve for `C_0..C_{count-1}`.
pub fn moments_from_sequence(a: &[BigInt], count: usize) -> Result<MomentSequence> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be >= 1".into()));
    }
    // the largest odd index 2k-1 < count needs a_0..a_k
    let need = count / 2 + 1;
    if count > 1 && a.len() < need {
        return Err(Error::InsufficientSequence { need, got: a.len() });
    }
    let mut c: Vec<Rational> = vec![Rational::one()];
    for index in 1..count {
        let k = index.div_ceil(2);
        let (offset, size, target) = if index % 2 == 0 {
            (0, k + 1, Rational::one())
        } else {
            let target = continuant(&a[..=k], ContinuantMethod::Recurrence);
            (1, k, Rational::from_integer(target))
        };
        let cofactor = hankel(&c, offset, size - 1).det();
        if cofactor.is_zero() {
            return Err(Error::VanishingCofactor { index, k });
        }
        c.push(Rational::zero());
        let base = hankel(&c, offset, size).det();
        let value = (target - base) / cofactor;
        *c.last_mut().expect("pushed") = value;
    }
    Ok(MomentSequence { values: c })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HankelFamily {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HankelCheck {
    pub family: HankelFamily,
    pub k: usize,
    #[serde(serialize_with = "as_string")]
    pub determinant: Rational,
    #[serde(serialize_with = "as_string")]
    pub expected: Rational,
    pub holds: bool,
}

fn as_string<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HankelReport {
    pub checks: Vec<HankelCheck>,
}

impl HankelReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn family_holds(&self, family: HankelFamily) -> bool {
        self.checks.iter().filter(|c| c.family == family).all(|c| c.holds)
    }
}

/// Every `det A_k` with `2k + 1 <= len` against 1 and every `det B_k`
/// (`k >= 1`, `2k <= len`, `a_0..a_k` available) against `K_{k+1}`.
pub fn verify_hankel(moments: &MomentSequence, a: &[BigInt]) -> HankelReport {
    let c = &moments.values;
    let mut checks = Vec::new();
    let mut k = 0;
    while 2 * k < c.len() {
        let det = hankel(c, 0, k + 1).det();
        let expected = Rational::one();
        checks.push(HankelCheck {
            family: HankelFamily::A,
            k,
            holds: det == expected,
            determinant: det,
            expected,
        });
        k += 1;
    }
    let mut k = 1;
    while 2 * k <= c.len() && k < a.len() {
        let det = hankel(c, 1, k).det();
        let expected = Rational::from_integer(continuant(&a[..=k], ContinuantMethod::Recurrence));
        checks.push(HankelCheck {
            family: HankelFamily::B,
            k,
            holds: det == expected,
            determinant: det,
            expected,
        });
        k += 1;
    }
    HankelReport { checks }
}
