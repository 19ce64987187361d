//! Continuants `K_n(a_1, ..., a_n)`, the monodromy matrix and the orbit of
//! the three-term difference equation `V_{i+1} = a_i V_i - V_{i-1}`.
//!
//! Three independent routes compute `K_n`:
//!
//! * [`ContinuantMethod::Determinant`]: the tridiagonal determinant with unit
//!   off-diagonals;
//! * [`ContinuantMethod::Euler`]: a sum over the matchings of the path graph
//!   on `n` vertices, where every matched adjacent pair contributes `-1` and
//!   every unmatched vertex contributes its variable;
//! * [`ContinuantMethod::Recurrence`]: `K_j = a_j K_{j-1} - K_{j-2}` with
//!   `K_0 = 1`, `K_{-1} = 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::matrixalg::tridiagonal;
use crate::ring::{MultiPoly, Ring};
use crate::{Error, Result};

/// An `n`-periodic integer sequence; `element(i)` wraps for any `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicSequence {
    values: Vec<BigInt>,
}

impl CyclicSequence {
    pub fn new(values: Vec<BigInt>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { values })
    }

    pub fn from_i64(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigInt> {
        self.values
    }

    /// `a_i` for any integer `i`, 1-based: `element(1)` is the first value
    /// and `element(0)` the last.
    pub fn element(&self, i: i64) -> &BigInt {
        let n = self.values.len() as i64;
        &self.values[(i - 1).rem_euclid(n) as usize]
    }

    /// `(a_start, ..., a_{start+len-1})` over the periodic extension.
    pub fn window(&self, start: i64, len: usize) -> Vec<BigInt> {
        (0..len as i64)
            .map(|t| self.element(start + t).clone())
            .collect()
    }

    /// `(a_{1+k}, ..., a_{n+k})`.
    pub fn rotated(&self, k: i64) -> Self {
        Self {
            values: self.window(1 + k, self.len()),
        }
    }

    pub fn reversed(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self { values }
    }

    /// The sequence repeated `times` times.
    pub fn repeated(&self, times: usize) -> Self {
        Self {
            values: self.window(1, self.len() * times.max(1)),
        }
    }

    /// Lexicographically least rotation.
    pub fn min_rotation(&self) -> Self {
        (0..self.len() as i64)
            .map(|k| self.rotated(k))
            .min()
            .expect("non-empty")
    }

    /// Least rotation of either orientation.
    pub fn min_dihedral(&self) -> Self {
        self.min_rotation().min(self.reversed().min_rotation())
    }
}

impl fmt::Display for CyclicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for CyclicSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(crate::ring::parse_int_list(s)?)
    }
}

// Serialized as a JSON array of integers; values beyond i64 fall back to
// decimal strings.
impl Serialize for CyclicSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.values.len()))?;
        for v in &self.values {
            match i64::try_from(v) {
                Ok(small) => seq.serialize_element(&small)?,
                Err(_) => seq.serialize_element(&v.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for CyclicSequence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<serde_json::Value>::deserialize(d)?;
        let values = raw
            .into_iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("non-integer entry")),
                serde_json::Value::String(s) => s
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad integer `{s}`"))),
                _ => Err(D::Error::custom("entries must be integers")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        CyclicSequence::new(values).map_err(D::Error::custom)
    }
}

/// A 2x2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<T: Ring> {
    pub entries: [[T; 2]; 2],
}

impl<T: Ring> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self {
            entries: [[a, b], [c, d]],
        }
    }

    pub fn identity(ctx: &T::Ctx) -> Self {
        Self::new(T::one(ctx), T::zero(ctx), T::zero(ctx), T::one(ctx))
    }

    /// The elementary factor `[[a, 1], [-1, 0]]`.
    pub fn elementary(ctx: &T::Ctx, a: &T) -> Self {
        Self::new(
            a.clone(),
            T::one(ctx),
            T::one(ctx).negated(),
            T::zero(ctx),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let [[a, b], [c, d]] = &self.entries;
        let [[e, f], [g, h]] = &rhs.entries;
        Self::new(
            a.times(e).plus(&b.times(g)),
            a.times(f).plus(&b.times(h)),
            c.times(e).plus(&d.times(g)),
            c.times(f).plus(&d.times(h)),
        )
    }

    pub fn trace(&self) -> T {
        self.entries[0][0].plus(&self.entries[1][1])
    }

    pub fn det(&self) -> T {
        let [[a, b], [c, d]] = &self.entries;
        a.times(d).minus(&b.times(c))
    }

    pub fn is_minus_identity(&self) -> bool {
        let ctx = self.entries[0][0].ctx();
        *self == Self::identity(&ctx).scaled(&T::one(&ctx).negated())
    }

    pub fn scaled(&self, k: &T) -> Self {
        let [[a, b], [c, d]] = &self.entries;
        Self::new(a.times(k), b.times(k), c.times(k), d.times(k))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = &self.entries;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ContinuantMethod {
    Determinant,
    Euler,
    Recurrence,
}

impl ContinuantMethod {
    pub const ALL: [ContinuantMethod; 3] = [Self::Determinant, Self::Euler, Self::Recurrence];
}

impl FromStr for ContinuantMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "det" | "determinant" => Ok(Self::Determinant),
            "euler" => Ok(Self::Euler),
            "rec" | "recurrence" => Ok(Self::Recurrence),
            other => Err(Error::InvalidArgument(format!(
                "unknown continuant method `{other}` (expected det, euler or rec)"
            ))),
        }
    }
}

/// A matching of a path or cycle graph: the matched vertex pairs, each
/// stored as `(i, j)` with `j` the successor of `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// `(-1)^{#pairs}` times the product of the unmatched entries.
    pub fn weight<T: Ring>(&self, ctx: &T::Ctx, entries: &[T]) -> T {
        let mut covered = vec![false; entries.len()];
        for &(i, j) in &self.pairs {
            covered[i] = true;
            covered[j] = true;
        }
        let mut w = T::one(ctx);
        for (x, used) in entries.iter().zip(covered) {
            if !used {
                w = w.times(x);
            }
        }
        if self.pairs.len() % 2 == 1 {
            w.negated()
        } else {
            w
        }
    }
}

fn extend_path(start: usize, end: usize, prefix: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
    // vertices start..end (exclusive) remain
    if end <= start + 1 {
        out.push(Matching {
            pairs: prefix.clone(),
        });
        return;
    }
    extend_path(start + 1, end, prefix, out);
    prefix.push((start, start + 1));
    extend_path(start + 2, end, prefix, out);
    prefix.pop();
}

/// All matchings of the path `0 - 1 - ... - (n-1)`.
pub fn path_matchings(n: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    extend_path(0, n, &mut Vec::new(), &mut out);
    out
}

/// All matchings of the cycle on `n` vertices. For `n = 2` the cycle has two
/// distinct edges between its vertices, so `{0-1}` is counted twice; for
/// `n = 1` there are no edges.
pub fn cycle_matchings(n: usize) -> Vec<Matching> {
    let mut out = path_matchings(n);
    if n >= 2 {
        // matchings that use the closing edge (n-1, 0)
        let mut inner = Vec::new();
        extend_path(1, n - 1, &mut Vec::new(), &mut inner);
        out.extend(inner.into_iter().map(|mut m| {
            m.pairs.push((n - 1, 0));
            m
        }));
    }
    out
}

/// `K_n` of arbitrary ring entries by the chosen route.
pub fn continuant_of<T: Ring>(ctx: &T::Ctx, entries: &[T], method: ContinuantMethod) -> T {
    match method {
        ContinuantMethod::Determinant => tridiagonal(ctx, entries).det(),
        ContinuantMethod::Euler => path_matchings(entries.len())
            .iter()
            .fold(T::zero(ctx), |acc, m| acc.plus(&m.weight(ctx, entries))),
        ContinuantMethod::Recurrence => {
            let mut prev = T::zero(ctx);
            let mut cur = T::one(ctx);
            for a in entries {
                let next = a.times(&cur).minus(&prev);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Numeric continuant.
pub fn continuant(values: &[BigInt], method: ContinuantMethod) -> BigInt {
    continuant_of(&(), values, method)
}

/// Symbolic `K_n(a1, ..., an)`.
pub fn continuant_symbolic(n: usize, method: ContinuantMethod) -> MultiPoly {
    continuant_of(&n, &MultiPoly::variables(n), method)
}

/// `K` of a contiguous window, with `K_{-1} = 0` for the window of
/// length `-1` that appears in the boundary cases of the rotundus.
pub(crate) fn continuant_signed_len<T: Ring>(ctx: &T::Ctx, entries: &[T], start: usize, len: isize) -> T {
    if len < 0 {
        T::zero(ctx)
    } else {
        continuant_of(ctx, &entries[start..start + len as usize], ContinuantMethod::Recurrence)
    }
}

/// Product of the elementary factors `[[a_i, 1], [-1, 0]]`, in order.
pub fn monodromy_of<T: Ring>(ctx: &T::Ctx, entries: &[T]) -> Mat2<T> {
    entries
        .iter()
        .fold(Mat2::identity(ctx), |acc, a| acc.mul(&Mat2::elementary(ctx, a)))
}

pub fn monodromy(seq: &CyclicSequence) -> Mat2<BigInt> {
    monodromy_of(&(), seq.values())
}

pub fn monodromy_symbolic(n: usize) -> Mat2<MultiPoly> {
    monodromy_of(&n, &MultiPoly::variables(n))
}

/// `V_2, ..., V_{steps+1}` of `V_{i+1} = a_i V_i - V_{i-1}` from `(V_0, V_1)`,
/// with the periodic extension of `seq`.
pub fn difference_orbit(seq: &CyclicSequence, v0: &BigInt, v1: &BigInt, steps: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(steps);
    let (mut prev, mut cur) = (v0.clone(), v1.clone());
    for i in 1..=steps as i64 {
        let next = seq.element(i) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next.clone());
        out.push(next);
    }
    out
}
