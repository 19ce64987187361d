//! Exact determinants and Pfaffians over any [`Ring`].
//!
//! Rings with exact division (integers, rationals, univariate integer
//! polynomials) use Bareiss fraction-free elimination. Multivariate
//! polynomial matrices use Laplace expansion memoized over column subsets,
//! which is exact without any division and skips zero entries, so banded
//! matrices stay cheap.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Serialize};

use crate::ring::{MultiPoly, Ring};
use crate::{Error, Result};

/// Laplace expansion and the Pfaffian recursion index subsets with a `u64`.
pub const MAX_SUBSET_DIM: usize = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct SquareMatrix<T: Ring> {
    ctx: T::Ctx,
    dim: usize,
    entries: Vec<T>,
}

impl<T: Ring> SquareMatrix<T> {
    pub fn zeros(ctx: &T::Ctx, dim: usize) -> Self {
        Self {
            ctx: ctx.clone(),
            dim,
            entries: vec![T::zero(ctx); dim * dim],
        }
    }

    pub fn identity(ctx: &T::Ctx, dim: usize) -> Self {
        let mut m = Self::zeros(ctx, dim);
        for i in 0..dim {
            m.set(i, i, T::one(ctx));
        }
        m
    }

    pub fn from_rows(ctx: &T::Ctx, rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::LengthMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            ctx: ctx.clone(),
            dim,
            entries,
        })
    }

    pub fn from_fn(ctx: &T::Ctx, dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self {
            ctx: ctx.clone(),
            dim,
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(<[T]>::to_vec).collect()
    }

    pub fn map<U: Ring>(&self, ctx: &U::Ctx, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            ctx: ctx.clone(),
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ctx, self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn negated(&self) -> Self {
        self.map(&self.ctx, T::negated)
    }

    pub fn scaled(&self, k: &T) -> Self {
        self.map(&self.ctx, |v| v.times(k))
    }

    /// First offending entry of the skew-symmetry conditions, if any.
    pub fn skew_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            if !self.get(i, i).is_zero() {
                return Some((i, i));
            }
            for j in i + 1..self.dim {
                if self.get(i, j).plus(self.get(j, i)) != T::zero(&self.ctx) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.skew_violation().is_none()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Exact determinant. The empty matrix has determinant 1.
    pub fn det(&self) -> T {
        if T::EXACT_DIVISION {
            self.det_bareiss()
        } else {
            self.det_laplace()
        }
    }

    /// Bareiss elimination with row pivoting. Requires [`Ring::exact_div`].
    pub fn det_bareiss(&self) -> T {
        let n = self.dim;
        if n == 0 {
            return T::one(&self.ctx);
        }
        let mut a: Vec<Vec<T>> = self.rows();
        let mut negate = false;
        let mut prev = T::one(&self.ctx);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        negate = !negate;
                    }
                    None => return T::zero(&self.ctx),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                    a[i][j] = num
                        .exact_div(&prev)
                        .expect("Bareiss step divides exactly in an integral domain");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if negate {
            d.negated()
        } else {
            d
        }
    }

    /// Division-free Laplace expansion, memoized over the set of columns
    /// consumed by the rows processed so far.
    pub fn det_laplace(&self) -> T {
        let n = self.dim;
        assert!(n <= MAX_SUBSET_DIM, "Laplace expansion limited to dim {MAX_SUBSET_DIM}");
        let mut level: HashMap<u64, T> = HashMap::new();
        level.insert(0, T::one(&self.ctx));
        for row in 0..n {
            let mut next: HashMap<u64, T> = HashMap::new();
            for (&mask, acc) in &level {
                for col in 0..n {
                    let bit = 1u64 << col;
                    if mask & bit != 0 {
                        continue;
                    }
                    let entry = self.get(row, col);
                    if entry.is_zero() {
                        continue;
                    }
                    // inversions added by placing `col` after the used columns
                    let above = (mask >> col).count_ones();
                    let mut term = acc.times(entry);
                    if above % 2 == 1 {
                        term = term.negated();
                    }
                    next.entry(mask | bit)
                        .and_modify(|v| *v = v.plus(&term))
                        .or_insert(term);
                }
            }
            next.retain(|_, v| !v.is_zero());
            level = next;
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        level.remove(&full).unwrap_or_else(|| T::zero(&self.ctx))
    }

    /// Pfaffian by expansion along the lowest remaining index, memoized on
    /// the remaining index set. Normalized so that `pf([[0,1],[-1,0]]) = 1`;
    /// the empty matrix has Pfaffian 1.
    pub fn pfaffian(&self) -> Result<T> {
        if self.dim % 2 == 1 {
            return Err(Error::OddDimension(self.dim));
        }
        if let Some((row, col)) = self.skew_violation() {
            return Err(Error::NotSkewSymmetric { row, col });
        }
        if self.dim > MAX_SUBSET_DIM {
            return Err(Error::TooLarge {
                what: "Pfaffian dimension",
                value: self.dim,
                bound: MAX_SUBSET_DIM,
            });
        }
        let full = if self.dim == 64 {
            u64::MAX
        } else {
            (1u64 << self.dim) - 1
        };
        let mut memo = HashMap::new();
        Ok(self.pf_rec(full, &mut memo))
    }

    fn pf_rec(&self, remaining: u64, memo: &mut HashMap<u64, T>) -> T {
        if remaining == 0 {
            return T::one(&self.ctx);
        }
        if let Some(v) = memo.get(&remaining) {
            return v.clone();
        }
        let first = remaining.trailing_zeros() as usize;
        let rest = remaining & !(1u64 << first);
        let mut acc = T::zero(&self.ctx);
        let mut position = 0usize;
        let mut scan = rest;
        while scan != 0 {
            let j = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            position += 1;
            let entry = self.get(first, j);
            if entry.is_zero() {
                continue;
            }
            let sub = self.pf_rec(rest & !(1u64 << j), memo);
            if sub.is_zero() {
                continue;
            }
            let term = entry.times(&sub);
            acc = if position % 2 == 1 {
                acc.plus(&term)
            } else {
                acc.minus(&term)
            };
        }
        memo.insert(remaining, acc.clone());
        acc
    }

    /// The interior matrix with the first and last rows and columns removed.
    pub fn mid(&self) -> Result<Self> {
        if self.dim < 2 {
            return Err(Error::DimensionTooSmall {
                dim: self.dim,
                min: 2,
            });
        }
        let d = self.dim - 2;
        Ok(Self::from_fn(&self.ctx, d, |i, j| {
            self.get(i + 1, j + 1).clone()
        }))
    }
}

/// The `n x n` corner matrix `E`: `+1` in the upper right corner and `-1`
/// (skew) or `+1` (symmetric) in the lower left. At `n = 1` the two corners
/// coincide and the contributions add up.
pub fn corner_matrix<T: Ring>(ctx: &T::Ctx, n: usize, symmetric: bool) -> SquareMatrix<T> {
    let mut e = SquareMatrix::zeros(ctx, n);
    if n == 0 {
        return e;
    }
    let one = T::one(ctx);
    let lower = if symmetric { one.clone() } else { one.negated() };
    let upper_right = e.get(0, n - 1).plus(&one);
    e.set(0, n - 1, upper_right);
    let lower_left = e.get(n - 1, 0).plus(&lower);
    e.set(n - 1, 0, lower_left);
    e
}

fn assemble<T: Ring>(
    ctx: &T::Ctx,
    tl: &SquareMatrix<T>,
    tr: &SquareMatrix<T>,
    bl: &SquareMatrix<T>,
    br: &SquareMatrix<T>,
) -> SquareMatrix<T> {
    let n = tl.dim();
    SquareMatrix::from_fn(ctx, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => tl.get(i, j).clone(),
        (true, false) => tr.get(i, j - n).clone(),
        (false, true) => bl.get(i - n, j).clone(),
        (false, false) => br.get(i - n, j - n).clone(),
    })
}

/// The `2n x 2n` skew-symmetric matrix `[[xE, A], [-Aᵀ, yE]]`.
///
/// For symmetric `A` (such as the tridiagonal continuant matrix) the lower
/// left block is simply `-A`.
pub fn block_skew<T: Ring>(x: &T, y: &T, a: &SquareMatrix<T>) -> Result<SquareMatrix<T>> {
    let n = a.dim();
    if n < 1 {
        return Err(Error::DimensionTooSmall { dim: n, min: 1 });
    }
    let ctx = a.ctx().clone();
    let e: SquareMatrix<T> = corner_matrix(&ctx, n, false);
    Ok(assemble(
        &ctx,
        &e.scaled(x),
        a,
        &a.transpose().negated(),
        &e.scaled(y),
    ))
}

/// The symmetric companion `[[xE', A], [Aᵀ, yE']]` with the all-positive
/// corner matrix `E'`.
pub fn block_symmetric<T: Ring>(x: &T, y: &T, a: &SquareMatrix<T>) -> Result<SquareMatrix<T>> {
    let n = a.dim();
    if n < 1 {
        return Err(Error::DimensionTooSmall { dim: n, min: 1 });
    }
    let ctx = a.ctx().clone();
    let e: SquareMatrix<T> = corner_matrix(&ctx, n, true);
    Ok(assemble(&ctx, &e.scaled(x), a, &a.transpose(), &e.scaled(y)))
}

/// Tridiagonal matrix with the given diagonal and unit off-diagonals.
pub fn tridiagonal<T: Ring>(ctx: &T::Ctx, diagonal: &[T]) -> SquareMatrix<T> {
    let n = diagonal.len();
    SquareMatrix::from_fn(ctx, n, |i, j| {
        if i == j {
            diagonal[i].clone()
        } else if i.abs_diff(j) == 1 {
            T::one(ctx)
        } else {
            T::zero(ctx)
        }
    })
}

// JSON: {"dim": n, "entries": [[...]]}. Integer entries are decimal
// strings, polynomial entries use the polynomial schema.

#[derive(Serialize, Deserialize)]
struct MatrixJson<E> {
    dim: usize,
    entries: Vec<Vec<E>>,
}

impl Serialize for SquareMatrix<BigInt> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            dim: self.dim,
            entries: self
                .rows()
                .into_iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SquareMatrix<BigInt> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::<String>::deserialize(d)?;
        if raw.entries.len() != raw.dim {
            return Err(D::Error::custom("row count does not match dim"));
        }
        let rows = raw
            .entries
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|s| {
                        s.parse::<BigInt>()
                            .map_err(|_| D::Error::custom(format!("bad integer `{s}`")))
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        SquareMatrix::from_rows(&(), rows).map_err(D::Error::custom)
    }
}

impl Serialize for SquareMatrix<MultiPoly> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            dim: self.dim,
            entries: self.rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SquareMatrix<MultiPoly> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::<MultiPoly>::deserialize(d)?;
        if raw.entries.len() != raw.dim {
            return Err(D::Error::custom("row count does not match dim"));
        }
        let arity = raw
            .entries
            .iter()
            .flatten()
            .map(MultiPoly::arity)
            .next()
            .unwrap_or(0);
        if raw.entries.iter().flatten().any(|p| p.arity() != arity) {
            return Err(D::Error::custom("entries have mixed arity"));
        }
        SquareMatrix::from_rows(&arity, raw.entries).map_err(D::Error::custom)
    }
}
