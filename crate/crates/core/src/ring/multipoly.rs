//! Sparse multivariate polynomials in `a1..an` with big integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Ring;
use crate::{Error, Result};

/// Exponent vector of a monomial, one entry per variable.
///
/// The ordering is the canonical term order: higher total degree first,
/// ties broken by descending lexicographic order of the exponent vector.
/// `a1*a2*a3` therefore precedes `a1*a2`, which precedes `a2*a3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn constant(arity: usize) -> Self {
        Self {
            exps: vec![0; arity],
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn relabel(&self, target: impl Fn(usize) -> usize) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[target(i)] = e;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in the variables `a1..an` (`n` = arity).
///
/// Terms live in a map keyed by [`Monomial`], so iteration is always in
/// canonical order and zero coefficients are never stored. Two polynomials
/// are equal iff their term lists are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(Monomial::constant(arity), c.into());
        p
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, 1)
    }

    /// The variable `a_index`, 1-based.
    pub fn variable(arity: usize, index: usize) -> Result<Self> {
        if index == 0 || index > arity {
            return Err(Error::VariableOutOfRange { index, arity });
        }
        let mut exps = vec![0; arity];
        exps[index - 1] = 1;
        let mut p = Self::zero(arity);
        p.add_term(Monomial::new(exps), <BigInt as One>::one());
        Ok(p)
    }

    /// All variables `a1..an` in order.
    pub fn variables(arity: usize) -> Vec<Self> {
        (1..=arity)
            .map(|i| Self::variable(arity, i).expect("index in range"))
            .collect()
    }

    /// Build from `(coefficient, exponents)` pairs; like terms are merged.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BigInt, Vec<u32>)>,
    {
        let mut p = Self::zero(arity);
        for (c, e) in terms {
            if e.len() != arity {
                return Err(Error::LengthMismatch {
                    expected: arity,
                    got: e.len(),
                });
            }
            p.add_term(Monomial::new(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if Zero::is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if Zero::is_zero(existing) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct monomials.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Number of terms before like terms are merged, i.e. the sum of the
    /// absolute values of the coefficients.
    pub fn expanded_term_count(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial::new(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    /// Exact value at an integer point.
    pub fn eval(&self, point: &[BigInt]) -> Result<BigInt> {
        self.eval_in(&(), point)
    }

    /// Substitute ring elements for the variables. With every variable
    /// mapped to the same univariate `x`, this identifies the variables.
    pub fn eval_in<T: Ring>(&self, ctx: &T::Ctx, point: &[T]) -> Result<T> {
        if point.len() != self.arity {
            return Err(Error::LengthMismatch {
                expected: self.arity,
                got: point.len(),
            });
        }
        let mut acc = T::zero(ctx);
        for (m, c) in &self.terms {
            let mut term = T::from_int(ctx, c);
            for (x, &e) in point.iter().zip(m.exps()) {
                for _ in 0..e {
                    term = term.times(x);
                }
            }
            acc = acc.plus(&term);
        }
        Ok(acc)
    }

    /// Relabel `a_i` as `a_{((i-1+k) mod n)+1}`.
    pub fn cyclic_shift(&self, k: i64) -> Self {
        let n = self.arity;
        if n == 0 {
            return self.clone();
        }
        let k = k.rem_euclid(n as i64) as usize;
        self.relabel(|i| (i + k) % n)
    }

    /// Relabel `a_i` as `a_{n+1-i}`.
    pub fn reverse(&self) -> Self {
        let n = self.arity;
        self.relabel(|i| n - 1 - i)
    }

    fn relabel(&self, target: impl Fn(usize) -> usize + Copy) -> Self {
        let mut out = Self::zero(self.arity);
        for (m, c) in &self.terms {
            out.add_term(m.relabel(target), c.clone());
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "a{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Renders like `a1*a2*a3 - a1 - a2 - a3`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.arity, self)
    }
}

impl Ring for MultiPoly {
    type Ctx = usize;

    fn ctx(&self) -> usize {
        self.arity
    }
    fn zero(arity: &usize) -> Self {
        MultiPoly::zero(*arity)
    }
    fn one(arity: &usize) -> Self {
        MultiPoly::one(*arity)
    }
    fn from_int(arity: &usize, v: &BigInt) -> Self {
        MultiPoly::constant(*arity, v.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    // Generic code only combines polynomials built over one context, so an
    // arity mismatch here is a programming error.
    fn plus(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("arity mismatch")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("arity mismatch")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("arity mismatch")
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    c: String,
    e: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    arity: usize,
    terms: Vec<TermJson>,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    c: c.to_string(),
                    e: m.exps.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient `{}`", t.c)))?;
            terms.push((c, t.e));
        }
        MultiPoly::from_terms(raw.arity, terms).map_err(D::Error::custom)
    }
}
