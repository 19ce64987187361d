//! Polygon triangulations, their quiddities, the Conway-Coxeter system and
//! the link between zeros of the rotundus and centrally symmetric
//! triangulations of `2n`-gons.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::continuant::{continuant, monodromy, ContinuantMethod, CyclicSequence};
use crate::rotundus::{rotundus, RotundusMethod};
use crate::{Error, Result};

/// Diagonals `(i, j)` of a convex `n`-gon with vertices `0..n`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

fn crosses((i, j): (usize, usize), (k, l): (usize, usize)) -> bool {
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

impl Triangulation {
    /// Validates and sorts the diagonal set.
    pub fn new(n: usize, diagonals: Vec<(usize, usize)>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidTriangulation(format!("polygon size {n} < 3")));
        }
        let mut diagonals: Vec<(usize, usize)> = diagonals
            .into_iter()
            .map(|(i, j)| (i.min(j), i.max(j)))
            .collect();
        diagonals.sort_unstable();
        diagonals.dedup();
        if diagonals.len() != n - 3 {
            return Err(Error::InvalidTriangulation(format!(
                "{} distinct diagonals, expected {}",
                diagonals.len(),
                n - 3
            )));
        }
        for &(i, j) in &diagonals {
            if j >= n || j - i < 2 || (i == 0 && j == n - 1) {
                return Err(Error::InvalidTriangulation(format!("({i}, {j}) is not a diagonal")));
            }
        }
        for (a, &d) in diagonals.iter().enumerate() {
            for &e in &diagonals[a + 1..] {
                if crosses(d, e) {
                    return Err(Error::InvalidTriangulation(format!("{d:?} crosses {e:?}")));
                }
            }
        }
        Ok(Self { n, diagonals })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    /// The `n - 2` triangles, found by repeatedly clipping an ear: a vertex
    /// of the remaining polygon that carries no remaining diagonal.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut ring: Vec<usize> = (0..self.n).collect();
        let mut active = self.diagonals.clone();
        let mut out = Vec::with_capacity(self.n - 2);
        while ring.len() > 3 {
            let m = ring.len();
            let pos = (0..m)
                .find(|&p| !active.iter().any(|&(i, j)| i == ring[p] || j == ring[p]))
                .expect("a triangulated polygon with more than 3 vertices has an ear");
            let u = ring[(pos + m - 1) % m];
            let w = ring[(pos + 1) % m];
            let mut tri = [u, ring[pos], w];
            tri.sort_unstable();
            out.push(tri);
            // the chord u-w is now a boundary edge
            active.retain(|&d| d != (u.min(w), u.max(w)));
            ring.remove(pos);
        }
        let mut last = [ring[0], ring[1], ring[2]];
        last.sort_unstable();
        out.push(last);
        out.sort_unstable();
        out
    }

    /// Number of triangles at each vertex.
    pub fn quiddity(&self) -> CyclicSequence {
        let mut counts = vec![0i64; self.n];
        for t in self.triangles() {
            for v in t {
                counts[v] += 1;
            }
        }
        CyclicSequence::from_i64(&counts).expect("n >= 3")
    }

    /// Invariance of the diagonal set under `i -> i + n/2 (mod n)`.
    pub fn is_centrally_symmetric(&self) -> Result<bool> {
        if self.n % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "central symmetry needs an even polygon, got n = {}",
                self.n
            )));
        }
        let h = self.n / 2;
        Ok(self.diagonals.iter().all(|&(i, j)| {
            let (a, b) = ((i + h) % self.n, (j + h) % self.n);
            self.diagonals.binary_search(&(a.min(b), a.max(b))).is_ok()
        }))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let q: Vec<i64> = self
            .quiddity()
            .values()
            .iter()
            .map(|v| i64::try_from(v).expect("quiddity entries are small"))
            .collect();
        serde_json::to_value(TriangulationJson {
            n: self.n,
            diagonals: self.diagonals.iter().map(|&(i, j)| [i, j]).collect(),
            quiddity: q,
        })
        .expect("triangulation serializes")
    }
}

#[derive(Serialize)]
struct TriangulationJson {
    n: usize,
    diagonals: Vec<[usize; 2]>,
    quiddity: Vec<i64>,
}

// Triangulations of the sub-polygon on the consecutive vertices lo..=hi,
// as diagonal lists. The edge (lo, hi) lies in exactly one triangle.
fn triangulate_range(lo: usize, hi: usize, out: &mut Vec<Vec<(usize, usize)>>) {
    if hi - lo < 2 {
        out.push(Vec::new());
        return;
    }
    for apex in lo + 1..hi {
        let mut left = Vec::new();
        let mut right = Vec::new();
        triangulate_range(lo, apex, &mut left);
        triangulate_range(apex, hi, &mut right);
        for l in &left {
            for r in &right {
                let mut d = Vec::with_capacity(l.len() + r.len() + 2);
                d.extend_from_slice(l);
                d.extend_from_slice(r);
                if apex - lo >= 2 {
                    d.push((lo, apex));
                }
                if hi - apex >= 2 {
                    d.push((apex, hi));
                }
                out.push(d);
            }
        }
    }
}

/// All triangulations of the convex `n`-gon, sorted by diagonal list.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("polygon size must be >= 3, got {n}")));
    }
    let mut raw = Vec::new();
    triangulate_range(0, n - 1, &mut raw);
    let mut out: Vec<Triangulation> = raw
        .into_iter()
        .map(|mut d| {
            d.sort_unstable();
            Triangulation { n, diagonals: d }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Centrally symmetric triangulations of the `2n`-gon.
///
/// Each contains exactly one diameter `(i, i + n)`; the rest is an arbitrary
/// triangulation of one side, mirrored by the half turn.
pub fn enumerate_centrally_symmetric(two_n: usize) -> Result<Vec<Triangulation>> {
    if two_n < 4 || two_n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "polygon size must be even and >= 4, got {two_n}"
        )));
    }
    let n = two_n / 2;
    let mut halves = Vec::new();
    triangulate_range(0, n, &mut halves);
    let mut out = Vec::new();
    for start in 0..n {
        for half in &halves {
            let shift = |v: usize| (v + start) % two_n;
            let mut d = vec![(start, start + n)];
            for &(i, j) in half {
                for offset in [0, n] {
                    let (a, b) = (shift(i + offset), shift(j + offset));
                    d.push((a.min(b), a.max(b)));
                }
            }
            out.push(Triangulation::new(two_n, d).expect("mirrored half-triangulation is valid"));
        }
    }
    out.sort();
    Ok(out)
}

/// `K_{n-2}(a_i, ..., a_{i+n-3}) = 1` for every `i`.
pub fn coco_check(q: &CyclicSequence) -> bool {
    let n = q.len();
    if n < 2 {
        return false;
    }
    (1..=n as i64).all(|i| {
        continuant(&q.window(i, n - 2), ContinuantMethod::Recurrence) == BigInt::from(1)
    })
}

/// `K_{j-i+1}(a_i..a_j) > 0` for every window with `0 <= j - i <= max_gap`.
pub fn is_totally_positive(q: &CyclicSequence, max_gap: i64) -> bool {
    if max_gap < 0 {
        return true;
    }
    let n = q.len() as i64;
    (0..=max_gap).all(|gap| {
        (1..=n).all(|i| {
            continuant(&q.window(i, gap as usize + 1), ContinuantMethod::Recurrence).is_positive()
        })
    })
}

/// Total positivity in the sense used for solutions of `R_n = 0`.
pub fn is_rotundus_totally_positive(q: &CyclicSequence) -> bool {
    is_totally_positive(q, q.len() as i64)
}

/// Identification of cyclic sequences in result lists.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dedup {
    #[default]
    None,
    Rotation,
    RotationReflection,
}

impl Dedup {
    pub fn from_flags(up_to_rotation: bool, up_to_reflection: bool) -> Self {
        match (up_to_rotation, up_to_reflection) {
            (_, true) => Self::RotationReflection,
            (true, false) => Self::Rotation,
            (false, false) => Self::None,
        }
    }

    /// Canonical representatives, sorted and unique; `None` keeps the list.
    pub fn apply(self, seqs: Vec<CyclicSequence>) -> Vec<CyclicSequence> {
        let canon: fn(&CyclicSequence) -> CyclicSequence = match self {
            Dedup::None => return seqs,
            Dedup::Rotation => CyclicSequence::min_rotation,
            Dedup::RotationReflection => CyclicSequence::min_dihedral,
        };
        seqs.iter()
            .map(canon)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }
}

/// First halves `(a_1..a_n)` of the quiddities of the centrally symmetric
/// triangulations of the `2n`-gon, in triangulation order.
pub fn half_quiddities(two_n: usize, dedup: Dedup) -> Result<Vec<CyclicSequence>> {
    let n = two_n / 2;
    let halves = enumerate_centrally_symmetric(two_n)?
        .iter()
        .map(|t| CyclicSequence::new(t.quiddity().window(1, n)).expect("n >= 2"))
        .collect();
    Ok(dedup.apply(halves))
}

/// Bounded search over `{1..max_entry}^n` for zeros of `R_n`, in
/// lexicographic order (before deduplication).
pub fn solve_rotundus(n: usize, max_entry: u64, tp_only: bool, dedup: Dedup) -> Result<Vec<CyclicSequence>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    if max_entry == 0 {
        return Err(Error::InvalidArgument("max entry must be >= 1".into()));
    }
    let mut found = Vec::new();
    let mut digits = vec![1u64; n];
    loop {
        let values: Vec<BigInt> = digits.iter().map(|&d| BigInt::from(d)).collect();
        if rotundus(&values, RotundusMethod::Trace)? == BigInt::from(0) {
            let seq = CyclicSequence::new(values)?;
            if !tp_only || is_rotundus_totally_positive(&seq) {
                found.push(seq);
            }
        }
        // odometer, last position fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(dedup.apply(found));
            }
            pos -= 1;
            if digits[pos] < max_entry {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 1;
        }
    }
}

/// Facts every quiddity of an `n`-gon triangulation satisfies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiddityFacts {
    pub coco_system: bool,
    pub monodromy_minus_identity: bool,
    pub windows_n_minus_1_vanish: bool,
    pub windows_n_equal_minus_one: bool,
    pub entry_sum_ok: bool,
}

impl QuiddityFacts {
    pub fn all(&self) -> bool {
        self.coco_system
            && self.monodromy_minus_identity
            && self.windows_n_minus_1_vanish
            && self.windows_n_equal_minus_one
            && self.entry_sum_ok
    }
}

pub fn quiddity_facts(q: &CyclicSequence) -> QuiddityFacts {
    let n = q.len();
    let window_all = |len: usize, target: i64| {
        (1..=n as i64).all(|i| continuant(&q.window(i, len), ContinuantMethod::Recurrence) == BigInt::from(target))
    };
    let sum: BigInt = q.values().iter().sum();
    QuiddityFacts {
        coco_system: coco_check(q),
        monodromy_minus_identity: monodromy(q).is_minus_identity(),
        windows_n_minus_1_vanish: window_all(n - 1, 0),
        windows_n_equal_minus_one: window_all(n, -1),
        entry_sum_ok: sum == BigInt::from(3 * (n as i64 - 2)),
    }
}
