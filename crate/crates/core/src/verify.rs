//! Seeded batch verification of every identity the library implements.
//!
//! Failures are collected into the report together with a witness; nothing
//! here returns an error for a failed identity.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chebyshev::verify_chebyshev_identities;
use crate::continuant::{
    continuant, continuant_symbolic, cycle_matchings, difference_orbit, monodromy, path_matchings, ContinuantMethod,
    CyclicSequence,
};
use crate::hankel::{moments_from_sequence, verify_hankel};
use crate::matrixalg::{block_skew, SquareMatrix};
use crate::ring::{MultiPoly, Ring};
use crate::rotundus::{
    rotundus, rotundus_matrix, rotundus_symbolic, symmetric_remark_of, verify_pfaffian_identity_of,
    verify_pfaffian_identity_with, MatrixKind, RotundusMethod,
};
use crate::triangulation::{enumerate_triangulations, half_quiddities, quiddity_facts, solve_rotundus, Dedup};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    ContinuantRoutes,
    DifferenceEquation,
    CyclicInvariance,
    RotundusRoutes,
    PfaffianIdentity,
    BlockIdentity,
    SymmetricRemark,
    ZeroTrace,
    ConwayCoxeter,
    CentralSymmetry,
    Chebyshev,
    Hankel,
    TermCounts,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Self::ContinuantRoutes,
        Self::DifferenceEquation,
        Self::CyclicInvariance,
        Self::RotundusRoutes,
        Self::PfaffianIdentity,
        Self::BlockIdentity,
        Self::SymmetricRemark,
        Self::ZeroTrace,
        Self::ConwayCoxeter,
        Self::CentralSymmetry,
        Self::Chebyshev,
        Self::Hankel,
        Self::TermCounts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::ContinuantRoutes => "continuant_routes",
            Self::DifferenceEquation => "difference_equation",
            Self::CyclicInvariance => "cyclic_invariance",
            Self::RotundusRoutes => "rotundus_routes",
            Self::PfaffianIdentity => "pfaffian_identity",
            Self::BlockIdentity => "block_identity",
            Self::SymmetricRemark => "symmetric_remark",
            Self::ZeroTrace => "zero_trace",
            Self::ConwayCoxeter => "conway_coxeter",
            Self::CentralSymmetry => "central_symmetry",
            Self::Chebyshev => "chebyshev",
            Self::Hankel => "hankel",
            Self::TermCounts => "term_counts",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

/// A deliberate defect, used to check that the suite catches it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Negate one symmetric pair of off-diagonal units in `Ω_n`.
    OmegaSign,
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub seed: u64,
    pub suites: Vec<Suite>,
    pub fault: Option<Fault>,
}

impl SuiteConfig {
    pub fn new(n_max: usize, seed: u64) -> Self {
        Self {
            n_max,
            seed,
            suites: Suite::ALL.to_vec(),
            fault: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    /// Inputs outside the identity's hypotheses, counted but not checked.
    pub skipped: usize,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub n_max: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let skipped = if c.skipped > 0 {
                format!(", {} skipped", c.skipped)
            } else {
                String::new()
            };
            if c.passed {
                writeln!(f, "PASS {} ({} cases{skipped})", c.name, c.cases)?;
            } else {
                let witness = c.counterexample.as_deref().unwrap_or("");
                writeln!(f, "FAIL {} ({} cases{skipped}): {witness}", c.name, c.cases)?;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Counts cases and keeps the first failure.
struct Tally {
    cases: usize,
    skipped: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            skipped: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn finish(self, suite: Suite) -> CheckResult {
        CheckResult {
            name: suite.name(),
            passed: self.failure.is_none(),
            cases: self.cases,
            skipped: self.skipped,
            counterexample: self.failure,
        }
    }
}

fn random_values(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<BigInt> {
    (0..n).map(|_| BigInt::from(rng.gen_range(lo..=hi))).collect()
}

fn show(values: &[BigInt]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn fibonacci(k: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

/// `L_1 = 1`, `L_2 = 3`.
pub fn lucas(k: usize) -> u64 {
    let (mut a, mut b) = (2u64, 1u64);
    for _ in 0..k {
        (a, b) = (b, a + b);
    }
    a
}

/// Ω_n with the fault applied when requested.
fn omega_for(values: &[BigInt], fault: Option<Fault>) -> SquareMatrix<BigInt> {
    let mut m = rotundus_matrix(&(), values, MatrixKind::Skew);
    let n = values.len();
    if fault == Some(Fault::OmegaSign) && n >= 2 {
        let v = m.get(0, n + 1).negated();
        m.set(0, n + 1, v.clone());
        m.set(n + 1, 0, v.negated());
    }
    m
}

pub fn verify_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    if config.n_max < 2 {
        return Err(Error::InvalidArgument(format!("n_max must be >= 2, got {}", config.n_max)));
    }
    let mut checks = Vec::new();
    for &suite in Suite::ALL.iter().filter(|s| config.suites.contains(s)) {
        // one stream per suite, so selecting suites does not shift the others
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (suite as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        checks.push(run_suite(suite, config, &mut rng)?);
    }
    Ok(SuiteReport {
        n_max: config.n_max,
        seed: config.seed,
        checks,
    })
}

fn run_suite(suite: Suite, config: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let n_max = config.n_max;
    let mut t = Tally::new();
    match suite {
        Suite::ContinuantRoutes => {
            for n in 0..=n_max.min(8) {
                let det = continuant_symbolic(n, ContinuantMethod::Determinant);
                let euler = continuant_symbolic(n, ContinuantMethod::Euler);
                let rec = continuant_symbolic(n, ContinuantMethod::Recurrence);
                t.check(det == euler && euler == rec, || format!("symbolic K_{n}: {det} / {euler} / {rec}"));
                t.check(det.reverse() == det, || format!("K_{n} is not palindromic"));
            }
            for _ in 0..20 {
                let n = rng.gen_range(0..=2 * n_max + 4);
                let v = random_values(rng, n, -9, 9);
                let values: Vec<BigInt> = ContinuantMethod::ALL.iter().map(|&m| continuant(&v, m)).collect();
                t.check(values.windows(2).all(|w| w[0] == w[1]), || format!("K({}) = {values:?}", show(&v)));
            }
        }
        Suite::DifferenceEquation => {
            for _ in 0..20 {
                let n = rng.gen_range(1..=n_max + 6);
                let seq = CyclicSequence::new(random_values(rng, n, -9, 9))?;
                let orbit = difference_orbit(&seq, &BigInt::from(0), &BigInt::from(1), n);
                let k = continuant(seq.values(), ContinuantMethod::Recurrence);
                t.check(orbit.last() == Some(&k), || format!("V_{{n+1}} != K_n for {seq}"));
                let m = monodromy(&seq);
                t.check(m.det() == BigInt::from(1), || format!("det M_n != 1 for {seq}"));
            }
        }
        Suite::CyclicInvariance => {
            for n in 1..=n_max.min(8) {
                let r = rotundus_symbolic(n, RotundusMethod::CyclicEuler)?;
                for k in 0..n as i64 {
                    t.check(r.cyclic_shift(k) == r, || format!("R_{n} not invariant under shift {k}"));
                }
            }
            for _ in 0..20 {
                let n = rng.gen_range(1..=n_max + 4);
                let v = random_values(rng, n, -9, 9);
                let seq = CyclicSequence::new(v.clone())?;
                let base = rotundus(&v, RotundusMethod::Definition)?;
                for k in 1..n as i64 {
                    let rotated = seq.rotated(k);
                    let r = rotundus(rotated.values(), RotundusMethod::Definition)?;
                    t.check(r == base, || format!("R({seq}) = {base} but R({rotated}) = {r}"));
                }
            }
        }
        Suite::RotundusRoutes => {
            for n in 1..=n_max.min(6) {
                let def = rotundus_symbolic(n, RotundusMethod::Definition)?;
                for method in RotundusMethod::ALL {
                    let r = rotundus_symbolic(n, method)?;
                    t.check(r == def, || format!("symbolic R_{n}: {method:?} gives {r}, definition {def}"));
                }
            }
            for _ in 0..20 {
                let n = rng.gen_range(1..=n_max + 4);
                let v = random_values(rng, n, -9, 9);
                let def = rotundus(&v, RotundusMethod::Definition)?;
                for method in RotundusMethod::ALL {
                    let r = rotundus(&v, method)?;
                    t.check(r == def, || format!("R({}): {method:?} gives {r}, definition {def}", show(&v)));
                }
            }
        }
        Suite::PfaffianIdentity => {
            for n in 1..=n_max.min(5) {
                let report = verify_pfaffian_identity_of(&n, &MultiPoly::variables(n))?;
                t.check(report.holds(), || format!("symbolic n = {n}: det {}", report.determinant));
            }
            for n in 1..=(n_max + 4).min(10) {
                let v = random_values(rng, n, -9, 9);
                let omega = omega_for(&v, config.fault);
                let report = verify_pfaffian_identity_with(&(), &v, &omega)?;
                t.check(report.holds(), || {
                    format!(
                        "values {}: det {} pf {} R {}; witness {}",
                        show(&v),
                        report.determinant,
                        report.pfaffian,
                        report.rotundus,
                        serde_json::to_string(&omega).expect("matrix serializes")
                    )
                });
            }
        }
        Suite::BlockIdentity => {
            // x = a1, y = a2 symbolic; A numeric
            let x = MultiPoly::variable(2, 1)?;
            let y = MultiPoly::variable(2, 2)?;
            for _ in 0..10 {
                let dim = rng.gen_range(2..=n_max.min(6));
                let a = SquareMatrix::<BigInt>::from_fn(&(), dim, |_, _| BigInt::from(rng.gen_range(-9..=9)));
                let lifted = a.map(&2, |v| MultiPoly::constant(2, v.clone()));
                let lhs = block_skew(&x, &y, &lifted)?.det();
                let inner = MultiPoly::constant(2, a.mid()?.det());
                let base = MultiPoly::constant(2, a.det()).minus(&x.times(&y).times(&inner));
                t.check(lhs == base.square(), || {
                    format!("A = {}", serde_json::to_string(&a).expect("matrix serializes"))
                });
            }
        }
        Suite::SymmetricRemark => {
            for n in 1..=n_max.min(5) {
                let (det, expected) = symmetric_remark_of(&n, &MultiPoly::variables(n))?;
                t.check(det == expected, || format!("symbolic n = {n}: det {det}"));
            }
            for _ in 0..10 {
                let n = rng.gen_range(1..=n_max.min(8));
                let v = random_values(rng, n, -9, 9);
                let (det, expected) = symmetric_remark_of(&(), &v)?;
                t.check(det == expected, || format!("values {}: det {det}, expected {expected}", show(&v)));
            }
        }
        Suite::ZeroTrace => {
            for _ in 0..40 {
                let n = rng.gen_range(1..=n_max.min(8));
                let v = random_values(rng, n, -3, 3);
                let seq = CyclicSequence::new(v.clone())?;
                let m = monodromy(&seq);
                let zero = rotundus(&v, RotundusMethod::Trace)? == BigInt::from(0);
                t.check(zero == m.mul(&m).is_minus_identity(), || format!("values {seq}"));
            }
            for h in half_quiddities(2 * n_max.min(6), Dedup::Rotation)? {
                let m = monodromy(&h);
                t.check(m.mul(&m).is_minus_identity(), || format!("half quiddity {h}"));
            }
        }
        Suite::ConwayCoxeter => {
            for n in 3..=(n_max + 3).min(10) {
                for tri in enumerate_triangulations(n)? {
                    let q = tri.quiddity();
                    let facts = quiddity_facts(&q);
                    t.check(facts.all(), || format!("{}-gon {:?}: {facts:?}", n, tri.diagonals()));
                }
            }
        }
        Suite::CentralSymmetry => {
            for n in 3..=n_max.min(5) {
                let halves = half_quiddities(2 * n, Dedup::Rotation)?;
                let solved = solve_rotundus(n, 2 * n as u64, true, Dedup::Rotation)?;
                t.check(halves == solved, || {
                    let fmt = |s: &[CyclicSequence]| s.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                    format!("n = {n}: triangulations [{}] vs search [{}]", fmt(&halves), fmt(&solved))
                });
            }
        }
        Suite::Chebyshev => {
            let report = verify_chebyshev_identities(n_max.max(2))?;
            for row in report.rows {
                t.check(row.holds(), || format!("{row:?}"));
            }
        }
        Suite::Hankel => {
            let catalan = moments_from_sequence(&crate::ring::ints(&[1, 2, 2, 2, 2, 2, 2]), 13)?;
            let expected = crate::ring::ints(&[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]);
            t.check(catalan.as_integers().as_ref() == Some(&expected), || format!("{catalan:?}"));
            for _ in 0..20 {
                let len = rng.gen_range(1..=6usize);
                let a = random_values(rng, len, 1, 5);
                let count = (2 * len - 1).max(1);
                match moments_from_sequence(&a, count) {
                    Ok(c) => {
                        let report = verify_hankel(&c, &a);
                        t.check(report.holds(), || format!("a = {}: {report:?}", show(&a)));
                    }
                    // the incremental solver legitimately stops here
                    Err(Error::VanishingCofactor { .. }) => t.skipped += 1,
                    Err(e) => return Err(e),
                }
            }
        }
        Suite::TermCounts => {
            for n in 2..=(n_max + 4).min(12) {
                let k = continuant_symbolic(n, ContinuantMethod::Euler).term_count();
                t.check(k as u64 == fibonacci(n + 1) && path_matchings(n).len() == k, || {
                    format!("K_{n} has {k} terms")
                });
                // R_2 = a1*a2 - 2 merges the two single-edge matchings
                let r = rotundus_symbolic(n, RotundusMethod::CyclicEuler)?.expanded_term_count();
                t.check(r == BigInt::from(lucas(n)) && BigInt::from(cycle_matchings(n).len()) == r, || {
                    format!("R_{n} has {r} terms")
                });
            }
        }
    }
    Ok(t.finish(suite))
}
