//! Exact continuants, the cyclically invariant rotundus polynomial and the
//! identities tying them to determinants, Pfaffians, Chebyshev polynomials,
//! Hankel moments and centrally symmetric polygon triangulations.

pub mod chebyshev;
pub mod cli;
pub mod continuant;
pub mod error;
pub mod hankel;
pub mod matrixalg;
pub mod ring;
pub mod rotundus;
pub mod triangulation;
pub mod verify;

pub use continuant::{
    continuant, continuant_symbolic, difference_orbit, monodromy, ContinuantMethod, CyclicSequence, Mat2,
};
pub use error::{Error, Result};
pub use matrixalg::SquareMatrix;
pub use ring::{BigInt, MultiPoly, Rational, Ring};
pub use rotundus::{rotundus, rotundus_symbolic, MatrixKind, RotundusMethod};
pub use triangulation::{Dedup, Triangulation};
