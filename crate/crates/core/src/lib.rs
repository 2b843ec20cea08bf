//! Combinatorial invariants of semi-simple Lie algebras.
//!
//! The crate computes Kostka–Foulkes polynomials through the alternating Weyl
//! sum over Lusztig's q-analogue of Kostant's partition function, the
//! generalized exponents they encode, type-A crystal statistics on
//! semistandard tableaux, Lusztig data with their piecewise-linear braid
//! transitions, and the harmonic cone of Lusztig data together with its
//! degenerate semigroup product.
//!
//! Every computation is exact integer (or rational) arithmetic; nothing is
//! approximated.

pub mod cli;
pub mod cone;
pub mod crystal;
pub mod error;
pub mod freeness;
pub mod kostka;
pub mod lusztig;
pub mod partitions;
pub mod poly;
pub mod root_system;
pub mod selftest;

pub use error::{Error, Result};
pub use poly::{MultiPolynomial, QPolynomial};
pub use root_system::{Basis, ReducedWord, RootDatum, RootType, Weight, WeylElement, WordStyle};
