//! Adjacency spectra of weighted general hypergraphs.
//!
//! The adjacency matrix used throughout is
//! `A_ij = sum over edges e containing i and j of w_e / (|e| - 1)`,
//! kept exact in rational arithmetic. On top of it the crate builds joins,
//! coronas, equitable partitions, switching constructions and closed-form
//! spectra, each paired with a brute-force or eigensolver check.

pub mod combinatorics;
pub mod corona;
pub mod cospectral;
pub mod error;
pub mod generators;
pub mod hypergraph;
pub mod iso;
pub mod joins;
pub mod limits;
pub mod matrix;
pub mod partitions;
pub mod rational;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use hypergraph::{Edge, Hypergraph, HypergraphJson};
pub use matrix::{RationalMatrix, RealMatrix};
pub use rational::Rational;
pub use partitions::{Partition, QuotientResult};
pub use verify::{verify, verify_all, Verdict, VerifyParams, VerifyReport};
