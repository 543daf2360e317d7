use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::rootsys::{RootVector, WeightVector};

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Type letter and rank do not describe a finite-type diagram.
    InvalidDiagram(String),
    Parse(String),
    NodeOutOfRange { node: usize, rank: usize },
    /// An operation that needs a connected diagram got a disjoint union.
    Disconnected,
    NotDominant(WeightVector),
    WeightCapExceeded { cap: usize },
    /// The node is not cominuscule; `witness` is a positive root whose
    /// coefficient at the node is `coefficient` (>= 2).
    Inadmissible { node: usize, witness: RootVector, coefficient: i64 },
    /// The restricted weights do not form the weight system of the
    /// irreducible module with the expected highest weight.
    NotIrreducible { highest: WeightVector },
    /// No grade j in {0, 1, 2} (or more than one) solves the pairing
    /// condition for this weight.
    AmbiguousGrade { weight: WeightVector, solutions: Vec<i64> },
    NoCatalogMatch,
    MultipleCatalogMatches(Vec<String>),
    UnsupportedFamily(String),
    ParameterOutOfRange(String),
    /// A structural precondition of a construction failed.
    Precondition(String),
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDiagram(s) => write!(f, "invalid diagram: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::NodeOutOfRange { node, rank } => {
                write!(f, "node {node} out of range for rank {rank}")
            }
            Error::Disconnected => f.write_str("diagram is not connected"),
            Error::NotDominant(w) => write!(f, "weight {w} is not dominant"),
            Error::WeightCapExceeded { cap } => {
                write!(f, "weight system exceeds the cap of {cap} distinct weights")
            }
            Error::Inadmissible { node, witness, coefficient } => write!(
                f,
                "node {} is not admissible: root {witness} has coefficient {coefficient}",
                node + 1
            ),
            Error::NotIrreducible { highest } => {
                write!(f, "restricted weights are not the weight system of V({highest})")
            }
            Error::AmbiguousGrade { weight, solutions } => {
                write!(f, "weight {weight}: pairing grade solutions {solutions:?}")
            }
            Error::NoCatalogMatch => f.write_str("no catalog row matches"),
            Error::MultipleCatalogMatches(rows) => {
                write!(f, "several catalog rows match: {}", rows.join(", "))
            }
            Error::UnsupportedFamily(s) => write!(f, "unsupported family: {s}"),
            Error::ParameterOutOfRange(s) => write!(f, "parameter out of range: {s}"),
            Error::Precondition(s) => write!(f, "precondition failed: {s}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}
