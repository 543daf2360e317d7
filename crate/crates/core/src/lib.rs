//! Exact computational core for semisimple symplectic extrinsic symmetric
//! spaces.
//!
//! Everything here is pure and allocation-only (`no_std` + `alloc`): finite
//! root systems and Dynkin diagrams, highest-weight modules, cominuscule
//! gradings, the node-deletion construction of the graded module
//! `V = V0 ⊕ V1 ⊕ V2`, explicit matrix realizations inside `sl(V)` with their
//! structural checks, and the classification tables with arithmetic
//! verifiers.
//!
//! No floating point is used anywhere; rationals are `BigRational`.
#![no_std]

extern crate alloc;

pub mod catalog;
pub mod classify;
pub mod error;
pub mod irreps;
pub mod linalg;
pub mod realize;
pub mod report;
pub mod rootsys;
pub mod surgery;
pub mod triples;

pub use error::{Error, Result};
pub use report::{Check, Status};
pub use rootsys::{CartanType, Component, DynkinDiagram, RootSystem, RootVector, WeightVector};

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;
