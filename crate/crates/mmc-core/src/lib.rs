//! Maximum matrix contraction toolkit.
//!
//! Contract lines and columns of a binary matrix, without ever merging two
//! ones into one cell, so that the number of neighboring pairs of ones is
//! maximized. The crate provides the contraction semantics
//! ([`matrix`]), exact solvers and the maximality machinery ([`solvers`]),
//! the three polynomial heuristics ([`heuristics`]), a linearized
//! integer-programming formulation with LP export ([`ilp`]) and instance
//! sources including the maximum-clique reduction ([`instances`]).
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled; timing in solve reports then degrades to zero durations.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod heuristics;
pub mod ilp;
pub mod instances;
pub mod matrix;
pub mod run;
pub mod solvers;

pub use error::{IlpError, InstanceError, MatrixError, ParseError, SolveError};
pub use matrix::{BinaryMatrix, IntegerMatrix, Selection};
pub use solvers::{Algorithm, SolveReport};
