//! Exact combinatorics of identical-edge homogeneous coupled cell
//! networks: how many there are, which ones are the same dynamical
//! system, and brute-force machinery to verify both.
//!
//! A network here is a square matrix of arc multiplicities with constant
//! row sum (every cell receives the same number of identical arcs). The
//! crate computes, with exact big-integer arithmetic throughout:
//!
//! * counts of networks up to isomorphism ([`counting::Counter::count_all`]),
//!   of connected networks ([`counting::Counter::count_connected`]), and of
//!   minimal networks — one per ODE-equivalence class —
//!   ([`counting::Counter::count_minimal`]);
//! * decisions for concrete networks: reduction to minimal form,
//!   canonical forms under cell relabeling, isomorphism and
//!   ODE equivalence ([`network`]);
//! * exhaustive enumeration, isomorphism-class censuses and verification
//!   reports that check the closed forms against brute force ([`oracle`]).
//!
//! All outputs are deterministic: fixed iteration orders, exact integers,
//! no floating point.

#![forbid(unsafe_code)]

pub mod counting;
mod error;
pub mod network;
pub mod oracle;
pub mod partitions;
pub mod series;

pub use error::{Error, Result};
