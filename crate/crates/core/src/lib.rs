//! Invariant functions and pseudometrics on special domain families.
//!
//! The crate evaluates the Möbius, Carathéodory-Reiffen, Green, Azukawa and
//! Sibony objects (all orders) wherever closed forms or proofs are
//! available — the unit disc, elementary Reinhardt domains, balanced
//! domains given by Minkowski functionals, and Hartogs-type counterexample
//! domains built from certified log-series — and cross-checks the closed
//! forms against independent numerical oracles.
//!
//! Modules:
//!
//! * [`foundations`] — points, metric kinds, evaluation results, structured
//!   holomorphic maps
//! * [`disc`] — unit-disc primitives and normalizations
//! * [`reinhardt`] — elementary Reinhardt domains and their evaluators
//! * [`balanced`] — Minkowski functionals and the convex-envelope seminorm
//! * [`hartogs`] — counterexample domains with certified series
//! * [`numerics`] — limsup quotients, Levi forms, vanishing orders
//! * [`verify`] — seeded property suites with replayable reproducers
//! * [`domain_spec`] — JSON domain documents and evaluation dispatch

pub mod balanced;
pub mod disc;
pub mod domain_spec;
pub mod error;
pub mod foundations;
pub mod hartogs;
pub mod numerics;
pub mod reinhardt;
mod sum;
pub mod verify;

pub use error::{Error, Result};
pub use foundations::{ComplexVector, MetricKind, MetricValue, ValueStatus};
