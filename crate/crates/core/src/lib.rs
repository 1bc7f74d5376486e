//! Exact-arithmetic engine for polynomial realizations of the classical Lie
//! algebras under variable/derivative swaps.
//!
//! The crate builds differential-operator actions of `gl`, `sl`, `sp`, and
//! `so` on polynomial rings, where a chosen set of indices has its variable
//! and derivative roles exchanged, and then verifies the structure this
//! produces: highest-weight vectors, graded module decompositions, and
//! closed-form bases — all over arbitrary-precision rationals, so every
//! verdict is exact at the checked degree bounds.

pub mod cases;
pub mod decompose;
pub mod error;
pub mod families;
pub mod form;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod rep;
pub mod report;
pub mod singular;
pub mod slices;
pub mod suite;
pub mod weyl;

pub use cases::{case_context, case_for_context, find_case, CaseInfo, CASES};
pub use error::{Error, Result};
pub use report::{all_pass, render_json, render_text, summary_line, CheckReport, Verdict};
pub use slices::DEFAULT_MONOMIAL_CAP;
pub use suite::{bracket_report, run_all, run_case, singular_report, RunOptions};
pub use lie::{AlgebraFamily, AlgebraSpec, LieElement, WeightVector};
pub use linalg::{ExactMatrix, Subspace};
pub use poly::{ExpVec, Polynomial, VarNames};
pub use rational::Rational;
pub use rep::{PartitionProfile, RepresentationContext, SwapPartition, VariableModel};
pub use slices::{LinearConstraint, SliceBasis, SliceSpec};
pub use weyl::WeylOperator;
