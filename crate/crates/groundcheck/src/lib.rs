//! Knowledge-base-grounded conflict detection for ODRL-style constraints.
//!
//! A policy constraint such as `(spatial, isPartOf, europe)` only has meaning
//! relative to a knowledge base that fixes the concept space, its ordering, and
//! which concepts are disjoint. This crate makes that grounding explicit:
//! constraints are denoted as subsets of a finite concept space and conflict
//! questions are answered with sound three-valued verdicts (`Conflict`,
//! `Compatible`, `Unknown`) instead of a forced boolean.
//!
//! The main entry points are:
//!
//! - [`kb::KnowledgeBase`] — finite concept space with a reflexive-transitive
//!   order, downward-closed disjointness, and a value-grounding map.
//! - [`denotation::denote`] / [`denotation::member3`] — closed-world denotation
//!   sets and open-world three-valued membership.
//! - [`verdict::check_pair`] / [`verdict::check_composite`] — conflict verdicts
//!   for constraint pairs and for `and`/`or`/`xone` composites.
//! - [`alignment`] — validated cross-KB concept alignments that degrade to
//!   `Unknown` instead of fabricating conflicts.
//! - [`runtime`] — execution-context satisfaction and default-deny evaluation.
//! - [`encoder`] — decidable TPTP (FOF) and SMT-LIB 2 emissions with an
//!   internal ground-instantiation oracle.
//! - [`suite`] — the built-in benchmark suite and its runner.

pub mod alignment;
pub mod constraint;
pub mod denotation;
pub mod encoder;
pub mod io;
pub mod kb;
pub mod kleene;
pub mod runtime;
pub mod suite;
pub mod verdict;

pub use constraint::{CompositeConstraint, Constraint, Operator};
pub use denotation::{denote, intersect, member3, Denotation, EvalMode};
pub use kb::{ConceptId, Domain, KbSpec, KnowledgeBase};
pub use kleene::Kleene;
pub use verdict::{check_composite, check_pair, compose, subsumes, Verdict};
