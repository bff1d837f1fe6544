//! Configurable graph code representations.
//!
//! This crate reads configuration files written in a small external DSL,
//! prunes noisy statements (simple assignments, prints, logging, exits)
//! from source files, builds base graph representations (AST, CFG, PDG)
//! of a C/Java-like subject language, augments them with semantic edge
//! families (NextToken, LastRead/LastWrite, GuardedBy, ...), and emits
//! machine-learning-ready node-link JSON graphs together with a manifest
//! CSV and size-reduction statistics.
//!
//! The modules mirror the processing stages:
//!
//! - [`dsl`]: configuration language (lex, parse, validate, render)
//! - [`subject`]: subject-language parser producing span-precise ASTs
//! - [`pruner`]: statement detection, exemptions, span-precise rewriting
//! - [`graphs`]: AST/CFG/PDG construction and graph merging
//! - [`augment`]: edge-addition operations on merged graphs
//! - [`pipeline`]: end-to-end execution, serialization, manifest, stats

pub mod augment;
pub mod dsl;
pub mod graphs;
pub mod pipeline;
pub mod pruner;
pub mod subject;

pub use dsl::{ConcordModel, Diagnostic, Severity};
pub use graphs::{CodeGraph, EdgeLabel};
pub use subject::{AstNodeKind, NodeId, SubjectAst};
