//! The configuration language: lexing, parsing, semantic validation, and
//! canonical rendering.
//!
//! A configuration names a set of `Tasks` (edge additions, node removals,
//! and code conditions) and a set of `Representations` (base graphs plus
//! task references). Parsing produces a [`ConcordModel`];
//! [`validate_semantics`] appends diagnostics; a model is executable iff
//! it carries no error-severity diagnostic.

mod lexer;
mod parser;
mod render;
mod validate;

pub use parser::parse_config;
pub use render::{render_config, RenderError};
pub use validate::validate_semantics;

use std::collections::BTreeSet;
use std::fmt;

/// Edge families that `Edge add` operations can request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    NextToken,
    NextSibling,
    ForCfg,
    WhileCfg,
    LastReadWrite,
    GuardedBy,
    ReturnsTo,
    ComputedFrom,
    LastLexicalUse,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 9] = [
        EdgeKind::NextToken,
        EdgeKind::NextSibling,
        EdgeKind::ForCfg,
        EdgeKind::WhileCfg,
        EdgeKind::LastReadWrite,
        EdgeKind::GuardedBy,
        EdgeKind::ReturnsTo,
        EdgeKind::ComputedFrom,
        EdgeKind::LastLexicalUse,
    ];

    pub fn token(self) -> &'static str {
        match self {
            EdgeKind::NextToken => "next_token",
            EdgeKind::NextSibling => "next_sibling",
            EdgeKind::ForCfg => "for_cfg",
            EdgeKind::WhileCfg => "while_cfg",
            EdgeKind::LastReadWrite => "last_read_write",
            EdgeKind::GuardedBy => "guarded_by",
            EdgeKind::ReturnsTo => "returns_to",
            EdgeKind::ComputedFrom => "computed_from",
            EdgeKind::LastLexicalUse => "last_lexical_use",
        }
    }

    pub fn from_token(s: &str) -> Option<EdgeKind> {
        EdgeKind::ALL.iter().copied().find(|k| k.token() == s)
    }
}

/// Statement families that `Node remove` operations can request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    Print,
    Logging,
    SysExit,
    SimpleAssignment,
}

impl NodeKind {
    pub const ALL: [NodeKind; 4] = [
        NodeKind::Print,
        NodeKind::Logging,
        NodeKind::SysExit,
        NodeKind::SimpleAssignment,
    ];

    pub fn token(self) -> &'static str {
        match self {
            NodeKind::Print => "print",
            NodeKind::Logging => "logging",
            NodeKind::SysExit => "sys_exit",
            NodeKind::SimpleAssignment => "simple_assignment",
        }
    }

    pub fn from_token(s: &str) -> Option<NodeKind> {
        NodeKind::ALL.iter().copied().find(|k| k.token() == s)
    }
}

/// Base representations selectable per `Representation` block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseGraphKind {
    Ast,
    Cfg,
    Pdg,
}

impl BaseGraphKind {
    pub const ALL: [BaseGraphKind; 3] =
        [BaseGraphKind::Ast, BaseGraphKind::Cfg, BaseGraphKind::Pdg];

    pub fn token(self) -> &'static str {
        match self {
            BaseGraphKind::Ast => "AST",
            BaseGraphKind::Cfg => "CFG",
            BaseGraphKind::Pdg => "PDG",
        }
    }

    pub fn from_token(s: &str) -> Option<BaseGraphKind> {
        BaseGraphKind::ALL.iter().copied().find(|k| k.token() == s)
    }
}

/// Control-structure blocks that code conditions can name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    Catch,
    For,
    While,
    If,
    Else,
}

impl BlockKind {
    pub const ALL: [BlockKind; 5] = [
        BlockKind::Catch,
        BlockKind::For,
        BlockKind::While,
        BlockKind::If,
        BlockKind::Else,
    ];

    /// The condition-block token, e.g. `while_block`.
    pub fn token(self) -> &'static str {
        match self {
            BlockKind::Catch => "catch_block",
            BlockKind::For => "for_block",
            BlockKind::While => "while_block",
            BlockKind::If => "if_block",
            BlockKind::Else => "else_block",
        }
    }

    pub fn from_token(s: &str) -> Option<BlockKind> {
        BlockKind::ALL.iter().copied().find(|k| k.token() == s)
    }
}

/// Source position of a construct, kept for diagnostics only.
///
/// Positions never participate in structural equality so that a rendered
/// and re-parsed model compares equal to the original.
#[derive(Debug, Clone, Copy, Default)]
pub struct Loc {
    pub line: u32,
    pub col: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpType {
    Add,
    Remove,
}

impl OpType {
    pub fn token(self) -> &'static str {
        match self {
            OpType::Add => "add",
            OpType::Remove => "remove",
        }
    }
}

/// Target of an operation: either an edge family or a statement family.
///
/// The grammar accepts any combination of operation type and target;
/// mismatches (`add` with a node target, `remove` with an edge target)
/// are semantic errors, not parse errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OpTarget {
    Edge(EdgeKind),
    Node(NodeKind),
}

impl OpTarget {
    pub fn token(self) -> &'static str {
        match self {
            OpTarget::Edge(k) => k.token(),
            OpTarget::Node(k) => k.token(),
        }
    }
}

/// A single atomic action inside a task.
#[derive(Debug, Clone, Copy)]
pub struct Operation {
    pub op_type: OpType,
    pub target: OpTarget,
    pub loc: Loc,
}

impl PartialEq for Operation {
    fn eq(&self, other: &Self) -> bool {
        self.op_type == other.op_type && self.target == other.target
    }
}
impl Eq for Operation {}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let element = match self.target {
            OpTarget::Edge(_) => "Edge",
            OpTarget::Node(_) => "Node",
        };
        write!(
            f,
            "{} {} {}",
            element,
            self.op_type.token(),
            self.target.token()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConditionAction {
    Exclude,
    Include,
}

impl ConditionAction {
    pub fn token(self) -> &'static str {
        match self {
            ConditionAction::Exclude => "exclude",
            ConditionAction::Include => "include",
        }
    }
}

/// Exempts (`exclude`) or restricts (`include`) node removal within a block kind.
#[derive(Debug, Clone, Copy)]
pub struct CodeCondition {
    pub action: ConditionAction,
    pub block: BlockKind,
    pub loc: Loc,
}

impl PartialEq for CodeCondition {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action && self.block == other.block
    }
}
impl Eq for CodeCondition {}

/// A named bundle of operations plus the conditions scoping its removals.
#[derive(Debug, Clone)]
pub struct Task {
    pub name: String,
    pub operations: Vec<Operation>,
    pub conditions: Vec<CodeCondition>,
    pub loc: Loc,
}

impl PartialEq for Task {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.operations == other.operations
            && self.conditions == other.conditions
    }
}
impl Eq for Task {}

/// A representation to generate: where to read repositories, where to
/// write graphs, which base graphs to build, and which tasks to apply.
#[derive(Debug, Clone)]
pub struct RepresentationSpec {
    pub name: String,
    pub repo_list_path: String,
    pub output_dir: String,
    pub base: BTreeSet<BaseGraphKind>,
    pub tasks: Vec<String>,
    pub loc: Loc,
}

impl PartialEq for RepresentationSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.repo_list_path == other.repo_list_path
            && self.output_dir == other.output_dir
            && self.base == other.base
            && self.tasks == other.tasks
    }
}
impl Eq for RepresentationSpec {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Error => write!(f, "error"),
            Severity::Warning => write!(f, "warning"),
        }
    }
}

/// A validation finding attached to a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub line: u32,
    pub col: u32,
    pub message: String,
}

impl Diagnostic {
    /// Printable as `severity: file:line:col: message`.
    pub fn format_with_file(&self, file: &str) -> String {
        format!(
            "{}: {}:{}:{}: {}",
            self.severity, file, self.line, self.col, self.message
        )
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}:{}: {}",
            self.severity, self.line, self.col, self.message
        )
    }
}

/// Validated in-memory form of a configuration file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConcordModel {
    pub tasks: Vec<Task>,
    pub representations: Vec<RepresentationSpec>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ConcordModel {
    pub fn task(&self, name: &str) -> Option<&Task> {
        self.tasks.iter().find(|t| t.name == name)
    }

    pub fn errors(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics
            .iter()
            .filter(|d| d.severity == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics
            .iter()
            .filter(|d| d.severity == Severity::Warning)
    }

    /// A model is executable iff it has zero error diagnostics.
    pub fn is_executable(&self) -> bool {
        self.errors().next().is_none()
    }
}

/// A parse failure with position and an expected-token hint.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct SyntaxError {
    pub line: u32,
    pub col: u32,
    pub message: String,
}

#[cfg(test)]
pub(crate) mod fixtures {
    /// The bundled reference configuration (one task, one representation).
    pub const LISTING5: &str = include_str!("../../../../assets/configs/listing5.concord");
}
