//! Statement pruning: detect removable statements (simple assignments,
//! prints, logging, exits), apply code-condition exemptions, and rewrite
//! source files by replacing each removed span with the empty string.
//!
//! Deletion is span-precise rather than line-based: brackets and the `;`
//! separators of for-headers stay in place, so the rewritten file still
//! parses with balanced braces.

use crate::dsl::{BlockKind, CodeCondition, ConditionAction, NodeKind};
use crate::subject::{AstNodeKind, NodeId, OperatorClass, SubjectAst, SubjectError};
use std::collections::BTreeSet;
use std::path::PathBuf;

/// A removable statement: its classification, location, and the block
/// kinds of its ancestors (for exemption decisions).
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct StatementSpan {
    pub kind: NodeKind,
    pub file: PathBuf,
    pub byte_start: usize,
    pub byte_end: usize,
    pub line: u32,
    pub enclosing: BTreeSet<BlockKind>,
    pub in_for_init: bool,
}

/// Outcome of rewriting one file.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct PruneReport {
    pub removed: Vec<StatementSpan>,
    pub exempted: Vec<(StatementSpan, BlockKind)>,
    /// Byte length of the rewritten text.
    pub rewritten_bytes: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum PruneError {
    #[error("span {start}..{end} is outside the file (len {len})")]
    OutOfBounds {
        start: usize,
        end: usize,
        len: usize,
    },
    #[error("span {start}..{end} is empty or inverted")]
    InvalidSpan { start: usize, end: usize },
    #[error("spans {a:?} and {b:?} partially overlap")]
    OverlappingSpans {
        a: (usize, usize),
        b: (usize, usize),
    },
    #[error("span {start}..{end} does not fall on character boundaries")]
    NotOnCharBoundary { start: usize, end: usize },
    #[error(transparent)]
    Subject(#[from] SubjectError),
}

/// The four-condition check for simple assignments: the node is an
/// ASSIGNMENT, its left side is a single identifier, every internal node
/// of its right side is an arithmetic/bitwise/logical/relational
/// operator, and every operand leaf of its right side is a literal.
/// Recovery leaves never count as literals.
pub fn is_simple_assignment(ast: &SubjectAst, node: NodeId) -> Result<bool, SubjectError> {
    let n = ast.get(node)?;
    if n.kind != AstNodeKind::Assignment || n.children.len() < 3 {
        return Ok(false);
    }
    let lhs = ast.node(n.children[0]);
    if lhs.kind != AstNodeKind::Identifier || !lhs.children.is_empty() {
        return Ok(false);
    }
    for &rhs in &n.children[2..] {
        for id in ast.subtree(rhs) {
            let sub = ast.node(id);
            if sub.children.is_empty() {
                match sub.kind {
                    // Operator tokens belong to their parent operation.
                    AstNodeKind::Operator => {}
                    AstNodeKind::Literal if sub.operator_class.is_none() => {}
                    _ => return Ok(false),
                }
            } else {
                let allowed = sub.kind == AstNodeKind::Operator
                    && matches!(
                        sub.operator_class,
                        Some(
                            OperatorClass::Arithmetic
                                | OperatorClass::Bitwise
                                | OperatorClass::Logical
                                | OperatorClass::Relational
                        )
                    );
                if !allowed {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

const PRINT_CALLEES: &[&str] = &[
    "System.out.println",
    "System.out.print",
    "System.err.println",
    "System.err.print",
    "printf",
    "print",
    "println",
    "puts",
];

const SYS_EXIT_CALLEES: &[&str] = &["System.exit", "exit", "abort", "Runtime.getRuntime().halt"];

const LOG_METHODS: &[&str] = &["trace", "debug", "info", "warn", "error", "fatal", "log"];

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Classify the callee of an expression-statement call, if it matches one
/// of the removable families.
fn classify_call(ast: &SubjectAst, call: NodeId) -> Option<NodeKind> {
    let node = ast.node(call);
    if node.kind != AstNodeKind::Call {
        return None;
    }
    let callee = *node.children.first()?;
    let callee_text = strip_ws(&ast.node(callee).code);
    if PRINT_CALLEES.contains(&callee_text.as_str()) {
        return Some(NodeKind::Print);
    }
    if SYS_EXIT_CALLEES.contains(&callee_text.as_str()) {
        return Some(NodeKind::SysExit);
    }
    // Logging convention: <recv>.<m> where m is a level-style method and
    // the receiver names something log-like.
    let callee_node = ast.node(callee);
    if callee_node.kind == AstNodeKind::FieldAccess && callee_node.children.len() == 2 {
        let member = &ast.node(callee_node.children[1]).code;
        let recv = strip_ws(&ast.node(callee_node.children[0]).code);
        if LOG_METHODS.contains(&member.as_str()) && recv.to_lowercase().contains("log") {
            return Some(NodeKind::Logging);
        }
    }
    None
}

/// Whether `decl` is the init clause of a for-header.
fn is_for_init(ast: &SubjectAst, id: NodeId) -> bool {
    ast.node(id)
        .parent
        .map(|p| {
            ast.node(p).kind == AstNodeKind::ForStmt
                && ast
                    .for_parts
                    .get(&p)
                    .is_some_and(|parts| parts.init == Some(id))
        })
        .unwrap_or(false)
}

/// Whether a node sits in statement position (its parent treats it as a
/// statement, not as a sub-expression).
fn in_statement_position(ast: &SubjectAst, id: NodeId) -> bool {
    match ast.node(id).parent {
        None => false,
        Some(p) => matches!(
            ast.node(p).kind,
            AstNodeKind::Block
                | AstNodeKind::IfStmt
                | AstNodeKind::ElseClause
                | AstNodeKind::WhileStmt
                | AstNodeKind::ForStmt
                | AstNodeKind::TryStmt
                | AstNodeKind::CatchClause
        ),
    }
}

/// Collect one span for every statement matching a requested kind.
///
/// Simple assignments match whole statements (span includes the trailing
/// `;`) except inside for-headers, where the span covers only the init
/// clause and `in_for_init` is set. Print/logging/exit statements match
/// expression statements by their callee pattern.
pub fn collect_statements(ast: &SubjectAst, targets: &BTreeSet<NodeKind>) -> Vec<StatementSpan> {
    let mut spans = Vec::new();
    if targets.is_empty() {
        return spans;
    }
    for node in &ast.nodes {
        let id = node.id;
        let matched: Option<(NodeKind, NodeId, bool)> = match node.kind {
            AstNodeKind::ExprStmt => {
                let child = node.children.first().copied();
                match child.map(|c| ast.node(c).kind) {
                    Some(AstNodeKind::Assignment) => {
                        let assign = child.unwrap();
                        if is_simple_assignment(ast, assign).unwrap_or(false) {
                            Some((NodeKind::SimpleAssignment, id, false))
                        } else {
                            None
                        }
                    }
                    Some(AstNodeKind::Call) => {
                        classify_call(ast, child.unwrap()).map(|kind| (kind, id, false))
                    }
                    _ => None,
                }
            }
            AstNodeKind::LocalDecl => {
                // Only single-declarator statements are removable wholesale.
                let declarators: Vec<NodeId> = node
                    .children
                    .iter()
                    .copied()
                    .filter(|&c| ast.node(c).kind != AstNodeKind::TypeName)
                    .collect();
                if declarators.len() == 1
                    && is_simple_assignment(ast, declarators[0]).unwrap_or(false)
                {
                    if is_for_init(ast, id) {
                        Some((NodeKind::SimpleAssignment, id, true))
                    } else if in_statement_position(ast, id) {
                        Some((NodeKind::SimpleAssignment, id, false))
                    } else {
                        None
                    }
                } else {
                    None
                }
            }
            AstNodeKind::Assignment => {
                // A bare assignment in a for-init clause.
                if is_for_init(ast, id) && is_simple_assignment(ast, id).unwrap_or(false) {
                    Some((NodeKind::SimpleAssignment, id, true))
                } else {
                    None
                }
            }
            _ => None,
        };
        if let Some((kind, stmt, in_for_init)) = matched {
            if !targets.contains(&kind) {
                continue;
            }
            let stmt_node = ast.node(stmt);
            spans.push(StatementSpan {
                kind,
                file: ast.file_path.clone(),
                byte_start: stmt_node.span.0,
                byte_end: stmt_node.span.1,
                line: stmt_node.line,
                enclosing: ast.enclosing_blocks(stmt).unwrap_or_default(),
                in_for_init,
            });
        }
    }
    spans.sort_by_key(|s| (s.byte_start, s.byte_end));
    spans
}

/// Split spans into those to remove and those exempted by conditions.
///
/// `exclude` exempts spans inside the named blocks; `include` restricts
/// removal to spans inside the named blocks; with both, exclude wins.
pub fn apply_conditions(
    spans: Vec<StatementSpan>,
    conditions: &[CodeCondition],
) -> (Vec<StatementSpan>, Vec<(StatementSpan, BlockKind)>) {
    let excludes: Vec<BlockKind> = conditions
        .iter()
        .filter(|c| c.action == ConditionAction::Exclude)
        .map(|c| c.block)
        .collect();
    let includes: Vec<BlockKind> = conditions
        .iter()
        .filter(|c| c.action == ConditionAction::Include)
        .map(|c| c.block)
        .collect();

    let mut keep = Vec::new();
    let mut exempted = Vec::new();
    for span in spans {
        if let Some(&reason) = excludes.iter().find(|b| span.enclosing.contains(b)) {
            exempted.push((span, reason));
            continue;
        }
        if !includes.is_empty() && !includes.iter().any(|b| span.enclosing.contains(b)) {
            exempted.push((span, includes[0]));
            continue;
        }
        keep.push(span);
    }
    (keep, exempted)
}

/// Replace each span with the empty string, preserving every other byte.
/// Spans nested inside other spans are dropped (outermost wins); partial
/// overlaps are an error.
pub fn rewrite_file(
    text: &str,
    spans: &[StatementSpan],
) -> Result<(String, PruneReport), PruneError> {
    let len = text.len();
    for s in spans {
        if s.byte_end > len {
            return Err(PruneError::OutOfBounds {
                start: s.byte_start,
                end: s.byte_end,
                len,
            });
        }
        if s.byte_start >= s.byte_end {
            return Err(PruneError::InvalidSpan {
                start: s.byte_start,
                end: s.byte_end,
            });
        }
        if !text.is_char_boundary(s.byte_start) || !text.is_char_boundary(s.byte_end) {
            return Err(PruneError::NotOnCharBoundary {
                start: s.byte_start,
                end: s.byte_end,
            });
        }
    }
    let mut sorted: Vec<&StatementSpan> = spans.iter().collect();
    sorted.sort_by_key(|s| (s.byte_start, std::cmp::Reverse(s.byte_end)));

    let mut outermost: Vec<&StatementSpan> = Vec::new();
    for s in sorted {
        match outermost.last() {
            Some(last) if s.byte_start < last.byte_end => {
                if s.byte_end <= last.byte_end {
                    continue; // nested: outermost wins
                }
                return Err(PruneError::OverlappingSpans {
                    a: (last.byte_start, last.byte_end),
                    b: (s.byte_start, s.byte_end),
                });
            }
            _ => outermost.push(s),
        }
    }

    let mut out = String::with_capacity(len);
    let mut pos = 0;
    for s in &outermost {
        out.push_str(&text[pos..s.byte_start]);
        pos = s.byte_end;
    }
    out.push_str(&text[pos..]);

    let report = PruneReport {
        removed: outermost.into_iter().cloned().collect(),
        exempted: Vec::new(),
        rewritten_bytes: out.len(),
    };
    Ok((out, report))
}

/// Collect, filter by conditions, and rewrite in one step.
pub fn prune_source(
    ast: &SubjectAst,
    text: &str,
    targets: &BTreeSet<NodeKind>,
    conditions: &[CodeCondition],
) -> Result<(String, PruneReport), PruneError> {
    let spans = collect_statements(ast, targets);
    let (keep, exempted) = apply_conditions(spans, conditions);
    let (out, mut report) = rewrite_file(text, &keep)?;
    report.exempted = exempted;
    Ok((out, report))
}
