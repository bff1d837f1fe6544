//! Edge-addition operations applied to a merged [`CodeGraph`].
//!
//! Every operation only adds edges; nodes and pre-existing edges are
//! never touched. All operations attach to AST nodes (token leaves,
//! condition nodes, block nodes), so applying a task requires the graph
//! to carry the AST base.

mod flow;
mod occurrences;

pub use flow::{compute_flow_facts, FlowFacts, VarFacts};
pub use occurrences::{build_occurrences, Access, Occurrence, OccurrenceTable};

use crate::dsl::{BaseGraphKind, EdgeKind, OpTarget, Task};
use crate::graphs::{build_cfg, Cfg, CodeGraph, EdgeLabel, GraphEdge, GraphError};
use crate::subject::{AstNodeKind, NodeId, SubjectAst};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum AugmentError {
    #[error("operation 'add {0}' requires the AST base")]
    RequiresAstBase(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Everything a task application needs about one method unit, built once.
pub struct AugmentContext {
    pub leaves: Vec<NodeId>,
    pub cfg: Cfg,
    pub occ: OccurrenceTable,
    pub facts: FlowFacts,
}

impl AugmentContext {
    pub fn new(ast: &SubjectAst, unit: NodeId) -> Result<Self, AugmentError> {
        let leaves = ast
            .leaves_in_order(unit)
            .map_err(|_| GraphError::UnknownUnit(unit))?;
        let cfg = build_cfg(ast, unit)?;
        let occ = build_occurrences(ast, unit, &cfg);
        let facts = compute_flow_facts(&cfg, &occ);
        Ok(AugmentContext {
            leaves,
            cfg,
            occ,
            facts,
        })
    }
}

fn push_edge(g: &mut CodeGraph, source: NodeId, target: NodeId, label: EdgeLabel) {
    g.edges.push(GraphEdge {
        source,
        target,
        label,
    });
}

/// Chain consecutive token leaves in source order.
pub fn add_next_token(g: &mut CodeGraph, leaves: &[NodeId]) {
    for pair in leaves.windows(2) {
        push_edge(g, pair[0], pair[1], EdgeLabel::NextToken);
    }
}

/// Chain each parent's ordered children.
pub fn add_next_sibling(g: &mut CodeGraph) {
    let children = g.ast_children();
    for siblings in children.values() {
        for pair in siblings.windows(2) {
            push_edge(g, pair[0], pair[1], EdgeLabel::NextSibling);
        }
    }
}

/// For every occurrence, point back to the sets of possibly-last reads
/// and writes of the same variable. One DSL token emits both labels.
pub fn add_last_read_write(g: &mut CodeGraph, facts: &FlowFacts, occ: &OccurrenceTable) {
    for occs in occ.vars.values() {
        for o in occs {
            let var = occ.var_of(o.node).expect("occurrence var");
            for r in facts.last_reads(o.stmt, var) {
                push_edge(g, o.node, r, EdgeLabel::LastRead);
            }
            for w in facts.last_writes(o.stmt, var) {
                push_edge(g, o.node, w, EdgeLabel::LastWrite);
            }
        }
    }
}

/// Flow-independent chain over all occurrences of each variable, later
/// occurrence pointing to the earlier one.
pub fn add_last_lexical_use(g: &mut CodeGraph, occ: &OccurrenceTable) {
    for occs in occ.vars.values() {
        for pair in occs.windows(2) {
            push_edge(g, pair[1].node, pair[0].node, EdgeLabel::LastLexicalUse);
        }
    }
}

/// Connect identifier and literal leaves of each assignment's right-hand
/// side to the variable on the left. Callee names do not count as data
/// sources; assignments whose left side is not a plain identifier
/// contribute nothing.
pub fn add_computed_from(g: &mut CodeGraph, occ: &OccurrenceTable) {
    let children = g.ast_children();
    let occ_nodes = occ.node_index();
    let kind_of: BTreeMap<NodeId, AstNodeKind> = g.nodes.iter().map(|n| (n.id, n.kind)).collect();
    let assignments: Vec<NodeId> = g
        .nodes
        .iter()
        .filter(|n| n.kind == AstNodeKind::Assignment)
        .map(|n| n.id)
        .collect();
    for node_id in assignments {
        let Some(cs) = children.get(&node_id) else {
            continue;
        };
        if cs.len() < 3 {
            continue;
        }
        let lhs = cs[0];
        if kind_of.get(&lhs) != Some(&AstNodeKind::Identifier) || children.contains_key(&lhs) {
            continue;
        }
        for &rhs in &cs[2..] {
            for leaf in g.ast_subtree(rhs, &children) {
                if children.contains_key(&leaf) {
                    continue;
                }
                match kind_of.get(&leaf) {
                    Some(AstNodeKind::Literal) => push_edge(g, leaf, lhs, EdgeLabel::ComputedFrom),
                    Some(AstNodeKind::Identifier) if occ_nodes.contains_key(&leaf) => {
                        push_edge(g, leaf, lhs, EdgeLabel::ComputedFrom)
                    }
                    _ => {}
                }
            }
        }
    }
}

/// Point every return statement at its method declaration node.
pub fn add_returns_to(g: &mut CodeGraph) {
    let returns: Vec<NodeId> = g
        .nodes
        .iter()
        .filter(|n| n.kind == AstNodeKind::ReturnStmt)
        .map(|n| n.id)
        .collect();
    for r in returns {
        push_edge(g, r, g.root, EdgeLabel::ReturnsTo);
    }
}

/// For each if-statement, connect branch occurrences of the condition's
/// variables to the condition node: GUARDED_BY for the then-branch,
/// GUARDED_BY_NEGATION for the else-branch.
pub fn add_guarded_by(g: &mut CodeGraph, occ: &OccurrenceTable) {
    let children = g.ast_children();
    let occ_nodes = occ.node_index();
    let kind_of: BTreeMap<NodeId, AstNodeKind> = g.nodes.iter().map(|n| (n.id, n.kind)).collect();
    let if_nodes: Vec<NodeId> = g
        .nodes
        .iter()
        .filter(|n| n.kind == AstNodeKind::IfStmt)
        .map(|n| n.id)
        .collect();
    for if_id in if_nodes {
        let Some(cs) = children.get(&if_id) else {
            continue;
        };
        let Some(&cond) = cs
            .iter()
            .find(|&&c| kind_of.get(&c) == Some(&AstNodeKind::Condition))
        else {
            continue;
        };
        let cond_pos = cs.iter().position(|&c| c == cond).unwrap();
        let cond_vars: std::collections::BTreeSet<&str> = g
            .ast_subtree(cond, &children)
            .into_iter()
            .filter_map(|n| occ_nodes.get(&n).copied())
            .collect();
        if cond_vars.is_empty() {
            continue;
        }
        let then_branch = cs
            .get(cond_pos + 1)
            .copied()
            .filter(|&c| kind_of.get(&c) != Some(&AstNodeKind::ElseClause));
        let else_clause = cs
            .iter()
            .copied()
            .find(|&c| kind_of.get(&c) == Some(&AstNodeKind::ElseClause));
        let emit = |branch: Option<NodeId>, label: EdgeLabel, g: &mut CodeGraph| {
            let Some(b) = branch else { return };
            for n in g.ast_subtree(b, &children) {
                if let Some(var) = occ_nodes.get(&n) {
                    if cond_vars.contains(var) {
                        push_edge(g, n, cond, label);
                    }
                }
            }
        };
        emit(then_branch, EdgeLabel::GuardedBy, g);
        emit(else_clause, EdgeLabel::GuardedByNegation, g);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopKind {
    While,
    For,
}

/// Connect each loop's condition to its body block and back: EXEC goes
/// condition to body, NEXT the inverse.
pub fn add_loop_cfg(g: &mut CodeGraph, kind: LoopKind) {
    let (stmt_kind, exec, next) = match kind {
        LoopKind::While => (
            AstNodeKind::WhileStmt,
            EdgeLabel::WhileExec,
            EdgeLabel::WhileNext,
        ),
        LoopKind::For => (AstNodeKind::ForStmt, EdgeLabel::ForExec, EdgeLabel::ForNext),
    };
    let children = g.ast_children();
    let kind_of: BTreeMap<NodeId, AstNodeKind> = g.nodes.iter().map(|n| (n.id, n.kind)).collect();
    let loops: Vec<NodeId> = g
        .nodes
        .iter()
        .filter(|n| n.kind == stmt_kind)
        .map(|n| n.id)
        .collect();
    for loop_id in loops {
        let Some(cs) = children.get(&loop_id) else {
            continue;
        };
        let Some(&cond) = cs
            .iter()
            .find(|&&c| kind_of.get(&c) == Some(&AstNodeKind::Condition))
        else {
            continue;
        };
        let Some(&body) = cs.last().filter(|&&b| b != cond) else {
            continue;
        };
        push_edge(g, cond, body, exec);
        push_edge(g, body, cond, next);
    }
}

/// Apply all edge-addition operations of a validated task in declaration
/// order, then drop duplicate `(source, target, label)` triples. Node
/// removal operations were already consumed at the file level and are
/// skipped here.
pub fn apply_task(
    g: &mut CodeGraph,
    task: &Task,
    ctx: &AugmentContext,
) -> Result<(), AugmentError> {
    for op in &task.operations {
        let OpTarget::Edge(kind) = op.target else {
            continue;
        };
        if !g.bases.contains(&BaseGraphKind::Ast) {
            return Err(AugmentError::RequiresAstBase(kind.token()));
        }
        match kind {
            EdgeKind::NextToken => add_next_token(g, &ctx.leaves),
            EdgeKind::NextSibling => add_next_sibling(g),
            EdgeKind::ForCfg => add_loop_cfg(g, LoopKind::For),
            EdgeKind::WhileCfg => add_loop_cfg(g, LoopKind::While),
            EdgeKind::LastReadWrite => add_last_read_write(g, &ctx.facts, &ctx.occ),
            EdgeKind::GuardedBy => add_guarded_by(g, &ctx.occ),
            EdgeKind::ReturnsTo => add_returns_to(g),
            EdgeKind::ComputedFrom => add_computed_from(g, &ctx.occ),
            EdgeKind::LastLexicalUse => add_last_lexical_use(g, &ctx.occ),
        }
    }
    g.dedupe_edges();
    Ok(())
}
