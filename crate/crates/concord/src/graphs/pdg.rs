//! Program-dependence edges: reaching-definitions data dependence plus
//! syntactic control dependence. For the structured control flow of the
//! subject language, syntactic governance coincides with post-dominance
//! based control dependence.

use super::{Cfg, EdgeLabel, GraphEdge};
use crate::augment::{Access, OccurrenceTable};
use crate::subject::{AstNodeKind, NodeId, SubjectAst};
use std::collections::{BTreeMap, BTreeSet};

/// Build `PDG_DATA` and `PDG_CTRL` edges for the unit the CFG was built
/// from. Data edges run def -> use for every definition with a
/// definition-clear CFG path to the use; control edges run from each
/// predicate to the statements it immediately governs.
pub fn build_pdg(ast: &SubjectAst, cfg: &Cfg, occ: &OccurrenceTable) -> Vec<GraphEdge> {
    let mut edges = data_dependence(cfg, occ);
    edges.extend(control_dependence(ast, cfg));
    let mut seen = BTreeSet::new();
    edges.retain(|e| seen.insert(*e));
    edges
}

/// Reaching definitions via the standard gen/kill fixed point at
/// statement granularity.
fn data_dependence(cfg: &Cfg, occ: &OccurrenceTable) -> Vec<GraphEdge> {
    // Intern variable names so dataflow facts are plain (var, stmt) pairs.
    let var_ids: BTreeMap<&str, usize> = occ
        .vars
        .keys()
        .enumerate()
        .map(|(i, name)| (name.as_str(), i))
        .collect();
    let by_stmt = occ.by_statement();
    let mut defs: BTreeMap<NodeId, BTreeSet<usize>> = BTreeMap::new();
    let mut uses: BTreeMap<NodeId, BTreeSet<usize>> = BTreeMap::new();
    for (&stmt, vars) in &by_stmt {
        for (&var, occs) in vars {
            let v = var_ids[var];
            if occs.iter().any(|o| o.access == Access::Write) {
                defs.entry(stmt).or_default().insert(v);
            }
            if occs.iter().any(|o| o.access == Access::Read) {
                uses.entry(stmt).or_default().insert(v);
            }
        }
    }

    type DefSet = BTreeSet<(usize, NodeId)>;
    let nodes = cfg.all_nodes();
    let mut in_sets: BTreeMap<NodeId, DefSet> = nodes.iter().map(|&n| (n, DefSet::new())).collect();

    let transfer = |stmt: NodeId, input: &DefSet| -> DefSet {
        let mut out: DefSet = input.clone();
        if let Some(vars) = defs.get(&stmt) {
            out.retain(|(v, _)| !vars.contains(v));
            for &v in vars {
                out.insert((v, stmt));
            }
        }
        out
    };

    let mut worklist: Vec<NodeId> = nodes.clone();
    while let Some(n) = worklist.pop() {
        let out = transfer(n, &in_sets[&n]);
        for &succ in cfg.successors_of(n) {
            let dst = in_sets.get_mut(&succ).expect("cfg node");
            let before = dst.len();
            dst.extend(out.iter().copied());
            if dst.len() != before && !worklist.contains(&succ) {
                worklist.push(succ);
            }
        }
    }

    let mut edges = Vec::new();
    for (&stmt, vars) in &uses {
        for &(var, def_stmt) in &in_sets[&stmt] {
            if vars.contains(&var) {
                edges.push(GraphEdge {
                    source: def_stmt,
                    target: stmt,
                    label: EdgeLabel::PdgData,
                });
            }
        }
    }
    edges
}

/// Edge from each control predicate (if/while/for condition, catch
/// clause) to every CFG statement node whose innermost governing
/// predicate it is.
fn control_dependence(ast: &SubjectAst, cfg: &Cfg) -> Vec<GraphEdge> {
    let stmts: BTreeSet<NodeId> = cfg.statement_nodes.iter().copied().collect();
    let mut edges = Vec::new();
    walk(ast, cfg.entry, None, &stmts, &mut edges);
    return edges;

    fn govern(
        ast: &SubjectAst,
        id: Option<NodeId>,
        pred: Option<NodeId>,
        stmts: &BTreeSet<NodeId>,
        edges: &mut Vec<GraphEdge>,
    ) {
        if let Some(id) = id {
            walk(ast, id, pred, stmts, edges);
        }
    }

    fn walk(
        ast: &SubjectAst,
        id: NodeId,
        pred: Option<NodeId>,
        stmts: &BTreeSet<NodeId>,
        edges: &mut Vec<GraphEdge>,
    ) {
        if stmts.contains(&id) {
            if let Some(p) = pred {
                edges.push(GraphEdge {
                    source: p,
                    target: id,
                    label: EdgeLabel::PdgCtrl,
                });
            }
        }
        let node = ast.node(id);
        match node.kind {
            AstNodeKind::IfStmt => {
                let cond = ast.condition_of(id);
                govern(ast, cond, pred, stmts, edges);
                govern(ast, ast.then_branch(id), cond, stmts, edges);
                if let Some(clause) = ast.else_clause(id) {
                    let body = ast.children(clause).first().copied();
                    govern(ast, body, cond, stmts, edges);
                }
            }
            AstNodeKind::WhileStmt => {
                let cond = ast.condition_of(id);
                govern(ast, cond, pred, stmts, edges);
                let body = ast.children(id).iter().copied().find(|&c| Some(c) != cond);
                govern(ast, body, cond, stmts, edges);
            }
            AstNodeKind::ForStmt => {
                let parts = ast.for_parts.get(&id).copied().unwrap_or_default();
                govern(ast, parts.init, pred, stmts, edges);
                govern(ast, parts.cond, pred, stmts, edges);
                // Update and body run only when the condition held; without
                // a condition they inherit the outer governor.
                let inner = parts.cond.or(pred);
                govern(ast, parts.update, inner, stmts, edges);
                govern(ast, parts.body, inner, stmts, edges);
            }
            AstNodeKind::TryStmt => {
                for &c in ast.children(id) {
                    match ast.node(c).kind {
                        AstNodeKind::CatchClause => {
                            if stmts.contains(&c) {
                                if let Some(p) = pred {
                                    edges.push(GraphEdge {
                                        source: p,
                                        target: c,
                                        label: EdgeLabel::PdgCtrl,
                                    });
                                }
                            }
                            let body = ast
                                .children(c)
                                .iter()
                                .copied()
                                .find(|&b| ast.node(b).kind == AstNodeKind::Block);
                            govern(ast, body, Some(c), stmts, edges);
                        }
                        _ => walk(ast, c, pred, stmts, edges),
                    }
                }
            }
            _ => {
                for &c in &node.children {
                    walk(ast, c, pred, stmts, edges);
                }
            }
        }
    }
}
