//! Forward dataflow over the CFG tracking, per variable, the sets of
//! occurrences that may have been the last read and the last write.

use super::occurrences::{Access, OccurrenceTable};
use crate::graphs::Cfg;
use crate::subject::NodeId;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VarFacts {
    pub last_reads: BTreeSet<NodeId>,
    pub last_writes: BTreeSet<NodeId>,
}

pub type State = BTreeMap<String, VarFacts>;

/// The "in" facts of the fixed point: what may hold just before each CFG
/// node executes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FlowFacts {
    pub in_facts: BTreeMap<NodeId, State>,
}

impl FlowFacts {
    pub fn at(&self, stmt: NodeId) -> Option<&State> {
        self.in_facts.get(&stmt)
    }

    pub fn last_reads(&self, stmt: NodeId, var: &str) -> BTreeSet<NodeId> {
        self.at(stmt)
            .and_then(|s| s.get(var))
            .map(|f| f.last_reads.clone())
            .unwrap_or_default()
    }

    pub fn last_writes(&self, stmt: NodeId, var: &str) -> BTreeSet<NodeId> {
        self.at(stmt)
            .and_then(|s| s.get(var))
            .map(|f| f.last_writes.clone())
            .unwrap_or_default()
    }
}

fn join_into(dst: &mut State, src: &State) -> bool {
    let mut changed = false;
    for (var, facts) in src {
        let entry = dst.entry(var.clone()).or_default();
        for &r in &facts.last_reads {
            changed |= entry.last_reads.insert(r);
        }
        for &w in &facts.last_writes {
            changed |= entry.last_writes.insert(w);
        }
    }
    changed
}

/// Transfer: a statement that reads `x` replaces `last_reads(x)` with its
/// own read occurrences; a write replaces `last_writes(x)` likewise.
pub(crate) fn transfer(state: &State, stmt: NodeId, occ: &OccurrenceTable) -> State {
    let mut out = state.clone();
    for (var, occs) in &occ.vars {
        let here: Vec<_> = occs.iter().filter(|o| o.stmt == stmt).collect();
        if here.is_empty() {
            continue;
        }
        let reads: BTreeSet<NodeId> = here
            .iter()
            .filter(|o| o.access == Access::Read)
            .map(|o| o.node)
            .collect();
        let writes: BTreeSet<NodeId> = here
            .iter()
            .filter(|o| o.access == Access::Write)
            .map(|o| o.node)
            .collect();
        let entry = out.entry(var.clone()).or_default();
        if !reads.is_empty() {
            entry.last_reads = reads;
        }
        if !writes.is_empty() {
            entry.last_writes = writes;
        }
    }
    out
}

/// Iterate `in(s) = union of out(p)` to convergence over the finite
/// lattice of occurrence sets.
pub fn compute_flow_facts(cfg: &Cfg, occ: &OccurrenceTable) -> FlowFacts {
    let nodes = cfg.all_nodes();
    let mut in_facts: BTreeMap<NodeId, State> = nodes.iter().map(|&n| (n, State::new())).collect();

    let mut worklist: Vec<NodeId> = nodes.clone();
    while let Some(n) = worklist.pop() {
        let out = transfer(&in_facts[&n], n, occ);
        for &succ in cfg.successors_of(n) {
            let dst = in_facts.entry(succ).or_default();
            let mut merged = dst.clone();
            if join_into(&mut merged, &out) {
                *dst = merged;
                if !worklist.contains(&succ) {
                    worklist.push(succ);
                }
            }
        }
    }
    FlowFacts { in_facts }
}

#[cfg(test)]
mod tests {
    use super::super::occurrences::build_occurrences;
    use super::*;
    use crate::graphs::build_cfg;
    use crate::subject::{parse_subject, AstNodeKind};

    fn facts_for(text: &str) -> (crate::subject::SubjectAst, OccurrenceTable, FlowFacts) {
        let ast = parse_subject(text, "test.java");
        let unit = ast.methods[0];
        let cfg = build_cfg(&ast, unit).unwrap();
        let occ = build_occurrences(&ast, unit, &cfg);
        let facts = compute_flow_facts(&cfg, &occ);
        (ast, occ, facts)
    }

    fn stmt_by_code(ast: &crate::subject::SubjectAst, code: &str) -> NodeId {
        ast.nodes
            .iter()
            .find(|n| {
                n.code == code
                    && matches!(
                        n.kind,
                        AstNodeKind::ExprStmt | AstNodeKind::LocalDecl | AstNodeKind::Condition
                    )
            })
            .map(|n| n.id)
            .unwrap_or_else(|| panic!("no statement {code:?}"))
    }

    #[test]
    fn straight_line_last_read_and_write() {
        let (ast, occ, facts) = facts_for("void f() { x = 1; y = x; z = x; }");
        let z = stmt_by_code(&ast, "z = x;");
        let y_stmt = stmt_by_code(&ast, "y = x;");
        // At `z = x`, the last read of x is the read inside `y = x`.
        let read_in_y: Vec<NodeId> = occ.vars["x"]
            .iter()
            .filter(|o| o.stmt == y_stmt && o.access == Access::Read)
            .map(|o| o.node)
            .collect();
        assert_eq!(
            facts.last_reads(z, "x"),
            read_in_y.iter().copied().collect()
        );
        // And the last write is the one in `x = 1`.
        let write_in_first: Vec<NodeId> = occ.vars["x"]
            .iter()
            .filter(|o| o.access == Access::Write)
            .map(|o| o.node)
            .collect();
        assert_eq!(
            facts.last_writes(z, "x"),
            write_in_first.iter().copied().collect()
        );
    }

    #[test]
    fn both_branches_merge_into_two_element_sets() {
        let (ast, _, facts) = facts_for("void f() { if (c) { use(x); } else { use(x); } use(x); }");
        let last = ast
            .nodes
            .iter()
            .filter(|n| n.kind == AstNodeKind::ExprStmt && n.code == "use(x);")
            .map(|n| n.id)
            .max()
            .unwrap();
        assert_eq!(facts.last_reads(last, "x").len(), 2);
    }

    #[test]
    fn loop_body_use_includes_itself() {
        let (ast, occ, facts) = facts_for("void f() { while (c) { use(x); } }");
        let use_stmt = stmt_by_code(&ast, "use(x);");
        let x_use = occ.vars["x"][0].node;
        assert!(facts.last_reads(use_stmt, "x").contains(&x_use));
    }

    #[test]
    fn no_prior_access_means_empty_sets() {
        let (ast, _, facts) = facts_for("void f() { y = x; }");
        let stmt = stmt_by_code(&ast, "y = x;");
        assert!(facts.last_reads(stmt, "x").is_empty());
        assert!(facts.last_writes(stmt, "x").is_empty());
    }
}
