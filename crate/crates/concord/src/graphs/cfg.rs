//! Statement-level intra-procedural control flow graphs.
//!
//! CFG nodes reuse AST ids: entry is the METHOD_DECL node, exit is the
//! method's body block, and the statement nodes are simple statements,
//! predicates (if/while/for conditions), catch clauses, for-header
//! clauses, and recovery leaves in statement position.

use super::GraphError;
use crate::subject::{AstNodeKind, NodeId, SubjectAst};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cfg {
    pub entry: NodeId,
    pub exit: NodeId,
    /// Statement/predicate nodes, sorted by id; excludes entry and exit.
    pub statement_nodes: Vec<NodeId>,
    /// Ordered successor lists. A two-way branch to the same node keeps
    /// both entries; exporting to a graph deduplicates.
    pub successors: BTreeMap<NodeId, Vec<NodeId>>,
    pub diagnostics: Vec<String>,
}

impl Cfg {
    pub fn successors_of(&self, id: NodeId) -> &[NodeId] {
        self.successors.get(&id).map_or(&[], |v| v.as_slice())
    }

    pub fn predecessors(&self) -> BTreeMap<NodeId, Vec<NodeId>> {
        let mut preds: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
        for (&s, succs) in &self.successors {
            for &t in succs {
                preds.entry(t).or_default().push(s);
            }
        }
        preds
    }

    /// All CFG nodes: entry, statements, exit.
    pub fn all_nodes(&self) -> Vec<NodeId> {
        let mut out = vec![self.entry];
        out.extend(self.statement_nodes.iter().copied());
        out.push(self.exit);
        out.sort_unstable();
        out.dedup();
        out
    }
}

struct Builder<'a> {
    ast: &'a SubjectAst,
    succ: BTreeMap<NodeId, Vec<NodeId>>,
    stmts: BTreeSet<NodeId>,
    returns: Vec<NodeId>,
}

impl<'a> Builder<'a> {
    fn connect(&mut self, froms: &[NodeId], to: NodeId) {
        for &f in froms {
            self.succ.entry(f).or_default().push(to);
        }
    }

    fn simple(&mut self, id: NodeId, preds: Vec<NodeId>) -> Vec<NodeId> {
        self.stmts.insert(id);
        self.connect(&preds, id);
        vec![id]
    }

    /// Build flow for one statement; `preds` are the dangling sources that
    /// should lead into it. Returns the dangling sources leaving it.
    fn build_stmt(&mut self, id: NodeId, preds: Vec<NodeId>) -> Vec<NodeId> {
        let node = self.ast.node(id);
        match node.kind {
            AstNodeKind::Block => self.build_seq(id, preds),
            AstNodeKind::IfStmt => {
                let Some(cond) = self.ast.condition_of(id) else {
                    return preds;
                };
                self.stmts.insert(cond);
                self.connect(&preds, cond);
                let mut outs = Vec::new();
                match self.ast.then_branch(id) {
                    Some(then) => outs.extend(self.build_stmt(then, vec![cond])),
                    None => outs.push(cond),
                }
                match self.ast.else_clause(id) {
                    Some(clause) => {
                        let body = self.ast.children(clause).first().copied();
                        match body {
                            Some(b) => outs.extend(self.build_stmt(b, vec![cond])),
                            None => outs.push(cond),
                        }
                    }
                    None => outs.push(cond),
                }
                outs
            }
            AstNodeKind::WhileStmt => {
                let Some(cond) = self.ast.condition_of(id) else {
                    return preds;
                };
                self.stmts.insert(cond);
                self.connect(&preds, cond);
                let body = self.ast.children(id).iter().copied().find(|&c| c != cond);
                if let Some(b) = body {
                    let body_outs = self.build_stmt(b, vec![cond]);
                    self.connect(&body_outs, cond);
                } else {
                    self.connect(&[cond], cond);
                }
                vec![cond]
            }
            AstNodeKind::ForStmt => self.build_for(id, preds),
            AstNodeKind::TryStmt => self.build_try(id, preds),
            AstNodeKind::ReturnStmt => {
                self.stmts.insert(id);
                self.connect(&preds, id);
                self.returns.push(id);
                Vec::new()
            }
            AstNodeKind::LocalDecl
            | AstNodeKind::ExprStmt
            | AstNodeKind::Assignment
            | AstNodeKind::Call
            | AstNodeKind::Literal
            | AstNodeKind::Identifier
            | AstNodeKind::Operator
            | AstNodeKind::FieldAccess => self.simple(id, preds),
            _ => preds,
        }
    }

    fn build_seq(&mut self, block: NodeId, preds: Vec<NodeId>) -> Vec<NodeId> {
        let mut cur = preds;
        for &stmt in self.ast.children(block) {
            cur = self.build_stmt(stmt, cur);
        }
        cur
    }

    fn build_for(&mut self, id: NodeId, preds: Vec<NodeId>) -> Vec<NodeId> {
        let parts = self.ast.for_parts.get(&id).copied().unwrap_or_default();
        let mut cur = preds;
        if let Some(init) = parts.init {
            cur = self.simple(init, cur);
        }
        if let Some(cond) = parts.cond {
            self.stmts.insert(cond);
            self.connect(&cur, cond);
            let body_outs = match parts.body {
                Some(b) => self.build_stmt(b, vec![cond]),
                None => vec![cond],
            };
            let tail = match parts.update {
                Some(u) => {
                    self.stmts.insert(u);
                    self.connect(&body_outs, u);
                    vec![u]
                }
                None => body_outs,
            };
            self.connect(&tail, cond);
            vec![cond]
        } else {
            // Condition-less loop: the body repeats unconditionally and the
            // loop never exits normally.
            let Some(body) = parts.body else {
                return cur;
            };
            let body_outs = self.build_stmt(body, cur);
            let tail = match parts.update {
                Some(u) => {
                    self.stmts.insert(u);
                    self.connect(&body_outs, u);
                    vec![u]
                }
                None => body_outs,
            };
            if let Some(head) = self.first_node_of(body) {
                self.connect(&tail, head);
            }
            Vec::new()
        }
    }

    fn build_try(&mut self, id: NodeId, preds: Vec<NodeId>) -> Vec<NodeId> {
        let children = self.ast.children(id).to_vec();
        let mut iter = children.iter().copied();
        let Some(body) = iter.next() else {
            return preds;
        };
        let before: BTreeSet<NodeId> = self.stmts.clone();
        let body_outs = self.build_seq(body, preds);
        let try_nodes: Vec<NodeId> = self.stmts.difference(&before).copied().collect();

        let mut outs = body_outs;
        let mut finally_block = None;
        for child in iter {
            let node = self.ast.node(child);
            match node.kind {
                AstNodeKind::CatchClause => {
                    self.stmts.insert(child);
                    // Any statement of the try body may transfer control here.
                    for &t in &try_nodes {
                        self.connect(&[t], child);
                    }
                    let cbody = self
                        .ast
                        .children(child)
                        .iter()
                        .copied()
                        .find(|&c| self.ast.node(c).kind == AstNodeKind::Block);
                    match cbody {
                        Some(b) => outs.extend(self.build_seq(b, vec![child])),
                        None => outs.push(child),
                    }
                }
                AstNodeKind::Block => finally_block = Some(child),
                _ => {}
            }
        }
        match finally_block {
            Some(b) => self.build_seq(b, outs),
            None => outs,
        }
    }

    /// First CFG node a statement would contribute, without building it.
    fn first_node_of(&self, id: NodeId) -> Option<NodeId> {
        let node = self.ast.node(id);
        match node.kind {
            AstNodeKind::Block => node
                .children
                .iter()
                .copied()
                .find_map(|c| self.first_node_of(c)),
            AstNodeKind::IfStmt | AstNodeKind::WhileStmt => self.ast.condition_of(id),
            AstNodeKind::ForStmt => {
                let parts = self.ast.for_parts.get(&id).copied().unwrap_or_default();
                parts
                    .init
                    .or(parts.cond)
                    .or_else(|| parts.body.and_then(|b| self.first_node_of(b)))
            }
            AstNodeKind::TryStmt => self
                .ast
                .children(id)
                .first()
                .and_then(|&b| self.first_node_of(b)),
            _ => Some(id),
        }
    }
}

/// Build the CFG of one method. A method without a body yields the trivial
/// graph `entry -> exit` with `exit == entry`.
pub fn build_cfg(ast: &SubjectAst, unit: NodeId) -> Result<Cfg, GraphError> {
    let node = ast.get(unit).map_err(|_| GraphError::UnknownUnit(unit))?;
    if node.kind != AstNodeKind::MethodDecl {
        return Err(GraphError::NotAMethod(unit));
    }
    let mut b = Builder {
        ast,
        succ: BTreeMap::new(),
        stmts: BTreeSet::new(),
        returns: Vec::new(),
    };
    let Some(body) = ast.method_body(unit) else {
        return Ok(Cfg {
            entry: unit,
            exit: unit,
            statement_nodes: Vec::new(),
            successors: BTreeMap::new(),
            diagnostics: Vec::new(),
        });
    };
    let entry = unit;
    let exit = body;
    let outs = b.build_seq(body, vec![entry]);
    b.connect(&outs, exit);
    let returns = std::mem::take(&mut b.returns);
    for r in returns {
        b.connect(&[r], exit);
    }

    let mut diagnostics = Vec::new();
    let mut succ = b.succ;
    let stmts = b.stmts;

    // Entry must reach every statement node.
    let mut reached: BTreeSet<NodeId> = BTreeSet::new();
    let mut stack = vec![entry];
    while let Some(n) = stack.pop() {
        if !reached.insert(n) {
            continue;
        }
        if let Some(succs) = succ.get(&n) {
            for &t in succs {
                stack.push(t);
            }
        }
    }
    for &s in &stmts {
        if !reached.contains(&s) {
            diagnostics.push(format!(
                "unreachable statement at line {}",
                ast.node(s).line
            ));
        }
    }

    // Every statement node must reach exit; attach strays directly.
    let mut reaches_exit: BTreeSet<NodeId> = BTreeSet::new();
    let mut preds: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
    for (&s, succs) in &succ {
        for &t in succs {
            preds.entry(t).or_default().push(s);
        }
    }
    let mut stack = vec![exit];
    while let Some(n) = stack.pop() {
        if !reaches_exit.insert(n) {
            continue;
        }
        if let Some(ps) = preds.get(&n) {
            for &p in ps {
                stack.push(p);
            }
        }
    }
    for &s in &stmts {
        if !reaches_exit.contains(&s) {
            diagnostics.push(format!(
                "statement at line {} cannot reach exit; attached",
                ast.node(s).line
            ));
            succ.entry(s).or_default().push(exit);
        }
    }

    Ok(Cfg {
        entry,
        exit,
        statement_nodes: stmts.into_iter().collect(),
        successors: succ,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::LISTING1;
    use super::*;
    use crate::subject::parse_subject;

    fn cfg_for(text: &str) -> (SubjectAst, Cfg) {
        let ast = parse_subject(text, "test.java");
        let unit = ast.methods[0];
        let cfg = build_cfg(&ast, unit).unwrap();
        (ast, cfg)
    }

    fn node_by_code(ast: &SubjectAst, kind: AstNodeKind, code: &str) -> NodeId {
        ast.nodes
            .iter()
            .find(|n| n.kind == kind && n.code == code)
            .map(|n| n.id)
            .unwrap_or_else(|| panic!("no {kind:?} {code:?}"))
    }

    #[test]
    fn listing1_cfg_matches_the_hand_drawn_graph() {
        let (ast, cfg) = cfg_for(LISTING1);
        let decl_a = node_by_code(&ast, AstNodeKind::LocalDecl, "int a = 0;");
        let cond = node_by_code(&ast, AstNodeKind::Condition, "a < MIN");
        let decl_b = node_by_code(&ast, AstNodeKind::LocalDecl, "int b = a*MIN;");

        assert_eq!(cfg.successors_of(cfg.entry), &[decl_a]);
        assert_eq!(cfg.successors_of(decl_a), &[cond]);
        let cond_succ: BTreeSet<NodeId> = cfg.successors_of(cond).iter().copied().collect();
        assert_eq!(cond_succ, BTreeSet::from([decl_b, cfg.exit]));
        assert_eq!(cfg.successors_of(cond).len(), 2);
        assert_eq!(cfg.successors_of(decl_b), &[cfg.exit]);
        assert!(cfg.diagnostics.is_empty());
    }

    #[test]
    fn straight_line_methods_form_a_path() {
        let (ast, cfg) = cfg_for("void f() { a(); b(); c(); }");
        let mut cur = cfg.entry;
        let mut seen = vec![];
        while cur != cfg.exit {
            let succs = cfg.successors_of(cur);
            assert_eq!(succs.len(), 1);
            cur = succs[0];
            seen.push(cur);
        }
        assert_eq!(seen.len(), 4); // three statements plus exit
        let _ = ast;
    }

    #[test]
    fn while_loop_has_textbook_shape() {
        let (ast, cfg) = cfg_for("void f() { while (c) { b(); } }");
        let cond = node_by_code(&ast, AstNodeKind::Condition, "c");
        let body = node_by_code(&ast, AstNodeKind::ExprStmt, "b();");
        let cond_succ: BTreeSet<NodeId> = cfg.successors_of(cond).iter().copied().collect();
        assert_eq!(cond_succ, BTreeSet::from([body, cfg.exit]));
        assert_eq!(cfg.successors_of(body), &[cond]);
    }

    #[test]
    fn conditions_always_have_two_successors() {
        let sources = [
            "void f() { if (c) { a(); } b(); }",
            "void f() { if (c) { a(); } else { b(); } }",
            "void f() { while (c) { } }",
            "void f() { for (int i = 0; i < n; ++i) { a(); } }",
            "void f() { if (c) { } b(); }",
        ];
        for src in sources {
            let (ast, cfg) = cfg_for(src);
            for node in &ast.nodes {
                if node.kind == AstNodeKind::Condition {
                    assert_eq!(
                        cfg.successors_of(node.id).len(),
                        2,
                        "condition successors in {src}"
                    );
                }
            }
        }
    }

    #[test]
    fn every_statement_has_a_successor() {
        let (_, cfg) = cfg_for(
            "void f(int n) { for (int i = 0; i < n; ++i) { if (i > 2) { return; } p(i); } q(); }",
        );
        for &s in &cfg.statement_nodes {
            assert!(
                !cfg.successors_of(s).is_empty(),
                "statement {s} has no successor"
            );
        }
        assert!(cfg.successors_of(cfg.exit).is_empty());
    }

    #[test]
    fn for_header_order_is_init_cond_body_update() {
        let (ast, cfg) = cfg_for("void f(int n) { for (int i = 0; i < n; ++i) { a(); } }");
        let init = node_by_code(&ast, AstNodeKind::LocalDecl, "int i = 0");
        let cond = node_by_code(&ast, AstNodeKind::Condition, "i < n");
        let body = node_by_code(&ast, AstNodeKind::ExprStmt, "a();");
        let update = node_by_code(&ast, AstNodeKind::Operator, "++i");
        assert_eq!(cfg.successors_of(cfg.entry), &[init]);
        assert_eq!(cfg.successors_of(init), &[cond]);
        assert!(cfg.successors_of(cond).contains(&body));
        assert_eq!(cfg.successors_of(body), &[update]);
        assert_eq!(cfg.successors_of(update), &[cond]);
    }

    #[test]
    fn try_body_statements_all_flow_to_catch_head() {
        let (ast, cfg) = cfg_for("void f() { try { a(); b(); } catch (E e) { h(); } done(); }");
        let catch = ast
            .nodes
            .iter()
            .find(|n| n.kind == AstNodeKind::CatchClause)
            .unwrap()
            .id;
        let a = node_by_code(&ast, AstNodeKind::ExprStmt, "a();");
        let b = node_by_code(&ast, AstNodeKind::ExprStmt, "b();");
        assert!(cfg.successors_of(a).contains(&catch));
        assert!(cfg.successors_of(b).contains(&catch));
        let done = node_by_code(&ast, AstNodeKind::ExprStmt, "done();");
        let h = node_by_code(&ast, AstNodeKind::ExprStmt, "h();");
        assert!(cfg.successors_of(b).contains(&done));
        assert!(cfg.successors_of(h).contains(&done));
    }

    #[test]
    fn unreachable_code_is_diagnosed() {
        let (_, cfg) = cfg_for("void f() { return; x(); }");
        assert!(cfg.diagnostics.iter().any(|d| d.contains("unreachable")));
    }

    #[test]
    fn empty_while_body_self_loops() {
        let (ast, cfg) = cfg_for("void f() { while (c) { } }");
        let cond = node_by_code(&ast, AstNodeKind::Condition, "c");
        assert!(cfg.successors_of(cond).contains(&cond));
    }
}
