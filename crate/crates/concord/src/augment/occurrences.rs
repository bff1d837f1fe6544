//! Variable occurrence tracking. An occurrence is one lexical appearance
//! of a variable name, classified by position: the left-hand side of an
//! assignment is a write, everything else is a read. Member names and
//! simple callee names are not variable occurrences.

use crate::graphs::Cfg;
use crate::subject::{AstNodeKind, NodeId, SubjectAst};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Access {
    Read,
    Write,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    /// The IDENTIFIER leaf.
    pub node: NodeId,
    pub access: Access,
    /// The innermost enclosing CFG statement node (entry for occurrences
    /// outside any statement, e.g. parameters).
    pub stmt: NodeId,
}

/// Per-variable occurrence lists in source order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OccurrenceTable {
    pub vars: BTreeMap<String, Vec<Occurrence>>,
}

impl OccurrenceTable {
    /// Variable name of an occurrence node, if `id` is one.
    pub fn var_of(&self, id: NodeId) -> Option<&str> {
        self.vars
            .iter()
            .find(|(_, occs)| occs.iter().any(|o| o.node == id))
            .map(|(name, _)| name.as_str())
    }

    /// Lookup map from occurrence node id to variable name.
    pub fn node_index(&self) -> BTreeMap<NodeId, &str> {
        let mut map = BTreeMap::new();
        for (name, occs) in &self.vars {
            for o in occs {
                map.insert(o.node, name.as_str());
            }
        }
        map
    }

    /// `(variable, occurrences)` grouped by statement.
    pub fn by_statement(&self) -> BTreeMap<NodeId, BTreeMap<&str, Vec<Occurrence>>> {
        let mut map: BTreeMap<NodeId, BTreeMap<&str, Vec<Occurrence>>> = BTreeMap::new();
        for (name, occs) in &self.vars {
            for o in occs {
                map.entry(o.stmt)
                    .or_default()
                    .entry(name.as_str())
                    .or_default()
                    .push(*o);
            }
        }
        map
    }
}

/// Whether an IDENTIFIER leaf stands for a variable.
pub(crate) fn is_variable_occurrence(ast: &SubjectAst, id: NodeId) -> bool {
    let node = ast.node(id);
    if node.kind != AstNodeKind::Identifier {
        return false;
    }
    let Some(parent_id) = node.parent else {
        return false;
    };
    let parent = ast.node(parent_id);
    let child_pos = parent.children.iter().position(|&c| c == id);
    match parent.kind {
        // `a.b`: the member name `b` is not a variable; the receiver is.
        AstNodeKind::FieldAccess => child_pos != Some(1),
        // `f(x)`: the simple callee `f` is not a variable.
        AstNodeKind::Call => child_pos != Some(0),
        // Declared names of methods and types.
        AstNodeKind::MethodDecl | AstNodeKind::TypeDecl => false,
        _ => true,
    }
}

pub(crate) fn access_of(ast: &SubjectAst, id: NodeId) -> Access {
    let node = ast.node(id);
    if let Some(parent_id) = node.parent {
        let parent = ast.node(parent_id);
        if parent.kind == AstNodeKind::Assignment && parent.children.first() == Some(&id) {
            return Access::Write;
        }
    }
    Access::Read
}

/// Collect the occurrence table of one method, attributing each occurrence
/// to its innermost enclosing CFG statement node.
pub fn build_occurrences(ast: &SubjectAst, unit: NodeId, cfg: &Cfg) -> OccurrenceTable {
    let is_stmt: std::collections::BTreeSet<NodeId> = cfg.statement_nodes.iter().copied().collect();
    let mut vars: BTreeMap<String, Vec<Occurrence>> = BTreeMap::new();

    fn walk(
        ast: &SubjectAst,
        id: NodeId,
        stmt: NodeId,
        is_stmt: &std::collections::BTreeSet<NodeId>,
        vars: &mut BTreeMap<String, Vec<Occurrence>>,
    ) {
        let cur = if is_stmt.contains(&id) { id } else { stmt };
        let node = ast.node(id);
        if node.kind == AstNodeKind::Identifier && is_variable_occurrence(ast, id) {
            vars.entry(node.code.clone()).or_default().push(Occurrence {
                node: id,
                access: access_of(ast, id),
                stmt: cur,
            });
        }
        for &c in &node.children {
            walk(ast, c, cur, is_stmt, vars);
        }
    }

    walk(ast, unit, cfg.entry, &is_stmt, &mut vars);
    // Preorder already visits leaves in source order for span-ordered
    // children; keep the order but make it explicit.
    for occs in vars.values_mut() {
        occs.sort_by_key(|o| ast.node(o.node).span.0);
    }
    OccurrenceTable { vars }
}
