//! Base graph representations over a parsed method: the AST graph, a
//! statement-level control flow graph, and program-dependence edges, plus
//! merging of selected bases into one [`CodeGraph`] per code unit.
//!
//! CFG and PDG construction reuse AST node ids, so merging bases is a pure
//! edge union with no node-alignment step.

mod cfg;
mod pdg;

pub use cfg::{build_cfg, Cfg};
pub use pdg::build_pdg;

use crate::dsl::BaseGraphKind;
use crate::subject::{AstNodeKind, NodeId, SubjectAst};
use std::collections::{BTreeMap, BTreeSet};

/// Labels a [`CodeGraph`] edge. Base labels (`AST`, `CFG`, `PDG_*`) come
/// only from base-graph builders; the rest only from edge augmentation.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize,
)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EdgeLabel {
    Ast,
    Cfg,
    PdgData,
    PdgCtrl,
    NextToken,
    NextSibling,
    LastRead,
    LastWrite,
    LastLexicalUse,
    ComputedFrom,
    ReturnsTo,
    GuardedBy,
    GuardedByNegation,
    WhileExec,
    WhileNext,
    ForExec,
    ForNext,
}

impl EdgeLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeLabel::Ast => "AST",
            EdgeLabel::Cfg => "CFG",
            EdgeLabel::PdgData => "PDG_DATA",
            EdgeLabel::PdgCtrl => "PDG_CTRL",
            EdgeLabel::NextToken => "NEXT_TOKEN",
            EdgeLabel::NextSibling => "NEXT_SIBLING",
            EdgeLabel::LastRead => "LAST_READ",
            EdgeLabel::LastWrite => "LAST_WRITE",
            EdgeLabel::LastLexicalUse => "LAST_LEXICAL_USE",
            EdgeLabel::ComputedFrom => "COMPUTED_FROM",
            EdgeLabel::ReturnsTo => "RETURNS_TO",
            EdgeLabel::GuardedBy => "GUARDED_BY",
            EdgeLabel::GuardedByNegation => "GUARDED_BY_NEGATION",
            EdgeLabel::WhileExec => "WHILE_EXEC",
            EdgeLabel::WhileNext => "WHILE_NEXT",
            EdgeLabel::ForExec => "FOR_EXEC",
            EdgeLabel::ForNext => "FOR_NEXT",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphNode {
    pub id: NodeId,
    pub kind: AstNodeKind,
    pub code: String,
    pub line: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphEdge {
    pub source: NodeId,
    pub target: NodeId,
    pub label: EdgeLabel,
}

/// A directed labeled multigraph over typed nodes; the unit of output.
/// Parallel edges are allowed only with distinct labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeGraph {
    /// Method or class identifier this graph represents.
    pub unit: String,
    /// Root node (the METHOD_DECL, or the synthetic TYPE_DECL after a
    /// class merge). Not serialized.
    pub root: NodeId,
    /// Base representations this graph was built from. Not serialized.
    pub bases: BTreeSet<BaseGraphKind>,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

impl CodeGraph {
    pub fn node_ids(&self) -> BTreeSet<NodeId> {
        self.nodes.iter().map(|n| n.id).collect()
    }

    pub fn has_node(&self, id: NodeId) -> bool {
        self.nodes.iter().any(|n| n.id == id)
    }

    /// Ordered children per parent, reconstructed from AST-labeled edges.
    pub fn ast_children(&self) -> BTreeMap<NodeId, Vec<NodeId>> {
        let mut map: BTreeMap<NodeId, Vec<NodeId>> = BTreeMap::new();
        for e in &self.edges {
            if e.label == EdgeLabel::Ast {
                map.entry(e.source).or_default().push(e.target);
            }
        }
        map
    }

    /// Preorder ids of the AST subtree rooted at `id` (per AST edges).
    pub fn ast_subtree(&self, id: NodeId, children: &BTreeMap<NodeId, Vec<NodeId>>) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(n) = stack.pop() {
            out.push(n);
            if let Some(cs) = children.get(&n) {
                for &c in cs.iter().rev() {
                    stack.push(c);
                }
            }
        }
        out
    }

    /// Drop duplicate `(source, target, label)` triples, keeping first
    /// occurrences in order.
    pub fn dedupe_edges(&mut self) {
        let mut seen = BTreeSet::new();
        self.edges.retain(|e| seen.insert(*e));
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GraphError {
    #[error("unknown unit node {0}")]
    UnknownUnit(NodeId),
    #[error("node {0} is not a method declaration")]
    NotAMethod(NodeId),
    #[error("empty base selection")]
    EmptySelection,
    #[error("merge_class requires at least one method graph")]
    NoMethodGraphs,
}

fn graph_node(ast: &SubjectAst, id: NodeId) -> GraphNode {
    let n = ast.node(id);
    GraphNode {
        id,
        kind: n.kind,
        code: n.code.clone(),
        line: n.line,
    }
}

fn unit_name(ast: &SubjectAst, unit: NodeId) -> String {
    ast.decl_name(unit).unwrap_or("_toplevel").to_string()
}

/// One graph node per AST node in the unit's subtree, one `AST` edge per
/// parent/child pair in child order. The result is always a tree.
pub fn build_ast_graph(ast: &SubjectAst, unit: NodeId) -> Result<CodeGraph, GraphError> {
    let node = ast.get(unit).map_err(|_| GraphError::UnknownUnit(unit))?;
    if node.kind != AstNodeKind::MethodDecl {
        return Err(GraphError::NotAMethod(unit));
    }
    let ids = ast.subtree(unit);
    let mut nodes = Vec::with_capacity(ids.len());
    let mut edges = Vec::new();
    for &id in &ids {
        nodes.push(graph_node(ast, id));
        for &c in ast.children(id) {
            edges.push(GraphEdge {
                source: id,
                target: c,
                label: EdgeLabel::Ast,
            });
        }
    }
    Ok(CodeGraph {
        unit: unit_name(ast, unit),
        root: unit,
        bases: BTreeSet::from([BaseGraphKind::Ast]),
        nodes,
        edges,
    })
}

/// CFG successor relation flattened into deduplicated `CFG` edges.
pub fn cfg_edges(cfg: &Cfg) -> Vec<GraphEdge> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (&s, succs) in &cfg.successors {
        for &t in succs {
            if seen.insert((s, t)) {
                out.push(GraphEdge {
                    source: s,
                    target: t,
                    label: EdgeLabel::Cfg,
                });
            }
        }
    }
    out
}

/// Merge the selected bases into a single graph.
///
/// With AST selected the node set is the unit's whole subtree; otherwise
/// it is the statement/predicate nodes referenced by the selected edges
/// plus CFG entry and exit. Edges are the union over shared AST node ids.
pub fn merge_bases(
    ast: &SubjectAst,
    unit: NodeId,
    ast_graph: Option<&CodeGraph>,
    cfg: Option<&Cfg>,
    pdg_edges: Option<&[GraphEdge]>,
    selection: &BTreeSet<BaseGraphKind>,
) -> Result<CodeGraph, GraphError> {
    if selection.is_empty() {
        return Err(GraphError::EmptySelection);
    }
    let mut edges: Vec<GraphEdge> = Vec::new();
    if selection.contains(&BaseGraphKind::Ast) {
        let g = ast_graph.expect("AST selected but AST graph not built");
        edges.extend(g.edges.iter().copied());
    }
    if selection.contains(&BaseGraphKind::Cfg) {
        let cfg = cfg.expect("CFG selected but CFG not built");
        edges.extend(cfg_edges(cfg));
    }
    if selection.contains(&BaseGraphKind::Pdg) {
        let pdg = pdg_edges.expect("PDG selected but PDG edges not built");
        edges.extend(pdg.iter().copied());
    }

    let nodes: Vec<GraphNode> = if selection.contains(&BaseGraphKind::Ast) {
        ast_graph.unwrap().nodes.clone()
    } else {
        let mut ids: BTreeSet<NodeId> = BTreeSet::new();
        for e in &edges {
            ids.insert(e.source);
            ids.insert(e.target);
        }
        if let Some(cfg) = cfg {
            ids.insert(cfg.entry);
            ids.insert(cfg.exit);
        }
        ids.into_iter().map(|id| graph_node(ast, id)).collect()
    };

    let mut graph = CodeGraph {
        unit: unit_name(ast, unit),
        root: unit,
        bases: selection.clone(),
        nodes,
        edges,
    };
    graph.dedupe_edges();
    Ok(graph)
}

/// Disjoint union of method graphs with ids renumbered, plus one synthetic
/// TYPE_DECL node with an AST edge to each method's root.
pub fn merge_class(method_graphs: &[CodeGraph], class_name: &str) -> Result<CodeGraph, GraphError> {
    if method_graphs.is_empty() {
        return Err(GraphError::NoMethodGraphs);
    }
    let line = method_graphs
        .iter()
        .filter_map(|g| g.nodes.iter().find(|n| n.id == g.root).map(|n| n.line))
        .min()
        .unwrap_or(1);
    let mut nodes = vec![GraphNode {
        id: NodeId(0),
        kind: AstNodeKind::TypeDecl,
        code: class_name.to_string(),
        line,
    }];
    let mut edges = Vec::new();
    let mut bases = BTreeSet::new();
    let mut next = 1u32;
    for g in method_graphs {
        bases.extend(g.bases.iter().copied());
        let mut remap: BTreeMap<NodeId, NodeId> = BTreeMap::new();
        for n in &g.nodes {
            let new_id = NodeId(next);
            next += 1;
            remap.insert(n.id, new_id);
            nodes.push(GraphNode {
                id: new_id,
                kind: n.kind,
                code: n.code.clone(),
                line: n.line,
            });
        }
        edges.push(GraphEdge {
            source: NodeId(0),
            target: remap[&g.root],
            label: EdgeLabel::Ast,
        });
        for e in &g.edges {
            edges.push(GraphEdge {
                source: remap[&e.source],
                target: remap[&e.target],
                label: e.label,
            });
        }
    }
    Ok(CodeGraph {
        unit: class_name.to_string(),
        root: NodeId(0),
        bases,
        nodes,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subject::parse_subject;

    pub(crate) const LISTING1: &str =
        "void foo(int x) {\n\tint a = 0;\n\tif (a < MIN) {\n\t   int b = a*MIN;\n\t}\n}\n";

    fn parse(text: &str) -> SubjectAst {
        parse_subject(text, "test.java")
    }

    #[test]
    fn ast_graph_is_a_tree() {
        let ast = parse(LISTING1);
        let g = build_ast_graph(&ast, ast.methods[0]).unwrap();
        assert_eq!(g.edges.len(), g.nodes.len() - 1);
        assert!(g.edges.iter().all(|e| e.label == EdgeLabel::Ast));
        // Single root: every node except the root has exactly one parent.
        let mut indegree: BTreeMap<NodeId, usize> = BTreeMap::new();
        for e in &g.edges {
            *indegree.entry(e.target).or_default() += 1;
        }
        assert!(!indegree.contains_key(&g.root));
        assert!(indegree.values().all(|&d| d == 1));
    }

    #[test]
    fn empty_body_method_is_still_a_tree() {
        let ast = parse("void noop() { }");
        let g = build_ast_graph(&ast, ast.methods[0]).unwrap();
        assert_eq!(g.edges.len(), g.nodes.len() - 1);
    }

    #[test]
    fn assignment_decomposition_has_expected_ast_edges() {
        let ast = parse("int i = 1+1;");
        let g = build_ast_graph(&ast, ast.methods[0]).unwrap();
        let assign = g
            .nodes
            .iter()
            .find(|n| n.kind == AstNodeKind::Assignment)
            .unwrap();
        let targets: Vec<AstNodeKind> = g
            .edges
            .iter()
            .filter(|e| e.source == assign.id)
            .map(|e| g.nodes.iter().find(|n| n.id == e.target).unwrap().kind)
            .collect();
        assert_eq!(
            targets,
            vec![
                AstNodeKind::Identifier,
                AstNodeKind::Operator,
                AstNodeKind::Operator
            ]
        );
    }

    #[test]
    fn merge_with_ast_only_matches_ast_graph() {
        let ast = parse(LISTING1);
        let unit = ast.methods[0];
        let g = build_ast_graph(&ast, unit).unwrap();
        let sel = BTreeSet::from([BaseGraphKind::Ast]);
        let merged = merge_bases(&ast, unit, Some(&g), None, None, &sel).unwrap();
        assert_eq!(merged.nodes, g.nodes);
        assert_eq!(merged.edges, g.edges);
    }

    #[test]
    fn merge_ast_cfg_keeps_node_count() {
        let ast = parse(LISTING1);
        let unit = ast.methods[0];
        let g = build_ast_graph(&ast, unit).unwrap();
        let cfg = build_cfg(&ast, unit).unwrap();
        let sel = BTreeSet::from([BaseGraphKind::Ast, BaseGraphKind::Cfg]);
        let merged = merge_bases(&ast, unit, Some(&g), Some(&cfg), None, &sel).unwrap();
        assert_eq!(merged.nodes.len(), g.nodes.len());
        assert!(merged.edges.len() > g.edges.len());
    }

    #[test]
    fn merge_cfg_only_nodes_are_statements_and_entry_exit() {
        let ast = parse(LISTING1);
        let unit = ast.methods[0];
        let cfg = build_cfg(&ast, unit).unwrap();
        let sel = BTreeSet::from([BaseGraphKind::Cfg]);
        let merged = merge_bases(&ast, unit, None, Some(&cfg), None, &sel).unwrap();
        let mut expected: BTreeSet<NodeId> = cfg.statement_nodes.iter().copied().collect();
        expected.insert(cfg.entry);
        expected.insert(cfg.exit);
        assert_eq!(merged.node_ids(), expected);
    }

    #[test]
    fn removing_augment_labels_recovers_the_ast_graph() {
        let ast = parse(LISTING1);
        let unit = ast.methods[0];
        let g = build_ast_graph(&ast, unit).unwrap();
        let cfg = build_cfg(&ast, unit).unwrap();
        let occ = crate::augment::build_occurrences(&ast, unit, &cfg);
        let pdg = build_pdg(&ast, &cfg, &occ);
        let sel = BTreeSet::from([BaseGraphKind::Ast, BaseGraphKind::Cfg, BaseGraphKind::Pdg]);
        let merged = merge_bases(&ast, unit, Some(&g), Some(&cfg), Some(&pdg), &sel).unwrap();
        let only_ast: Vec<GraphEdge> = merged
            .edges
            .iter()
            .copied()
            .filter(|e| e.label == EdgeLabel::Ast)
            .collect();
        assert_eq!(only_ast, g.edges);
        assert_eq!(merged.nodes, g.nodes);
    }

    #[test]
    fn class_merge_counts_nodes_and_keeps_ids_unique() {
        let ast = parse("class C { int a() { return 1; } int b() { return 2; } }");
        let g1 = build_ast_graph(&ast, ast.methods[0]).unwrap();
        let g2 = build_ast_graph(&ast, ast.methods[1]).unwrap();
        let merged = merge_class(&[g1.clone(), g2.clone()], "C").unwrap();
        assert_eq!(merged.nodes.len(), g1.nodes.len() + g2.nodes.len() + 1);
        let ids = merged.node_ids();
        assert_eq!(ids.len(), merged.nodes.len(), "ids must be unique");
        assert_eq!(
            merged
                .edges
                .iter()
                .filter(|e| e.source == NodeId(0))
                .count(),
            2
        );
    }

    #[test]
    fn single_method_class_merge_adds_one_node_and_edge() {
        let ast = parse("class C { void only() { } }");
        let g = build_ast_graph(&ast, ast.methods[0]).unwrap();
        let merged = merge_class(std::slice::from_ref(&g), "C").unwrap();
        assert_eq!(merged.nodes.len(), g.nodes.len() + 1);
        assert_eq!(merged.edges.len(), g.edges.len() + 1);
    }

    #[test]
    fn empty_selection_is_an_error() {
        let ast = parse(LISTING1);
        let sel = BTreeSet::new();
        assert!(matches!(
            merge_bases(&ast, ast.methods[0], None, None, None, &sel),
            Err(GraphError::EmptySelection)
        ));
    }
}
