//! Parser for the subject language: a C/Java-like subset with methods,
//! structured statements, and expressions. Every node carries a byte span
//! into the original source and a 1-based start line. Syntax errors inside
//! bodies are recovered by skipping to the next `;` or balanced `}`, so
//! intentionally degenerate code (e.g. a for-header whose init clause was
//! deleted) still parses.

mod lexer;
mod parser;

pub use parser::parse_subject;

use crate::dsl::BlockKind;
use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;

/// Index of a node within its [`SubjectAst`]. Ids are assigned in a
/// depth-first preorder over the final tree, so a parent's id is always
/// smaller than its children's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize,
)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AstNodeKind {
    File,
    TypeDecl,
    MethodDecl,
    Param,
    Block,
    IfStmt,
    ElseClause,
    WhileStmt,
    ForStmt,
    TryStmt,
    CatchClause,
    ReturnStmt,
    LocalDecl,
    Assignment,
    ExprStmt,
    Call,
    FieldAccess,
    Identifier,
    Literal,
    Operator,
    TypeName,
    Condition,
}

/// Operator classification used by the simple-assignment check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperatorClass {
    Arithmetic,
    Bitwise,
    Logical,
    Relational,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubjectAstNode {
    pub id: NodeId,
    pub kind: AstNodeKind,
    /// Verbatim source slice covered by `span`.
    pub code: String,
    /// Half-open byte range into the original source.
    pub span: (usize, usize),
    /// 1-based line of the span start.
    pub line: u32,
    pub children: Vec<NodeId>,
    pub parent: Option<NodeId>,
    /// Set on OPERATOR nodes and on recovery leaves (always `Other` there).
    pub operator_class: Option<OperatorClass>,
}

impl SubjectAstNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// A childless node that carries a source token. Structural nodes can
    /// be childless too (an empty block, an empty file); those are not
    /// part of the token sequence.
    pub fn is_token_leaf(&self) -> bool {
        self.children.is_empty()
            && matches!(
                self.kind,
                AstNodeKind::Identifier
                    | AstNodeKind::Literal
                    | AstNodeKind::Operator
                    | AstNodeKind::TypeName
            )
    }
}

/// Clause structure of a `for` header; recorded at parse time because the
/// children list alone cannot distinguish an init clause from an update
/// clause once the condition is absent.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ForParts {
    pub init: Option<NodeId>,
    pub cond: Option<NodeId>,
    pub update: Option<NodeId>,
    pub body: Option<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubjectAst {
    pub file_path: PathBuf,
    pub root: NodeId,
    pub nodes: Vec<SubjectAstNode>,
    /// All METHOD_DECL ids in preorder, including synthetic wrappers for
    /// loose file-scope statements.
    pub methods: Vec<NodeId>,
    pub for_parts: std::collections::BTreeMap<NodeId, ForParts>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubjectError {
    #[error("unknown node id {0}")]
    UnknownNode(NodeId),
    #[error("node {0} is not a method declaration")]
    NotAMethod(NodeId),
}

impl SubjectAst {
    pub fn node(&self, id: NodeId) -> &SubjectAstNode {
        &self.nodes[id.index()]
    }

    pub fn get(&self, id: NodeId) -> Result<&SubjectAstNode, SubjectError> {
        self.nodes
            .get(id.index())
            .ok_or(SubjectError::UnknownNode(id))
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.node(id).children
    }

    /// Preorder traversal of the subtree rooted at `id`.
    pub fn subtree(&self, id: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(n) = stack.pop() {
            out.push(n);
            for &c in self.children(n).iter().rev() {
                stack.push(c);
            }
        }
        out
    }

    /// Leaves of a method's subtree ordered by span start.
    pub fn leaves_in_order(&self, method: NodeId) -> Result<Vec<NodeId>, SubjectError> {
        let node = self.get(method)?;
        if node.kind != AstNodeKind::MethodDecl {
            return Err(SubjectError::NotAMethod(method));
        }
        let mut leaves: Vec<NodeId> = self
            .subtree(method)
            .into_iter()
            .filter(|&n| self.node(n).is_token_leaf())
            .collect();
        leaves.sort_by_key(|&n| self.node(n).span.0);
        Ok(leaves)
    }

    /// Block kinds of all ancestors of `id`. An IF_STMT contributes `if`
    /// only when `id` sits in its then-branch; the else-branch is reported
    /// as `else` via the ELSE_CLAUSE ancestor.
    pub fn enclosing_blocks(&self, id: NodeId) -> Result<BTreeSet<BlockKind>, SubjectError> {
        self.get(id)?;
        let mut out = BTreeSet::new();
        let mut prev = id;
        let mut cur = self.node(id).parent;
        while let Some(p) = cur {
            let pn = self.node(p);
            match pn.kind {
                AstNodeKind::IfStmt => {
                    if self.then_branch(p) == Some(prev) {
                        out.insert(BlockKind::If);
                    }
                }
                AstNodeKind::ElseClause => {
                    out.insert(BlockKind::Else);
                }
                AstNodeKind::WhileStmt => {
                    out.insert(BlockKind::While);
                }
                AstNodeKind::ForStmt => {
                    out.insert(BlockKind::For);
                }
                AstNodeKind::CatchClause => {
                    out.insert(BlockKind::Catch);
                }
                _ => {}
            }
            prev = p;
            cur = pn.parent;
        }
        Ok(out)
    }

    /// The statement executed when an if-condition holds: the child right
    /// after the CONDITION node, unless it is the ELSE_CLAUSE.
    pub fn then_branch(&self, if_stmt: NodeId) -> Option<NodeId> {
        let children = self.children(if_stmt);
        let cond_pos = children
            .iter()
            .position(|&c| self.node(c).kind == AstNodeKind::Condition)?;
        children
            .get(cond_pos + 1)
            .copied()
            .filter(|&c| self.node(c).kind != AstNodeKind::ElseClause)
    }

    pub fn else_clause(&self, if_stmt: NodeId) -> Option<NodeId> {
        self.children(if_stmt)
            .iter()
            .copied()
            .find(|&c| self.node(c).kind == AstNodeKind::ElseClause)
    }

    pub fn condition_of(&self, stmt: NodeId) -> Option<NodeId> {
        self.children(stmt)
            .iter()
            .copied()
            .find(|&c| self.node(c).kind == AstNodeKind::Condition)
    }

    /// Name of a method or type declaration; synthetic wrappers have none.
    pub fn decl_name(&self, id: NodeId) -> Option<&str> {
        self.children(id)
            .iter()
            .copied()
            .find(|&c| self.node(c).kind == AstNodeKind::Identifier)
            .map(|c| self.node(c).code.as_str())
    }

    /// Body block of a method, when it has one.
    pub fn method_body(&self, method: NodeId) -> Option<NodeId> {
        self.children(method)
            .iter()
            .copied()
            .find(|&c| self.node(c).kind == AstNodeKind::Block)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const LISTING1: &str =
        "void foo(int x) {\n\tint a = 0;\n\tif (a < MIN) {\n\t   int b = a*MIN;\n\t}\n}\n";

    fn parse(text: &str) -> SubjectAst {
        parse_subject(text, "test.java")
    }

    fn find_by_code(ast: &SubjectAst, kind: AstNodeKind, code: &str) -> NodeId {
        ast.nodes
            .iter()
            .find(|n| n.kind == kind && n.code == code)
            .map(|n| n.id)
            .unwrap_or_else(|| panic!("no {kind:?} node with code {code:?}"))
    }

    #[test]
    fn listing1_has_the_expected_shape() {
        let ast = parse(LISTING1);
        assert_eq!(ast.methods.len(), 1);
        let kinds: Vec<AstNodeKind> = ast.nodes.iter().map(|n| n.kind).collect();
        assert_eq!(
            kinds
                .iter()
                .filter(|&&k| k == AstNodeKind::MethodDecl)
                .count(),
            1
        );
        assert_eq!(
            kinds.iter().filter(|&&k| k == AstNodeKind::IfStmt).count(),
            1
        );
        assert_eq!(
            kinds
                .iter()
                .filter(|&&k| k == AstNodeKind::Condition)
                .count(),
            1
        );
        // Both initialized declarations carry an ASSIGNMENT child.
        let decls: Vec<_> = ast
            .nodes
            .iter()
            .filter(|n| n.kind == AstNodeKind::LocalDecl)
            .collect();
        assert_eq!(decls.len(), 2);
        for d in &decls {
            assert!(d
                .children
                .iter()
                .any(|&c| ast.node(c).kind == AstNodeKind::Assignment));
        }
    }

    #[test]
    fn empty_file_yields_bare_root() {
        let ast = parse("");
        assert_eq!(ast.node(ast.root).kind, AstNodeKind::File);
        assert!(ast.children(ast.root).is_empty());
        assert!(ast.methods.is_empty());
        assert!(!ast.warnings.is_empty());
    }

    #[test]
    fn file_scope_statement_is_wrapped_in_a_synthetic_method() {
        let ast = parse("int i = 1+1;");
        assert_eq!(ast.methods.len(), 1);
        let assign = ast
            .nodes
            .iter()
            .find(|n| n.kind == AstNodeKind::Assignment)
            .unwrap();
        // Right subtree: one internal OPERATOR (add) over two LITERAL leaves.
        let rhs = *assign.children.last().unwrap();
        let rhs_node = ast.node(rhs);
        assert_eq!(rhs_node.kind, AstNodeKind::Operator);
        assert_eq!(rhs_node.operator_class, Some(OperatorClass::Arithmetic));
        let literal_leaves = ast
            .subtree(rhs)
            .into_iter()
            .filter(|&n| ast.node(n).is_leaf() && ast.node(n).kind == AstNodeKind::Literal)
            .count();
        assert_eq!(literal_leaves, 2);
    }

    #[test]
    fn leaves_of_the_six_token_statement() {
        let ast = parse("int i = 1+1;");
        let leaves = ast.leaves_in_order(ast.methods[0]).unwrap();
        let seq: Vec<(AstNodeKind, &str)> = leaves
            .iter()
            .map(|&n| (ast.node(n).kind, ast.node(n).code.as_str()))
            .collect();
        assert_eq!(
            seq,
            vec![
                (AstNodeKind::TypeName, "int"),
                (AstNodeKind::Identifier, "i"),
                (AstNodeKind::Operator, "="),
                (AstNodeKind::Literal, "1"),
                (AstNodeKind::Operator, "+"),
                (AstNodeKind::Literal, "1"),
            ]
        );
    }

    #[test]
    fn leaves_of_empty_body_method_are_its_signature_tokens() {
        let ast = parse("void noop(int x) { }");
        let leaves = ast.leaves_in_order(ast.methods[0]).unwrap();
        let codes: Vec<&str> = leaves.iter().map(|&n| ast.node(n).code.as_str()).collect();
        assert_eq!(codes, vec!["void", "noop", "int", "x"]);
    }

    #[test]
    fn leaves_are_sorted_and_duplicate_free() {
        let ast = parse(LISTING1);
        let leaves = ast.leaves_in_order(ast.methods[0]).unwrap();
        let starts: Vec<usize> = leaves.iter().map(|&n| ast.node(n).span.0).collect();
        let mut sorted = starts.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(starts, sorted);
    }

    #[test]
    fn enclosing_blocks_for_listing1() {
        let ast = parse(LISTING1);
        let b_decl = find_by_code(&ast, AstNodeKind::LocalDecl, "int b = a*MIN;");
        assert_eq!(
            ast.enclosing_blocks(b_decl).unwrap(),
            BTreeSet::from([BlockKind::If])
        );
        let a_decl = find_by_code(&ast, AstNodeKind::LocalDecl, "int a = 0;");
        assert!(ast.enclosing_blocks(a_decl).unwrap().is_empty());
    }

    #[test]
    fn enclosing_blocks_for_nested_while_if() {
        let ast = parse("void f() { while (c) { if (d) { x = 1; } } }");
        let assign = find_by_code(&ast, AstNodeKind::ExprStmt, "x = 1;");
        assert_eq!(
            ast.enclosing_blocks(assign).unwrap(),
            BTreeSet::from([BlockKind::While, BlockKind::If])
        );
    }

    #[test]
    fn else_branch_reports_else_not_if() {
        let ast = parse("void f() { if (c) { x = 1; } else { y = 2; } }");
        let in_else = find_by_code(&ast, AstNodeKind::ExprStmt, "y = 2;");
        assert_eq!(
            ast.enclosing_blocks(in_else).unwrap(),
            BTreeSet::from([BlockKind::Else])
        );
        let in_then = find_by_code(&ast, AstNodeKind::ExprStmt, "x = 1;");
        assert_eq!(
            ast.enclosing_blocks(in_then).unwrap(),
            BTreeSet::from([BlockKind::If])
        );
    }

    #[test]
    fn spans_are_contained_and_ordered() {
        let ast = parse(LISTING1);
        for node in &ast.nodes {
            let mut prev_end = node.span.0;
            for &c in &node.children {
                let cs = ast.node(c).span;
                assert!(cs.0 >= prev_end, "children overlap in {:?}", node.kind);
                assert!(cs.1 <= node.span.1, "child escapes parent {:?}", node.kind);
                prev_end = cs.1;
            }
        }
    }

    #[test]
    fn parsing_is_deterministic() {
        let a = parse(LISTING1);
        let b = parse(LISTING1);
        assert_eq!(a, b);
    }

    #[test]
    fn leaf_kinds_are_restricted() {
        let ast = parse(LISTING1);
        for node in &ast.nodes {
            if node.is_leaf() {
                assert!(
                    node.is_token_leaf()
                        || matches!(
                            node.kind,
                            AstNodeKind::File | AstNodeKind::Block | AstNodeKind::ElseClause
                        ),
                    "unexpected leaf kind {:?} ({:?})",
                    node.kind,
                    node.code
                );
            }
        }
    }

    #[test]
    fn leaf_slices_reproduce_the_input() {
        let src = LISTING1;
        let ast = parse(src);
        let mut leaves: Vec<&SubjectAstNode> =
            ast.nodes.iter().filter(|n| n.is_token_leaf()).collect();
        leaves.sort_by_key(|n| n.span.0);
        let mut rebuilt = String::new();
        let mut pos = 0;
        for leaf in leaves {
            assert_eq!(leaf.code, &src[leaf.span.0..leaf.span.1]);
            rebuilt.push_str(&src[pos..leaf.span.0]);
            rebuilt.push_str(&leaf.code);
            pos = leaf.span.1;
        }
        rebuilt.push_str(&src[pos..]);
        assert_eq!(rebuilt, src);
    }
}
