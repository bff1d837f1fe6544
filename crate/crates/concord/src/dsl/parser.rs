//! Recursive-descent parser with ordered alternatives and no backtracking
//! across rule boundaries.

use super::lexer::{lex, TokKind, Token};
use super::{
    BaseGraphKind, BlockKind, CodeCondition, ConcordModel, ConditionAction, EdgeKind, Loc,
    NodeKind, OpTarget, OpType, Operation, RepresentationSpec, SyntaxError, Task,
};
use std::collections::BTreeSet;

/// Parse configuration source into a model.
///
/// On failure the returned list carries at least one error with line,
/// column, and an expected-token hint. Validation findings are not part
/// of parsing; see [`super::validate_semantics`].
pub fn parse_config(text: &str) -> Result<ConcordModel, Vec<SyntaxError>> {
    let toks = lex(text).map_err(|e| vec![e])?;
    let mut p = Parser {
        src: text,
        toks,
        pos: 0,
    };
    p.parse_config().map_err(|e| vec![e])
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Token {
        self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos];
        if t.kind != TokKind::Eof {
            self.pos += 1;
        }
        t
    }

    fn text(&self, t: Token) -> &'a str {
        &self.src[t.start..t.end]
    }

    fn at_ident(&self, kw: &str) -> bool {
        let t = self.peek();
        t.kind == TokKind::Ident && self.text(t) == kw
    }

    fn err(&self, t: Token, message: String) -> SyntaxError {
        SyntaxError {
            line: t.line,
            col: t.col,
            message,
        }
    }

    fn describe(&self, t: Token) -> String {
        match t.kind {
            TokKind::Ident => format!("'{}'", self.text(t)),
            TokKind::Str => "string literal".into(),
            TokKind::LBrace => "'{'".into(),
            TokKind::RBrace => "'}'".into(),
            TokKind::Eof => "end of input".into(),
        }
    }

    fn expect_lbrace(&mut self, after: &str) -> Result<(), SyntaxError> {
        let t = self.peek();
        if t.kind == TokKind::LBrace {
            self.bump();
            Ok(())
        } else {
            Err(self.err(
                t,
                format!("expected '{{' after {after}, found {}", self.describe(t)),
            ))
        }
    }

    fn parse_config(&mut self) -> Result<ConcordModel, SyntaxError> {
        let mut model = ConcordModel::default();
        let mut saw_block = false;
        if self.at_ident("Tasks") {
            self.bump();
            self.expect_lbrace("Tasks")?;
            while !matches!(self.peek().kind, TokKind::RBrace | TokKind::Eof) {
                model.tasks.push(self.parse_task()?);
            }
            let t = self.peek();
            if t.kind != TokKind::RBrace {
                return Err(self.err(t, "expected '}' closing Tasks block".into()));
            }
            self.bump();
            saw_block = true;
        }
        if self.at_ident("Representations") {
            self.bump();
            self.expect_lbrace("Representations")?;
            while !matches!(self.peek().kind, TokKind::RBrace | TokKind::Eof) {
                model.representations.push(self.parse_representation()?);
            }
            let t = self.peek();
            if t.kind != TokKind::RBrace {
                return Err(self.err(t, "expected '}' closing Representations block".into()));
            }
            self.bump();
            saw_block = true;
        }
        let t = self.peek();
        if !saw_block {
            return Err(self.err(t, "expected Tasks or Representations".into()));
        }
        if t.kind != TokKind::Eof {
            return Err(self.err(
                t,
                format!("expected end of input, found {}", self.describe(t)),
            ));
        }
        Ok(model)
    }

    fn parse_task(&mut self) -> Result<Task, SyntaxError> {
        let name_tok = self.peek();
        if name_tok.kind != TokKind::Ident {
            return Err(self.err(
                name_tok,
                format!("expected a task name, found {}", self.describe(name_tok)),
            ));
        }
        self.bump();
        let name = self.text(name_tok).to_string();
        self.expect_lbrace("task name")?;
        let mut operations = Vec::new();
        let mut conditions = Vec::new();
        loop {
            let t = self.peek();
            match t.kind {
                TokKind::Ident if self.text(t) == "Edge" || self.text(t) == "Node" => {
                    operations.push(self.parse_operation()?);
                }
                TokKind::Ident if self.text(t) == "Conditions" => {
                    self.bump();
                    self.expect_lbrace("Conditions")?;
                    while !matches!(self.peek().kind, TokKind::RBrace | TokKind::Eof) {
                        conditions.push(self.parse_condition()?);
                    }
                    let close = self.peek();
                    if close.kind != TokKind::RBrace {
                        return Err(self.err(close, "expected '}' closing Conditions block".into()));
                    }
                    self.bump();
                    // Conditions is the last clause of a task body.
                    let after = self.peek();
                    if after.kind != TokKind::RBrace {
                        return Err(self.err(
                            after,
                            format!("expected '}}' closing task, found {}", self.describe(after)),
                        ));
                    }
                }
                TokKind::RBrace => {
                    self.bump();
                    break;
                }
                _ => {
                    return Err(self.err(
                        t,
                        format!(
                            "expected Edge, Node, Conditions, or '}}', found {}",
                            self.describe(t)
                        ),
                    ));
                }
            }
        }
        Ok(Task {
            name,
            operations,
            conditions,
            loc: Loc {
                line: name_tok.line,
                col: name_tok.col,
            },
        })
    }

    fn parse_operation(&mut self) -> Result<Operation, SyntaxError> {
        let element = self.bump(); // Edge | Node, checked by caller
        let op_tok = self.peek();
        let op_type = match (op_tok.kind, self.text(op_tok)) {
            (TokKind::Ident, "add") => OpType::Add,
            (TokKind::Ident, "remove") => OpType::Remove,
            _ => {
                return Err(self.err(
                    op_tok,
                    format!("expected add or remove, found {}", self.describe(op_tok)),
                ));
            }
        };
        self.bump();
        let target_tok = self.peek();
        if target_tok.kind != TokKind::Ident {
            return Err(self.err(
                target_tok,
                format!(
                    "expected an edge or node type, found {}",
                    self.describe(target_tok)
                ),
            ));
        }
        let text = self.text(target_tok);
        let target = if let Some(k) = EdgeKind::from_token(text) {
            OpTarget::Edge(k)
        } else if let Some(k) = NodeKind::from_token(text) {
            OpTarget::Node(k)
        } else {
            return Err(self.err(
                target_tok,
                format!("'{text}' is not a known edge or node type"),
            ));
        };
        self.bump();
        Ok(Operation {
            op_type,
            target,
            loc: Loc {
                line: element.line,
                col: element.col,
            },
        })
    }

    fn parse_condition(&mut self) -> Result<CodeCondition, SyntaxError> {
        let action_tok = self.peek();
        let action = match (action_tok.kind, self.text(action_tok)) {
            (TokKind::Ident, "exclude") => ConditionAction::Exclude,
            (TokKind::Ident, "include") => ConditionAction::Include,
            _ => {
                return Err(self.err(
                    action_tok,
                    format!(
                        "expected exclude or include, found {}",
                        self.describe(action_tok)
                    ),
                ));
            }
        };
        self.bump();
        let block_tok = self.peek();
        if block_tok.kind != TokKind::Ident {
            return Err(self.err(
                block_tok,
                format!(
                    "expected a code block name (e.g. while_block), found {}",
                    self.describe(block_tok)
                ),
            ));
        }
        let text = self.text(block_tok);
        let block = BlockKind::from_token(text).ok_or_else(|| {
            self.err(
                block_tok,
                format!("'{text}' is not a known code block (expected one of catch_block, for_block, while_block, if_block, else_block)"),
            )
        })?;
        self.bump();
        Ok(CodeCondition {
            action,
            block,
            loc: Loc {
                line: action_tok.line,
                col: action_tok.col,
            },
        })
    }

    fn parse_representation(&mut self) -> Result<RepresentationSpec, SyntaxError> {
        let name_tok = self.peek();
        if name_tok.kind != TokKind::Ident {
            return Err(self.err(
                name_tok,
                format!(
                    "expected a representation name, found {}",
                    self.describe(name_tok)
                ),
            ));
        }
        self.bump();
        let name = self.text(name_tok).to_string();
        self.expect_lbrace("representation name")?;

        let repo_tok = self.peek();
        if repo_tok.kind != TokKind::Str {
            return Err(self.err(
                repo_tok,
                format!(
                    "expected a repository list path string, found {}",
                    self.describe(repo_tok)
                ),
            ));
        }
        self.bump();
        let repo_list_path = self.text(repo_tok).to_string();

        let out_tok = self.peek();
        if out_tok.kind != TokKind::Str {
            return Err(self.err(
                out_tok,
                format!(
                    "expected an output directory string, found {}",
                    self.describe(out_tok)
                ),
            ));
        }
        self.bump();
        let output_dir = self.text(out_tok).to_string();

        let mut base = BTreeSet::new();
        while self.peek().kind == TokKind::Ident {
            match BaseGraphKind::from_token(self.text(self.peek())) {
                Some(k) => {
                    base.insert(k);
                    self.bump();
                }
                None => break,
            }
        }
        if base.is_empty() {
            let t = self.peek();
            return Err(self.err(
                t,
                format!(
                    "expected a base representation (AST, CFG, or PDG), found {}",
                    self.describe(t)
                ),
            ));
        }

        let mut tasks = Vec::new();
        while self.peek().kind == TokKind::Ident {
            let t = self.bump();
            tasks.push(self.text(t).to_string());
        }
        if tasks.is_empty() {
            let t = self.peek();
            return Err(self.err(
                t,
                format!(
                    "expected at least one task reference, found {}",
                    self.describe(t)
                ),
            ));
        }
        let close = self.peek();
        if close.kind != TokKind::RBrace {
            return Err(self.err(
                close,
                format!(
                    "expected '}}' closing representation, found {}",
                    self.describe(close)
                ),
            ));
        }
        self.bump();
        Ok(RepresentationSpec {
            name,
            repo_list_path,
            output_dir,
            base,
            tasks,
            loc: Loc {
                line: name_tok.line,
                col: name_tok.col,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::LISTING5;
    use super::*;

    #[test]
    fn parses_the_reference_config() {
        let model = parse_config(LISTING5).unwrap();
        assert_eq!(model.tasks.len(), 1);
        let task = &model.tasks[0];
        assert_eq!(task.name, "task2");
        let adds = task
            .operations
            .iter()
            .filter(|o| o.op_type == OpType::Add)
            .count();
        let removes = task
            .operations
            .iter()
            .filter(|o| o.op_type == OpType::Remove)
            .count();
        assert_eq!((adds, removes), (5, 1));
        assert_eq!(task.conditions.len(), 2);
        assert!(task
            .conditions
            .iter()
            .all(|c| c.action == ConditionAction::Exclude));
        assert_eq!(model.representations.len(), 1);
        let rep = &model.representations[0];
        assert_eq!(rep.name, "r2");
        assert_eq!(rep.repo_list_path, "/dir/repos_list.csv");
        assert_eq!(rep.output_dir, "output_dir");
        assert_eq!(rep.base.len(), 1);
        assert!(rep.base.contains(&BaseGraphKind::Ast));
        assert_eq!(rep.tasks, vec!["task2".to_string()]);
    }

    #[test]
    fn empty_input_reports_expected_blocks() {
        let errs = parse_config("").unwrap_err();
        assert_eq!(errs.len(), 1);
        assert!(errs[0]
            .message
            .contains("expected Tasks or Representations"));
    }

    #[test]
    fn unknown_edge_token_is_rejected_at_its_position() {
        let mutated = LISTING5.replace("Edge add next_token", "Edge add bogus_edge");
        let errs = parse_config(&mutated).unwrap_err();
        assert!(errs[0].message.contains("bogus_edge"));
        assert_eq!(errs[0].line, 3);
    }

    #[test]
    fn cross_element_operations_parse() {
        // Syntactically correct; flagged later by semantic validation.
        let text = "Tasks { t { Node remove next_token } }";
        let model = parse_config(text).unwrap();
        assert_eq!(
            model.tasks[0].operations[0].target,
            OpTarget::Edge(EdgeKind::NextToken)
        );
        assert_eq!(model.tasks[0].operations[0].op_type, OpType::Remove);
    }

    #[test]
    fn unclosed_brace_is_an_error() {
        let errs = parse_config("Tasks { t { Edge add next_token }").unwrap_err();
        assert!(errs[0].message.contains("expected"));
    }

    #[test]
    fn missing_path_string_is_an_error() {
        let errs = parse_config("Representations { r { AST t } }").unwrap_err();
        assert!(errs[0].message.contains("repository list path"));
    }

    #[test]
    fn comments_do_not_change_the_model() {
        let plain = parse_config(LISTING5).unwrap();
        let commented = LISTING5
            .replace("Edge add next_token", "Edge /* c */ add next_token // x")
            .replace("Tasks {", "/* head */ Tasks {");
        let model = parse_config(&commented).unwrap();
        assert_eq!(model.tasks, plain.tasks);
        assert_eq!(model.representations, plain.representations);
    }

    #[test]
    fn representation_without_base_is_an_error() {
        let errs = parse_config("Representations { r { \"a.csv\" \"out\" t } }").unwrap_err();
        assert!(errs[0].message.contains("base representation"));
    }
}
