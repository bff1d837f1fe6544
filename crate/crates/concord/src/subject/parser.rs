//! Recursive-descent parser for the subject language.
//!
//! Recovery contract: a syntax error inside a body skips to the next `;`
//! or balanced `}` and the skipped region becomes a LITERAL leaf marked
//! with operator class `Other`. Nodes built during the failed attempt are
//! discarded, so the final arena contains exactly the reachable tree.

use super::lexer::{lex, TokKind, Token};
use super::{AstNodeKind, ForParts, NodeId, OperatorClass, SubjectAst, SubjectAstNode};
use std::collections::BTreeMap;
use std::path::Path;

/// Parse subject-language source. Never fails: unparseable regions are
/// recovered, and a file without any method yields empty `methods` plus a
/// recorded warning.
pub fn parse_subject(text: &str, path: impl AsRef<Path>) -> SubjectAst {
    let mut parser = Parser::new(text);
    let root = parser.parse_file();
    parser.finalize(root, path.as_ref())
}

const MODIFIERS: &[&str] = &[
    "public",
    "private",
    "protected",
    "static",
    "final",
    "abstract",
    "synchronized",
    "native",
    "transient",
    "volatile",
    "strictfp",
    "default",
];

fn classify_op(text: &str) -> OperatorClass {
    match text {
        "+" | "-" | "*" | "/" | "%" => OperatorClass::Arithmetic,
        "~" | "&" | "^" | "|" | "<<" | ">>" => OperatorClass::Bitwise,
        "!" | "&&" | "||" => OperatorClass::Logical,
        "==" | "!=" | "<" | ">" | "<=" | ">=" => OperatorClass::Relational,
        _ => OperatorClass::Other,
    }
}

const BIN_LEVELS: &[&[&str]] = &[
    &["||"],
    &["&&"],
    &["|"],
    &["^"],
    &["&"],
    &["==", "!="],
    &["<", ">", "<=", ">="],
    &["<<", ">>"],
    &["+", "-"],
    &["*", "/", "%"],
];

struct ParseAbort;

type PResult<T> = Result<T, ParseAbort>;

struct RawNode {
    kind: AstNodeKind,
    span: (usize, usize),
    children: Vec<usize>,
    operator_class: Option<OperatorClass>,
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Token>,
    pos: usize,
    arena: Vec<RawNode>,
    methods: Vec<usize>,
    for_parts: Vec<(usize, ForParts0)>,
    warnings: Vec<String>,
}

/// `ForParts` over raw arena indices.
#[derive(Clone, Copy, Default)]
struct ForParts0 {
    init: Option<usize>,
    cond: Option<usize>,
    update: Option<usize>,
    body: Option<usize>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            toks: lex(src),
            pos: 0,
            arena: Vec::new(),
            methods: Vec::new(),
            for_parts: Vec::new(),
            warnings: Vec::new(),
        }
    }

    fn peek(&self) -> Token {
        self.toks[self.pos]
    }

    fn peek_at(&self, offset: usize) -> Token {
        let i = (self.pos + offset).min(self.toks.len() - 1);
        self.toks[i]
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

    fn at_kw(&self, kw: &str) -> bool {
        let t = self.peek();
        t.kind == TokKind::Ident && self.text(t) == kw
    }

    fn at_op(&self, op: &str) -> bool {
        let t = self.peek();
        t.kind == TokKind::Op && self.text(t) == op
    }

    fn expect(&mut self, kind: TokKind) -> PResult<Token> {
        if self.peek().kind == kind {
            Ok(self.bump())
        } else {
            Err(ParseAbort)
        }
    }

    fn node(
        &mut self,
        kind: AstNodeKind,
        span: (usize, usize),
        children: Vec<usize>,
        operator_class: Option<OperatorClass>,
    ) -> usize {
        self.arena.push(RawNode {
            kind,
            span,
            children,
            operator_class,
        });
        self.arena.len() - 1
    }

    fn span_of(&self, id: usize) -> (usize, usize) {
        self.arena[id].span
    }

    // ----- recovery -------------------------------------------------------

    /// Skip to the next `;` at brace depth zero or past a balanced `}`.
    /// Stops (without consuming) before a `}` that would close the
    /// enclosing block. Returns the skipped byte range.
    fn fuzzy_skip(&mut self) -> (usize, usize) {
        let start = self.peek().start;
        let mut end = start;
        let mut depth = 0u32;
        loop {
            let t = self.peek();
            match t.kind {
                TokKind::Eof => break,
                TokKind::LBrace => {
                    depth += 1;
                    end = t.end;
                    self.bump();
                }
                TokKind::RBrace => {
                    if depth == 0 {
                        break;
                    }
                    depth -= 1;
                    end = t.end;
                    self.bump();
                    if depth == 0 {
                        break;
                    }
                }
                TokKind::Semi if depth == 0 => {
                    end = t.end;
                    self.bump();
                    break;
                }
                _ => {
                    end = t.end;
                    self.bump();
                }
            }
        }
        (start, end)
    }

    fn recovery_leaf(&mut self, span: (usize, usize)) -> usize {
        self.node(
            AstNodeKind::Literal,
            span,
            Vec::new(),
            Some(OperatorClass::Other),
        )
    }

    /// Run a parse attempt; on failure discard everything it built, rewind
    /// to where it started, and swallow the bad region into a leaf.
    fn recovering(&mut self, f: impl FnOnce(&mut Self) -> PResult<usize>) -> usize {
        let arena_mark = self.arena.len();
        let for_mark = self.for_parts.len();
        let methods_mark = self.methods.len();
        let tok_mark = self.pos;
        match f(self) {
            Ok(id) => id,
            Err(ParseAbort) => {
                self.arena.truncate(arena_mark);
                self.for_parts.truncate(for_mark);
                self.methods.truncate(methods_mark);
                self.pos = tok_mark;
                let span = self.fuzzy_skip();
                let span = if span.1 <= span.0 {
                    // No progress possible here; swallow one token.
                    let t = self.bump();
                    (t.start, t.end.max(t.start))
                } else {
                    span
                };
                self.recovery_leaf(span)
            }
        }
    }

    // ----- lookahead ------------------------------------------------------

    /// Token index after annotations (`@Name(...)`) and modifier keywords.
    fn lookahead_member_prefix(&self, mut p: usize) -> usize {
        loop {
            let t = self.toks[p];
            if t.kind == TokKind::Unknown && self.text(t) == "@" {
                p += 1;
                while self.toks[p].kind == TokKind::Ident {
                    p += 1;
                    if self.toks[p].kind == TokKind::Dot {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if self.toks[p].kind == TokKind::LParen {
                    let mut depth = 0u32;
                    loop {
                        match self.toks[p].kind {
                            TokKind::LParen => depth += 1,
                            TokKind::RParen => {
                                depth -= 1;
                                if depth == 0 {
                                    p += 1;
                                    break;
                                }
                            }
                            TokKind::Eof => break,
                            _ => {}
                        }
                        p += 1;
                    }
                }
                continue;
            }
            if t.kind == TokKind::Ident && MODIFIERS.contains(&self.text(t)) {
                p += 1;
                continue;
            }
            return p;
        }
    }

    /// Token index after a type pattern `Ident (. Ident)* ([ ])*`, or None.
    fn lookahead_type(&self, mut p: usize) -> Option<usize> {
        if self.toks[p].kind != TokKind::Ident {
            return None;
        }
        p += 1;
        while self.toks[p].kind == TokKind::Dot && self.toks[p + 1].kind == TokKind::Ident {
            p += 2;
        }
        while self.toks[p].kind == TokKind::LBracket && self.toks[p + 1].kind == TokKind::RBracket {
            p += 2;
        }
        Some(p)
    }

    fn member_is_type_decl(&self) -> bool {
        let p = self.lookahead_member_prefix(self.pos);
        let t = self.toks[p];
        t.kind == TokKind::Ident && matches!(self.text(t), "class" | "interface" | "enum")
    }

    fn member_is_method(&self) -> bool {
        let p = self.lookahead_member_prefix(self.pos);
        // Constructor style: Ident ( ... ) {
        if self.toks[p].kind == TokKind::Ident && self.toks[p + 1].kind == TokKind::LParen {
            let mut q = p + 1;
            let mut depth = 0u32;
            loop {
                match self.toks[q].kind {
                    TokKind::LParen => depth += 1,
                    TokKind::RParen => {
                        depth -= 1;
                        if depth == 0 {
                            q += 1;
                            break;
                        }
                    }
                    TokKind::Eof => return false,
                    _ => {}
                }
                q += 1;
            }
            return self.toks[q].kind == TokKind::LBrace;
        }
        // Typed style: Type Ident (
        if let Some(q) = self.lookahead_type(p) {
            return self.toks[q].kind == TokKind::Ident && self.toks[q + 1].kind == TokKind::LParen;
        }
        false
    }

    fn statement_is_local_decl(&self) -> bool {
        let mut p = self.pos;
        while self.toks[p].kind == TokKind::Ident && MODIFIERS.contains(&self.text(self.toks[p])) {
            p += 1;
        }
        let Some(q) = self.lookahead_type(p) else {
            return false;
        };
        if self.toks[q].kind != TokKind::Ident {
            return false;
        }
        let after = self.toks[q + 1];
        matches!(after.kind, TokKind::Semi | TokKind::Comma)
            || (after.kind == TokKind::Op && self.text(after) == "=")
    }

    // ----- file and members -----------------------------------------------

    fn parse_file(&mut self) -> usize {
        let mut items: Vec<usize> = Vec::new();
        let mut pending: Vec<usize> = Vec::new();
        loop {
            while self.peek().kind == TokKind::Semi {
                self.bump();
            }
            if self.peek().kind == TokKind::Eof {
                break;
            }
            if self.peek().kind == TokKind::RBrace {
                // Stray close brace at file scope.
                let t = self.bump();
                let leaf = self.recovery_leaf((t.start, t.end));
                pending.push(leaf);
                continue;
            }
            if self.member_is_type_decl() {
                self.flush_pending(&mut items, &mut pending);
                let id = self.recovering(|p| p.parse_type_decl());
                items.push(id);
            } else if self.member_is_method() {
                self.flush_pending(&mut items, &mut pending);
                let id = self.recovering(|p| p.parse_method());
                items.push(id);
            } else {
                let id = self.recovering(|p| p.parse_statement());
                pending.push(id);
            }
        }
        self.flush_pending(&mut items, &mut pending);
        self.node(AstNodeKind::File, (0, self.src.len()), items, None)
    }

    /// Wrap accumulated loose statements into a synthetic method so every
    /// downstream stage operates on method units.
    fn flush_pending(&mut self, items: &mut Vec<usize>, pending: &mut Vec<usize>) {
        if pending.is_empty() {
            return;
        }
        let start = self.span_of(pending[0]).0;
        let end = self.span_of(*pending.last().unwrap()).1;
        let stmts = std::mem::take(pending);
        let block = self.node(AstNodeKind::Block, (start, end), stmts, None);
        let method = self.node(AstNodeKind::MethodDecl, (start, end), vec![block], None);
        self.methods.push(method);
        items.push(method);
    }

    fn parse_type_decl(&mut self) -> PResult<usize> {
        let start = self.peek().start;
        self.consume_member_prefix();
        self.bump(); // class | interface | enum
        let name_tok = self.expect(TokKind::Ident)?;
        let name = self.node(
            AstNodeKind::Identifier,
            (name_tok.start, name_tok.end),
            Vec::new(),
            None,
        );
        // extends/implements clauses are skipped, not modeled.
        loop {
            match self.peek().kind {
                TokKind::LBrace => break,
                TokKind::Eof | TokKind::Semi | TokKind::RBrace => return Err(ParseAbort),
                _ => {
                    self.bump();
                }
            }
        }
        self.bump(); // {
        let mut children = vec![name];
        let end;
        loop {
            while self.peek().kind == TokKind::Semi {
                self.bump();
            }
            match self.peek().kind {
                TokKind::RBrace => {
                    end = self.bump().end;
                    break;
                }
                TokKind::Eof => {
                    self.warnings.push("unterminated type declaration".into());
                    end = self.peek().end;
                    break;
                }
                _ => {
                    if self.member_is_type_decl() {
                        let id = self.recovering(|p| p.parse_type_decl());
                        children.push(id);
                    } else if self.member_is_method() {
                        let id = self.recovering(|p| p.parse_method());
                        children.push(id);
                    } else {
                        // Fields and anything else are skipped fuzzily.
                        let span = self.fuzzy_skip();
                        let id = self.recovery_leaf(span);
                        children.push(id);
                    }
                }
            }
        }
        Ok(self.node(AstNodeKind::TypeDecl, (start, end), children, None))
    }

    fn parse_method(&mut self) -> PResult<usize> {
        let start = self.peek().start;
        self.consume_member_prefix();
        let mut children = Vec::new();

        let is_constructor_style =
            self.peek().kind == TokKind::Ident && self.peek_at(1).kind == TokKind::LParen;
        if !is_constructor_style {
            let ty = self.parse_type_name()?;
            children.push(ty);
        }
        let name_tok = self.expect(TokKind::Ident)?;
        children.push(self.node(
            AstNodeKind::Identifier,
            (name_tok.start, name_tok.end),
            Vec::new(),
            None,
        ));
        self.expect(TokKind::LParen)?;
        while self.peek().kind != TokKind::RParen && self.peek().kind != TokKind::Eof {
            if self.peek().kind == TokKind::Comma {
                self.bump();
                continue;
            }
            let arena_mark = self.arena.len();
            match self.parse_param() {
                Ok(p) => children.push(p),
                Err(ParseAbort) => {
                    self.arena.truncate(arena_mark);
                    // Skip to the next comma or the closing paren.
                    let start = self.peek().start;
                    let mut end = start;
                    let mut depth = 0u32;
                    loop {
                        let t = self.peek();
                        match t.kind {
                            TokKind::Eof => break,
                            TokKind::LParen => depth += 1,
                            TokKind::RParen => {
                                if depth == 0 {
                                    break;
                                }
                                depth -= 1;
                            }
                            TokKind::Comma if depth == 0 => break,
                            _ => {}
                        }
                        end = t.end;
                        self.bump();
                    }
                    if end > start {
                        let leaf = self.recovery_leaf((start, end));
                        children.push(leaf);
                    }
                }
            }
        }
        self.expect(TokKind::RParen)?;
        if self.at_kw("throws") {
            self.bump();
            while matches!(
                self.peek().kind,
                TokKind::Ident | TokKind::Dot | TokKind::Comma
            ) {
                self.bump();
            }
        }
        let end = match self.peek().kind {
            TokKind::LBrace => {
                let body = self.parse_block()?;
                let end = self.span_of(body).1;
                children.push(body);
                end
            }
            TokKind::Semi => self.bump().end,
            _ => return Err(ParseAbort),
        };
        let id = self.node(AstNodeKind::MethodDecl, (start, end), children, None);
        self.methods.push(id);
        Ok(id)
    }

    fn consume_member_prefix(&mut self) {
        let target = self.lookahead_member_prefix(self.pos);
        while self.pos < target {
            self.bump();
        }
    }

    fn parse_param(&mut self) -> PResult<usize> {
        while self.peek().kind == TokKind::Ident && MODIFIERS.contains(&self.text(self.peek())) {
            self.bump();
        }
        let ty = self.parse_type_name()?;
        while self.peek().kind == TokKind::Dot {
            self.bump(); // varargs dots
        }
        let name_tok = self.expect(TokKind::Ident)?;
        let name = self.node(
            AstNodeKind::Identifier,
            (name_tok.start, name_tok.end),
            Vec::new(),
            None,
        );
        let span = (self.span_of(ty).0, name_tok.end);
        Ok(self.node(AstNodeKind::Param, span, vec![ty, name], None))
    }

    fn parse_type_name(&mut self) -> PResult<usize> {
        let first = self.expect(TokKind::Ident)?;
        let mut end = first.end;
        while self.peek().kind == TokKind::Dot && self.peek_at(1).kind == TokKind::Ident {
            self.bump();
            end = self.bump().end;
        }
        while self.peek().kind == TokKind::LBracket && self.peek_at(1).kind == TokKind::RBracket {
            self.bump();
            end = self.bump().end;
        }
        Ok(self.node(AstNodeKind::TypeName, (first.start, end), Vec::new(), None))
    }

    // ----- statements -------------------------------------------------------

    fn parse_block(&mut self) -> PResult<usize> {
        let open = self.expect(TokKind::LBrace)?;
        let mut stmts = Vec::new();
        let end;
        loop {
            while self.peek().kind == TokKind::Semi {
                self.bump();
            }
            match self.peek().kind {
                TokKind::RBrace => {
                    end = self.bump().end;
                    break;
                }
                TokKind::Eof => {
                    self.warnings.push("unclosed block".into());
                    end = self.peek().end;
                    break;
                }
                _ => {
                    let id = self.recovering(|p| p.parse_statement());
                    stmts.push(id);
                }
            }
        }
        Ok(self.node(AstNodeKind::Block, (open.start, end), stmts, None))
    }

    fn parse_statement(&mut self) -> PResult<usize> {
        let t = self.peek();
        match t.kind {
            TokKind::LBrace => self.parse_block(),
            TokKind::Ident => match self.text(t) {
                "if" => self.parse_if(),
                "while" => self.parse_while(),
                "for" => self.parse_for(),
                "try" => self.parse_try(),
                "return" => self.parse_return(),
                _ if self.statement_is_local_decl() => self.parse_local_decl(true),
                _ => self.parse_expr_stmt(),
            },
            _ => self.parse_expr_stmt(),
        }
    }

    fn parse_expr_stmt(&mut self) -> PResult<usize> {
        let expr = self.parse_expr()?;
        let semi = self.expect(TokKind::Semi)?;
        let span = (self.span_of(expr).0, semi.end);
        Ok(self.node(AstNodeKind::ExprStmt, span, vec![expr], None))
    }

    fn parse_return(&mut self) -> PResult<usize> {
        let kw = self.bump();
        let mut children = Vec::new();
        if self.peek().kind != TokKind::Semi {
            children.push(self.parse_expr()?);
        }
        let semi = self.expect(TokKind::Semi)?;
        Ok(self.node(
            AstNodeKind::ReturnStmt,
            (kw.start, semi.end),
            children,
            None,
        ))
    }

    fn parse_local_decl(&mut self, require_semi: bool) -> PResult<usize> {
        let start = self.peek().start;
        while self.peek().kind == TokKind::Ident && MODIFIERS.contains(&self.text(self.peek())) {
            self.bump();
        }
        let ty = self.parse_type_name()?;
        let mut children = vec![ty];
        let mut end;
        loop {
            let name_tok = self.expect(TokKind::Ident)?;
            let name = self.node(
                AstNodeKind::Identifier,
                (name_tok.start, name_tok.end),
                Vec::new(),
                None,
            );
            end = name_tok.end;
            if self.at_op("=") {
                let eq = self.bump();
                let eq_leaf = self.node(
                    AstNodeKind::Operator,
                    (eq.start, eq.end),
                    Vec::new(),
                    Some(OperatorClass::Other),
                );
                let init = self.parse_expr()?;
                end = self.span_of(init).1;
                let assign = self.node(
                    AstNodeKind::Assignment,
                    (name_tok.start, end),
                    vec![name, eq_leaf, init],
                    None,
                );
                children.push(assign);
            } else {
                children.push(name);
            }
            if self.peek().kind == TokKind::Comma {
                self.bump();
            } else {
                break;
            }
        }
        if require_semi {
            let semi = self.expect(TokKind::Semi)?;
            end = semi.end;
        }
        Ok(self.node(AstNodeKind::LocalDecl, (start, end), children, None))
    }

    fn parse_condition(&mut self) -> PResult<usize> {
        let expr = self.parse_expr()?;
        let span = self.span_of(expr);
        Ok(self.node(AstNodeKind::Condition, span, vec![expr], None))
    }

    fn parse_if(&mut self) -> PResult<usize> {
        let kw = self.bump();
        self.expect(TokKind::LParen)?;
        let cond = self.parse_condition()?;
        self.expect(TokKind::RParen)?;
        let mut children = vec![cond];
        let mut end;
        if self.peek().kind == TokKind::Semi {
            end = self.bump().end;
        } else {
            let then = self.parse_statement()?;
            end = self.span_of(then).1;
            children.push(then);
        }
        if self.at_kw("else") {
            let else_kw = self.bump();
            let else_body = if self.peek().kind == TokKind::Semi {
                let semi = self.bump();
                end = semi.end;
                None
            } else {
                let stmt = self.parse_statement()?;
                end = self.span_of(stmt).1;
                Some(stmt)
            };
            let clause = self.node(
                AstNodeKind::ElseClause,
                (else_kw.start, end),
                else_body.into_iter().collect(),
                None,
            );
            children.push(clause);
        }
        Ok(self.node(AstNodeKind::IfStmt, (kw.start, end), children, None))
    }

    fn parse_while(&mut self) -> PResult<usize> {
        let kw = self.bump();
        self.expect(TokKind::LParen)?;
        let cond = self.parse_condition()?;
        self.expect(TokKind::RParen)?;
        let mut children = vec![cond];
        let end = if self.peek().kind == TokKind::Semi {
            self.bump().end
        } else {
            let body = self.parse_statement()?;
            let end = self.span_of(body).1;
            children.push(body);
            end
        };
        Ok(self.node(AstNodeKind::WhileStmt, (kw.start, end), children, None))
    }

    fn parse_for(&mut self) -> PResult<usize> {
        let kw = self.bump();
        self.expect(TokKind::LParen)?;
        let mut parts = ForParts0::default();
        let mut children = Vec::new();

        if self.peek().kind != TokKind::Semi {
            let init = if self.statement_is_local_decl() {
                self.parse_local_decl(false)?
            } else {
                self.parse_expr()?
            };
            parts.init = Some(init);
            children.push(init);
        }
        self.expect(TokKind::Semi)?;
        if self.peek().kind != TokKind::Semi {
            let cond = self.parse_condition()?;
            parts.cond = Some(cond);
            children.push(cond);
        }
        self.expect(TokKind::Semi)?;
        if self.peek().kind != TokKind::RParen {
            let update = self.parse_expr()?;
            parts.update = Some(update);
            children.push(update);
        }
        self.expect(TokKind::RParen)?;
        let end = if self.peek().kind == TokKind::Semi {
            self.bump().end
        } else {
            let body = self.parse_statement()?;
            parts.body = Some(body);
            children.push(body);
            self.span_of(body).1
        };
        let id = self.node(AstNodeKind::ForStmt, (kw.start, end), children, None);
        self.for_parts.push((id, parts));
        Ok(id)
    }

    fn parse_try(&mut self) -> PResult<usize> {
        let kw = self.bump();
        if self.peek().kind != TokKind::LBrace {
            return Err(ParseAbort);
        }
        let body = self.parse_block()?;
        let mut children = vec![body];
        let mut end = self.span_of(body).1;
        while self.at_kw("catch") {
            let catch_kw = self.bump();
            self.expect(TokKind::LParen)?;
            let arena_mark = self.arena.len();
            let param = match self.parse_param() {
                Ok(p) => Some(p),
                Err(ParseAbort) => {
                    self.arena.truncate(arena_mark);
                    None
                }
            };
            // Tolerate exotic catch parameters by skipping to ')'.
            while self.peek().kind != TokKind::RParen && self.peek().kind != TokKind::Eof {
                self.bump();
            }
            self.expect(TokKind::RParen)?;
            if self.peek().kind != TokKind::LBrace {
                return Err(ParseAbort);
            }
            let cbody = self.parse_block()?;
            end = self.span_of(cbody).1;
            let mut cchildren = Vec::new();
            cchildren.extend(param);
            cchildren.push(cbody);
            let clause = self.node(
                AstNodeKind::CatchClause,
                (catch_kw.start, end),
                cchildren,
                None,
            );
            children.push(clause);
        }
        if self.at_kw("finally") {
            self.bump();
            if self.peek().kind != TokKind::LBrace {
                return Err(ParseAbort);
            }
            let fblock = self.parse_block()?;
            end = self.span_of(fblock).1;
            children.push(fblock);
        }
        Ok(self.node(AstNodeKind::TryStmt, (kw.start, end), children, None))
    }

    // ----- expressions ------------------------------------------------------

    fn parse_expr(&mut self) -> PResult<usize> {
        let lhs = self.parse_binary(0)?;
        if self.at_op("=") {
            let eq = self.bump();
            let eq_leaf = self.node(
                AstNodeKind::Operator,
                (eq.start, eq.end),
                Vec::new(),
                Some(OperatorClass::Other),
            );
            let rhs = self.parse_expr()?;
            let span = (self.span_of(lhs).0, self.span_of(rhs).1);
            return Ok(self.node(AstNodeKind::Assignment, span, vec![lhs, eq_leaf, rhs], None));
        }
        Ok(lhs)
    }

    fn parse_binary(&mut self, level: usize) -> PResult<usize> {
        if level == BIN_LEVELS.len() {
            return self.parse_unary();
        }
        let mut lhs = self.parse_binary(level + 1)?;
        loop {
            let t = self.peek();
            if t.kind != TokKind::Op || !BIN_LEVELS[level].contains(&self.text(t)) {
                break;
            }
            let class = classify_op(self.text(t));
            self.bump();
            let op_leaf = self.node(
                AstNodeKind::Operator,
                (t.start, t.end),
                Vec::new(),
                Some(class),
            );
            let rhs = self.parse_binary(level + 1)?;
            let span = (self.span_of(lhs).0, self.span_of(rhs).1);
            lhs = self.node(
                AstNodeKind::Operator,
                span,
                vec![lhs, op_leaf, rhs],
                Some(class),
            );
        }
        Ok(lhs)
    }

    fn parse_unary(&mut self) -> PResult<usize> {
        let t = self.peek();
        if t.kind == TokKind::Op && matches!(self.text(t), "!" | "~" | "-" | "+" | "++" | "--") {
            let class = classify_op(self.text(t));
            self.bump();
            let op_leaf = self.node(
                AstNodeKind::Operator,
                (t.start, t.end),
                Vec::new(),
                Some(class),
            );
            let operand = self.parse_unary()?;
            let span = (t.start, self.span_of(operand).1);
            return Ok(self.node(
                AstNodeKind::Operator,
                span,
                vec![op_leaf, operand],
                Some(class),
            ));
        }
        self.parse_postfix()
    }

    fn parse_postfix(&mut self) -> PResult<usize> {
        let mut cur = self.parse_primary()?;
        loop {
            match self.peek().kind {
                TokKind::Dot => {
                    if self.peek_at(1).kind != TokKind::Ident {
                        return Err(ParseAbort);
                    }
                    self.bump();
                    let name_tok = self.bump();
                    let name = self.node(
                        AstNodeKind::Identifier,
                        (name_tok.start, name_tok.end),
                        Vec::new(),
                        None,
                    );
                    let span = (self.span_of(cur).0, name_tok.end);
                    cur = self.node(AstNodeKind::FieldAccess, span, vec![cur, name], None);
                }
                TokKind::LParen => {
                    self.bump();
                    let mut children = vec![cur];
                    while self.peek().kind != TokKind::RParen {
                        if self.peek().kind == TokKind::Eof {
                            return Err(ParseAbort);
                        }
                        children.push(self.parse_expr()?);
                        if self.peek().kind == TokKind::Comma {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    let close = self.expect(TokKind::RParen)?;
                    let span = (self.span_of(children[0]).0, close.end);
                    cur = self.node(AstNodeKind::Call, span, children, None);
                }
                TokKind::LBracket => {
                    self.bump();
                    let idx = self.parse_expr()?;
                    let close = self.expect(TokKind::RBracket)?;
                    let span = (self.span_of(cur).0, close.end);
                    cur = self.node(
                        AstNodeKind::Operator,
                        span,
                        vec![cur, idx],
                        Some(OperatorClass::Other),
                    );
                }
                TokKind::Op if matches!(self.text(self.peek()), "++" | "--") => {
                    let t = self.bump();
                    let op_leaf = self.node(
                        AstNodeKind::Operator,
                        (t.start, t.end),
                        Vec::new(),
                        Some(OperatorClass::Other),
                    );
                    let span = (self.span_of(cur).0, t.end);
                    cur = self.node(
                        AstNodeKind::Operator,
                        span,
                        vec![cur, op_leaf],
                        Some(OperatorClass::Other),
                    );
                }
                _ => break,
            }
        }
        Ok(cur)
    }

    fn parse_primary(&mut self) -> PResult<usize> {
        let t = self.peek();
        match t.kind {
            TokKind::IntLit | TokKind::FloatLit | TokKind::StrLit | TokKind::CharLit => {
                self.bump();
                Ok(self.node(AstNodeKind::Literal, (t.start, t.end), Vec::new(), None))
            }
            TokKind::Ident => match self.text(t) {
                "true" | "false" | "null" => {
                    self.bump();
                    Ok(self.node(AstNodeKind::Literal, (t.start, t.end), Vec::new(), None))
                }
                "new" => {
                    let new_tok = self.bump();
                    let expr = self.parse_postfix()?;
                    // Fold the keyword into the allocation expression's span.
                    self.arena[expr].span.0 = new_tok.start;
                    Ok(expr)
                }
                _ => {
                    self.bump();
                    Ok(self.node(AstNodeKind::Identifier, (t.start, t.end), Vec::new(), None))
                }
            },
            TokKind::LParen => {
                self.bump();
                let inner = self.parse_expr()?;
                self.expect(TokKind::RParen)?;
                Ok(inner)
            }
            _ => Err(ParseAbort),
        }
    }

    // ----- finalization -----------------------------------------------------

    fn finalize(mut self, root: usize, path: &Path) -> SubjectAst {
        let line_starts: Vec<usize> = std::iter::once(0)
            .chain(
                self.src
                    .bytes()
                    .enumerate()
                    .filter(|(_, b)| *b == b'\n')
                    .map(|(i, _)| i + 1),
            )
            .collect();
        let line_of = |pos: usize| line_starts.partition_point(|&s| s <= pos) as u32;

        // Renumber reachable nodes in depth-first preorder.
        let mut order = Vec::with_capacity(self.arena.len());
        let mut remap: BTreeMap<usize, u32> = BTreeMap::new();
        let mut stack = vec![root];
        while let Some(raw) = stack.pop() {
            let new_id = order.len() as u32;
            remap.insert(raw, new_id);
            order.push(raw);
            for &c in self.arena[raw].children.iter().rev() {
                stack.push(c);
            }
        }

        let mut nodes: Vec<SubjectAstNode> = order
            .iter()
            .map(|&raw| {
                let n = &self.arena[raw];
                SubjectAstNode {
                    id: NodeId(remap[&raw]),
                    kind: n.kind,
                    code: self.src[n.span.0..n.span.1].to_string(),
                    span: n.span,
                    line: line_of(n.span.0),
                    children: n.children.iter().map(|c| NodeId(remap[c])).collect(),
                    parent: None,
                    operator_class: n.operator_class,
                }
            })
            .collect();
        for i in 0..nodes.len() {
            let children = nodes[i].children.clone();
            for c in children {
                nodes[c.index()].parent = Some(NodeId(i as u32));
            }
        }

        let mut methods: Vec<NodeId> = self
            .methods
            .iter()
            .filter_map(|m| remap.get(m).map(|&id| NodeId(id)))
            .collect();
        methods.sort_unstable();

        let for_parts = self
            .for_parts
            .iter()
            .filter_map(|(id, parts)| {
                let map = |o: Option<usize>| o.and_then(|x| remap.get(&x).map(|&i| NodeId(i)));
                remap.get(id).map(|&new_id| {
                    (
                        NodeId(new_id),
                        ForParts {
                            init: map(parts.init),
                            cond: map(parts.cond),
                            update: map(parts.update),
                            body: map(parts.body),
                        },
                    )
                })
            })
            .collect();

        let mut warnings = std::mem::take(&mut self.warnings);
        if methods.is_empty() {
            warnings.push(format!("no methods found in {}", path.display()));
        }

        SubjectAst {
            file_path: path.to_path_buf(),
            root: NodeId(remap[&root]),
            nodes,
            methods,
            for_parts,
            warnings,
        }
    }
}
