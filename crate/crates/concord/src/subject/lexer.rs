//! Tokenizer for the subject language. Comments and whitespace are
//! skipped; everything else, including characters the parser has no use
//! for, becomes a token so error recovery can measure skipped regions.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokKind {
    Ident,
    IntLit,
    FloatLit,
    StrLit,
    CharLit,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semi,
    Comma,
    Dot,
    /// Operator token; the text is the source slice.
    Op,
    /// Anything the lexer does not understand (e.g. `@`, `#`, `?`).
    Unknown,
    Eof,
}

#[derive(Debug, Clone, Copy)]
pub struct Token {
    pub kind: TokKind,
    pub start: usize,
    pub end: usize,
}

const OPERATORS: &[&str] = &[
    "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "++", "--", "+", "-", "*", "/", "%", "&", "|",
    "^", "!", "~", "<", ">", "=",
];

pub fn lex(src: &str) -> Vec<Token> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0usize;

    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'/' if bytes.get(i + 1) == Some(&b'/') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'/' if bytes.get(i + 1) == Some(&b'*') => {
                let mut j = i + 2;
                while j + 1 < bytes.len() && !(bytes[j] == b'*' && bytes[j + 1] == b'/') {
                    j += 1;
                }
                i = if j + 1 < bytes.len() {
                    j + 2
                } else {
                    bytes.len()
                };
            }
            b'"' => {
                let start = i;
                let mut j = i + 1;
                while j < bytes.len() && bytes[j] != b'"' && bytes[j] != b'\n' {
                    if bytes[j] == b'\\' && j + 1 < bytes.len() {
                        j += 1;
                    }
                    j += 1;
                }
                let end = if j < bytes.len() && bytes[j] == b'"' {
                    j + 1
                } else {
                    j
                };
                toks.push(Token {
                    kind: TokKind::StrLit,
                    start,
                    end,
                });
                i = end;
            }
            b'\'' => {
                let start = i;
                let mut j = i + 1;
                while j < bytes.len() && bytes[j] != b'\'' && bytes[j] != b'\n' {
                    if bytes[j] == b'\\' && j + 1 < bytes.len() {
                        j += 1;
                    }
                    j += 1;
                }
                let end = if j < bytes.len() && bytes[j] == b'\'' {
                    j + 1
                } else {
                    j
                };
                toks.push(Token {
                    kind: TokKind::CharLit,
                    start,
                    end,
                });
                i = end;
            }
            b'0'..=b'9' => {
                let start = i;
                let mut kind = TokKind::IntLit;
                if b == b'0' && matches!(bytes.get(i + 1), Some(b'x') | Some(b'X')) {
                    i += 2;
                    while i < bytes.len() && bytes[i].is_ascii_hexdigit() {
                        i += 1;
                    }
                } else {
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i < bytes.len()
                        && bytes[i] == b'.'
                        && bytes.get(i + 1).is_some_and(|c| c.is_ascii_digit())
                    {
                        kind = TokKind::FloatLit;
                        i += 1;
                        while i < bytes.len() && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                // Numeric suffix letters (1L, 2.5f, ...).
                while i < bytes.len() && matches!(bytes[i], b'l' | b'L' | b'f' | b'F' | b'd' | b'D')
                {
                    i += 1;
                }
                toks.push(Token {
                    kind,
                    start,
                    end: i,
                });
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' | b'$' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'$')
                {
                    i += 1;
                }
                toks.push(Token {
                    kind: TokKind::Ident,
                    start,
                    end: i,
                });
            }
            b'(' | b')' | b'{' | b'}' | b'[' | b']' | b';' | b',' | b'.' => {
                let kind = match b {
                    b'(' => TokKind::LParen,
                    b')' => TokKind::RParen,
                    b'{' => TokKind::LBrace,
                    b'}' => TokKind::RBrace,
                    b'[' => TokKind::LBracket,
                    b']' => TokKind::RBracket,
                    b';' => TokKind::Semi,
                    b',' => TokKind::Comma,
                    _ => TokKind::Dot,
                };
                toks.push(Token {
                    kind,
                    start: i,
                    end: i + 1,
                });
                i += 1;
            }
            _ => {
                if let Some(op) = OPERATORS.iter().find(|op| src[i..].starts_with(**op)) {
                    toks.push(Token {
                        kind: TokKind::Op,
                        start: i,
                        end: i + op.len(),
                    });
                    i += op.len();
                } else {
                    let len = src[i..].chars().next().map_or(1, |c| c.len_utf8());
                    toks.push(Token {
                        kind: TokKind::Unknown,
                        start: i,
                        end: i + len,
                    });
                    i += len;
                }
            }
        }
    }
    toks.push(Token {
        kind: TokKind::Eof,
        start: bytes.len(),
        end: bytes.len(),
    });
    toks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<TokKind> {
        lex(src).into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn basic_statement() {
        assert_eq!(
            kinds("int i = 1+1;"),
            vec![
                TokKind::Ident,
                TokKind::Ident,
                TokKind::Op,
                TokKind::IntLit,
                TokKind::Op,
                TokKind::IntLit,
                TokKind::Semi,
                TokKind::Eof
            ]
        );
    }

    #[test]
    fn maximal_munch_for_multichar_operators() {
        let toks = lex("a<=b<<2");
        let texts: Vec<&str> = toks[..toks.len() - 1]
            .iter()
            .map(|t| &"a<=b<<2"[t.start..t.end])
            .collect();
        assert_eq!(texts, vec!["a", "<=", "b", "<<", "2"]);
    }

    #[test]
    fn string_with_escape_and_comment() {
        assert_eq!(
            kinds("\"a\\\"b\" /* c */ x"),
            vec![TokKind::StrLit, TokKind::Ident, TokKind::Eof]
        );
    }

    #[test]
    fn unknown_characters_become_tokens() {
        assert_eq!(kinds("@"), vec![TokKind::Unknown, TokKind::Eof]);
    }

    #[test]
    fn numeric_suffixes_and_floats() {
        assert_eq!(
            kinds("1L 2.5f 0xFF"),
            vec![
                TokKind::IntLit,
                TokKind::FloatLit,
                TokKind::IntLit,
                TokKind::Eof
            ]
        );
    }
}
