//! Tokenizer for configuration files. Comments (`/* */` and `// ...`) are
//! stripped here so the parser never sees them.

use super::SyntaxError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokKind {
    Ident,
    /// A double-quoted string; the span excludes the quotes.
    Str,
    LBrace,
    RBrace,
    Eof,
}

#[derive(Debug, Clone, Copy)]
pub struct Token {
    pub kind: TokKind,
    pub start: usize,
    pub end: usize,
    pub line: u32,
    pub col: u32,
}

pub fn lex(src: &str) -> Result<Vec<Token>, SyntaxError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0usize;
    let mut line = 1u32;
    let mut line_start = 0usize;

    macro_rules! col {
        ($pos:expr) => {
            ($pos - line_start) as u32 + 1
        };
    }

    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b'\n' => {
                i += 1;
                line += 1;
                line_start = i;
            }
            b' ' | b'\t' | b'\r' => i += 1,
            b'/' if bytes.get(i + 1) == Some(&b'/') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'/' if bytes.get(i + 1) == Some(&b'*') => {
                let (start_line, start_col) = (line, col!(i));
                let mut j = i + 2;
                loop {
                    if j + 1 >= bytes.len() {
                        return Err(SyntaxError {
                            line: start_line,
                            col: start_col,
                            message: "unterminated block comment".into(),
                        });
                    }
                    if bytes[j] == b'*' && bytes[j + 1] == b'/' {
                        break;
                    }
                    if bytes[j] == b'\n' {
                        line += 1;
                        line_start = j + 1;
                    }
                    j += 1;
                }
                i = j + 2;
            }
            b'{' => {
                toks.push(Token {
                    kind: TokKind::LBrace,
                    start: i,
                    end: i + 1,
                    line,
                    col: col!(i),
                });
                i += 1;
            }
            b'}' => {
                toks.push(Token {
                    kind: TokKind::RBrace,
                    start: i,
                    end: i + 1,
                    line,
                    col: col!(i),
                });
                i += 1;
            }
            b'"' => {
                let (start_line, start_col) = (line, col!(i));
                let mut j = i + 1;
                while j < bytes.len() && bytes[j] != b'"' && bytes[j] != b'\n' {
                    j += 1;
                }
                if j >= bytes.len() || bytes[j] != b'"' {
                    return Err(SyntaxError {
                        line: start_line,
                        col: start_col,
                        message: "unterminated string literal".into(),
                    });
                }
                toks.push(Token {
                    kind: TokKind::Str,
                    start: i + 1,
                    end: j,
                    line: start_line,
                    col: start_col,
                });
                i = j + 1;
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push(Token {
                    kind: TokKind::Ident,
                    start,
                    end: i,
                    line,
                    col: col!(start),
                });
            }
            _ => {
                return Err(SyntaxError {
                    line,
                    col: col!(i),
                    message: format!("unexpected character '{}'", &src[i..][..1]),
                });
            }
        }
    }
    toks.push(Token {
        kind: TokKind::Eof,
        start: bytes.len(),
        end: bytes.len(),
        line,
        col: col!(bytes.len()),
    });
    Ok(toks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strips_comments() {
        let toks = lex("Tasks /* x\ny */ { } // tail").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.kind).collect();
        assert_eq!(
            kinds,
            vec![
                TokKind::Ident,
                TokKind::LBrace,
                TokKind::RBrace,
                TokKind::Eof
            ]
        );
    }

    #[test]
    fn unterminated_block_comment_is_an_error() {
        let err = lex("Tasks { /* oops").unwrap_err();
        assert!(err.message.contains("unterminated block comment"));
        assert_eq!(err.line, 1);
    }

    #[test]
    fn line_comment_at_eof_without_newline() {
        let toks = lex("x // trailing").unwrap();
        assert_eq!(toks.len(), 2);
    }

    #[test]
    fn tracks_lines_and_columns() {
        let toks = lex("a\n  b").unwrap();
        assert_eq!((toks[1].line, toks[1].col), (2, 3));
    }
}
