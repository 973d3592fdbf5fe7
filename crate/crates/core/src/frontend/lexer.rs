use std::fmt;

/// 1-based position of a token or item in the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceSpan {
    pub file: String,
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl SourceSpan {
    /// From the start of `self` to the end of `other`, if on the same line.
    pub fn to(&self, other: &SourceSpan) -> SourceSpan {
        let length = if other.line == self.line && other.column >= self.column {
            other.column + other.length - self.column
        } else {
            self.length
        };
        SourceSpan { length, ..self.clone() }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.file, self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    Str(String),
    Punct(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Str(s) => write!(f, "\"{s}\""),
            Tok::Punct(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

pub fn tokenize(src: &str, file: &str) -> Result<Vec<Token>, (SourceSpan, String)> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let mut chars = src.chars().peekable();
    let span = |line, column, length| SourceSpan {
        file: file.to_string(),
        line,
        column,
        length,
    };
    while let Some(&c) = chars.peek() {
        let start = col;
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push(Token {
                span: span(line, start, s.len()),
                tok: Tok::Int(s),
            });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push(Token {
                span: span(line, start, s.chars().count()),
                tok: Tok::Ident(s),
            });
        } else if c == '"' {
            chars.next();
            col += 1;
            let mut s = String::new();
            loop {
                match chars.next() {
                    Some('"') => {
                        col += 1;
                        break;
                    }
                    Some('\n') | None => return Err((span(line, start, 1), "unterminated string".into())),
                    Some(d) => {
                        s.push(d);
                        col += 1;
                    }
                }
            }
            out.push(Token {
                span: span(line, start, col - start),
                tok: Tok::Str(s),
            });
        } else if "{}[](),;=+-*/^".contains(c) {
            chars.next();
            col += 1;
            out.push(Token {
                span: span(line, start, 1),
                tok: Tok::Punct(c),
            });
        } else {
            return Err((span(line, start, 1), format!("unexpected character `{c}`")));
        }
    }
    out.push(Token {
        span: span(line, col, 1),
        tok: Tok::Eof,
    });
    Ok(out)
}
