use std::fmt;

use super::{DslError, DslErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    LBrace,
    RBrace,
    Comma,
    Eq,
    Colon,
    Arrow,
    Word(String),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Word(w) => write!(f, "`{w}`"),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub col: usize,
}

fn is_word_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '{' | '}' | ',' | '=' | ':' | '#')
}

/// Splits one line into tokens. Columns count characters from 1; a `#`
/// ends the line.
pub(crate) fn lex(text: &str, line: usize) -> Result<Vec<Token>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let single = match c {
            '#' => break,
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Eq),
            ':' => Some(Tok::Colon),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, col });
            i += 1;
            continue;
        }
        if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push(Token {
                tok: Tok::Arrow,
                col,
            });
            i += 2;
            continue;
        }
        let start = i;
        while i < chars.len()
            && is_word_char(chars[i])
            && !(chars[i] == '-' && chars.get(i + 1) == Some(&'>'))
        {
            i += 1;
        }
        if i == start {
            return Err(DslError::new(
                line,
                col,
                DslErrorKind::Syntax {
                    expected: "a token".into(),
                    found: format!("`{c}`"),
                },
            ));
        }
        out.push(Token {
            tok: Tok::Word(chars[start..i].iter().collect()),
            col,
        });
    }
    Ok(out)
}
