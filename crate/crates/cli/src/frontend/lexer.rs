use num_bigint::BigUint;

use super::SyntaxError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    /// Lowercased identifier.
    Ident(String),
    Int(BigUint),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Assign,
    /// `;` prints the result, `$` does not.
    End { silent: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
    /// Byte offset of the first character.
    pub offset: usize,
}

/// Splits source text into tokens. `%` starts a comment running to the end of the line.
pub fn lex(src: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    let (mut line, mut line_start) = (1usize, 0usize);
    while let Some(&(off, ch)) = chars.peek() {
        let col = src[line_start..off].chars().count() + 1;
        let mut push = |tok| out.push(Token { tok, line, col, offset: off });
        match ch {
            '\n' => {
                chars.next();
                line += 1;
                line_start = off + 1;
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '%' => {
                while chars.peek().is_some_and(|&(_, c)| c != '\n') {
                    chars.next();
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = off;
                while let Some(&(o, c)) = chars.peek() {
                    if !(c.is_ascii_alphanumeric() || c == '_') {
                        break;
                    }
                    end = o + c.len_utf8();
                    chars.next();
                }
                push(Tok::Ident(src[off..end].to_ascii_lowercase()));
            }
            c if c.is_ascii_digit() => {
                let mut end = off;
                while let Some(&(o, c)) = chars.peek() {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    end = o + 1;
                    chars.next();
                }
                let value = src[off..end].parse().expect("ascii digits");
                push(Tok::Int(value));
            }
            ':' => {
                chars.next();
                if chars.next_if(|&(_, c)| c == '=').is_none() {
                    return Err(SyntaxError::new(line, col, "expected `:=`"));
                }
                push(Tok::Assign);
            }
            _ => {
                let tok = match ch {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    ';' => Tok::End { silent: false },
                    '$' => Tok::End { silent: true },
                    other => {
                        return Err(SyntaxError::new(line, col, format!("unexpected character `{other}`")));
                    }
                };
                chars.next();
                push(tok);
            }
        }
    }
    Ok(out)
}
