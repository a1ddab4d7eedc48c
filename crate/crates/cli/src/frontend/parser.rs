use super::ast::{BasisSpec, Expr, Statement, StatementKind};
use super::lexer::{lex, Tok, Token};
use super::SyntaxError;

/// Parses a whole script.
pub fn parse(src: &str) -> Result<Vec<Statement>, SyntaxError> {
    let tokens = lex(src)?;
    let mut p = Parser { src, tokens: &tokens, pos: 0 };
    let mut out = Vec::new();
    while p.pos < tokens.len() {
        out.push(p.statement()?);
    }
    Ok(out)
}

/// Parses a single expression with no terminator.
pub fn parse_expr(src: &str) -> Result<Expr, SyntaxError> {
    let tokens = lex(src)?;
    let mut p = Parser { src, tokens: &tokens, pos: 0 };
    let e = p.sum()?;
    match p.peek() {
        None => Ok(e),
        Some(t) => Err(p.unexpected(t)),
    }
}

struct Parser<'a> {
    src: &'a str,
    tokens: &'a [Token],
    pos: usize,
}

const KEYWORDS: &[&str] = &["tensor", "tsym", "kbasis", "tclear", "on", "off", "showtime", "end"];

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn peek_tok(&self) -> Option<&'a Tok> {
        self.peek().map(|t| &t.tok)
    }

    fn bump(&mut self) -> Result<&'a Token, SyntaxError> {
        let t = self.tokens.get(self.pos).ok_or_else(|| self.eof())?;
        self.pos += 1;
        Ok(t)
    }

    fn eof(&self) -> SyntaxError {
        let (line, col) = match self.tokens.last() {
            Some(t) => (t.line, t.col),
            None => (1, 1),
        };
        SyntaxError::incomplete(line, col)
    }

    fn unexpected(&self, t: &Token) -> SyntaxError {
        let what = match &t.tok {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Assign => "`:=`".into(),
            Tok::End { .. } => "end of statement".into(),
        };
        SyntaxError::new(t.line, t.col, format!("unexpected {what}"))
    }

    fn expect(&mut self, want: Tok) -> Result<(), SyntaxError> {
        let t = self.bump()?;
        if t.tok == want {
            Ok(())
        } else {
            Err(self.unexpected(t))
        }
    }

    fn ident(&mut self) -> Result<String, SyntaxError> {
        let t = self.bump()?;
        match &t.tok {
            Tok::Ident(s) => Ok(s.clone()),
            _ => Err(self.unexpected(t)),
        }
    }

    fn statement(&mut self) -> Result<Statement, SyntaxError> {
        let first = &self.tokens[self.pos];
        let keyword = match (&first.tok, self.tokens.get(self.pos + 1).map(|t| &t.tok)) {
            (Tok::Ident(s), next) if KEYWORDS.contains(&s.as_str()) && next != Some(&Tok::Assign) => {
                Some(s.as_str())
            }
            _ => None,
        };
        if keyword.is_some() {
            self.pos += 1;
        }
        let kind = match keyword {
            Some("tensor") => StatementKind::TensorDecl(self.name_list()?),
            Some("tclear") => StatementKind::TClear(self.name_list()?),
            Some("on") => StatementKind::SwitchSet { on: true, names: self.name_list()? },
            Some("off") => StatementKind::SwitchSet { on: false, names: self.name_list()? },
            Some("showtime") => StatementKind::ShowTime,
            Some("end") => StatementKind::End,
            Some("tsym") => {
                let mut rels = vec![self.sum()?];
                while self.peek_tok() == Some(&Tok::Comma) {
                    self.pos += 1;
                    rels.push(self.sum()?);
                }
                StatementKind::SymDecl(rels)
            }
            Some("kbasis") => {
                let mut specs = vec![self.basis_spec()?];
                while self.peek_tok() == Some(&Tok::Comma) {
                    self.pos += 1;
                    specs.push(self.basis_spec()?);
                }
                StatementKind::KBasisQuery(specs)
            }
            _ => {
                if let (Tok::Ident(name), Some(Tok::Assign)) =
                    (&first.tok, self.tokens.get(self.pos + 1).map(|t| &t.tok))
                {
                    self.pos += 2;
                    StatementKind::Assignment { name: name.clone(), expr: self.sum()? }
                } else {
                    StatementKind::ExprEval(self.sum()?)
                }
            }
        };
        let end = self.bump()?;
        let Tok::End { silent } = end.tok else {
            return Err(self.unexpected(end));
        };
        Ok(Statement {
            kind,
            silent,
            text: self.src[first.offset..=end.offset].to_string(),
            line: first.line,
        })
    }

    fn name_list(&mut self) -> Result<Vec<String>, SyntaxError> {
        let mut names = vec![self.ident()?];
        while self.peek_tok() == Some(&Tok::Comma) {
            self.pos += 1;
            names.push(self.ident()?);
        }
        Ok(names)
    }

    fn basis_spec(&mut self) -> Result<BasisSpec, SyntaxError> {
        let mut names = vec![self.ident()?];
        if self.peek_tok() == Some(&Tok::LParen) {
            self.pos += 1;
            names.extend(self.name_list()?);
            self.expect(Tok::RParen)?;
        }
        Ok(BasisSpec { names })
    }

    fn sum(&mut self) -> Result<Expr, SyntaxError> {
        let mut terms = vec![(false, self.product()?)];
        loop {
            let negated = match self.peek_tok() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            terms.push((negated, self.product()?));
        }
        Ok(match terms.len() {
            1 => terms.pop().expect("one term").1,
            2 if terms[1].0 => {
                let b = terms.pop().expect("two terms").1;
                let a = terms.pop().expect("two terms").1;
                Expr::Diff(Box::new(a), Box::new(b))
            }
            _ => Expr::Sum(
                terms
                    .into_iter()
                    .map(|(neg, e)| if neg { Expr::Neg(Box::new(e)) } else { e })
                    .collect(),
            ),
        })
    }

    fn product(&mut self) -> Result<Expr, SyntaxError> {
        let mut factors = vec![self.unary()?];
        while self.peek_tok() == Some(&Tok::Star) {
            self.pos += 1;
            factors.push(self.unary()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Expr::Product(factors)
        })
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if self.peek_tok() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, SyntaxError> {
        let t = self.bump()?;
        match &t.tok {
            Tok::Int(n) => Ok(Expr::Int(n.clone())),
            Tok::LParen => {
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if self.peek_tok() != Some(&Tok::LParen) {
                    return Ok(Expr::Var(name.clone()));
                }
                self.pos += 1;
                let indices = self.name_list()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Tensor { name: name.clone(), indices })
            }
            _ => Err(self.unexpected(t)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tensor(name: &str, idx: &[&str]) -> Expr {
        Expr::Tensor {
            name: name.into(),
            indices: idx.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn one(src: &str) -> StatementKind {
        let mut s = parse(src).unwrap();
        assert_eq!(s.len(), 1);
        s.pop().unwrap().kind
    }

    #[test]
    fn product_with_a_dummy() {
        assert_eq!(
            one("t1(i,j)*t2(j,k);"),
            StatementKind::ExprEval(Expr::Product(vec![tensor("t1", &["i", "j"]), tensor("t2", &["j", "k"])]))
        );
    }

    #[test]
    fn symmetry_declaration() {
        assert_eq!(
            one("tsym a2(i,j)+a2(j,i);"),
            StatementKind::SymDecl(vec![Expr::Sum(vec![tensor("a2", &["i", "j"]), tensor("a2", &["j", "i"])])])
        );
    }

    #[test]
    fn empty_declaration_is_an_error() {
        let e = parse("tensor ;").unwrap_err();
        assert_eq!((e.line, e.col), (1, 8));
        assert!(!e.incomplete);
    }

    #[test]
    fn differences_and_chains() {
        let a = || tensor("a", &["i"]);
        assert_eq!(
            parse_expr("a(i) - a(i)").unwrap(),
            Expr::Diff(Box::new(a()), Box::new(a()))
        );
        assert_eq!(
            parse_expr("a(i) - a(i) + a(i)").unwrap(),
            Expr::Sum(vec![a(), Expr::Neg(Box::new(a())), a()])
        );
        assert_eq!(
            parse_expr("-2*a(i)").unwrap(),
            Expr::Product(vec![Expr::Neg(Box::new(Expr::Int(2u32.into()))), a()])
        );
    }

    #[test]
    fn commands() {
        assert_eq!(
            one("KBASIS s2(a3), ri;"),
            StatementKind::KBasisQuery(vec![
                BasisSpec { names: vec!["s2".into(), "a3".into()] },
                BasisSpec { names: vec!["ri".into()] },
            ])
        );
        assert_eq!(one("on dummypri, shortest;"), StatementKind::SwitchSet {
            on: true,
            names: vec!["dummypri".into(), "shortest".into()]
        });
        assert_eq!(one("showtime;"), StatementKind::ShowTime);
        assert!(matches!(one("x := s2(i,i);"), StatementKind::Assignment { .. }));
        let s = parse("  a2(k,k)$ ").unwrap();
        assert!(s[0].silent);
        assert_eq!(s[0].text, "a2(k,k)$");
    }

    #[test]
    fn incomplete_input() {
        assert!(parse("a2(i,j)").unwrap_err().incomplete);
        assert!(parse("tsym a2(i,").unwrap_err().incomplete);
    }
}
