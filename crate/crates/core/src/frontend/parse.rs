//! Parsers for computational terms, sequents and derivation trees.
//!
//! Grammar:
//! ```text
//! e       ::= ident | "Unit" | "Void" | "tt"
//!           | "Pi" "(" ident ":" e ")" e | "\" ident "." e | e e | "(" e ")"
//! ctx     ::= "." | ctx "," ident ":" e
//! body    ::= e "set" | e "=" e "set" | e "in" e | e "=" e "in" e
//! sequent ::= ctx ">>" body
//! deriv   ::= "(" RULE-NAME "sequent" deriv* ")"
//! ```
//! Application is left-associative and binds tighter than lambda and `Pi`
//! bodies, which extend as far right as possible.

use super::lexer::{Cursor, ParseError, Tok};
use super::report::SourceSpan;
use crate::rules::{Derivation, SequentBody, SequentJudgement};
use crate::syntax::{Context, Expr};

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    parse_expr_named(text, "<input>")
}

pub fn parse_expr_named(text: &str, file: &str) -> Result<Expr, ParseError> {
    let mut cur = Cursor::new(text, file, 1, 1)?;
    let e = expr(&mut cur)?;
    cur.expect_end()?;
    Ok(e)
}

fn expr(cur: &mut Cursor) -> Result<Expr, ParseError> {
    match cur.peek() {
        Some(Tok::Backslash) => {
            cur.next();
            let x = cur.expect_ident()?;
            cur.expect(Tok::Dot)?;
            let body = expr(cur)?;
            Ok(Expr::lam(x, body))
        }
        Some(Tok::KwPi) => {
            cur.next();
            cur.expect(Tok::LParen)?;
            let x = cur.expect_ident()?;
            cur.expect(Tok::Colon)?;
            let dom = expr(cur)?;
            cur.expect(Tok::RParen)?;
            let cod = expr(cur)?;
            Ok(Expr::pi(dom, x, cod))
        }
        _ => app(cur),
    }
}

fn app(cur: &mut Cursor) -> Result<Expr, ParseError> {
    let mut e = match atom(cur)? {
        Some(e) => e,
        None => return Err(cur.error("expected a term")),
    };
    while let Some(arg) = atom(cur)? {
        e = Expr::ap(e, arg);
    }
    Ok(e)
}

fn atom(cur: &mut Cursor) -> Result<Option<Expr>, ParseError> {
    match cur.peek() {
        Some(Tok::Ident(_)) => {
            let x = cur.expect_ident()?;
            Ok(Some(Expr::var(x)))
        }
        Some(Tok::KwUnit) => {
            cur.next();
            Ok(Some(Expr::Unit))
        }
        Some(Tok::KwVoid) => {
            cur.next();
            Ok(Some(Expr::Void))
        }
        Some(Tok::KwTt) => {
            cur.next();
            Ok(Some(Expr::Bullet))
        }
        Some(Tok::LParen) => {
            cur.next();
            let e = expr(cur)?;
            cur.expect(Tok::RParen)?;
            Ok(Some(e))
        }
        _ => Ok(None),
    }
}

pub fn parse_sequent(text: &str) -> Result<SequentJudgement, ParseError> {
    parse_sequent_at(text, "<input>", 1, 1)
}

pub fn parse_sequent_at(
    text: &str,
    file: &str,
    line: u32,
    col: u32,
) -> Result<SequentJudgement, ParseError> {
    let mut cur = Cursor::new(text, file, line, col)?;
    let s = sequent(&mut cur)?;
    cur.expect_end()?;
    Ok(s)
}

fn sequent(cur: &mut Cursor) -> Result<SequentJudgement, ParseError> {
    cur.expect(Tok::Dot)?;
    let mut ctx = Context::new();
    while cur.peek() == Some(&Tok::Comma) {
        cur.next();
        let x = cur.expect_ident()?;
        cur.expect(Tok::Colon)?;
        let ty = expr(cur)?;
        ctx.push(x, ty);
    }
    cur.expect(Tok::SeqArrow)?;
    let body = sequent_body(cur)?;
    Ok(SequentJudgement::new(ctx, body))
}

fn sequent_body(cur: &mut Cursor) -> Result<SequentBody, ParseError> {
    let first = expr(cur)?;
    match cur.peek() {
        Some(Tok::KwSet) => {
            cur.next();
            Ok(SequentBody::IsSet(first))
        }
        Some(Tok::KwIn) => {
            cur.next();
            let ty = expr(cur)?;
            Ok(SequentBody::Ver(first, ty))
        }
        Some(Tok::Eq) => {
            cur.next();
            let second = expr(cur)?;
            match cur.peek() {
                Some(Tok::KwSet) => {
                    cur.next();
                    Ok(SequentBody::EqSet(first, second))
                }
                Some(Tok::KwIn) => {
                    cur.next();
                    let ty = expr(cur)?;
                    Ok(SequentBody::EqVer(first, second, ty))
                }
                _ => Err(cur.error("expected `set` or `in` after the second term")),
            }
        }
        _ => Err(cur.error("expected `set`, `in` or `=` after the term")),
    }
}

pub fn parse_derivation(text: &str) -> Result<Derivation, ParseError> {
    parse_derivation_named(text, "<input>")
}

pub fn parse_derivation_named(text: &str, file: &str) -> Result<Derivation, ParseError> {
    let text = text.replace("\r\n", "\n");
    let mut s = DerivScanner {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        col: 1,
        file,
    };
    s.skip_trivia();
    let d = s.node()?;
    s.skip_trivia();
    if !s.at_end() {
        return Err(s.error("unexpected trailing input after the derivation"));
    }
    Ok(d)
}

/// Character-level scanner for the s-expression derivation format; rule
/// names contain `-`, which the token lexer reserves for comments.
struct DerivScanner<'a> {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    col: u32,
    file: &'a str,
}

impl<'a> DerivScanner<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars[self.pos];
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '-' && self.chars.get(self.pos + 1) == Some(&'-') {
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(SourceSpan::point(self.file, self.line, self.col), message)
    }

    fn node(&mut self) -> Result<Derivation, ParseError> {
        if self.peek() != Some('(') {
            return Err(self.error("expected `(` to open a derivation node"));
        }
        self.bump();
        self.skip_trivia();
        let mut rule = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                rule.push(self.bump());
            } else {
                break;
            }
        }
        if rule.is_empty() {
            return Err(self.error("expected a rule name"));
        }
        self.skip_trivia();
        if self.peek() != Some('"') {
            return Err(self.error("expected a quoted sequent"));
        }
        self.bump();
        let (start_line, start_col) = (self.line, self.col);
        let mut seq_text = String::new();
        loop {
            match self.peek() {
                Some('"') => {
                    self.bump();
                    break;
                }
                Some(_) => seq_text.push(self.bump()),
                None => return Err(self.error("unterminated sequent string")),
            }
        }
        let conclusion = parse_sequent_at(&seq_text, self.file, start_line, start_col)?;
        let mut children = Vec::new();
        loop {
            self.skip_trivia();
            match self.peek() {
                Some(')') => {
                    self.bump();
                    break;
                }
                Some('(') => children.push(self.node()?),
                Some(c) => return Err(self.error(format!("unexpected character `{c}`"))),
                None => return Err(self.error("unterminated derivation node")),
            }
        }
        Ok(Derivation::new(rule, conclusion, children))
    }
}
