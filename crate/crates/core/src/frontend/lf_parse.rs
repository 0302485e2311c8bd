//! Concrete syntax for the LF kernel.
//!
//! Types: `Top | Bot | (a) b | a * b | P` with atoms as bare identifiers;
//! `(a) b` is the function type and `*` is right-associative. Terms:
//! `tt | [x] m | r m | <m, n> | fst r | snd r | abort{a}(r) | x`. The
//! parser enforces the normal/neutral stratification: an application head
//! that is not neutral is a syntax error, so redexes are unwritable.

use super::lexer::{Cursor, ParseError, Tok};
use crate::lf::{LfContext, LfType, Neutral, Normal, Signature};

pub fn parse_lf_type(text: &str) -> Result<LfType, ParseError> {
    parse_lf_type_named(text, "<input>")
}

pub fn parse_lf_type_named(text: &str, file: &str) -> Result<LfType, ParseError> {
    let mut cur = Cursor::new(text, file, 1, 1)?;
    let t = lf_type(&mut cur)?;
    cur.expect_end()?;
    Ok(t)
}

fn starts_type(tok: Option<&Tok>) -> bool {
    matches!(
        tok,
        Some(Tok::KwTop) | Some(Tok::KwBot) | Some(Tok::Ident(_)) | Some(Tok::LParen)
    )
}

fn lf_type(cur: &mut Cursor) -> Result<LfType, ParseError> {
    let left = fn_or_atom(cur)?;
    if cur.peek() == Some(&Tok::Star) {
        cur.next();
        let right = lf_type(cur)?;
        Ok(LfType::prod(left, right))
    } else {
        Ok(left)
    }
}

fn fn_or_atom(cur: &mut Cursor) -> Result<LfType, ParseError> {
    match cur.peek() {
        Some(Tok::KwTop) => {
            cur.next();
            Ok(LfType::Top)
        }
        Some(Tok::KwBot) => {
            cur.next();
            Ok(LfType::Bot)
        }
        Some(Tok::Ident(_)) => {
            let name = cur.expect_ident()?;
            Ok(LfType::Atom(name))
        }
        Some(Tok::LParen) => {
            cur.next();
            let inner = lf_type(cur)?;
            cur.expect(Tok::RParen)?;
            // `(a) b`: a parenthesized type followed by a type is the
            // function type; otherwise the parens were grouping.
            if starts_type(cur.peek()) {
                let cod = lf_type(cur)?;
                Ok(LfType::func(inner, cod))
            } else {
                Ok(inner)
            }
        }
        Some(t) => {
            let msg = format!("expected a type, found {}", t.describe());
            Err(cur.error(msg))
        }
        None => Err(cur.error("expected a type, found end of input")),
    }
}

pub fn parse_lf_term(text: &str) -> Result<Normal, ParseError> {
    parse_lf_term_named(text, "<input>")
}

pub fn parse_lf_term_named(text: &str, file: &str) -> Result<Normal, ParseError> {
    let mut cur = Cursor::new(text, file, 1, 1)?;
    let n = normal(&mut cur)?;
    cur.expect_end()?;
    Ok(n)
}

fn normal(cur: &mut Cursor) -> Result<Normal, ParseError> {
    match cur.peek() {
        Some(Tok::KwTt) => {
            cur.next();
            Ok(Normal::Bullet)
        }
        Some(Tok::LBrack) => {
            cur.next();
            let x = cur.expect_ident()?;
            cur.expect(Tok::RBrack)?;
            let body = normal(cur)?;
            Ok(Normal::lam(x, body))
        }
        Some(Tok::LAngle) => pair(cur),
        Some(Tok::KwAbort) => abort(cur),
        Some(Tok::KwFst) | Some(Tok::KwSnd) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
            spine(cur)
        }
        Some(t) => {
            let msg = format!("expected a term, found {}", t.describe());
            Err(cur.error(msg))
        }
        None => Err(cur.error("expected a term, found end of input")),
    }
}

fn pair(cur: &mut Cursor) -> Result<Normal, ParseError> {
    cur.expect(Tok::LAngle)?;
    let left = normal(cur)?;
    cur.expect(Tok::Comma)?;
    let right = normal(cur)?;
    cur.expect_rangle()?;
    Ok(Normal::pair(left, right))
}

fn abort(cur: &mut Cursor) -> Result<Normal, ParseError> {
    cur.expect(Tok::KwAbort)?;
    cur.expect(Tok::LBrace)?;
    let target = lf_type(cur)?;
    cur.expect(Tok::RBrace)?;
    cur.expect(Tok::LParen)?;
    let scrutinee = neutral(cur)?;
    cur.expect(Tok::RParen)?;
    Ok(Normal::Abort(target, Box::new(scrutinee)))
}

/// An application spine. The head must be neutral if any argument follows.
fn spine(cur: &mut Cursor) -> Result<Normal, ParseError> {
    let head = match cur.peek() {
        Some(Tok::KwFst) => {
            cur.next();
            Normal::Neutral(Box::new(Neutral::Fst(Box::new(atomic_neutral(cur)?))))
        }
        Some(Tok::KwSnd) => {
            cur.next();
            Normal::Neutral(Box::new(Neutral::Snd(Box::new(atomic_neutral(cur)?))))
        }
        Some(Tok::Ident(_)) => Normal::var(cur.expect_ident()?),
        Some(Tok::LParen) => {
            cur.next();
            let n = normal(cur)?;
            cur.expect(Tok::RParen)?;
            n
        }
        _ => return Err(cur.error("expected a term")),
    };
    let mut head = head;
    while starts_argument(cur.peek()) {
        let arg = argument(cur)?;
        head = match head {
            Normal::Neutral(r) => Normal::Neutral(Box::new(Neutral::App(r, Box::new(arg)))),
            _ => {
                return Err(
                    cur.error("application head is not neutral (the term would be a redex)")
                )
            }
        };
    }
    Ok(head)
}

fn starts_argument(tok: Option<&Tok>) -> bool {
    matches!(
        tok,
        Some(Tok::KwTt) | Some(Tok::Ident(_)) | Some(Tok::LAngle) | Some(Tok::LParen)
    )
}

fn argument(cur: &mut Cursor) -> Result<Normal, ParseError> {
    match cur.peek() {
        Some(Tok::KwTt) => {
            cur.next();
            Ok(Normal::Bullet)
        }
        Some(Tok::Ident(_)) => Ok(Normal::var(cur.expect_ident()?)),
        Some(Tok::LAngle) => pair(cur),
        Some(Tok::LParen) => {
            cur.next();
            let n = normal(cur)?;
            cur.expect(Tok::RParen)?;
            Ok(n)
        }
        _ => Err(cur.error("expected an argument")),
    }
}

fn neutral(cur: &mut Cursor) -> Result<Neutral, ParseError> {
    let span = cur.here();
    match spine(cur)? {
        Normal::Neutral(r) => Ok(*r),
        _ => Err(ParseError::new(span, "expected a neutral term")),
    }
}

fn atomic_neutral(cur: &mut Cursor) -> Result<Neutral, ParseError> {
    match cur.peek() {
        Some(Tok::Ident(_)) => Ok(Neutral::Var(cur.expect_ident()?)),
        Some(Tok::LParen) => {
            cur.next();
            let span = cur.here();
            let n = normal(cur)?;
            cur.expect(Tok::RParen)?;
            match n {
                Normal::Neutral(r) => Ok(*r),
                _ => Err(ParseError::new(span, "expected a neutral term")),
            }
        }
        Some(t) => {
            let msg = format!("expected a variable or `(`, found {}", t.describe());
            Err(cur.error(msg))
        }
        None => Err(cur.error("expected a neutral term, found end of input")),
    }
}

/// Rewrites free variables that are declared constants in the signature
/// into constant heads.
pub fn resolve_constants(n: &Normal, sig: &Signature) -> Normal {
    fn go_n(n: &Normal, sig: &Signature) -> Normal {
        match n {
            Normal::Bullet => Normal::Bullet,
            Normal::Lam(h, b) => Normal::Lam(h.clone(), Box::new(go_n(b, sig))),
            Normal::Pair(a, b) => Normal::Pair(Box::new(go_n(a, sig)), Box::new(go_n(b, sig))),
            Normal::Abort(t, r) => Normal::Abort(t.clone(), Box::new(go_r(r, sig))),
            Normal::Neutral(r) => Normal::Neutral(Box::new(go_r(r, sig))),
        }
    }
    fn go_r(r: &Neutral, sig: &Signature) -> Neutral {
        match r {
            Neutral::Var(x) if sig.is_const(x) => Neutral::Const(x.clone()),
            Neutral::Var(_) | Neutral::Bound(_) | Neutral::Const(_) => r.clone(),
            Neutral::App(f, a) => Neutral::App(Box::new(go_r(f, sig)), Box::new(go_n(a, sig))),
            Neutral::Fst(p) => Neutral::Fst(Box::new(go_r(p, sig))),
            Neutral::Snd(p) => Neutral::Snd(Box::new(go_r(p, sig))),
        }
    }
    go_n(n, sig)
}

/// Signature files are a sequence of declarations:
/// `atom P` or `const name : type`, with `--` comments.
pub fn parse_signature(text: &str, file: &str) -> Result<Signature, ParseError> {
    let mut cur = Cursor::new(text, file, 1, 1)?;
    let mut sig = Signature::new();
    while !cur.at_end() {
        let span = cur.here();
        match cur.peek() {
            Some(Tok::Ident(w)) if w == "atom" => {
                cur.next();
                let name = cur.expect_ident()?;
                sig.declare_atom(name)
                    .map_err(|e| ParseError::new(span, e.to_string()))?;
            }
            Some(Tok::Ident(w)) if w == "const" => {
                cur.next();
                let name = cur.expect_ident()?;
                cur.expect(Tok::Colon)?;
                let ty = lf_type(&mut cur)?;
                sig.declare_const(name, ty)
                    .map_err(|e| ParseError::new(span, e.to_string()))?;
            }
            _ => return Err(cur.error("expected `atom` or `const`")),
        }
    }
    Ok(sig)
}

/// Context text: empty, `.`, or `x : ty, y : ty` (a leading `.` with
/// comma-separated entries is also accepted, mirroring sequent contexts).
pub fn parse_lf_context(text: &str, file: &str) -> Result<LfContext, ParseError> {
    let mut cur = Cursor::new(text, file, 1, 1)?;
    let mut ctx = LfContext::new();
    if cur.at_end() {
        return Ok(ctx);
    }
    if cur.peek() == Some(&Tok::Dot) {
        cur.next();
        while cur.peek() == Some(&Tok::Comma) {
            cur.next();
            entry(&mut cur, &mut ctx)?;
        }
    } else {
        entry(&mut cur, &mut ctx)?;
        while cur.peek() == Some(&Tok::Comma) {
            cur.next();
            entry(&mut cur, &mut ctx)?;
        }
    }
    cur.expect_end()?;
    return Ok(ctx);

    fn entry(cur: &mut Cursor, ctx: &mut LfContext) -> Result<(), ParseError> {
        let span = cur.here();
        let x = cur.expect_ident()?;
        if ctx.contains(&x) {
            return Err(ParseError::new(span, format!("duplicate hypothesis `{x}`")));
        }
        cur.expect(Tok::Colon)?;
        let ty = lf_type(cur)?;
        ctx.push(x, ty);
        Ok(())
    }
}
