//! Pretty-printers, inverse to the parsers: reparsing printed output yields
//! a structurally identical term. Binders are renamed where the stored hint
//! would collide with a free variable or an enclosing binder.

use super::lexer::RESERVED;
use crate::lf::{open_normal, LfType, Neutral, Normal};
use crate::rules::{SequentBody, SequentJudgement};
use crate::syntax::{free_vars, open, Expr};

fn pick_name(hint: &str, avoid: &dyn Fn(&str) -> bool) -> String {
    let mut name = if hint.is_empty() || RESERVED.contains(&hint) {
        "x".to_string()
    } else {
        hint.to_string()
    };
    while avoid(&name) {
        name.push('\'');
    }
    name
}

pub fn print_expr(e: &Expr) -> String {
    let mut out = String::new();
    let mut stack = Vec::new();
    go(e, 0, &mut stack, &mut out);
    return out;

    // prec 0: any form; 1: function position (application or atom);
    // 2: argument position (atom only).
    fn go(e: &Expr, prec: u8, stack: &mut Vec<String>, out: &mut String) {
        match e {
            Expr::Var(x) => out.push_str(x),
            Expr::Bound(i) => {
                // Well-formed inputs resolve every index on the stack.
                let idx = stack.len().checked_sub(1 + *i as usize);
                match idx.and_then(|k| stack.get(k)) {
                    Some(name) => out.push_str(name),
                    None => out.push_str(&format!("_b{i}")),
                }
            }
            Expr::Unit => out.push_str("Unit"),
            Expr::Void => out.push_str("Void"),
            Expr::Bullet => out.push_str("tt"),
            Expr::Pi(dom, hint, cod) => {
                let parens = prec > 0;
                if parens {
                    out.push('(');
                }
                let x = binder_name(hint, cod, stack);
                out.push_str("Pi (");
                out.push_str(&x);
                out.push_str(" : ");
                go(dom, 0, stack, out);
                out.push_str(") ");
                let opened = open(cod, &Expr::Var(x.clone()));
                stack.push(x);
                go(&opened, 0, stack, out);
                stack.pop();
                if parens {
                    out.push(')');
                }
            }
            Expr::Lam(hint, body) => {
                let parens = prec > 0;
                if parens {
                    out.push('(');
                }
                let x = binder_name(hint, body, stack);
                out.push('\\');
                out.push_str(&x);
                out.push_str(". ");
                let opened = open(body, &Expr::Var(x.clone()));
                stack.push(x);
                go(&opened, 0, stack, out);
                stack.pop();
                if parens {
                    out.push(')');
                }
            }
            Expr::Ap(f, a) => {
                let parens = prec > 1;
                if parens {
                    out.push('(');
                }
                go(f, 1, stack, out);
                out.push(' ');
                go(a, 2, stack, out);
                if parens {
                    out.push(')');
                }
            }
        }
    }

    fn binder_name(hint: &str, body: &Expr, stack: &[String]) -> String {
        let free = free_vars(body);
        pick_name(hint, &|n: &str| {
            free.contains(n) || stack.iter().any(|s| s == n)
        })
    }
}

pub fn print_sequent(s: &SequentJudgement) -> String {
    let mut out = String::from(".");
    for (name, ty) in s.ctx.entries() {
        out.push_str(" , ");
        out.push_str(name);
        out.push_str(" : ");
        out.push_str(&print_expr(ty));
    }
    out.push_str(" >> ");
    match &s.body {
        SequentBody::IsSet(a) => {
            out.push_str(&print_expr(a));
            out.push_str(" set");
        }
        SequentBody::EqSet(a, b) => {
            out.push_str(&print_expr(a));
            out.push_str(" = ");
            out.push_str(&print_expr(b));
            out.push_str(" set");
        }
        SequentBody::Ver(m, a) => {
            out.push_str(&print_expr(m));
            out.push_str(" in ");
            out.push_str(&print_expr(a));
        }
        SequentBody::EqVer(m, n, a) => {
            out.push_str(&print_expr(m));
            out.push_str(" = ");
            out.push_str(&print_expr(n));
            out.push_str(" in ");
            out.push_str(&print_expr(a));
        }
    }
    out
}

pub fn print_lf_type(ty: &LfType) -> String {
    let mut out = String::new();
    go(ty, false, &mut out);
    return out;

    // `atomic`: the position admits only `fn_or_atom` (left of `*`); a
    // function or product there needs grouping parens.
    fn go(ty: &LfType, atomic: bool, out: &mut String) {
        match ty {
            LfType::Atom(name) => out.push_str(name),
            LfType::Top => out.push_str("Top"),
            LfType::Bot => out.push_str("Bot"),
            LfType::Fn(dom, cod) => {
                if atomic {
                    out.push('(');
                }
                out.push('(');
                go(dom, false, out);
                out.push_str(") ");
                go(cod, false, out);
                if atomic {
                    out.push(')');
                }
            }
            LfType::Prod(left, right) => {
                if atomic {
                    out.push('(');
                }
                go(left, true, out);
                out.push_str(" * ");
                go(right, false, out);
                if atomic {
                    out.push(')');
                }
            }
        }
    }
}

pub fn print_lf_term(n: &Normal) -> String {
    let mut out = String::new();
    let mut stack = Vec::new();
    go_n(n, false, &mut stack, &mut out);
    return out;

    // `arg`: the position is an application argument, which admits only
    // `tt`, a variable, a pair, or a parenthesized term.
    fn go_n(n: &Normal, arg: bool, stack: &mut Vec<String>, out: &mut String) {
        match n {
            Normal::Bullet => out.push_str("tt"),
            Normal::Lam(hint, body) => {
                if arg {
                    out.push('(');
                }
                let x = binder_name(hint, body, stack);
                out.push('[');
                out.push_str(&x);
                out.push_str("] ");
                let opened = open_normal(body, &x);
                stack.push(x);
                go_n(&opened, false, stack, out);
                stack.pop();
                if arg {
                    out.push(')');
                }
            }
            Normal::Pair(l, r) => {
                out.push('<');
                go_n(l, false, stack, out);
                out.push_str(", ");
                go_n(r, false, stack, out);
                out.push('>');
            }
            Normal::Abort(target, scrutinee) => {
                if arg {
                    out.push('(');
                }
                out.push_str("abort{");
                out.push_str(&print_lf_type(target));
                out.push_str("}(");
                go_r(scrutinee, false, stack, out);
                out.push(')');
                if arg {
                    out.push(')');
                }
            }
            Normal::Neutral(r) => go_r(r, arg, stack, out),
        }
    }

    fn go_r(r: &Neutral, arg: bool, stack: &mut Vec<String>, out: &mut String) {
        match r {
            Neutral::Var(x) | Neutral::Const(x) => out.push_str(x),
            Neutral::Bound(i) => {
                let idx = stack.len().checked_sub(1 + *i as usize);
                match idx.and_then(|k| stack.get(k)) {
                    Some(name) => out.push_str(name),
                    None => out.push_str(&format!("_b{i}")),
                }
            }
            Neutral::App(f, a) => {
                if arg {
                    out.push('(');
                }
                go_r(f, false, stack, out);
                out.push(' ');
                go_n(a, true, stack, out);
                if arg {
                    out.push(')');
                }
            }
            Neutral::Fst(p) => {
                if arg {
                    out.push('(');
                }
                out.push_str("fst ");
                atomic_neutral(p, stack, out);
                if arg {
                    out.push(')');
                }
            }
            Neutral::Snd(p) => {
                if arg {
                    out.push('(');
                }
                out.push_str("snd ");
                atomic_neutral(p, stack, out);
                if arg {
                    out.push(')');
                }
            }
        }
    }

    // Projection scrutinees admit only a variable or a parenthesized term.
    fn atomic_neutral(r: &Neutral, stack: &mut Vec<String>, out: &mut String) {
        match r {
            Neutral::Var(_) | Neutral::Const(_) | Neutral::Bound(_) => {
                go_r(r, false, stack, out)
            }
            _ => {
                out.push('(');
                go_r(r, false, stack, out);
                out.push(')');
            }
        }
    }

    fn binder_name(hint: &str, body: &Normal, stack: &[String]) -> String {
        let mut free = std::collections::BTreeSet::new();
        crate::lf::collect_free_normal(body, &mut free);
        pick_name(hint, &|n: &str| {
            free.contains(n) || stack.iter().any(|s| s == n)
        })
    }
}
