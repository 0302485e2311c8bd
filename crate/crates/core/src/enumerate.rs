//! Exhaustive term generators used by the test suites: closed computational
//! terms by AST size, finitary type expressions by arrow depth, and kernel
//! types and terms by size.
//!
//! Generation is tabulated by (size, binder depth). Depth `d` entries are
//! only populated for sizes that can actually occur under `d` binders, which
//! keeps the tables small.

use std::rc::Rc;

use crate::lf::{LfType, Neutral, Normal};
use crate::syntax::{Expr, Ident};

/// Every closed term with at most `max_size` AST nodes.
pub fn closed_exprs(max_size: usize) -> Vec<Expr> {
    // table[d][s]: terms of exactly s nodes, well-scoped under d binders.
    let mut table: Vec<Vec<Vec<Expr>>> = (0..=max_size)
        .map(|d| vec![Vec::new(); max_size + 1 - d])
        .collect();
    for s in 1..=max_size {
        for d in 0..=(max_size - s) {
            let mut out = Vec::new();
            if s == 1 {
                out.push(Expr::Unit);
                out.push(Expr::Void);
                out.push(Expr::Bullet);
                for i in 0..d {
                    out.push(Expr::Bound(i as u32));
                }
            } else {
                for b in &table[d + 1][s - 1] {
                    out.push(Expr::Lam("x".into(), Rc::new(b.clone())));
                }
                for ls in 1..=(s - 2) {
                    let rs = s - 1 - ls;
                    for f in &table[d][ls] {
                        for a in &table[d][rs] {
                            out.push(Expr::Ap(Rc::new(f.clone()), Rc::new(a.clone())));
                        }
                    }
                    for dom in &table[d][ls] {
                        for cod in &table[d + 1][rs] {
                            out.push(Expr::Pi(
                                Rc::new(dom.clone()),
                                "x".into(),
                                Rc::new(cod.clone()),
                            ));
                        }
                    }
                }
            }
            table[d][s] = out;
        }
    }
    let mut all = Vec::new();
    for s in 1..=max_size {
        all.extend_from_slice(&table[0][s]);
    }
    all
}

/// Type expressions of the finitary fragment up to the given arrow-nesting
/// depth: `Unit`, `Void`, and non-dependent products of shallower types.
pub fn finitary_type_exprs(depth: u32) -> Vec<Expr> {
    let mut cur = vec![Expr::Unit, Expr::Void];
    for _ in 0..depth {
        let mut next = cur.clone();
        for a in &cur {
            for b in &cur {
                next.push(Expr::arrow(a.clone(), b.clone()));
            }
        }
        cur = next;
    }
    cur
}

/// Every kernel type with at most `max_size` nodes over the given atoms.
pub fn lf_types(max_size: usize, atoms: &[&str]) -> Vec<LfType> {
    let mut table: Vec<Vec<LfType>> = vec![Vec::new(); max_size + 1];
    for s in 1..=max_size {
        let mut out = Vec::new();
        if s == 1 {
            out.push(LfType::Top);
            out.push(LfType::Bot);
            for a in atoms {
                out.push(LfType::Atom((*a).to_string()));
            }
        } else {
            for ls in 1..=(s - 2) {
                let rs = s - 1 - ls;
                for a in table[ls].clone() {
                    for b in &table[rs] {
                        out.push(LfType::func(a.clone(), b.clone()));
                        out.push(LfType::prod(a.clone(), b.clone()));
                    }
                }
            }
        }
        table[s] = out;
    }
    table.into_iter().flatten().collect()
}

/// Every well-scoped kernel term with at most `max_size` nodes. Free
/// variables are drawn from `vars`, constant heads from `consts`, and abort
/// target annotations from `abort_targets`. Terms need not be well-typed.
pub fn lf_normals(
    max_size: usize,
    vars: &[Ident],
    consts: &[Ident],
    abort_targets: &[LfType],
) -> Vec<Normal> {
    // normals[d][s] / neutrals[d][s]: exactly s nodes under d binders.
    let mut normals: Vec<Vec<Vec<Normal>>> = (0..=max_size)
        .map(|d| vec![Vec::new(); max_size + 1 - d])
        .collect();
    let mut neutrals: Vec<Vec<Vec<Neutral>>> = (0..=max_size)
        .map(|d| vec![Vec::new(); max_size + 1 - d])
        .collect();
    for s in 1..=max_size {
        for d in 0..=(max_size - s) {
            let mut rs_out = Vec::new();
            if s == 1 {
                for x in vars {
                    rs_out.push(Neutral::Var(x.clone()));
                }
                for i in 0..d {
                    rs_out.push(Neutral::Bound(i as u32));
                }
                for c in consts {
                    rs_out.push(Neutral::Const(c.clone()));
                }
            } else {
                for p in &neutrals[d][s - 1] {
                    rs_out.push(Neutral::Fst(Box::new(p.clone())));
                    rs_out.push(Neutral::Snd(Box::new(p.clone())));
                }
                for ls in 1..=(s - 2) {
                    let ars = s - 1 - ls;
                    for f in &neutrals[d][ls] {
                        for a in &normals[d][ars] {
                            rs_out.push(Neutral::App(Box::new(f.clone()), Box::new(a.clone())));
                        }
                    }
                }
            }
            let mut ns_out: Vec<Normal> = rs_out
                .iter()
                .map(|r| Normal::Neutral(Box::new(r.clone())))
                .collect();
            if s == 1 {
                ns_out.push(Normal::Bullet);
            } else {
                for b in &normals[d + 1][s - 1] {
                    ns_out.push(Normal::Lam("x".into(), Box::new(b.clone())));
                }
                for ls in 1..=(s - 2) {
                    let prs = s - 1 - ls;
                    for l in &normals[d][ls] {
                        for r in &normals[d][prs] {
                            ns_out.push(Normal::Pair(Box::new(l.clone()), Box::new(r.clone())));
                        }
                    }
                }
                for t in abort_targets {
                    for r in &neutrals[d][s - 1] {
                        ns_out.push(Normal::Abort(t.clone(), Box::new(r.clone())));
                    }
                }
            }
            neutrals[d][s] = rs_out;
            normals[d][s] = ns_out;
        }
    }
    let mut all = Vec::new();
    for s in 1..=max_size {
        all.extend_from_slice(&normals[0][s]);
    }
    all
}
