//! Terms of the computational theory: variables, `Unit`, `Void`, the trivial
//! element `tt`, dependent products, lambdas and application.
//!
//! Binding is locally nameless: free variables are names, bound variables are
//! de Bruijn indices. Surface names are kept on binders as printing hints and
//! ignored by equality, so [`alpha_eq`] is plain structural equality.

use std::collections::BTreeSet;
use std::rc::Rc;

pub type Ident = String;

#[derive(Clone, Debug)]
pub enum Expr {
    /// Free variable.
    Var(Ident),
    /// Bound variable (de Bruijn index). Well-formed terms built through the
    /// constructors never expose a dangling index.
    Bound(u32),
    Unit,
    Void,
    /// The trivial element `tt`.
    Bullet,
    /// `Pi (x : dom) cod`; the codomain binds index 0. The identifier is a
    /// printing hint only.
    Pi(Rc<Expr>, Ident, Rc<Expr>),
    /// `\x. body`; the body binds index 0.
    Lam(Ident, Rc<Expr>),
    Ap(Rc<Expr>, Rc<Expr>),
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Expr::Var(a), Expr::Var(b)) => a == b,
            (Expr::Bound(a), Expr::Bound(b)) => a == b,
            (Expr::Unit, Expr::Unit) => true,
            (Expr::Void, Expr::Void) => true,
            (Expr::Bullet, Expr::Bullet) => true,
            (Expr::Pi(d1, _, c1), Expr::Pi(d2, _, c2)) => d1 == d2 && c1 == c2,
            (Expr::Lam(_, b1), Expr::Lam(_, b2)) => b1 == b2,
            (Expr::Ap(f1, a1), Expr::Ap(f2, a2)) => f1 == f2 && a1 == a2,
            _ => false,
        }
    }
}

impl Eq for Expr {}

impl Expr {
    pub fn var(name: impl Into<Ident>) -> Expr {
        Expr::Var(name.into())
    }

    pub fn ap(fun: Expr, arg: Expr) -> Expr {
        Expr::Ap(Rc::new(fun), Rc::new(arg))
    }

    /// Builds `\x. body`, abstracting free occurrences of `x` in `body`.
    pub fn lam(x: impl Into<Ident>, body: Expr) -> Expr {
        let x = x.into();
        let body = abstract_var(&body, &x, 0);
        Expr::Lam(x, Rc::new(body))
    }

    /// Builds `Pi (x : dom) cod`, abstracting free occurrences of `x` in `cod`.
    pub fn pi(dom: Expr, x: impl Into<Ident>, cod: Expr) -> Expr {
        let x = x.into();
        let cod = abstract_var(&cod, &x, 0);
        Expr::Pi(Rc::new(dom), x, Rc::new(cod))
    }

    /// Non-dependent product `Pi (_ : dom) cod`.
    pub fn arrow(dom: Expr, cod: Expr) -> Expr {
        Expr::Pi(Rc::new(dom), "_".into(), Rc::new(cod))
    }

    pub fn is_closed(&self) -> bool {
        fn go(e: &Expr, depth: u32) -> bool {
            match e {
                Expr::Var(_) => false,
                Expr::Bound(i) => *i < depth,
                Expr::Unit | Expr::Void | Expr::Bullet => true,
                Expr::Pi(d, _, c) => go(d, depth) && go(c, depth + 1),
                Expr::Lam(_, b) => go(b, depth + 1),
                Expr::Ap(f, a) => go(f, depth) && go(a, depth),
            }
        }
        go(self, 0)
    }
}

fn abstract_var(e: &Expr, x: &str, depth: u32) -> Expr {
    match e {
        Expr::Var(y) if y == x => Expr::Bound(depth),
        Expr::Var(_) | Expr::Bound(_) | Expr::Unit | Expr::Void | Expr::Bullet => e.clone(),
        Expr::Pi(d, h, c) => Expr::Pi(
            Rc::new(abstract_var(d, x, depth)),
            h.clone(),
            Rc::new(abstract_var(c, x, depth + 1)),
        ),
        Expr::Lam(h, b) => Expr::Lam(h.clone(), Rc::new(abstract_var(b, x, depth + 1))),
        Expr::Ap(f, a) => Expr::Ap(
            Rc::new(abstract_var(f, x, depth)),
            Rc::new(abstract_var(a, x, depth)),
        ),
    }
}

/// Replaces `Bound(depth)` by `arg`, decrementing indices above it. This is
/// how a binder's body is instantiated.
pub fn open(body: &Expr, arg: &Expr) -> Expr {
    fn go(e: &Expr, depth: u32, arg: &Expr) -> Expr {
        match e {
            Expr::Bound(i) if *i == depth => shift(arg, depth),
            Expr::Bound(i) if *i > depth => Expr::Bound(i - 1),
            Expr::Var(_) | Expr::Bound(_) | Expr::Unit | Expr::Void | Expr::Bullet => e.clone(),
            Expr::Pi(d, h, c) => Expr::Pi(
                Rc::new(go(d, depth, arg)),
                h.clone(),
                Rc::new(go(c, depth + 1, arg)),
            ),
            Expr::Lam(h, b) => Expr::Lam(h.clone(), Rc::new(go(b, depth + 1, arg))),
            Expr::Ap(f, a) => Expr::Ap(Rc::new(go(f, depth, arg)), Rc::new(go(a, depth, arg))),
        }
    }
    fn shift(e: &Expr, by: u32) -> Expr {
        if by == 0 {
            return e.clone();
        }
        fn go(e: &Expr, cutoff: u32, by: u32) -> Expr {
            match e {
                Expr::Bound(i) if *i >= cutoff => Expr::Bound(i + by),
                Expr::Var(_) | Expr::Bound(_) | Expr::Unit | Expr::Void | Expr::Bullet => e.clone(),
                Expr::Pi(d, h, c) => Expr::Pi(
                    Rc::new(go(d, cutoff, by)),
                    h.clone(),
                    Rc::new(go(c, cutoff + 1, by)),
                ),
                Expr::Lam(h, b) => Expr::Lam(h.clone(), Rc::new(go(b, cutoff + 1, by))),
                Expr::Ap(f, a) => {
                    Expr::Ap(Rc::new(go(f, cutoff, by)), Rc::new(go(a, cutoff, by)))
                }
            }
        }
        go(e, 0, by)
    }
    go(body, 0, arg)
}

/// Capture-avoiding substitution of `arg` for the free variable `x` in `body`.
/// Capture cannot occur: bound variables are indices, never names.
pub fn subst(body: &Expr, x: &str, arg: &Expr) -> Expr {
    match body {
        Expr::Var(y) if y == x => arg.clone(),
        Expr::Var(_) | Expr::Bound(_) | Expr::Unit | Expr::Void | Expr::Bullet => body.clone(),
        Expr::Pi(d, h, c) => Expr::Pi(
            Rc::new(subst(d, x, arg)),
            h.clone(),
            Rc::new(subst(c, x, arg)),
        ),
        Expr::Lam(h, b) => Expr::Lam(h.clone(), Rc::new(subst(b, x, arg))),
        Expr::Ap(f, a) => Expr::Ap(Rc::new(subst(f, x, arg)), Rc::new(subst(a, x, arg))),
    }
}

/// Alpha equivalence. Structural by construction.
pub fn alpha_eq(a: &Expr, b: &Expr) -> bool {
    a == b
}

pub fn free_vars(e: &Expr) -> BTreeSet<Ident> {
    fn go(e: &Expr, acc: &mut BTreeSet<Ident>) {
        match e {
            Expr::Var(x) => {
                acc.insert(x.clone());
            }
            Expr::Bound(_) | Expr::Unit | Expr::Void | Expr::Bullet => {}
            Expr::Pi(d, _, c) => {
                go(d, acc);
                go(c, acc);
            }
            Expr::Lam(_, b) => go(b, acc),
            Expr::Ap(f, a) => {
                go(f, acc);
                go(a, acc);
            }
        }
    }
    let mut acc = BTreeSet::new();
    go(e, &mut acc);
    acc
}

/// Number of AST nodes.
pub fn size(e: &Expr) -> usize {
    match e {
        Expr::Var(_) | Expr::Bound(_) | Expr::Unit | Expr::Void | Expr::Bullet => 1,
        Expr::Pi(d, _, c) => 1 + size(d) + size(c),
        Expr::Lam(_, b) => 1 + size(b),
        Expr::Ap(f, a) => 1 + size(f) + size(a),
    }
}

/// An ordered telescope of hypotheses `x : A`. Later types may mention
/// earlier names (as free variables).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Context {
    entries: Vec<(Ident, Expr)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("environment has {env} entries but context has {ctx}")]
pub struct LengthMismatch {
    pub env: usize,
    pub ctx: usize,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub fn from_entries(entries: Vec<(Ident, Expr)>) -> Context {
        Context { entries }
    }

    pub fn push(&mut self, name: impl Into<Ident>, ty: Expr) {
        self.entries.push((name.into(), ty));
    }

    pub fn extended(&self, name: impl Into<Ident>, ty: Expr) -> Context {
        let mut ctx = self.clone();
        ctx.push(name, ty);
        ctx
    }

    pub fn lookup(&self, name: &str) -> Option<&Expr> {
        self.entries
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, t)| t)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.iter().any(|(n, _)| n == name)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(Ident, Expr)] {
        &self.entries
    }

    /// The prefix telescope of the first `n` entries.
    pub fn prefix(&self, n: usize) -> Context {
        Context {
            entries: self.entries[..n].to_vec(),
        }
    }
}

/// Closed terms standing in for a context's variables, in telescope order.
pub type Environment = Vec<Expr>;

/// Simultaneous substitution `[env/ctx]e`: each context variable is replaced
/// by the corresponding environment term, left to right.
pub fn subst_env(e: &Expr, env: &[Expr], ctx: &Context) -> Result<Expr, LengthMismatch> {
    if env.len() != ctx.len() {
        return Err(LengthMismatch {
            env: env.len(),
            ctx: ctx.len(),
        });
    }
    let mut out = e.clone();
    for ((name, _), term) in ctx.entries().iter().zip(env) {
        out = subst(&out, name, term);
    }
    Ok(out)
}
