//! The proof-theoretic kernel: beta-normal proof terms checked
//! bidirectionally against a signature, with hereditary substitution and
//! erasure to computational terms.
//!
//! Normal and neutral terms are mutually stratified so that no beta redex is
//! representable: an application head is never a lambda and a projection head
//! is never a pair. Checking and substitution therefore terminate without a
//! fuel parameter.

use crate::syntax::{Expr, Ident};

/// Types of the kernel: atoms (proof types of atomic propositions), trivial
/// truth and falsity, functions and products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LfType {
    Atom(Ident),
    Top,
    Bot,
    Fn(Box<LfType>, Box<LfType>),
    Prod(Box<LfType>, Box<LfType>),
}

impl LfType {
    pub fn func(dom: LfType, cod: LfType) -> LfType {
        LfType::Fn(Box::new(dom), Box::new(cod))
    }

    pub fn prod(left: LfType, right: LfType) -> LfType {
        LfType::Prod(Box::new(left), Box::new(right))
    }

    /// Size used by generators and tests.
    pub fn size(&self) -> usize {
        match self {
            LfType::Atom(_) | LfType::Top | LfType::Bot => 1,
            LfType::Fn(a, b) | LfType::Prod(a, b) => 1 + a.size() + b.size(),
        }
    }
}

/// Beta-normal terms. Binding is locally nameless, as in the computational
/// syntax: binder identifiers are printing hints ignored by equality.
#[derive(Clone, Debug)]
pub enum Normal {
    Bullet,
    Lam(Ident, Box<Normal>),
    Pair(Box<Normal>, Box<Normal>),
    /// `abort{target}(scrutinee)`: ex falso, annotated with its target type
    /// so checking stays synthesis-free.
    Abort(LfType, Box<Neutral>),
    Neutral(Box<Neutral>),
}

/// Terms blocked by a variable or constant at the head.
#[derive(Clone, Debug)]
pub enum Neutral {
    Var(Ident),
    /// Bound variable (de Bruijn index).
    Bound(u32),
    /// Signature constant; never reduces.
    Const(Ident),
    App(Box<Neutral>, Box<Normal>),
    Fst(Box<Neutral>),
    Snd(Box<Neutral>),
}

impl PartialEq for Normal {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Normal::Bullet, Normal::Bullet) => true,
            (Normal::Lam(_, a), Normal::Lam(_, b)) => a == b,
            (Normal::Pair(a1, b1), Normal::Pair(a2, b2)) => a1 == a2 && b1 == b2,
            (Normal::Abort(t1, r1), Normal::Abort(t2, r2)) => t1 == t2 && r1 == r2,
            (Normal::Neutral(a), Normal::Neutral(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Normal {}

impl PartialEq for Neutral {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Neutral::Var(a), Neutral::Var(b)) => a == b,
            (Neutral::Bound(a), Neutral::Bound(b)) => a == b,
            (Neutral::Const(a), Neutral::Const(b)) => a == b,
            (Neutral::App(f1, a1), Neutral::App(f2, a2)) => f1 == f2 && a1 == a2,
            (Neutral::Fst(a), Neutral::Fst(b)) => a == b,
            (Neutral::Snd(a), Neutral::Snd(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Neutral {}

impl Normal {
    /// Builds `[x] body`, abstracting free occurrences of `x`.
    pub fn lam(x: impl Into<Ident>, body: Normal) -> Normal {
        let x = x.into();
        let body = abstract_normal(&body, &x, 0);
        Normal::Lam(x, Box::new(body))
    }

    pub fn pair(left: Normal, right: Normal) -> Normal {
        Normal::Pair(Box::new(left), Box::new(right))
    }

    pub fn neutral(r: Neutral) -> Normal {
        Normal::Neutral(Box::new(r))
    }

    pub fn var(x: impl Into<Ident>) -> Normal {
        Normal::neutral(Neutral::Var(x.into()))
    }

    pub fn size(&self) -> usize {
        match self {
            Normal::Bullet => 1,
            Normal::Lam(_, b) => 1 + b.size(),
            Normal::Pair(a, b) => 1 + a.size() + b.size(),
            Normal::Abort(_, r) => 1 + r.size(),
            Normal::Neutral(r) => r.size(),
        }
    }
}

impl Neutral {
    pub fn app(fun: Neutral, arg: Normal) -> Neutral {
        Neutral::App(Box::new(fun), Box::new(arg))
    }

    pub fn size(&self) -> usize {
        match self {
            Neutral::Var(_) | Neutral::Bound(_) | Neutral::Const(_) => 1,
            Neutral::App(f, a) => 1 + f.size() + a.size(),
            Neutral::Fst(r) | Neutral::Snd(r) => 1 + r.size(),
        }
    }
}

fn abstract_normal(n: &Normal, x: &str, depth: u32) -> Normal {
    match n {
        Normal::Bullet => Normal::Bullet,
        Normal::Lam(h, b) => Normal::Lam(h.clone(), Box::new(abstract_normal(b, x, depth + 1))),
        Normal::Pair(a, b) => Normal::Pair(
            Box::new(abstract_normal(a, x, depth)),
            Box::new(abstract_normal(b, x, depth)),
        ),
        Normal::Abort(t, r) => Normal::Abort(t.clone(), Box::new(abstract_neutral(r, x, depth))),
        Normal::Neutral(r) => Normal::Neutral(Box::new(abstract_neutral(r, x, depth))),
    }
}

fn abstract_neutral(r: &Neutral, x: &str, depth: u32) -> Neutral {
    match r {
        Neutral::Var(y) if y == x => Neutral::Bound(depth),
        Neutral::Var(_) | Neutral::Bound(_) | Neutral::Const(_) => r.clone(),
        Neutral::App(f, a) => Neutral::App(
            Box::new(abstract_neutral(f, x, depth)),
            Box::new(abstract_normal(a, x, depth)),
        ),
        Neutral::Fst(r) => Neutral::Fst(Box::new(abstract_neutral(r, x, depth))),
        Neutral::Snd(r) => Neutral::Snd(Box::new(abstract_neutral(r, x, depth))),
    }
}

/// Opens a binder body with the free variable `x` (index 0 becomes `x`).
pub fn open_normal(body: &Normal, x: &str) -> Normal {
    fn go_n(n: &Normal, depth: u32, x: &str) -> Normal {
        match n {
            Normal::Bullet => Normal::Bullet,
            Normal::Lam(h, b) => Normal::Lam(h.clone(), Box::new(go_n(b, depth + 1, x))),
            Normal::Pair(a, b) => {
                Normal::Pair(Box::new(go_n(a, depth, x)), Box::new(go_n(b, depth, x)))
            }
            Normal::Abort(t, r) => Normal::Abort(t.clone(), Box::new(go_r(r, depth, x))),
            Normal::Neutral(r) => Normal::Neutral(Box::new(go_r(r, depth, x))),
        }
    }
    fn go_r(r: &Neutral, depth: u32, x: &str) -> Neutral {
        match r {
            Neutral::Bound(i) if *i == depth => Neutral::Var(x.into()),
            Neutral::Bound(i) if *i > depth => Neutral::Bound(i - 1),
            Neutral::Var(_) | Neutral::Bound(_) | Neutral::Const(_) => r.clone(),
            Neutral::App(f, a) => {
                Neutral::App(Box::new(go_r(f, depth, x)), Box::new(go_n(a, depth, x)))
            }
            Neutral::Fst(r) => Neutral::Fst(Box::new(go_r(r, depth, x))),
            Neutral::Snd(r) => Neutral::Snd(Box::new(go_r(r, depth, x))),
        }
    }
    go_n(body, 0, x)
}

/// Ordered declarations: atomic proposition types and typed constants
/// standing for axiomatic derivations.
#[derive(Clone, Debug, Default)]
pub struct Signature {
    atoms: Vec<Ident>,
    consts: Vec<(Ident, LfType)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SignatureError {
    #[error("duplicate declaration `{0}`")]
    DuplicateName(Ident),
    #[error("atom `{0}` undeclared")]
    UndeclaredAtom(Ident),
}

impl Signature {
    pub fn new() -> Signature {
        Signature::default()
    }

    pub fn declare_atom(&mut self, name: impl Into<Ident>) -> Result<(), SignatureError> {
        let name = name.into();
        if self.has_name(&name) {
            return Err(SignatureError::DuplicateName(name));
        }
        self.atoms.push(name);
        Ok(())
    }

    pub fn declare_const(
        &mut self,
        name: impl Into<Ident>,
        ty: LfType,
    ) -> Result<(), SignatureError> {
        let name = name.into();
        if self.has_name(&name) {
            return Err(SignatureError::DuplicateName(name));
        }
        // Constant types must be well-formed over earlier declarations.
        check_type(self, &ty).map_err(|e| match e {
            LfError::UndeclaredAtom(a) => SignatureError::UndeclaredAtom(a),
            other => SignatureError::UndeclaredAtom(other.to_string()),
        })?;
        self.consts.push((name, ty));
        Ok(())
    }

    pub fn has_atom(&self, name: &str) -> bool {
        self.atoms.iter().any(|a| a == name)
    }

    pub fn const_type(&self, name: &str) -> Option<&LfType> {
        self.consts.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    pub fn is_const(&self, name: &str) -> bool {
        self.const_type(name).is_some()
    }

    fn has_name(&self, name: &str) -> bool {
        self.has_atom(name) || self.is_const(name)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LfContext {
    entries: Vec<(Ident, LfType)>,
}

impl LfContext {
    pub fn new() -> LfContext {
        LfContext::default()
    }

    pub fn from_entries(entries: Vec<(Ident, LfType)>) -> LfContext {
        LfContext { entries }
    }

    pub fn push(&mut self, name: impl Into<Ident>, ty: LfType) {
        self.entries.push((name.into(), ty));
    }

    pub fn extended(&self, name: impl Into<Ident>, ty: LfType) -> LfContext {
        let mut ctx = self.clone();
        ctx.push(name, ty);
        ctx
    }

    pub fn lookup(&self, name: &str) -> Option<&LfType> {
        self.entries
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, t)| t)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.iter().any(|(n, _)| n == name)
    }

    pub fn entries(&self) -> &[(Ident, LfType)] {
        &self.entries
    }

    /// A name not declared in this context, derived from `hint` by priming.
    pub fn fresh_name(&self, hint: &str) -> Ident {
        let mut name = if hint.is_empty() { "x".to_string() } else { hint.to_string() };
        while self.contains(&name) {
            name.push('\'');
        }
        name
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LfError {
    #[error("atom `{0}` undeclared in the signature")]
    UndeclaredAtom(Ident),
    #[error("unbound variable `{0}`")]
    UnboundVariable(Ident),
    #[error("head of application has non-function type")]
    NotAFunction,
    #[error("head of projection has non-product type")]
    NotAPair,
    #[error("type mismatch: expected {expected:?}, inferred {inferred:?}")]
    TypeMismatch { expected: LfType, inferred: LfType },
    #[error("introduction form does not match the expected type {expected:?}")]
    IntroAgainstWrongType { expected: LfType },
    #[error("abort scrutinee must have the empty type, inferred {inferred:?}")]
    AbortScrutinee { inferred: LfType },
    #[error("cut type disagrees with usage during hereditary substitution")]
    TypeHeadMismatch,
}

/// `alpha type`: all atoms declared in the signature.
pub fn check_type(sig: &Signature, ty: &LfType) -> Result<(), LfError> {
    match ty {
        LfType::Atom(name) => {
            if sig.has_atom(name) {
                Ok(())
            } else {
                Err(LfError::UndeclaredAtom(name.clone()))
            }
        }
        LfType::Top | LfType::Bot => Ok(()),
        LfType::Fn(a, b) | LfType::Prod(a, b) => {
            check_type(sig, a)?;
            check_type(sig, b)
        }
    }
}

/// Synthesizes the unique type of a neutral term.
pub fn infer(sig: &Signature, ctx: &LfContext, r: &Neutral) -> Result<LfType, LfError> {
    match r {
        Neutral::Var(x) => ctx
            .lookup(x)
            .cloned()
            .ok_or_else(|| LfError::UnboundVariable(x.clone())),
        Neutral::Bound(_) => Err(LfError::UnboundVariable("<bound index>".into())),
        Neutral::Const(c) => sig
            .const_type(c)
            .cloned()
            .ok_or_else(|| LfError::UnboundVariable(c.clone())),
        Neutral::App(f, a) => match infer(sig, ctx, f)? {
            LfType::Fn(dom, cod) => {
                check(sig, ctx, a, &dom)?;
                Ok(*cod)
            }
            _ => Err(LfError::NotAFunction),
        },
        Neutral::Fst(p) => match infer(sig, ctx, p)? {
            LfType::Prod(l, _) => Ok(*l),
            _ => Err(LfError::NotAPair),
        },
        Neutral::Snd(p) => match infer(sig, ctx, p)? {
            LfType::Prod(_, r) => Ok(*r),
            _ => Err(LfError::NotAPair),
        },
    }
}

/// Checks a normal term against a type.
pub fn check(sig: &Signature, ctx: &LfContext, n: &Normal, ty: &LfType) -> Result<(), LfError> {
    match n {
        Normal::Bullet => match ty {
            LfType::Top => Ok(()),
            _ => Err(LfError::IntroAgainstWrongType { expected: ty.clone() }),
        },
        Normal::Lam(hint, body) => match ty {
            LfType::Fn(dom, cod) => {
                let x = ctx.fresh_name(hint);
                let opened = open_normal(body, &x);
                check(sig, &ctx.extended(x, (**dom).clone()), &opened, cod)
            }
            _ => Err(LfError::IntroAgainstWrongType { expected: ty.clone() }),
        },
        Normal::Pair(l, r) => match ty {
            LfType::Prod(a, b) => {
                check(sig, ctx, l, a)?;
                check(sig, ctx, r, b)
            }
            _ => Err(LfError::IntroAgainstWrongType { expected: ty.clone() }),
        },
        Normal::Abort(target, scrutinee) => {
            if !lf_type_eq(target, ty) {
                return Err(LfError::TypeMismatch {
                    expected: ty.clone(),
                    inferred: target.clone(),
                });
            }
            match infer(sig, ctx, scrutinee)? {
                LfType::Bot => Ok(()),
                inferred => Err(LfError::AbortScrutinee { inferred }),
            }
        }
        Normal::Neutral(r) => {
            let inferred = infer(sig, ctx, r)?;
            if lf_type_eq(&inferred, ty) {
                Ok(())
            } else {
                Err(LfError::TypeMismatch {
                    expected: ty.clone(),
                    inferred,
                })
            }
        }
    }
}

/// Type equality: structural. Definitional equality here is beta only, and
/// normal forms make that alpha-structural.
pub fn lf_type_eq(a: &LfType, b: &LfType) -> bool {
    a == b
}

/// Term equality on normal forms, up to alpha. No eta.
pub fn lf_eq(m: &Normal, n: &Normal) -> bool {
    m == n
}

/// Hereditary substitution `[N/x:alpha]M`: substitutes `N` for the free
/// variable `x` in `M`, contracting every redex this creates. Recursion is
/// type-directed: a cut at `Fn(a, b)` spawns cuts at the smaller type `a`,
/// so the whole process terminates on all inputs.
pub fn hsubst(n: &Normal, x: &str, alpha: &LfType, m: &Normal) -> Result<Normal, LfError> {
    hsubst_normal(n, x, alpha, m)
}

fn hsubst_normal(n: &Normal, x: &str, alpha: &LfType, m: &Normal) -> Result<Normal, LfError> {
    match m {
        Normal::Bullet => Ok(Normal::Bullet),
        Normal::Lam(h, b) => Ok(Normal::Lam(
            h.clone(),
            Box::new(hsubst_normal(n, x, alpha, b)?),
        )),
        Normal::Pair(l, r) => Ok(Normal::Pair(
            Box::new(hsubst_normal(n, x, alpha, l)?),
            Box::new(hsubst_normal(n, x, alpha, r)?),
        )),
        Normal::Abort(target, scrutinee) => match hsubst_neutral(n, x, alpha, scrutinee)? {
            Cut::Neutral(r) => Ok(Normal::Abort(target.clone(), Box::new(r))),
            // The scrutinee stays at the empty type, which has no
            // introductions: the substituted form is again an abort or
            // neutral.
            Cut::Reduced(Normal::Abort(_, r), _) => Ok(Normal::Abort(target.clone(), r)),
            Cut::Reduced(Normal::Neutral(r), _) => Ok(Normal::Abort(target.clone(), r)),
            Cut::Reduced(..) => Err(LfError::TypeHeadMismatch),
        },
        Normal::Neutral(r) => match hsubst_neutral(n, x, alpha, r)? {
            Cut::Neutral(r) => Ok(Normal::Neutral(Box::new(r))),
            Cut::Reduced(v, _) => Ok(v),
        },
    }
}

/// Substituting into a neutral either leaves it neutral or, when the head
/// was the cut variable, produces a normal together with its type.
enum Cut {
    Neutral(Neutral),
    Reduced(Normal, LfType),
}

fn hsubst_neutral(n: &Normal, x: &str, alpha: &LfType, r: &Neutral) -> Result<Cut, LfError> {
    match r {
        Neutral::Var(y) if y == x => Ok(Cut::Reduced(n.clone(), alpha.clone())),
        Neutral::Var(_) | Neutral::Bound(_) | Neutral::Const(_) => Ok(Cut::Neutral(r.clone())),
        Neutral::App(f, a) => {
            let arg = hsubst_normal(n, x, alpha, a)?;
            match hsubst_neutral(n, x, alpha, f)? {
                Cut::Neutral(f) => Ok(Cut::Neutral(Neutral::App(Box::new(f), Box::new(arg)))),
                Cut::Reduced(Normal::Lam(hint, body), LfType::Fn(dom, cod)) => {
                    // Contract the created redex hereditarily, at the
                    // strictly smaller domain type.
                    let fresh = fresh_for(&arg, &body, &hint);
                    let opened = open_normal(&body, &fresh);
                    let reduced = hsubst_normal(&arg, &fresh, &dom, &opened)?;
                    Ok(Cut::Reduced(reduced, *cod))
                }
                Cut::Reduced(Normal::Neutral(f), LfType::Fn(_, cod)) => Ok(Cut::Reduced(
                    Normal::Neutral(Box::new(Neutral::App(f, Box::new(arg)))),
                    *cod,
                )),
                Cut::Reduced(..) => Err(LfError::TypeHeadMismatch),
            }
        }
        Neutral::Fst(p) => match hsubst_neutral(n, x, alpha, p)? {
            Cut::Neutral(p) => Ok(Cut::Neutral(Neutral::Fst(Box::new(p)))),
            Cut::Reduced(Normal::Pair(l, _), LfType::Prod(a, _)) => Ok(Cut::Reduced(*l, *a)),
            Cut::Reduced(Normal::Neutral(p), LfType::Prod(a, _)) => {
                Ok(Cut::Reduced(Normal::Neutral(Box::new(Neutral::Fst(p))), *a))
            }
            Cut::Reduced(..) => Err(LfError::TypeHeadMismatch),
        },
        Neutral::Snd(p) => match hsubst_neutral(n, x, alpha, p)? {
            Cut::Neutral(p) => Ok(Cut::Neutral(Neutral::Snd(Box::new(p)))),
            Cut::Reduced(Normal::Pair(_, r), LfType::Prod(_, b)) => Ok(Cut::Reduced(*r, *b)),
            Cut::Reduced(Normal::Neutral(p), LfType::Prod(_, b)) => {
                Ok(Cut::Reduced(Normal::Neutral(Box::new(Neutral::Snd(p))), *b))
            }
            Cut::Reduced(..) => Err(LfError::TypeHeadMismatch),
        },
    }
}

fn fresh_for(arg: &Normal, body: &Normal, hint: &str) -> Ident {
    let mut avoid = std::collections::BTreeSet::new();
    collect_free_normal(arg, &mut avoid);
    collect_free_normal(body, &mut avoid);
    let mut name = if hint.is_empty() { "x".to_string() } else { hint.to_string() };
    while avoid.contains(&name) {
        name.push('\'');
    }
    name
}

pub fn collect_free_normal(n: &Normal, acc: &mut std::collections::BTreeSet<Ident>) {
    match n {
        Normal::Bullet => {}
        Normal::Lam(_, b) => collect_free_normal(b, acc),
        Normal::Pair(a, b) => {
            collect_free_normal(a, acc);
            collect_free_normal(b, acc);
        }
        Normal::Abort(_, r) => collect_free_neutral(r, acc),
        Normal::Neutral(r) => collect_free_neutral(r, acc),
    }
}

pub fn collect_free_neutral(r: &Neutral, acc: &mut std::collections::BTreeSet<Ident>) {
    match r {
        Neutral::Var(x) => {
            acc.insert(x.clone());
        }
        Neutral::Bound(_) | Neutral::Const(_) => {}
        Neutral::App(f, a) => {
            collect_free_neutral(f, acc);
            collect_free_normal(a, acc);
        }
        Neutral::Fst(r) | Neutral::Snd(r) => collect_free_neutral(r, acc),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("term is not erasable: {node}")]
pub struct NotErasable {
    pub node: String,
}

/// Maps product-free, abort-free, constant-free proof terms to computational
/// terms: `tt`, lambdas, applications and variables go across homomorphically.
pub fn erase(m: &Normal) -> Result<Expr, NotErasable> {
    match m {
        Normal::Bullet => Ok(Expr::Bullet),
        Normal::Lam(hint, body) => {
            let body = erase(body)?;
            Ok(Expr::Lam(hint.clone(), std::rc::Rc::new(body)))
        }
        Normal::Pair(..) => Err(NotErasable { node: "pair".into() }),
        Normal::Abort(..) => Err(NotErasable { node: "abort".into() }),
        Normal::Neutral(r) => erase_neutral(r),
    }
}

fn erase_neutral(r: &Neutral) -> Result<Expr, NotErasable> {
    match r {
        Neutral::Var(x) => Ok(Expr::Var(x.clone())),
        Neutral::Bound(i) => Ok(Expr::Bound(*i)),
        Neutral::Const(c) => Err(NotErasable {
            node: format!("constant `{c}`"),
        }),
        Neutral::App(f, a) => Ok(Expr::ap(erase_neutral(f)?, erase(a)?)),
        Neutral::Fst(_) => Err(NotErasable { node: "fst".into() }),
        Neutral::Snd(_) => Err(NotErasable { node: "snd".into() }),
    }
}

/// Translates a kernel type into a computational type on the shared
/// fragment: `Top` to `Unit`, `Bot` to `Void`, functions to non-dependent
/// products. Atoms and product types have no computational counterpart.
pub fn to_computational_type(ty: &LfType) -> Result<Expr, NotErasable> {
    match ty {
        LfType::Top => Ok(Expr::Unit),
        LfType::Bot => Ok(Expr::Void),
        LfType::Fn(a, b) => Ok(Expr::arrow(
            to_computational_type(a)?,
            to_computational_type(b)?,
        )),
        LfType::Atom(name) => Err(NotErasable {
            node: format!("atom `{name}`"),
        }),
        LfType::Prod(..) => Err(NotErasable { node: "product type".into() }),
    }
}
