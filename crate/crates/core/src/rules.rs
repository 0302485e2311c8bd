//! The rule catalog for the functional sequent judgement, and validation of
//! derivation trees against it.
//!
//! Matching is first-order and one-pass: every node must be an instance of
//! its named scheme under a single metavariable assignment, with no search.
//! Substitution premises such as the application rule's `[N/x]B` are checked
//! against the kernel's own substitution, up to alpha.

use std::collections::HashMap;
use std::fmt;

use crate::syntax::{alpha_eq, free_vars, open, Context, Expr, Ident};

/// Body of a functional sequent: one of the four categorical judgement forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequentBody {
    /// `A set`
    IsSet(Expr),
    /// `A = B set`
    EqSet(Expr, Expr),
    /// `M in A`
    Ver(Expr, Expr),
    /// `M = N in A`
    EqVer(Expr, Expr, Expr),
}

impl SequentBody {
    pub fn payloads(&self) -> Vec<&Expr> {
        match self {
            SequentBody::IsSet(a) => vec![a],
            SequentBody::EqSet(a, b) => vec![a, b],
            SequentBody::Ver(m, a) => vec![m, a],
            SequentBody::EqVer(m, n, a) => vec![m, n, a],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequentJudgement {
    pub ctx: Context,
    pub body: SequentBody,
}

impl SequentJudgement {
    pub fn new(ctx: Context, body: SequentBody) -> SequentJudgement {
        SequentJudgement { ctx, body }
    }

    pub fn closed(body: SequentBody) -> SequentJudgement {
        SequentJudgement {
            ctx: Context::new(),
            body,
        }
    }
}

/// A rule-instance tree. Validity is established by [`check_derivation`],
/// never by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub rule: String,
    pub conclusion: SequentJudgement,
    pub children: Vec<Derivation>,
}

impl Derivation {
    pub fn new(
        rule: impl Into<String>,
        conclusion: SequentJudgement,
        children: Vec<Derivation>,
    ) -> Derivation {
        Derivation {
            rule: rule.into(),
            conclusion,
            children,
        }
    }
}

pub type MetaId = &'static str;

/// Expression patterns with metavariables. `Meta1` marks a metavariable
/// standing for a binder body (one dangling index); it may only appear
/// directly under `Pi`/`Lam` in a conclusion, or in a premise that extends
/// the context by one hypothesis.
#[derive(Clone, Debug)]
pub enum ExprPat {
    Meta(MetaId),
    Meta1(MetaId),
    Unit,
    Void,
    Bullet,
    Pi(Box<ExprPat>, Box<ExprPat>),
    Lam(Box<ExprPat>),
    Ap(Box<ExprPat>, Box<ExprPat>),
    /// `[arg/x]body`: instantiation of a binder-body metavariable. Checked
    /// against the kernel's substitution once both sides are determined.
    Inst(MetaId, MetaId),
}

#[derive(Clone, Debug)]
pub enum BodyPat {
    IsSet(ExprPat),
    EqSet(ExprPat, ExprPat),
    Ver(ExprPat, ExprPat),
    EqVer(ExprPat, ExprPat, ExprPat),
    /// Matches any body (the empty type's elimination concludes an arbitrary
    /// judgement).
    Any,
}

/// A premise pattern: the conclusion's context, extended by `ext` fresh
/// hypotheses, over a body pattern.
#[derive(Clone, Debug)]
pub struct SequentPat {
    pub ext: Vec<ExprPat>,
    pub body: BodyPat,
}

pub struct RuleScheme {
    pub name: &'static str,
    pub premises: Vec<SequentPat>,
    pub conclusion: BodyPat,
    builtin: Option<fn(&SequentJudgement) -> Result<(), String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RuleError {
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("rule `{rule}` takes {expected} premises, {found} given")]
    ArityMismatch {
        rule: String,
        expected: usize,
        found: usize,
    },
    #[error("node does not match scheme `{rule}`: {detail}")]
    PatternMismatch { rule: String, detail: String },
    #[error("variable `{var}` not declared in the context")]
    ScopeViolation { var: Ident },
}

/// A rejected derivation: the path of child indices from the root to the
/// offending node, and what went wrong there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reject {
    pub path: Vec<usize>,
    pub error: RuleError,
}

impl fmt::Display for Reject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at node {:?}: {}", self.path, self.error)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CtxError {
    #[error("duplicate context name `{0}`")]
    DuplicateName(Ident),
    #[error("no accepted typehood derivation for `{name}`")]
    MissingTypehoodEvidence { name: Ident },
    #[error("typehood evidence for `{name}` rejected: {reason}")]
    BadEvidence { name: Ident, reason: String },
}

/// `x # ctx`: true iff `x` differs from every declared name.
pub fn fresh(x: &str, ctx: &Context) -> bool {
    !ctx.contains(x)
}

/// Context well-formedness against a bundle of typehood evidence: the i-th
/// derivation must be an accepted derivation of `ctx[..i] >> A_i set`.
pub fn check_ctx(ctx: &Context, evidence: &[Derivation]) -> Result<(), CtxError> {
    for (i, (name, ty)) in ctx.entries().iter().enumerate() {
        if !fresh(name, &ctx.prefix(i)) {
            return Err(CtxError::DuplicateName(name.clone()));
        }
        let d = evidence.get(i).ok_or(CtxError::MissingTypehoodEvidence {
            name: name.clone(),
        })?;
        let wanted = SequentJudgement::new(ctx.prefix(i), SequentBody::IsSet(ty.clone()));
        if d.conclusion != wanted {
            return Err(CtxError::MissingTypehoodEvidence { name: name.clone() });
        }
        if let Err(r) = check_derivation(d) {
            return Err(CtxError::BadEvidence {
                name: name.clone(),
                reason: r.to_string(),
            });
        }
    }
    Ok(())
}

fn meta(m: MetaId) -> ExprPat {
    ExprPat::Meta(m)
}
fn meta1(m: MetaId) -> ExprPat {
    ExprPat::Meta1(m)
}
fn pi(dom: ExprPat, cod: ExprPat) -> ExprPat {
    ExprPat::Pi(Box::new(dom), Box::new(cod))
}
fn lam(body: ExprPat) -> ExprPat {
    ExprPat::Lam(Box::new(body))
}
fn ap(f: ExprPat, a: ExprPat) -> ExprPat {
    ExprPat::Ap(Box::new(f), Box::new(a))
}
fn prem(ext: Vec<ExprPat>, body: BodyPat) -> SequentPat {
    SequentPat { ext, body }
}

fn axiom(name: &'static str, conclusion: BodyPat) -> RuleScheme {
    RuleScheme {
        name,
        premises: vec![],
        conclusion,
        builtin: None,
    }
}

fn scheme(name: &'static str, premises: Vec<SequentPat>, conclusion: BodyPat) -> RuleScheme {
    RuleScheme {
        name,
        premises,
        conclusion,
        builtin: None,
    }
}

fn hyp_check(s: &SequentJudgement) -> Result<(), String> {
    match &s.body {
        SequentBody::Ver(Expr::Var(x), a) => match s.ctx.lookup(x) {
            Some(declared) if alpha_eq(declared, a) => Ok(()),
            Some(declared) => Err(format!(
                "hypothesis `{x}` is declared at a different type ({declared:?})"
            )),
            None => Err(format!("`{x}` is not a hypothesis")),
        },
        _ => Err("conclusion is not of the form `x in A` with `x` a variable".into()),
    }
}

/// The fixed rule catalog.
pub fn rule_catalog() -> Vec<RuleScheme> {
    use BodyPat::*;
    vec![
        axiom("UNIT-F", IsSet(ExprPat::Unit)),
        axiom("UNIT-EQ-F", EqSet(ExprPat::Unit, ExprPat::Unit)),
        axiom("UNIT-I", Ver(ExprPat::Bullet, ExprPat::Unit)),
        axiom(
            "UNIT-EQ-I",
            EqVer(ExprPat::Bullet, ExprPat::Bullet, ExprPat::Unit),
        ),
        axiom("VOID-F", IsSet(ExprPat::Void)),
        axiom("VOID-EQ-F", EqSet(ExprPat::Void, ExprPat::Void)),
        scheme(
            "VOID-E",
            vec![prem(vec![], Ver(meta("M"), ExprPat::Void))],
            Any,
        ),
        scheme(
            "PI-F",
            vec![
                prem(vec![], IsSet(meta("A"))),
                prem(vec![meta("A")], IsSet(meta1("B"))),
            ],
            IsSet(pi(meta("A"), meta1("B"))),
        ),
        scheme(
            "PI-EQ-F",
            vec![
                prem(vec![], EqSet(meta("A"), meta("A'"))),
                prem(vec![meta("A")], EqSet(meta1("B"), meta1("B'"))),
            ],
            EqSet(pi(meta("A"), meta1("B")), pi(meta("A'"), meta1("B'"))),
        ),
        scheme(
            "PI-I",
            vec![prem(vec![meta("A")], Ver(meta1("E"), meta1("B")))],
            Ver(lam(meta1("E")), pi(meta("A"), meta1("B"))),
        ),
        scheme(
            "PI-EQ-I",
            vec![prem(
                vec![meta("A")],
                EqVer(meta1("E"), meta1("E'"), meta1("B")),
            )],
            EqVer(
                lam(meta1("E")),
                lam(meta1("E'")),
                pi(meta("A"), meta1("B")),
            ),
        ),
        scheme(
            "PI-E",
            vec![
                prem(vec![], Ver(meta("M"), pi(meta("A"), meta1("B")))),
                prem(vec![], Ver(meta("N"), meta("A"))),
            ],
            Ver(ap(meta("M"), meta("N")), ExprPat::Inst("B", "N")),
        ),
        // The second premise types N = N' at A; the figure's stray A' is
        // read as A.
        scheme(
            "PI-EQ-E",
            vec![
                prem(
                    vec![],
                    EqVer(meta("M"), meta("M'"), pi(meta("A"), meta1("B"))),
                ),
                prem(vec![], EqVer(meta("N"), meta("N'"), meta("A"))),
            ],
            EqVer(
                ap(meta("M"), meta("N")),
                ap(meta("M'"), meta("N'")),
                ExprPat::Inst("B", "N"),
            ),
        ),
        RuleScheme {
            name: "HYP",
            premises: vec![],
            conclusion: Any,
            builtin: Some(hyp_check),
        },
        scheme(
            "SYM",
            vec![prem(vec![], EqVer(meta("N"), meta("M"), meta("A")))],
            EqVer(meta("M"), meta("N"), meta("A")),
        ),
        scheme(
            "TRANS",
            vec![
                prem(vec![], EqVer(meta("M"), meta("N"), meta("A"))),
                prem(vec![], EqVer(meta("N"), meta("P"), meta("A"))),
            ],
            EqVer(meta("M"), meta("P"), meta("A")),
        ),
        scheme(
            "CONV",
            vec![
                prem(vec![], Ver(meta("M"), meta("A"))),
                prem(vec![], EqSet(meta("A"), meta("B"))),
            ],
            Ver(meta("M"), meta("B")),
        ),
    ]
}

struct MatchState {
    asg: HashMap<MetaId, Expr>,
    /// Deferred `open(body_meta, arg) == expected` equations, resolved after
    /// all premises have been matched.
    deferred: Vec<(MetaId, Expr, Expr)>,
}

impl MatchState {
    fn new() -> MatchState {
        MatchState {
            asg: HashMap::new(),
            deferred: Vec::new(),
        }
    }

    fn bind(&mut self, m: MetaId, value: Expr) -> Result<(), String> {
        match self.asg.get(m) {
            Some(prev) if alpha_eq(prev, &value) => Ok(()),
            Some(_) => Err(format!("metavariable {m} matched two different terms")),
            None => {
                self.asg.insert(m, value);
                Ok(())
            }
        }
    }
}

/// Matches a pattern against a concrete expression. `binder` names the
/// hypothesis a premise extends the context by: inside such a premise a
/// `Meta1` value is compared after opening with that variable.
fn match_expr(
    pat: &ExprPat,
    e: &Expr,
    binder: Option<&str>,
    st: &mut MatchState,
) -> Result<(), String> {
    match pat {
        ExprPat::Meta(m) => st.bind(m, e.clone()),
        ExprPat::Meta1(m) => match binder {
            // Premise position: `e` lives under the extending hypothesis.
            Some(x) => match st.asg.get(*m) {
                Some(body) => {
                    if alpha_eq(&open(body, &Expr::var(x)), e) {
                        Ok(())
                    } else {
                        Err(format!("{m} instantiated at `{x}` does not match"))
                    }
                }
                None => {
                    let closed = close_over(e, x);
                    st.asg.insert(m, closed);
                    Ok(())
                }
            },
            // Conclusion position: `e` is a raw binder body.
            None => st.bind(m, e.clone()),
        },
        ExprPat::Unit => expect(matches!(e, Expr::Unit), "Unit", e),
        ExprPat::Void => expect(matches!(e, Expr::Void), "Void", e),
        ExprPat::Bullet => expect(matches!(e, Expr::Bullet), "tt", e),
        ExprPat::Pi(dp, cp) => match e {
            Expr::Pi(d, _, c) => {
                match_expr(dp, d, binder, st)?;
                match_expr(cp, c, None, st)
            }
            _ => Err(format!("expected a Pi type, found {e:?}")),
        },
        ExprPat::Lam(bp) => match e {
            Expr::Lam(_, b) => match_expr(bp, b, None, st),
            _ => Err(format!("expected a lambda, found {e:?}")),
        },
        ExprPat::Ap(fp, ap_) => match e {
            Expr::Ap(f, a) => {
                match_expr(fp, f, binder, st)?;
                match_expr(ap_, a, binder, st)
            }
            _ => Err(format!("expected an application, found {e:?}")),
        },
        ExprPat::Inst(body_m, arg_m) => {
            let arg = st
                .asg
                .get(*arg_m)
                .cloned()
                .ok_or_else(|| format!("metavariable {arg_m} unsolved in substitution position"))?;
            match st.asg.get(*body_m) {
                Some(body) => {
                    if alpha_eq(&open(body, &arg), e) {
                        Ok(())
                    } else {
                        Err(format!("substitution [{arg_m}/x]{body_m} does not match"))
                    }
                }
                None => {
                    st.deferred.push((body_m, arg, e.clone()));
                    Ok(())
                }
            }
        }
    }
}

/// Re-closes a premise payload over the extending hypothesis, turning it back
/// into a binder body for comparison with conclusion metavariables.
fn close_over(e: &Expr, x: &str) -> Expr {
    // Abstract by building a lambda and taking its body.
    match Expr::lam(x, e.clone()) {
        Expr::Lam(_, b) => (*b).clone(),
        _ => unreachable!(),
    }
}

fn expect(ok: bool, wanted: &str, e: &Expr) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(format!("expected {wanted}, found {e:?}"))
    }
}

fn match_body(
    pat: &BodyPat,
    body: &SequentBody,
    binder: Option<&str>,
    st: &mut MatchState,
) -> Result<(), String> {
    match (pat, body) {
        (BodyPat::Any, _) => Ok(()),
        (BodyPat::IsSet(p), SequentBody::IsSet(a)) => match_expr(p, a, binder, st),
        (BodyPat::EqSet(p, q), SequentBody::EqSet(a, b)) => {
            match_expr(p, a, binder, st)?;
            match_expr(q, b, binder, st)
        }
        (BodyPat::Ver(p, q), SequentBody::Ver(m, a)) => {
            match_expr(p, m, binder, st)?;
            match_expr(q, a, binder, st)
        }
        (BodyPat::EqVer(p, q, r), SequentBody::EqVer(m, n, a)) => {
            match_expr(p, m, binder, st)?;
            match_expr(q, n, binder, st)?;
            match_expr(r, a, binder, st)
        }
        _ => Err("judgement form differs from the scheme".into()),
    }
}

fn match_node(scheme: &RuleScheme, d: &Derivation) -> Result<(), String> {
    if let Some(builtin) = scheme.builtin {
        return builtin(&d.conclusion);
    }
    let mut st = MatchState::new();
    match_body(&scheme.conclusion, &d.conclusion.body, None, &mut st)?;
    for (i, (pat, child)) in scheme.premises.iter().zip(&d.children).enumerate() {
        let parent_ctx = &d.conclusion.ctx;
        let child_ctx = &child.conclusion.ctx;
        if child_ctx.len() != parent_ctx.len() + pat.ext.len() {
            return Err(format!(
                "premise {i}: context has {} entries, expected {}",
                child_ctx.len(),
                parent_ctx.len() + pat.ext.len()
            ));
        }
        if child_ctx.entries()[..parent_ctx.len()] != *parent_ctx.entries() {
            return Err(format!(
                "premise {i}: context does not extend the conclusion's context"
            ));
        }
        let mut binder = None;
        for (j, ext_pat) in pat.ext.iter().enumerate() {
            let (name, ty) = &child_ctx.entries()[parent_ctx.len() + j];
            if parent_ctx.contains(name) {
                return Err(format!("premise {i}: hypothesis `{name}` is not fresh"));
            }
            match_expr(ext_pat, ty, None, &mut st)
                .map_err(|e| format!("premise {i}, hypothesis `{name}`: {e}"))?;
            binder = Some(name.as_str());
        }
        match_body(&pat.body, &child.conclusion.body, binder, &mut st)
            .map_err(|e| format!("premise {i}: {e}"))?;
    }
    for (body_m, arg, expected) in std::mem::take(&mut st.deferred) {
        let body = st
            .asg
            .get(body_m)
            .ok_or_else(|| format!("metavariable {body_m} left unsolved"))?;
        if !alpha_eq(&open(body, &arg), &expected) {
            return Err(format!(
                "substituted type [{:?}/x]{body_m} is not {expected:?}",
                arg
            ));
        }
    }
    Ok(())
}

/// Validates every node of a derivation against the catalog.
pub fn check_derivation(d: &Derivation) -> Result<(), Reject> {
    let catalog = rule_catalog();
    let mut path = Vec::new();
    check_node(d, &catalog, &mut path)
}

fn check_node(
    d: &Derivation,
    catalog: &[RuleScheme],
    path: &mut Vec<usize>,
) -> Result<(), Reject> {
    let reject = |error| {
        Err(Reject {
            path: path.clone(),
            error,
        })
    };
    for payload in d.conclusion.body.payloads() {
        for v in free_vars(payload) {
            if !d.conclusion.ctx.contains(&v) {
                return reject(RuleError::ScopeViolation { var: v });
            }
        }
    }
    let scheme = match catalog.iter().find(|s| s.name == d.rule) {
        Some(s) => s,
        None => return reject(RuleError::UnknownRule(d.rule.clone())),
    };
    if d.children.len() != scheme.premises.len() {
        return reject(RuleError::ArityMismatch {
            rule: d.rule.clone(),
            expected: scheme.premises.len(),
            found: d.children.len(),
        });
    }
    if let Err(detail) = match_node(scheme, d) {
        return reject(RuleError::PatternMismatch {
            rule: d.rule.clone(),
            detail,
        });
    }
    for (i, child) in d.children.iter().enumerate() {
        path.push(i);
        check_node(child, catalog, path)?;
        path.pop();
    }
    Ok(())
}
