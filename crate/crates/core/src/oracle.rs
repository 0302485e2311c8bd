//! Semantic checking on the finitary fragment: non-dependent products over
//! `Unit` and `Void`. On this fragment every type has finitely many
//! equivalence classes of verifications, so membership, member equality,
//! type equality and functional sequents are decided by evaluation plus
//! exhaustive enumeration of canonical representatives.

use crate::eval::{eval, EvalOutcome};
use crate::rules::{SequentBody, SequentJudgement};
use crate::syntax::{open, subst_env, Context, Environment, Expr};

/// Normalized descriptor of a type in the decidable fragment, with the
/// source expression it classified from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitaryType {
    pub shape: FinShape,
    pub src: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FinShape {
    Unit,
    Void,
    Arrow(Box<FinitaryType>, Box<FinitaryType>),
}

impl FinitaryType {
    /// Number of equivalence classes of verifications.
    pub fn class_count(&self) -> u64 {
        match &self.shape {
            FinShape::Unit => 1,
            FinShape::Void => 0,
            FinShape::Arrow(dom, cod) => {
                let d = dom.class_count();
                let c = cod.class_count();
                c.checked_pow(d.min(u32::MAX as u64) as u32).unwrap_or(u64::MAX)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    /// Refuted, with a description of the separating witness.
    No(String),
    Unknown(UnknownReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnknownReason {
    Fuel,
    NonFinitary,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("terms are not members of the type: {0}")]
    NotMembers(String),
    #[error("type has {0} verification classes, over the configured bound")]
    RepresentativeExplosion(u64),
    #[error("context entry `{name}` does not classify as finitary")]
    NonFinitaryContext { name: String },
}

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Beta-step budget per evaluation.
    pub fuel: u64,
    /// Bound on representative counts.
    pub max_classes: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            fuel: 10_000,
            max_classes: 256,
        }
    }
}

/// Evaluates a closed type expression and classifies it, mapping `Unit`,
/// `Void` and non-dependent `Pi` into the finitary fragment. Dependent
/// products, stuck terms and fuel exhaustion are `Unknown`.
pub fn classify_finitary(a: &Expr, cfg: &OracleConfig) -> Result<FinitaryType, UnknownReason> {
    let value = match eval(a, cfg.fuel) {
        Ok(EvalOutcome::Value(v)) => v,
        Ok(EvalOutcome::OutOfFuel) => return Err(UnknownReason::Fuel),
        Ok(EvalOutcome::Stuck(_)) | Err(_) => return Err(UnknownReason::NonFinitary),
    };
    let shape = match &value {
        Expr::Unit => FinShape::Unit,
        Expr::Void => FinShape::Void,
        Expr::Pi(dom, _, cod) => {
            if !cod.is_closed() {
                // Codomain mentions the binder: dependent, out of fragment.
                return Err(UnknownReason::NonFinitary);
            }
            let d = classify_finitary(dom, cfg)?;
            let c = classify_finitary(cod, cfg)?;
            FinShape::Arrow(Box::new(d), Box::new(c))
        }
        _ => return Err(UnknownReason::NonFinitary),
    };
    Ok(FinitaryType { shape, src: value })
}

/// One closed canonical inhabitant per equivalence class. Class counts in
/// this fragment never exceed one, but the bound is enforced regardless.
pub fn representatives(f: &FinitaryType, cfg: &OracleConfig) -> Result<Vec<Expr>, OracleError> {
    let count = f.class_count();
    if count > cfg.max_classes {
        return Err(OracleError::RepresentativeExplosion(count));
    }
    Ok(match &f.shape {
        FinShape::Unit => vec![Expr::Bullet],
        FinShape::Void => vec![],
        FinShape::Arrow(dom, cod) => {
            let dom_reps = representatives(dom, cfg)?;
            if dom_reps.is_empty() {
                // Vacuous function space: a single class; any lambda will do.
                vec![Expr::lam("x", Expr::var("x"))]
            } else {
                // Every type in the fragment has at most one domain class, so
                // functions are exactly the constant functions.
                representatives(cod, cfg)?
                    .into_iter()
                    .map(|r| Expr::lam("_", r))
                    .collect()
            }
        }
    })
}

/// `M in A`: does `M` evaluate to a canonical verification of `A`?
pub fn sem_ver(m: &Expr, a: &Expr, cfg: &OracleConfig) -> Verdict {
    match classify_finitary(a, cfg) {
        Ok(f) => sem_ver_fin(m, &f, cfg),
        Err(r) => Verdict::Unknown(r),
    }
}

fn sem_ver_fin(m: &Expr, f: &FinitaryType, cfg: &OracleConfig) -> Verdict {
    let value = match eval(m, cfg.fuel) {
        Ok(EvalOutcome::Value(v)) => v,
        Ok(EvalOutcome::OutOfFuel) => return Verdict::Unknown(UnknownReason::Fuel),
        Ok(EvalOutcome::Stuck(s)) => return Verdict::No(format!("evaluation is stuck at {s:?}")),
        Err(e) => return Verdict::No(format!("{e}")),
    };
    match &f.shape {
        FinShape::Unit => {
            if value == Expr::Bullet {
                Verdict::Yes
            } else {
                Verdict::No(format!("{value:?} is not the canonical verification tt"))
            }
        }
        FinShape::Void => Verdict::No("Void has no canonical verifications".into()),
        FinShape::Arrow(dom, cod) => {
            let body = match &value {
                Expr::Lam(_, body) => body,
                _ => return Verdict::No(format!("{value:?} is not a lambda")),
            };
            let reps = match representatives(dom, cfg) {
                Ok(r) => r,
                Err(OracleError::RepresentativeExplosion(_)) => {
                    return Verdict::Unknown(UnknownReason::NonFinitary)
                }
                Err(e) => return Verdict::No(e.to_string()),
            };
            for r in &reps {
                match sem_ver_fin(&open(body, r), cod, cfg) {
                    Verdict::Yes => {}
                    other => return decorate(other, r),
                }
            }
            // Functionality: equal inputs must yield equal outputs.
            for r0 in &reps {
                for r1 in &reps {
                    if sem_eq_ver_fin(r0, r1, dom, cfg) != Verdict::Yes {
                        continue;
                    }
                    match sem_eq_ver_fin(&open(body, r0), &open(body, r1), cod, cfg) {
                        Verdict::Yes => {}
                        other => return decorate(other, r0),
                    }
                }
            }
            Verdict::Yes
        }
    }
}

fn decorate(v: Verdict, witness: &Expr) -> Verdict {
    match v {
        Verdict::No(msg) => Verdict::No(format!("at argument {witness:?}: {msg}")),
        other => other,
    }
}

/// `M = N in A`: equality of verifications. Preconditions `M in A` and
/// `N in A` are checked and reported as [`OracleError::NotMembers`].
pub fn sem_eq_ver(
    m: &Expr,
    n: &Expr,
    a: &Expr,
    cfg: &OracleConfig,
) -> Result<Verdict, OracleError> {
    let f = match classify_finitary(a, cfg) {
        Ok(f) => f,
        Err(r) => return Ok(Verdict::Unknown(r)),
    };
    for (label, t) in [("left", m), ("right", n)] {
        match sem_ver_fin(t, &f, cfg) {
            Verdict::Yes => {}
            Verdict::No(msg) => {
                return Err(OracleError::NotMembers(format!(
                    "{label} term is not a member: {msg}"
                )))
            }
            unknown => return Ok(unknown),
        }
    }
    Ok(sem_eq_ver_fin(m, n, &f, cfg))
}

/// Equality at a finitary type, assuming both sides are members.
fn sem_eq_ver_fin(m: &Expr, n: &Expr, f: &FinitaryType, cfg: &OracleConfig) -> Verdict {
    match &f.shape {
        // One class: equality at Unit is trivial.
        FinShape::Unit => Verdict::Yes,
        FinShape::Void => Verdict::Yes,
        FinShape::Arrow(dom, cod) => {
            let reps = match representatives(dom, cfg) {
                Ok(r) => r,
                Err(_) => return Verdict::Unknown(UnknownReason::NonFinitary),
            };
            for r in &reps {
                let lhs = Expr::ap(m.clone(), r.clone());
                let rhs = Expr::ap(n.clone(), r.clone());
                match sem_eq_ver_fin(&lhs, &rhs, cod, cfg) {
                    Verdict::Yes => {}
                    other => return decorate(other, r),
                }
            }
            Verdict::Yes
        }
    }
}

/// `A = B set`: mutual inclusion of verifications and of the equality
/// relations. Representative cross-checks alone are too coarse here — a
/// vacuous-domain product admits every lambda while a `Unit`-domain one does
/// not, yet both have a single representative — so the decision recurses on
/// the classified shapes: all empty types are equal, products with empty
/// domains are equal to each other regardless of codomain, and otherwise
/// equality is componentwise.
pub fn sem_eq_type(a: &Expr, b: &Expr, cfg: &OracleConfig) -> Verdict {
    let (fa, fb) = match (classify_finitary(a, cfg), classify_finitary(b, cfg)) {
        (Ok(fa), Ok(fb)) => (fa, fb),
        (Err(r), _) | (_, Err(r)) => return Verdict::Unknown(r),
    };
    match eq_fin_type(&fa, &fb) {
        Ok(()) => Verdict::Yes,
        Err(msg) => Verdict::No(msg),
    }
}

fn eq_fin_type(a: &FinitaryType, b: &FinitaryType) -> Result<(), String> {
    if a.class_count() == 0 && b.class_count() == 0 {
        // No verifications on either side, and empty equality relations.
        return Ok(());
    }
    if (a.class_count() == 0) != (b.class_count() == 0) {
        return Err(format!(
            "{:?} is empty but {:?} is inhabited",
            if a.class_count() == 0 { &a.src } else { &b.src },
            if a.class_count() == 0 { &b.src } else { &a.src },
        ));
    }
    match (&a.shape, &b.shape) {
        (FinShape::Unit, FinShape::Unit) => Ok(()),
        (FinShape::Arrow(a1, b1), FinShape::Arrow(a2, b2)) => {
            let vac1 = a1.class_count() == 0;
            let vac2 = a2.class_count() == 0;
            if vac1 && vac2 {
                // Both function spaces are vacuous: every lambda inhabits
                // both and all members are equal, whatever the codomains.
                return Ok(());
            }
            if vac1 != vac2 {
                // One side admits every lambda, the other constrains its
                // members (e.g. λx. x x separates them).
                return Err(format!(
                    "domain {:?} is empty but domain {:?} is inhabited",
                    if vac1 { &a1.src } else { &a2.src },
                    if vac1 { &a2.src } else { &a1.src },
                ));
            }
            eq_fin_type(a1, a2)?;
            eq_fin_type(b1, b2)
        }
        _ => Err(format!(
            "{:?} and {:?} have different canonical forms",
            a.src, b.src
        )),
    }
}

/// All environments for a context, built from representatives of the
/// (substituted) entry types, in lexicographic order.
pub fn envs(ctx: &Context, cfg: &OracleConfig) -> Result<Vec<Environment>, OracleError> {
    let mut acc: Vec<Environment> = vec![vec![]];
    for (i, (name, ty)) in ctx.entries().iter().enumerate() {
        let prefix = ctx.prefix(i);
        let mut next = Vec::new();
        for env in &acc {
            let ty_inst = subst_env(ty, env, &prefix).expect("prefix length matches");
            let f = classify_finitary(&ty_inst, cfg).map_err(|_| {
                OracleError::NonFinitaryContext { name: name.clone() }
            })?;
            for r in representatives(&f, cfg)? {
                let mut e = env.clone();
                e.push(r);
                next.push(e);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Decides a functional sequent: the substituted categorical judgement must
/// hold under every environment, and equal environments must yield equal
/// results (functionality).
pub fn sem_sequent(s: &SequentJudgement, cfg: &OracleConfig) -> Verdict {
    let environments = match envs(&s.ctx, cfg) {
        Ok(e) => e,
        Err(OracleError::NonFinitaryContext { .. }) => {
            return Verdict::Unknown(UnknownReason::NonFinitary)
        }
        Err(OracleError::RepresentativeExplosion(_)) => {
            return Verdict::Unknown(UnknownReason::NonFinitary)
        }
        Err(e) => return Verdict::No(e.to_string()),
    };
    // Unary condition: the substituted judgement holds per environment.
    for env in &environments {
        match categorical(&s.body, env, &s.ctx, cfg) {
            Verdict::Yes => {}
            Verdict::No(msg) => {
                return Verdict::No(format!("environment {env:?} refutes the sequent: {msg}"))
            }
            unknown => return unknown,
        }
    }
    // Binary condition: componentwise-equal environments yield equal results.
    for e0 in &environments {
        for e1 in &environments {
            match env_equal(e0, e1, &s.ctx, cfg) {
                Verdict::Yes => {}
                Verdict::No(_) => continue,
                unknown => return unknown,
            }
            match functional(&s.body, e0, e1, &s.ctx, cfg) {
                Verdict::Yes => {}
                Verdict::No(msg) => {
                    return Verdict::No(format!(
                        "equal environments {e0:?} and {e1:?} separate the sequent: {msg}"
                    ))
                }
                unknown => return unknown,
            }
        }
    }
    Verdict::Yes
}

fn env_equal(e0: &[Expr], e1: &[Expr], ctx: &Context, cfg: &OracleConfig) -> Verdict {
    for (i, (_, ty)) in ctx.entries().iter().enumerate() {
        let ty_inst = subst_env(ty, &e0[..i], &ctx.prefix(i)).expect("prefix length matches");
        match sem_eq_ver(&e0[i], &e1[i], &ty_inst, cfg) {
            Ok(Verdict::Yes) => {}
            Ok(other) => return other,
            Err(e) => return Verdict::No(e.to_string()),
        }
    }
    Verdict::Yes
}

fn categorical(body: &SequentBody, env: &[Expr], ctx: &Context, cfg: &OracleConfig) -> Verdict {
    let inst = |e: &Expr| subst_env(e, env, ctx).expect("env length checked");
    match body {
        SequentBody::IsSet(a) => match classify_finitary(&inst(a), cfg) {
            Ok(_) => Verdict::Yes,
            Err(r) => Verdict::Unknown(r),
        },
        SequentBody::EqSet(a, b) => sem_eq_type(&inst(a), &inst(b), cfg),
        SequentBody::Ver(m, a) => sem_ver(&inst(m), &inst(a), cfg),
        SequentBody::EqVer(m, n, a) => {
            match sem_eq_ver(&inst(m), &inst(n), &inst(a), cfg) {
                Ok(v) => v,
                Err(e) => Verdict::No(e.to_string()),
            }
        }
    }
}

fn functional(
    body: &SequentBody,
    e0: &[Expr],
    e1: &[Expr],
    ctx: &Context,
    cfg: &OracleConfig,
) -> Verdict {
    let at0 = |e: &Expr| subst_env(e, e0, ctx).expect("env length checked");
    let at1 = |e: &Expr| subst_env(e, e1, ctx).expect("env length checked");
    match body {
        SequentBody::IsSet(a) => sem_eq_type(&at0(a), &at1(a), cfg),
        SequentBody::EqSet(a, b) => sem_eq_type(&at0(a), &at1(b), cfg),
        SequentBody::Ver(m, a) => match sem_eq_ver(&at0(m), &at1(m), &at0(a), cfg) {
            Ok(v) => v,
            Err(e) => Verdict::No(e.to_string()),
        },
        SequentBody::EqVer(m, n, a) => match sem_eq_ver(&at0(m), &at1(n), &at0(a), cfg) {
            Ok(v) => v,
            Err(e) => Verdict::No(e.to_string()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn unit_arrow_unit() -> Expr {
        Expr::arrow(Expr::Unit, Expr::Unit)
    }

    #[test]
    fn classify_basics() {
        assert_eq!(classify_finitary(&Expr::Unit, &cfg()).unwrap().shape, FinShape::Unit);
        let f = classify_finitary(&Expr::pi(Expr::Unit, "x", Expr::Unit), &cfg()).unwrap();
        assert!(matches!(f.shape, FinShape::Arrow(..)));
        // Evaluates first: (\t. t) Void classifies as Void.
        let e = Expr::ap(Expr::lam("t", Expr::var("t")), Expr::Void);
        assert_eq!(classify_finitary(&e, &cfg()).unwrap().shape, FinShape::Void);
    }

    #[test]
    fn classify_dependent_is_unknown() {
        // Pi (x : Unit) ((\y. Unit) x) has a codomain mentioning the binder.
        let cod = Expr::ap(Expr::lam("y", Expr::Unit), Expr::var("x"));
        let dep = Expr::pi(Expr::Unit, "x", cod);
        assert_eq!(
            classify_finitary(&dep, &cfg()),
            Err(UnknownReason::NonFinitary)
        );
    }

    #[test]
    fn class_counts() {
        let u = classify_finitary(&Expr::Unit, &cfg()).unwrap();
        let v = classify_finitary(&Expr::Void, &cfg()).unwrap();
        assert_eq!(u.class_count(), 1);
        assert_eq!(v.class_count(), 0);
        let uu = classify_finitary(&unit_arrow_unit(), &cfg()).unwrap();
        assert_eq!(uu.class_count(), 1);
        let vu = classify_finitary(&Expr::arrow(Expr::Void, Expr::Unit), &cfg()).unwrap();
        assert_eq!(vu.class_count(), 1);
        let uv = classify_finitary(&Expr::arrow(Expr::Unit, Expr::Void), &cfg()).unwrap();
        assert_eq!(uv.class_count(), 0);
    }

    #[test]
    fn representative_sets() {
        let u = classify_finitary(&Expr::Unit, &cfg()).unwrap();
        assert_eq!(representatives(&u, &cfg()).unwrap(), vec![Expr::Bullet]);
        let v = classify_finitary(&Expr::Void, &cfg()).unwrap();
        assert!(representatives(&v, &cfg()).unwrap().is_empty());
        let uu = classify_finitary(&unit_arrow_unit(), &cfg()).unwrap();
        let reps = representatives(&uu, &cfg()).unwrap();
        assert_eq!(reps.len(), 1);
        // Any lambda at Unit -> Unit is equal to the representative.
        let id = Expr::lam("x", Expr::var("x"));
        assert_eq!(
            sem_eq_ver(&reps[0], &id, &unit_arrow_unit(), &cfg()),
            Ok(Verdict::Yes)
        );
    }

    #[test]
    fn sem_ver_basics() {
        assert_eq!(sem_ver(&Expr::Bullet, &Expr::Unit, &cfg()), Verdict::Yes);
        assert!(matches!(
            sem_ver(&Expr::Bullet, &Expr::Void, &cfg()),
            Verdict::No(_)
        ));
        // Vacuous membership at Void -> Void.
        let id = Expr::lam("x", Expr::var("x"));
        assert_eq!(
            sem_ver(&id, &Expr::pi(Expr::Void, "x", Expr::Void), &cfg()),
            Verdict::Yes
        );
        // Evaluation happens first.
        let e = Expr::ap(Expr::lam("x", Expr::var("x")), Expr::Bullet);
        assert_eq!(sem_ver(&e, &Expr::Unit, &cfg()), Verdict::Yes);
    }

    #[test]
    fn sem_eq_ver_basics() {
        let e = Expr::ap(Expr::lam("x", Expr::var("x")), Expr::Bullet);
        assert_eq!(
            sem_eq_ver(&Expr::Bullet, &e, &Expr::Unit, &cfg()),
            Ok(Verdict::Yes)
        );
        // Extensional: both send tt to tt.
        let id = Expr::lam("x", Expr::var("x"));
        let konst = Expr::lam("y", Expr::Bullet);
        assert_eq!(
            sem_eq_ver(&id, &konst, &unit_arrow_unit(), &cfg()),
            Ok(Verdict::Yes)
        );
        assert!(matches!(
            sem_eq_ver(&Expr::Bullet, &Expr::Bullet, &Expr::Void, &cfg()),
            Err(OracleError::NotMembers(_))
        ));
    }

    #[test]
    fn sem_eq_type_basics() {
        assert_eq!(sem_eq_type(&Expr::Unit, &Expr::Unit, &cfg()), Verdict::Yes);
        assert!(matches!(
            sem_eq_type(&Expr::Unit, &Expr::Void, &cfg()),
            Verdict::No(_)
        ));
        // Both vacuous function spaces have exactly the vacuous functions.
        let a = Expr::pi(Expr::Void, "x", Expr::Unit);
        let b = Expr::pi(Expr::Void, "x", Expr::Void);
        assert_eq!(sem_eq_type(&a, &b, &cfg()), Verdict::Yes);
        let id = Expr::lam("x", Expr::var("x"));
        assert_eq!(sem_ver(&id, &a, &cfg()), Verdict::Yes);
        assert_eq!(sem_ver(&id, &b, &cfg()), Verdict::Yes);
    }

    #[test]
    fn envs_basics() {
        assert_eq!(envs(&Context::new(), &cfg()).unwrap(), vec![vec![]]);
        let ctx = Context::from_entries(vec![("x".into(), Expr::Unit)]);
        assert_eq!(envs(&ctx, &cfg()).unwrap(), vec![vec![Expr::Bullet]]);
        let ctx = Context::from_entries(vec![("x".into(), Expr::Void)]);
        assert!(envs(&ctx, &cfg()).unwrap().is_empty());
    }

    #[test]
    fn sem_sequent_basics() {
        let ctx = Context::from_entries(vec![("x".into(), Expr::Unit)]);
        let s = SequentJudgement::new(
            ctx.clone(),
            SequentBody::Ver(Expr::var("x"), Expr::Unit),
        );
        assert_eq!(sem_sequent(&s, &cfg()), Verdict::Yes);

        // Vacuous: no environments for x : Void.
        let vac = SequentJudgement::new(
            Context::from_entries(vec![("x".into(), Expr::Void)]),
            SequentBody::Ver(Expr::Bullet, Expr::Void),
        );
        assert_eq!(sem_sequent(&vac, &cfg()), Verdict::Yes);

        let bad = SequentJudgement::new(ctx, SequentBody::Ver(Expr::var("x"), Expr::Void));
        assert!(matches!(sem_sequent(&bad, &cfg()), Verdict::No(_)));
    }
}
