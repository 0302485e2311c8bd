//! Release gate. Each test exercises one acceptance criterion at its stated
//! tolerance and prints a single PASS line; any violation panics the test.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ttcheck::enumerate::{closed_exprs, finitary_type_exprs, lf_normals, lf_types};
use ttcheck::eval::{eval, EvalOutcome};
use ttcheck::frontend::{parse_derivation, parse_lf_term, parse_sequent, print_expr, print_lf_term, print_sequent};
use ttcheck::lf::{
    check, erase, hsubst, to_computational_type, LfContext, LfType, Normal, Signature,
};
use ttcheck::oracle::{
    classify_finitary, sem_eq_type, sem_eq_ver, sem_sequent, sem_ver, OracleConfig, Verdict,
};
use ttcheck::rules::{check_derivation, Derivation, SequentBody, SequentJudgement};
use ttcheck::syntax::{alpha_eq, open, Context, Expr};

fn pass(name: &str, detail: &str) {
    println!("ACCEPTANCE {name}: PASS ({detail})");
}

fn within(start: Instant, budget_secs: u64, what: &str) -> Duration {
    let took = start.elapsed();
    assert!(
        took < Duration::from_secs(budget_secs),
        "{what} took {took:?}, budget {budget_secs}s"
    );
    took
}

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

/// Canonical forms evaluate to themselves in zero beta steps.
#[test]
fn canonical_rule_conformance() {
    let start = Instant::now();
    let mut count = 0usize;
    let mut candidates = vec![Expr::Unit, Expr::Void, Expr::Bullet];
    candidates.extend(
        closed_exprs(7)
            .into_iter()
            .filter(|e| matches!(e, Expr::Lam(..) | Expr::Pi(..))),
    );
    for c in &candidates {
        assert_eq!(
            eval(c, 0),
            Ok(EvalOutcome::Value(c.clone())),
            "canonical {c:?} must evaluate to itself with zero fuel"
        );
        count += 1;
    }
    let took = within(start, 1, "canonical conformance");
    pass(
        "canonical-rule-conformance",
        &format!("{count} canonical forms, {took:?}"),
    );
}

/// For finitary A, B: if λx.E is in Π(A)B and N is in A, then the
/// application is in B and evaluates like the substituted body.
///
/// Instances are drawn with first-order domains (Unit, Void): representative
/// checking over-approximates membership at higher-order domains (a lambda can
/// probe its argument with a non-member and still pass every representative),
/// so only there does a Yes verdict on the function guarantee one on the
/// application.
#[test]
fn application_rule_soundness() {
    let start = Instant::now();
    let c = cfg();
    let types = finitary_type_exprs(1);
    let lambdas: Vec<Expr> = closed_exprs(7)
        .into_iter()
        .filter(|e| matches!(e, Expr::Lam(..)))
        .collect();
    let candidates_n = closed_exprs(5);
    let mut instances = 0usize;
    for a in &[Expr::Unit, Expr::Void] {
        let members_n: Vec<&Expr> = candidates_n
            .iter()
            .filter(|n| sem_ver(n, a, &c) == Verdict::Yes)
            .collect();
        for b in &types {
            let arrow = Expr::arrow(a.clone(), b.clone());
            for f in &lambdas {
                if sem_ver(f, &arrow, &c) != Verdict::Yes {
                    continue;
                }
                let body = match f {
                    Expr::Lam(_, body) => body,
                    _ => unreachable!(),
                };
                for n in &members_n {
                    let app = Expr::ap(f.clone(), (*n).clone());
                    assert_eq!(
                        sem_ver(&app, b, &c),
                        Verdict::Yes,
                        "application {app:?} must inhabit {b:?}"
                    );
                    let lhs = eval(&app, c.fuel).unwrap();
                    let rhs = eval(&open(body, n), c.fuel).unwrap();
                    match (&lhs, &rhs) {
                        (EvalOutcome::Value(v1), EvalOutcome::Value(v2)) => {
                            assert!(alpha_eq(v1, v2), "{v1:?} vs {v2:?}")
                        }
                        other => panic!("members must evaluate: {other:?}"),
                    }
                    instances += 1;
                }
            }
        }
    }
    assert!(instances >= 500, "only {instances} instances exercised");
    let took = within(start, 30, "application-rule soundness");
    pass(
        "application-rule-soundness",
        &format!("{instances} instances, {took:?}"),
    );
}

// ---- machine generation of accepted derivations (depth <= 3) ----

fn ctx_pool() -> Vec<Context> {
    let mut pool = vec![Context::new()];
    for t in finitary_type_exprs(1) {
        pool.push(Context::from_entries(vec![("x".into(), t)]));
    }
    pool
}

fn leaf_derivations() -> Vec<Derivation> {
    let mut out = Vec::new();
    for ctx in ctx_pool() {
        for (rule, body) in [
            ("UNIT-F", SequentBody::IsSet(Expr::Unit)),
            ("UNIT-EQ-F", SequentBody::EqSet(Expr::Unit, Expr::Unit)),
            ("UNIT-I", SequentBody::Ver(Expr::Bullet, Expr::Unit)),
            (
                "UNIT-EQ-I",
                SequentBody::EqVer(Expr::Bullet, Expr::Bullet, Expr::Unit),
            ),
            ("VOID-F", SequentBody::IsSet(Expr::Void)),
            ("VOID-EQ-F", SequentBody::EqSet(Expr::Void, Expr::Void)),
        ] {
            out.push(Derivation::new(
                rule,
                SequentJudgement::new(ctx.clone(), body),
                vec![],
            ));
        }
        for (name, ty) in ctx.entries() {
            out.push(Derivation::new(
                "HYP",
                SequentJudgement::new(
                    ctx.clone(),
                    SequentBody::Ver(Expr::var(name.clone()), ty.clone()),
                ),
                vec![],
            ));
        }
    }
    out
}

/// Applies every rule of the catalog to derivations from `pool`, synthesizing
/// the licensed conclusions.
fn derive_step(pool: &[Derivation]) -> Vec<Derivation> {
    let mut out = Vec::new();
    for d in pool {
        let ctx = &d.conclusion.ctx;
        match &d.conclusion.body {
            SequentBody::EqVer(m, n, a) => {
                out.push(Derivation::new(
                    "SYM",
                    SequentJudgement::new(
                        ctx.clone(),
                        SequentBody::EqVer(n.clone(), m.clone(), a.clone()),
                    ),
                    vec![d.clone()],
                ));
            }
            SequentBody::Ver(_, a) if *a == Expr::Void => {
                for body in [
                    SequentBody::Ver(Expr::Bullet, Expr::Unit),
                    SequentBody::IsSet(Expr::Unit),
                    SequentBody::EqVer(Expr::Bullet, Expr::Bullet, Expr::Void),
                ] {
                    out.push(Derivation::new(
                        "VOID-E",
                        SequentJudgement::new(ctx.clone(), body),
                        vec![d.clone()],
                    ));
                }
            }
            _ => {}
        }
        // Rules that discharge the last hypothesis.
        if let Some((x, a_ty)) = ctx.entries().last() {
            let parent = ctx.prefix(ctx.len() - 1);
            match &d.conclusion.body {
                SequentBody::Ver(e, b) => {
                    out.push(Derivation::new(
                        "PI-I",
                        SequentJudgement::new(
                            parent,
                            SequentBody::Ver(
                                Expr::lam(x.clone(), e.clone()),
                                Expr::pi(a_ty.clone(), x.clone(), b.clone()),
                            ),
                        ),
                        vec![d.clone()],
                    ));
                }
                SequentBody::EqVer(e, e2, b) => {
                    out.push(Derivation::new(
                        "PI-EQ-I",
                        SequentJudgement::new(
                            parent,
                            SequentBody::EqVer(
                                Expr::lam(x.clone(), e.clone()),
                                Expr::lam(x.clone(), e2.clone()),
                                Expr::pi(a_ty.clone(), x.clone(), b.clone()),
                            ),
                        ),
                        vec![d.clone()],
                    ));
                }
                _ => {}
            }
        }
    }
    for d1 in pool {
        for d2 in pool {
            let ctx = &d1.conclusion.ctx;
            // Two-premise rules sharing one context.
            if d2.conclusion.ctx == *ctx {
                match (&d1.conclusion.body, &d2.conclusion.body) {
                    (SequentBody::EqVer(m, n, a), SequentBody::EqVer(n2, p, a2))
                        if alpha_eq(n, n2) && alpha_eq(a, a2) =>
                    {
                        out.push(Derivation::new(
                            "TRANS",
                            SequentJudgement::new(
                                ctx.clone(),
                                SequentBody::EqVer(m.clone(), p.clone(), a.clone()),
                            ),
                            vec![d1.clone(), d2.clone()],
                        ));
                    }
                    (SequentBody::Ver(m, a), SequentBody::EqSet(a2, b)) if alpha_eq(a, a2) => {
                        out.push(Derivation::new(
                            "CONV",
                            SequentJudgement::new(
                                ctx.clone(),
                                SequentBody::Ver(m.clone(), b.clone()),
                            ),
                            vec![d1.clone(), d2.clone()],
                        ));
                    }
                    (SequentBody::Ver(m, pi_ty), SequentBody::Ver(n, a2)) => {
                        if let Expr::Pi(a, x, b) = pi_ty {
                            if alpha_eq(a, a2) {
                                out.push(Derivation::new(
                                    "PI-E",
                                    SequentJudgement::new(
                                        ctx.clone(),
                                        SequentBody::Ver(
                                            Expr::ap(m.clone(), n.clone()),
                                            open(b, n),
                                        ),
                                    ),
                                    vec![d1.clone(), d2.clone()],
                                ));
                                let _ = x;
                            }
                        }
                    }
                    (SequentBody::EqVer(m, m2, pi_ty), SequentBody::EqVer(n, n2, a2)) => {
                        if let Expr::Pi(a, _, b) = pi_ty {
                            if alpha_eq(a, a2) {
                                out.push(Derivation::new(
                                    "PI-EQ-E",
                                    SequentJudgement::new(
                                        ctx.clone(),
                                        SequentBody::EqVer(
                                            Expr::ap(m.clone(), n.clone()),
                                            Expr::ap(m2.clone(), n2.clone()),
                                            open(b, n),
                                        ),
                                    ),
                                    vec![d1.clone(), d2.clone()],
                                ));
                            }
                        }
                    }
                    _ => {}
                }
            }
            // Formation rules: second premise in a one-longer context.
            if d2.conclusion.ctx.len() == ctx.len() + 1
                && d2.conclusion.ctx.entries()[..ctx.len()] == *ctx.entries()
            {
                let (x, ext_ty) = d2.conclusion.ctx.entries().last().unwrap();
                match (&d1.conclusion.body, &d2.conclusion.body) {
                    (SequentBody::IsSet(a), SequentBody::IsSet(b)) if alpha_eq(a, ext_ty) => {
                        out.push(Derivation::new(
                            "PI-F",
                            SequentJudgement::new(
                                ctx.clone(),
                                SequentBody::IsSet(Expr::pi(a.clone(), x.clone(), b.clone())),
                            ),
                            vec![d1.clone(), d2.clone()],
                        ));
                    }
                    (SequentBody::EqSet(a, a2), SequentBody::EqSet(b, b2))
                        if alpha_eq(a, ext_ty) =>
                    {
                        out.push(Derivation::new(
                            "PI-EQ-F",
                            SequentJudgement::new(
                                ctx.clone(),
                                SequentBody::EqSet(
                                    Expr::pi(a.clone(), x.clone(), b.clone()),
                                    Expr::pi(a2.clone(), x.clone(), b2.clone()),
                                ),
                            ),
                            vec![d1.clone(), d2.clone()],
                        ));
                    }
                    _ => {}
                }
            }
        }
    }
    out
}

fn dedup(derivs: Vec<Derivation>) -> Vec<Derivation> {
    let mut seen = BTreeSet::new();
    derivs
        .into_iter()
        .filter(|d| seen.insert(format!("{d:?}")))
        .collect()
}

fn generated_derivations() -> Vec<Derivation> {
    let l1 = leaf_derivations();
    let l2 = dedup(derive_step(&l1));
    let mut l12 = l1.clone();
    l12.extend(l2.iter().cloned());
    let l3 = dedup(derive_step(&l12));
    let mut all = l12;
    all.extend(l3);
    dedup(all)
}

fn conclusion_is_finitary(s: &SequentJudgement, c: &OracleConfig) -> bool {
    if !s.ctx.is_empty() {
        return false;
    }
    let types: Vec<&Expr> = match &s.body {
        SequentBody::IsSet(a) => vec![a],
        SequentBody::EqSet(a, b) => vec![a, b],
        SequentBody::Ver(_, a) => vec![a],
        SequentBody::EqVer(_, _, a) => vec![a],
    };
    types.iter().all(|t| classify_finitary(t, c).is_ok())
}

fn corpus() -> Vec<(String, Derivation)> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/derivations");
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .expect("derivation corpus directory")
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            let name = p.file_name().unwrap().to_string_lossy().to_string();
            let d = parse_derivation(&text)
                .unwrap_or_else(|e| panic!("{name}: parse failed: {e}"));
            (name, d)
        })
        .collect()
}

/// Every accepted derivation with a closed finitary conclusion is confirmed
/// by the semantic checker.
#[test]
fn rule_vs_oracle_soundness() {
    let start = Instant::now();
    let c = cfg();
    let hand = corpus();
    assert!(hand.len() >= 50, "corpus has only {} derivations", hand.len());
    let mut checked = 0usize;
    for (name, d) in &hand {
        check_derivation(d).unwrap_or_else(|e| panic!("{name}: rejected: {e}"));
        assert!(
            conclusion_is_finitary(&d.conclusion, &c),
            "{name}: corpus conclusion must be closed and finitary"
        );
        assert_eq!(
            sem_sequent(&d.conclusion, &c),
            Verdict::Yes,
            "{name}: semantic refutation of an accepted derivation"
        );
        checked += 1;
    }
    let generated = generated_derivations();
    let mut gen_checked = 0usize;
    for d in &generated {
        check_derivation(d)
            .unwrap_or_else(|e| panic!("generated node rejected: {e}\n{d:?}"));
        if conclusion_is_finitary(&d.conclusion, &c) {
            assert_eq!(
                sem_sequent(&d.conclusion, &c),
                Verdict::Yes,
                "semantic refutation of generated derivation {d:?}"
            );
            gen_checked += 1;
        }
    }
    assert!(gen_checked > 0);
    let took = within(start, 60, "rule-vs-oracle soundness");
    pass(
        "rule-vs-oracle-soundness",
        &format!(
            "{checked} hand-written + {gen_checked}/{} generated, {took:?}",
            generated.len()
        ),
    );
}

/// No closed term is a verification of the empty type.
#[test]
fn void_emptiness() {
    let start = Instant::now();
    let c = OracleConfig {
        fuel: 100,
        ..cfg()
    };
    let terms = closed_exprs(9);
    for e in &terms {
        assert_ne!(
            sem_ver(e, &Expr::Void, &c),
            Verdict::Yes,
            "{e:?} accepted at the empty type"
        );
    }
    let took = within(start, 60, "Void emptiness");
    pass(
        "void-emptiness",
        &format!("{} closed terms to size 9, {took:?}", terms.len()),
    );
}

/// Member equality is a PER, and type equality is mutual inclusion of the
/// representatives' memberships and of the equality relation on them.
#[test]
fn per_laws() {
    let start = Instant::now();
    let c = cfg();
    let types = finitary_type_exprs(2);
    let candidates = closed_exprs(5);
    // Representatives plus a sample of enumerated members per type.
    let pools: Vec<Vec<Expr>> = types
        .iter()
        .map(|t| {
            let fin = classify_finitary(t, &c).unwrap();
            let mut pool = ttcheck::oracle::representatives(&fin, &c).unwrap();
            pool.extend(
                candidates
                    .iter()
                    .filter(|m| sem_ver(m, t, &c) == Verdict::Yes)
                    .take(10)
                    .cloned(),
            );
            pool
        })
        .collect();
    let mut checks = 0usize;
    for (t, pool) in types.iter().zip(&pools) {
        for m in pool {
            // Reflexivity on members.
            assert_eq!(sem_eq_ver(m, m, t, &c), Ok(Verdict::Yes));
            for n in pool {
                let mn = sem_eq_ver(m, n, t, &c).unwrap();
                let nm = sem_eq_ver(n, m, t, &c).unwrap();
                assert_eq!(mn == Verdict::Yes, nm == Verdict::Yes, "symmetry at {t:?}");
                if mn != Verdict::Yes {
                    continue;
                }
                for p in pool {
                    if sem_eq_ver(n, p, t, &c).unwrap() == Verdict::Yes {
                        assert_eq!(
                            sem_eq_ver(m, p, t, &c),
                            Ok(Verdict::Yes),
                            "transitivity at {t:?}"
                        );
                        checks += 1;
                    }
                }
            }
        }
    }
    // Mutual-inclusion characterization of type equality, recomputed here
    // over enumerated members: same memberships and same equalities between
    // members. The equality part is capped per type to stay tractable.
    let member_pools: Vec<Vec<&Expr>> = types
        .iter()
        .map(|t| {
            candidates
                .iter()
                .filter(|m| sem_ver(m, t, &c) == Verdict::Yes)
                .collect()
        })
        .collect();
    for (a, pa) in types.iter().zip(&member_pools) {
        for (b, pb) in types.iter().zip(&member_pools) {
            let incl = |from: &[&Expr], from_ty: &Expr, to_ty: &Expr| {
                from.iter().all(|m| sem_ver(m, to_ty, &c) == Verdict::Yes)
                    && from.iter().take(12).all(|m| {
                        from.iter().take(12).all(|n| {
                            sem_eq_ver(m, n, from_ty, &c).unwrap() != Verdict::Yes
                                || sem_eq_ver(m, n, to_ty, &c) == Ok(Verdict::Yes)
                        })
                    })
            };
            let mutual = incl(pa, a, b) && incl(pb, b, a);
            let verdict = sem_eq_type(a, b, &c);
            assert_eq!(
                verdict == Verdict::Yes,
                mutual,
                "type equality of {a:?} and {b:?} disagrees with mutual inclusion"
            );
            checks += 1;
        }
    }
    let took = start.elapsed();
    pass("per-laws", &format!("{checks} law instances, {took:?}"));
}

/// Checking and hereditary substitution terminate with a definite verdict
/// on every well-scoped proof term, with no fuel parameter.
#[test]
fn lf_totality() {
    let start = Instant::now();
    let sig = Signature::new();
    let ctx = LfContext::from_entries(vec![("v".into(), LfType::Top)]);
    let terms = lf_normals(8, &["v".into()], &[], &[LfType::Top]);
    assert!(terms.len() >= 10_000, "only {} terms generated", terms.len());
    let tys = [
        LfType::Top,
        LfType::Bot,
        LfType::func(LfType::Top, LfType::Top),
    ];
    let mut ok = 0usize;
    let mut err = 0usize;
    for t in &terms {
        for ty in &tys {
            match check(&sig, &ctx, t, ty) {
                Ok(()) => ok += 1,
                Err(_) => err += 1,
            }
        }
        // Substitution must also return a definite answer.
        let _ = hsubst(&Normal::Bullet, "v", &LfType::Top, t);
    }
    let took = within(start, 60, "LF totality");
    pass(
        "lf-totality",
        &format!("{} terms, {ok} accepted / {err} rejected checks, {took:?}", terms.len()),
    );
}

/// If `n` checks at alpha and `m` checks at beta under `x : alpha`, then
/// substituting `n` for `x` yields a term checking at beta, and the result
/// prints and reparses as a normal form.
#[test]
fn hereditary_substitution_lemma() {
    let start = Instant::now();
    let sig = Signature::new();
    let alphas = [
        LfType::Top,
        LfType::func(LfType::Top, LfType::Top),
        LfType::prod(LfType::Top, LfType::Top),
    ];
    let betas = [
        LfType::Top,
        LfType::func(LfType::Top, LfType::Top),
        LfType::prod(LfType::Top, LfType::Top),
    ];
    let outer = LfContext::from_entries(vec![
        ("y".into(), LfType::Top),
        ("f".into(), LfType::func(LfType::Top, LfType::Top)),
    ]);
    let m_pool = lf_normals(6, &["x".into(), "y".into(), "f".into()], &[], &[]);
    let n_pool = lf_normals(5, &["y".into(), "f".into()], &[], &[]);
    let mut instances = 0usize;
    for alpha in &alphas {
        let ctx_in = outer.extended("x", alpha.clone());
        let ns: Vec<&Normal> = n_pool
            .iter()
            .filter(|n| check(&sig, &outer, n, alpha).is_ok())
            .collect();
        if ns.is_empty() {
            continue;
        }
        for beta in &betas {
            for m in &m_pool {
                if check(&sig, &ctx_in, m, beta).is_err() {
                    continue;
                }
                for n in &ns {
                    let r = hsubst(n, "x", alpha, m)
                        .unwrap_or_else(|e| panic!("hsubst failed on typed input: {e}"));
                    check(&sig, &outer, &r, beta).unwrap_or_else(|e| {
                        panic!("substitution result ill-typed: {e}\n[{n:?}/x]{m:?} = {r:?}")
                    });
                    // Redex-freedom, asserted on the printed form.
                    let printed = print_lf_term(&r);
                    assert_eq!(parse_lf_term(&printed).as_ref(), Ok(&r), "via `{printed}`");
                    instances += 1;
                }
            }
        }
    }
    assert!(instances >= 1_000, "only {instances} typed instances");
    let took = start.elapsed();
    pass(
        "hereditary-substitution-lemma",
        &format!("{instances} typed instances, {took:?}"),
    );
}

fn translatable(ty: &LfType) -> bool {
    match ty {
        LfType::Top | LfType::Bot => true,
        LfType::Fn(a, b) => translatable(a) && translatable(b),
        LfType::Atom(_) | LfType::Prod(..) => false,
    }
}

/// Erasure of a checked product/abort/constant-free closed proof term is a
/// semantic verification of the translated type.
#[test]
fn erasure_bridge() {
    let start = Instant::now();
    let sig = Signature::new();
    let ctx = LfContext::new();
    let c = cfg();
    let terms = lf_normals(8, &[], &[], &[]);
    let types: Vec<LfType> = lf_types(5, &[]).into_iter().filter(translatable).collect();
    let mut cases = 0usize;
    for t in &terms {
        let erased = match erase(t) {
            Ok(e) => e,
            Err(_) => continue,
        };
        for ty in &types {
            if check(&sig, &ctx, t, ty).is_err() {
                continue;
            }
            let comp = to_computational_type(ty).unwrap();
            assert_eq!(
                sem_ver(&erased, &comp, &c),
                Verdict::Yes,
                "erasure of {t:?} fails at {comp:?}"
            );
            cases += 1;
        }
    }
    assert!(cases > 0);
    let took = within(start, 60, "erasure bridge");
    pass(
        "erasure-bridge",
        &format!("{cases} checked erasures over {} terms, {took:?}", terms.len()),
    );
}

/// Printing then parsing is the identity up to alpha, for computational
/// terms, proof terms and the sequents of the derivation corpus.
#[test]
fn round_trip() {
    let start = Instant::now();
    let exprs = closed_exprs(8);
    for e in &exprs {
        let printed = print_expr(e);
        let back = ttcheck::frontend::parse_expr(&printed)
            .unwrap_or_else(|err| panic!("reparse of `{printed}` failed: {err}"));
        assert!(alpha_eq(&back, e), "round trip of {e:?} via `{printed}`");
    }
    let lf_terms = lf_normals(8, &["v".into()], &[], &[LfType::Top]);
    for t in &lf_terms {
        let printed = print_lf_term(t);
        let back = parse_lf_term(&printed)
            .unwrap_or_else(|err| panic!("reparse of `{printed}` failed: {err}"));
        assert_eq!(&back, t, "round trip via `{printed}`");
    }
    let mut sequents = 0usize;
    for (name, d) in corpus() {
        let mut stack = vec![&d];
        while let Some(node) = stack.pop() {
            let printed = print_sequent(&node.conclusion);
            let back = parse_sequent(&printed)
                .unwrap_or_else(|err| panic!("{name}: reparse of `{printed}` failed: {err}"));
            assert_eq!(back, node.conclusion, "{name}: via `{printed}`");
            stack.extend(node.children.iter());
            sequents += 1;
        }
    }
    let took = start.elapsed();
    pass(
        "round-trip",
        &format!(
            "{} terms, {} proof terms, {sequents} sequents, {took:?}",
            exprs.len(),
            lf_terms.len()
        ),
    );
}
