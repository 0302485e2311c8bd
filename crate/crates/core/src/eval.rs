//! Big-step evaluation of closed terms to canonical form.
//!
//! Canonical forms (`Unit`, `Void`, `tt`, `Pi`, lambdas) evaluate to
//! themselves at zero cost. Application is call-by-name: the argument is
//! substituted unevaluated. Fuel counts beta contractions only.

use crate::syntax::{free_vars, open, Expr, Ident};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalOutcome {
    /// A canonical form.
    Value(Expr),
    /// A closed non-canonical term that is not a redex: an application whose
    /// head evaluated to a canonical non-lambda.
    Stuck(Expr),
    /// The beta-step budget ran out before a canonical form was reached.
    OutOfFuel,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("free variable `{0}` in term to evaluate")]
    FreeVariable(Ident),
}

pub fn is_canonical(e: &Expr) -> bool {
    matches!(
        e,
        Expr::Unit | Expr::Void | Expr::Bullet | Expr::Pi(..) | Expr::Lam(..)
    )
}

/// Evaluates a closed term, spending at most `fuel` beta contractions.
pub fn eval(e: &Expr, fuel: u64) -> Result<EvalOutcome, EvalError> {
    if let Some(x) = free_vars(e).into_iter().next() {
        return Err(EvalError::FreeVariable(x));
    }
    let mut budget = fuel;
    Ok(eval_closed(e, &mut budget))
}

fn eval_closed(e: &Expr, fuel: &mut u64) -> EvalOutcome {
    if is_canonical(e) {
        return EvalOutcome::Value(e.clone());
    }
    match e {
        Expr::Ap(f, a) => match eval_closed(f, fuel) {
            EvalOutcome::Value(Expr::Lam(_, body)) => {
                if *fuel == 0 {
                    return EvalOutcome::OutOfFuel;
                }
                *fuel -= 1;
                eval_closed(&open(&body, a), fuel)
            }
            EvalOutcome::Value(head) => EvalOutcome::Stuck(Expr::ap(head, (**a).clone())),
            other => other,
        },
        // Closedness is checked at entry and preserved by contraction.
        Expr::Var(_) | Expr::Bound(_) => unreachable!("evaluation reached an open term"),
        _ => unreachable!("canonical forms handled above"),
    }
}
