//! A dual-kernel checker for a small dependent type theory.
//!
//! The computational side ([`syntax`], [`eval`], [`rules`], [`oracle`])
//! validates derivation trees against a fixed rule catalog and decides
//! judgements semantically on a finitary fragment, by evaluation to
//! canonical form. The proof-theoretic side ([`lf`]) checks beta-normal
//! proof terms bidirectionally, with hereditary substitution; [`lf::erase`]
//! bridges the two on their shared fragment.

pub mod cli;
pub mod enumerate;
pub mod eval;
pub mod frontend;
pub mod lf;
pub mod oracle;
pub mod rules;
pub mod syntax;
