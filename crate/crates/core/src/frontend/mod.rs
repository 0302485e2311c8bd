//! Concrete syntax: parsers and pretty-printers for computational terms,
//! sequents, derivations and the LF kernel's signatures and proof terms,
//! plus the machine-readable report schema.

mod lexer;
mod lf_parse;
mod parse;
mod print;
mod report;

pub use lexer::{ParseError, RESERVED};
pub use lf_parse::{
    parse_lf_context, parse_lf_term, parse_lf_term_named, parse_lf_type, parse_signature,
    resolve_constants,
};
pub use parse::{
    parse_derivation, parse_derivation_named, parse_expr, parse_expr_named, parse_sequent,
    parse_sequent_at,
};
pub use print::{print_expr, print_lf_term, print_lf_type, print_sequent};
pub use report::{Diagnostic, Report, SourceSpan, Verdict as ReportVerdict};
