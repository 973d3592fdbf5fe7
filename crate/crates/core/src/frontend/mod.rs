//! The manifold description language, its printer and report output.

mod lexer;
mod parser;
mod printer;
mod report;

pub use lexer::SourceSpan;
pub use parser::{parse_spec, parse_spec_named, ParseError};
pub use printer::print_spec;
pub use report::{
    check_json, emit_report, exit_code, invariants, parse_assignment, report_json, Format, Report, ENGINE_VERSION,
};
