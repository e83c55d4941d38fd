//! DIMACS CNF reading and writing.
//!
//! The reader is lenient where real-world files tend to be sloppy: a header
//! clause count that does not match the body is reported as a warning, and a
//! SATLIB-style `%` line ends the input. Clauses may span lines.

use std::fmt::{self, Write as _};

use thiserror::Error;

use super::{Clause, Formula, Literal};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: malformed header `{text}`")]
    MalformedHeader { line: usize, text: String },
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: clause data before header")]
    ClauseBeforeHeader { line: usize },
    #[error("line {line}: invalid literal `{token}`")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: literal {lit} exceeds declared variable count {num_vars}")]
    LiteralOutOfRange { line: usize, lit: i64, num_vars: u32 },
    #[error("last clause is not terminated by 0")]
    MissingTerminator,
}

/// Non-fatal findings while reading a DIMACS file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimacsWarning {
    ClauseCountMismatch { header: usize, actual: usize },
}

impl fmt::Display for DimacsWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimacsWarning::ClauseCountMismatch { header, actual } => {
                write!(f, "header declares {header} clauses, found {actual}")
            }
        }
    }
}

/// Result of [`parse_dimacs`]: the canonicalized formula and any warnings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub formula: Formula,
    pub warnings: Vec<DimacsWarning>,
}

impl Parsed {
    pub fn clause_count_mismatch(&self) -> bool {
        self.warnings
            .iter()
            .any(|w| matches!(w, DimacsWarning::ClauseCountMismatch { .. }))
    }
}

/// Parses a DIMACS CNF document. Clauses are canonicalized.
pub fn parse_dimacs(text: &str) -> Result<Parsed, DimacsError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut open = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(DimacsError::DuplicateHeader { line: line_no });
            }
            header = Some(parse_header(line, line_no)?);
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(DimacsError::ClauseBeforeHeader { line: line_no });
        };
        for token in line.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| DimacsError::InvalidToken {
                line: line_no,
                token: token.to_string(),
            })?;
            if value == 0 {
                clauses.push(Clause::new(current.drain(..)));
                open = false;
                continue;
            }
            if value.unsigned_abs() > num_vars as u64 {
                return Err(DimacsError::LiteralOutOfRange {
                    line: line_no,
                    lit: value,
                    num_vars,
                });
            }
            current.push(Literal::from_dimacs(value).expect("nonzero"));
            open = true;
        }
    }

    let (num_vars, declared) = header.ok_or(DimacsError::MissingHeader)?;
    if open {
        return Err(DimacsError::MissingTerminator);
    }
    let mut warnings = Vec::new();
    if declared != clauses.len() {
        log::warn!(
            "header declares {declared} clauses, body has {}",
            clauses.len()
        );
        warnings.push(DimacsWarning::ClauseCountMismatch {
            header: declared,
            actual: clauses.len(),
        });
    }
    Ok(Parsed {
        formula: Formula::new_unchecked(num_vars, clauses),
        warnings,
    })
}

fn parse_header(line: &str, line_no: usize) -> Result<(u32, usize), DimacsError> {
    let malformed = || DimacsError::MalformedHeader {
        line: line_no,
        text: line.to_string(),
    };
    let mut parts = line.split_whitespace();
    if parts.next() != Some("p") || parts.next() != Some("cnf") {
        return Err(malformed());
    }
    let num_vars = parts
        .next()
        .and_then(|t| t.parse::<u32>().ok())
        .ok_or_else(malformed)?;
    let num_clauses = parts
        .next()
        .and_then(|t| t.parse::<usize>().ok())
        .ok_or_else(malformed)?;
    if parts.next().is_some() {
        return Err(malformed());
    }
    Ok((num_vars, num_clauses))
}

/// Writes `p cnf <vars> <clauses>` followed by one 0-terminated line per
/// clause.
pub fn serialize_dimacs(formula: &Formula) -> String {
    let mut out = String::with_capacity(16 + formula.num_literals() * 4);
    writeln!(out, "p cnf {} {}", formula.num_vars(), formula.num_clauses()).unwrap();
    for clause in formula.clauses() {
        for lit in clause.literals() {
            write!(out, "{} ", lit.to_dimacs()).unwrap();
        }
        out.push_str("0\n");
    }
    out
}
