//! # CNF Formulas
//!
//! Variables, literals, clauses and formulas in canonical form, plus DIMACS
//! reading and writing (see [`dimacs`]).
//!
//! A clause is canonical when its literals are strictly ordered by variable
//! index, with the positive literal of a variable before the negative one.
//! Canonical clauses make subset and union checks linear merges, and keep
//! serialized output byte-stable.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod dimacs;

pub use dimacs::{parse_dimacs, serialize_dimacs, DimacsError, DimacsWarning, Parsed};

/// A boolean variable. Indices start at 1, as in DIMACS.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Var(u32);

impl Var {
    /// Creates a variable with the given 1-based index.
    ///
    /// # Panics
    ///
    /// If `index` is 0.
    pub fn new(index: u32) -> Var {
        assert!(index >= 1, "variable indices start at 1");
        Var(index)
    }

    /// Fallible constructor, `None` for index 0.
    pub fn try_new(index: u32) -> Option<Var> {
        (index >= 1).then_some(Var(index))
    }

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    /// Zero-based position, handy for indexing per-variable arrays.
    #[inline]
    pub fn pos(self) -> usize {
        (self.0 - 1) as usize
    }

    #[inline]
    pub fn positive(self) -> Literal {
        Literal::new(self, false)
    }

    #[inline]
    pub fn negative(self) -> Literal {
        Literal::new(self, true)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// A variable or its negation.
///
/// The derived ordering compares the variable first and puts the positive
/// literal before the negative one, which is the canonical clause order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    var: Var,
    negated: bool,
}

impl Literal {
    #[inline]
    pub fn new(var: Var, negated: bool) -> Literal {
        Literal { var, negated }
    }

    /// Builds a literal from a signed DIMACS integer. `None` for 0.
    pub fn from_dimacs(value: i64) -> Option<Literal> {
        if value == 0 || value.unsigned_abs() > u32::MAX as u64 {
            return None;
        }
        Some(Literal::new(Var(value.unsigned_abs() as u32), value < 0))
    }

    #[inline]
    pub fn var(self) -> Var {
        self.var
    }

    #[inline]
    pub fn is_negated(self) -> bool {
        self.negated
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        !self.negated
    }

    pub fn to_dimacs(self) -> i64 {
        if self.negated {
            -(self.var.0 as i64)
        } else {
            self.var.0 as i64
        }
    }

    /// Value of the literal under a truth value for its variable.
    #[inline]
    pub fn eval(self, var_value: bool) -> bool {
        var_value != self.negated
    }
}

impl std::ops::Not for Literal {
    type Output = Literal;

    #[inline]
    fn not(self) -> Literal {
        Literal::new(self.var, !self.negated)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "¬{}", self.var)
        } else {
            write!(f, "{}", self.var)
        }
    }
}

/// A disjunction of literals.
///
/// Clauses built with [`Clause::new`] are canonical. [`Clause::raw`] keeps the
/// literals as given; [`Formula::canonicalize`] fixes those up.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Clause {
    lits: Vec<Literal>,
}

impl Clause {
    /// Canonical clause from arbitrary literals (sorted, duplicates removed).
    pub fn new<I: IntoIterator<Item = Literal>>(lits: I) -> Clause {
        let mut lits: Vec<Literal> = lits.into_iter().collect();
        lits.sort_unstable();
        lits.dedup();
        Clause { lits }
    }

    /// Clause with literals in the given order, duplicates kept.
    pub fn raw(lits: Vec<Literal>) -> Clause {
        Clause { lits }
    }

    /// Canonical clause from signed DIMACS integers.
    ///
    /// # Panics
    ///
    /// If any value is 0.
    pub fn from_dimacs(values: &[i64]) -> Clause {
        Clause::new(
            values
                .iter()
                .map(|&v| Literal::from_dimacs(v).expect("0 is not a literal")),
        )
    }

    pub fn empty() -> Clause {
        Clause { lits: Vec::new() }
    }

    #[inline]
    pub fn literals(&self) -> &[Literal] {
        &self.lits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.lits.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    #[inline]
    pub fn is_unit(&self) -> bool {
        self.lits.len() == 1
    }

    pub fn contains(&self, lit: Literal) -> bool {
        if self.is_canonical() {
            self.lits.binary_search(&lit).is_ok()
        } else {
            self.lits.contains(&lit)
        }
    }

    /// Whether `var` occurs in either polarity.
    pub fn mentions(&self, var: Var) -> bool {
        self.lits.iter().any(|l| l.var() == var)
    }

    pub fn is_canonical(&self) -> bool {
        self.lits.windows(2).all(|w| w[0] < w[1])
    }

    /// Contains some variable in both polarities.
    pub fn is_tautology(&self) -> bool {
        if self.is_canonical() {
            // complementary literals are adjacent in canonical order
            self.lits.windows(2).any(|w| w[0].var() == w[1].var())
        } else {
            self.lits.iter().any(|&l| self.lits.contains(&!l))
        }
    }

    pub fn canonicalized(&self) -> Clause {
        Clause::new(self.lits.iter().copied())
    }

    /// Subset test on literal sets. Both clauses must be canonical.
    pub fn is_subset_of(&self, other: &Clause) -> bool {
        debug_assert!(self.is_canonical() && other.is_canonical());
        if self.lits.len() > other.lits.len() {
            return false;
        }
        let mut rest = other.lits.iter();
        'outer: for lit in &self.lits {
            for cand in rest.by_ref() {
                match cand.cmp(lit) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// Value under a full assignment (`values[v.pos()]` is the value of `v`).
    pub fn eval(&self, values: &[bool]) -> bool {
        self.lits.iter().any(|l| l.eval(values[l.var().pos()]))
    }

    pub fn max_var(&self) -> Option<Var> {
        self.lits.iter().map(|l| l.var()).max()
    }
}

impl FromIterator<Literal> for Clause {
    fn from_iter<I: IntoIterator<Item = Literal>>(iter: I) -> Clause {
        Clause::new(iter)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lits.is_empty() {
            return write!(f, "⊥");
        }
        for (i, lit) in self.lits.iter().enumerate() {
            if i > 0 {
                write!(f, " ∨ ")?;
            }
            write!(f, "{lit}")?;
        }
        Ok(())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("clause {clause} mentions variable {var} but the formula only has {num_vars} variables")]
    VarOutOfRange { clause: usize, var: u32, num_vars: u32 },
}

/// A CNF formula: a declared variable count and an ordered clause sequence.
///
/// Clause order is preserved by every transformation that does not
/// explicitly remove or append clauses. Duplicate clauses are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Formula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl Formula {
    /// Builds a formula, checking that every literal is within `num_vars`.
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<Formula, FormulaError> {
        for (i, clause) in clauses.iter().enumerate() {
            if let Some(var) = clause.max_var() {
                if var.index() > num_vars {
                    return Err(FormulaError::VarOutOfRange {
                        clause: i,
                        var: var.index(),
                        num_vars,
                    });
                }
            }
        }
        Ok(Formula { num_vars, clauses })
    }

    /// Builds a formula whose variable count is the largest index used.
    pub fn from_clauses(clauses: Vec<Clause>) -> Formula {
        let num_vars = clauses
            .iter()
            .filter_map(Clause::max_var)
            .map(Var::index)
            .max()
            .unwrap_or(0);
        Formula { num_vars, clauses }
    }

    /// Shorthand for tests and examples: clauses as signed DIMACS integers.
    ///
    /// # Panics
    ///
    /// If a literal exceeds `num_vars` or is 0.
    pub fn from_dimacs_clauses(num_vars: u32, clauses: &[&[i64]]) -> Formula {
        let clauses = clauses.iter().map(|c| Clause::from_dimacs(c)).collect();
        Formula::new(num_vars, clauses).expect("literal out of range")
    }

    pub(crate) fn new_unchecked(num_vars: u32, clauses: Vec<Clause>) -> Formula {
        debug_assert!(Formula::new(num_vars, clauses.clone()).is_ok());
        Formula { num_vars, clauses }
    }

    pub fn empty(num_vars: u32) -> Formula {
        Formula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    #[inline]
    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    #[inline]
    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    #[inline]
    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn into_clauses(self) -> Vec<Clause> {
        self.clauses
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> {
        (1..=self.num_vars).map(Var)
    }

    /// Total number of literal occurrences.
    pub fn num_literals(&self) -> usize {
        self.clauses.iter().map(Clause::len).sum()
    }

    pub fn contains_empty_clause(&self) -> bool {
        self.clauses.iter().any(Clause::is_empty)
    }

    pub fn is_canonical(&self) -> bool {
        self.clauses.iter().all(Clause::is_canonical)
    }

    /// Sorts and deduplicates the literals of every clause. Clause order is
    /// unchanged.
    pub fn canonicalize(&self) -> Formula {
        Formula {
            num_vars: self.num_vars,
            clauses: self.clauses.iter().map(Clause::canonicalized).collect(),
        }
    }

    /// Value under a full assignment.
    pub fn eval(&self, values: &[bool]) -> bool {
        assert!(values.len() >= self.num_vars as usize);
        self.clauses.iter().all(|c| c.eval(values))
    }

    /// Positive and negative occurrence counts per variable.
    pub fn occurrences(&self) -> Vec<[usize; 2]> {
        let mut occ = vec![[0usize; 2]; self.num_vars as usize];
        for clause in &self.clauses {
            for lit in clause.literals() {
                occ[lit.var().pos()][lit.is_negated() as usize] += 1;
            }
        }
        occ
    }

    /// Copy with one more clause appended.
    pub fn with_clause(&self, clause: Clause) -> Formula {
        let mut clauses = self.clauses.clone();
        clauses.push(clause);
        Formula::new(self.num_vars, clauses).expect("appended clause out of range")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return write!(f, "⊤");
        }
        for (i, clause) in self.clauses.iter().enumerate() {
            if i > 0 {
                write!(f, " ∧ ")?;
            }
            write!(f, "({clause})")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Formula {
    type Err = DimacsError;

    fn from_str(s: &str) -> Result<Formula, DimacsError> {
        parse_dimacs(s).map(|p| p.formula)
    }
}

/// Satisfiability verdict of a formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Label {
    Sat,
    Unsat,
}

impl Label {
    pub fn is_sat(self) -> bool {
        self == Label::Sat
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Sat => write!(f, "SAT"),
            Label::Unsat => write!(f, "UNSAT"),
        }
    }
}

/// The worked example used throughout the docs and golden tests:
/// `x1`, `x2 ∨ x3`, `x1 ∨ ¬x3 ∨ x4`, `¬x1 ∨ x2 ∨ x3 ∨ ¬x4`.
pub fn running_example() -> Formula {
    Formula::from_dimacs_clauses(4, &[&[1], &[2, 3], &[1, -3, 4], &[-1, 2, 3, -4]])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(v: i64) -> Literal {
        Literal::from_dimacs(v).unwrap()
    }

    #[test]
    fn canonical_order_is_var_then_positive_first() {
        let c = Clause::new([lit(-2), lit(1), lit(2), lit(-1)]);
        let vals: Vec<i64> = c.literals().iter().map(|l| l.to_dimacs()).collect();
        assert_eq!(vals, vec![1, -1, 2, -2]);
        assert!(c.is_tautology());
    }

    #[test]
    fn canonicalize_dedupes_and_sorts() {
        let f = Formula::new(2, vec![Clause::raw(vec![lit(2), lit(1), lit(1)])]).unwrap();
        assert!(!f.is_canonical());
        let g = f.canonicalize();
        assert_eq!(g.clauses()[0], Clause::from_dimacs(&[1, 2]));
        assert_eq!(g.clauses()[0].literals().len(), 2);
        assert_eq!(g.canonicalize(), g);
    }

    #[test]
    fn subset_check() {
        let a = Clause::from_dimacs(&[2, 3]);
        let b = Clause::from_dimacs(&[-1, 2, 3, -4]);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert!(Clause::empty().is_subset_of(&a));
        assert!(!Clause::from_dimacs(&[-2]).is_subset_of(&a));
        assert!(a.is_subset_of(&a));
    }

    #[test]
    fn out_of_range_literal_rejected() {
        let err = Formula::new(1, vec![Clause::from_dimacs(&[1, 2])]).unwrap_err();
        assert_eq!(
            err,
            FormulaError::VarOutOfRange {
                clause: 0,
                var: 2,
                num_vars: 1
            }
        );
    }

    #[test]
    fn empty_clause_and_tautology_queries() {
        let f = Formula::from_dimacs_clauses(1, &[&[1, -1], &[]]);
        assert!(f.clauses()[0].is_tautology());
        assert!(f.contains_empty_clause());
        assert!(!f.eval(&[true]));
    }

    #[test]
    fn display() {
        assert_eq!(
            running_example().to_string(),
            "(x1) ∧ (x2 ∨ x3) ∧ (x1 ∨ ¬x3 ∨ x4) ∧ (¬x1 ∨ x2 ∨ x3 ∨ ¬x4)"
        );
    }
}
