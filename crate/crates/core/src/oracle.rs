//! Satisfiability oracles.
//!
//! [`solve_dpll`] is a plain DPLL search with unit propagation and the
//! pure-literal rule. Branching always takes the lowest-indexed unassigned
//! variable that still occurs in an unsatisfied clause, trying `true` first,
//! so the decision count of a run depends only on the formula. That count is
//! the difficulty proxy used by the statistics tooling.
//!
//! [`solve_brute`] and [`count_models`] enumerate every assignment. They are
//! independent of the DPLL code path and serve as ground truth in tests.

use thiserror::Error;

use crate::formula::{Formula, Label, Literal, Var};

/// Largest variable count accepted by the enumeration oracles.
pub const BRUTE_MAX_VARS: u32 = 24;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("formula has {num_vars} variables, limit is {limit}")]
    TooManyVars { num_vars: u32, limit: u32 },
    #[error("decision budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_vars: u32,
    pub max_decisions: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_vars: 200,
            max_decisions: 5_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub label: Label,
    /// Model indexed by `Var::pos`, present iff the formula is satisfiable.
    /// Variables left open by the search are reported as `false`.
    pub assignment: Option<Vec<bool>>,
    /// Number of branching nodes.
    pub decisions: u64,
    /// Literals assigned by unit propagation or the pure-literal rule.
    pub propagations: u64,
}

impl SolveResult {
    pub fn value(&self, var: Var) -> Option<bool> {
        self.assignment.as_ref().map(|a| a[var.pos()])
    }
}

pub fn solve_dpll(formula: &Formula, cfg: &SolverConfig) -> Result<SolveResult, OracleError> {
    if formula.num_vars() > cfg.max_vars {
        return Err(OracleError::TooManyVars {
            num_vars: formula.num_vars(),
            limit: cfg.max_vars,
        });
    }
    let mut dpll = Dpll::new(formula, cfg.max_decisions);
    if formula.contains_empty_clause() {
        return Ok(dpll.result(false));
    }
    let sat = dpll.search()?;
    Ok(dpll.result(sat))
}

/// Shorthand for the label under the default configuration.
pub fn label_of(formula: &Formula) -> Result<Label, OracleError> {
    solve_dpll(formula, &SolverConfig::default()).map(|r| r.label)
}

const UNASSIGNED: i8 = 0;

struct Dpll {
    clauses: Vec<Vec<Literal>>,
    values: Vec<i8>,
    trail: Vec<Var>,
    decisions: u64,
    propagations: u64,
    budget: u64,
}

impl Dpll {
    fn new(formula: &Formula, budget: u64) -> Dpll {
        let clauses = formula
            .clauses()
            .iter()
            .filter(|c| !c.is_tautology())
            .map(|c| c.literals().to_vec())
            .collect();
        Dpll {
            clauses,
            values: vec![UNASSIGNED; formula.num_vars() as usize],
            trail: Vec::new(),
            decisions: 0,
            propagations: 0,
            budget,
        }
    }

    fn result(&self, sat: bool) -> SolveResult {
        SolveResult {
            label: if sat { Label::Sat } else { Label::Unsat },
            assignment: sat.then(|| self.values.iter().map(|&v| v > 0).collect()),
            decisions: self.decisions,
            propagations: self.propagations,
        }
    }

    #[inline]
    fn lit_value(&self, lit: Literal) -> i8 {
        let v = self.values[lit.var().pos()];
        if lit.is_negated() {
            -v
        } else {
            v
        }
    }

    #[inline]
    fn assign(&mut self, lit: Literal) {
        self.values[lit.var().pos()] = if lit.is_negated() { -1 } else { 1 };
        self.trail.push(lit.var());
    }

    fn backtrack(&mut self, mark: usize) {
        for var in self.trail.drain(mark..) {
            self.values[var.pos()] = UNASSIGNED;
        }
    }

    fn search(&mut self) -> Result<bool, OracleError> {
        let mark = self.trail.len();
        if !self.simplify() {
            self.backtrack(mark);
            return Ok(false);
        }
        let Some(var) = self.branch_var() else {
            return Ok(true);
        };
        if self.decisions >= self.budget {
            return Err(OracleError::BudgetExhausted {
                budget: self.budget,
            });
        }
        self.decisions += 1;
        let inner = self.trail.len();
        for lit in [var.positive(), var.negative()] {
            self.assign(lit);
            if self.search()? {
                return Ok(true);
            }
            self.backtrack(inner);
        }
        self.backtrack(mark);
        Ok(false)
    }

    /// Unit propagation and pure-literal assignment to a fixpoint. Returns
    /// `false` on conflict.
    fn simplify(&mut self) -> bool {
        loop {
            let mut changed = false;
            for ci in 0..self.clauses.len() {
                let mut open = None;
                let mut n_open = 0;
                let mut satisfied = false;
                for &lit in &self.clauses[ci] {
                    match self.lit_value(lit) {
                        1 => {
                            satisfied = true;
                            break;
                        }
                        UNASSIGNED => {
                            n_open += 1;
                            open = Some(lit);
                        }
                        _ => {}
                    }
                }
                if satisfied {
                    continue;
                }
                match n_open {
                    0 => return false,
                    1 => {
                        self.assign(open.unwrap());
                        self.propagations += 1;
                        changed = true;
                    }
                    _ => {}
                }
            }
            if changed {
                continue;
            }

            // polarity bits per variable over unsatisfied clauses
            let mut seen = vec![0u8; self.values.len()];
            for clause in &self.clauses {
                if clause.iter().any(|&l| self.lit_value(l) == 1) {
                    continue;
                }
                for &lit in clause {
                    if self.lit_value(lit) == UNASSIGNED {
                        seen[lit.var().pos()] |= if lit.is_negated() { 2 } else { 1 };
                    }
                }
            }
            for (pos, &bits) in seen.iter().enumerate() {
                if bits == 1 || bits == 2 {
                    let var = Var::new(pos as u32 + 1);
                    self.assign(Literal::new(var, bits == 2));
                    self.propagations += 1;
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn branch_var(&self) -> Option<Var> {
        self.clauses
            .iter()
            .filter(|c| !c.iter().any(|&l| self.lit_value(l) == 1))
            .flat_map(|c| c.iter())
            .filter(|&&l| self.lit_value(l) == UNASSIGNED)
            .map(|l| l.var())
            .min()
    }
}

/// Clause as a pair of bitmasks over variable positions.
struct MaskClause {
    pos: u32,
    neg: u32,
}

fn mask_clauses(formula: &Formula) -> Result<Vec<MaskClause>, OracleError> {
    if formula.num_vars() > BRUTE_MAX_VARS {
        return Err(OracleError::TooManyVars {
            num_vars: formula.num_vars(),
            limit: BRUTE_MAX_VARS,
        });
    }
    Ok(formula
        .clauses()
        .iter()
        .map(|c| {
            let mut m = MaskClause { pos: 0, neg: 0 };
            for lit in c.literals() {
                let bit = 1u32 << lit.var().pos();
                if lit.is_negated() {
                    m.neg |= bit;
                } else {
                    m.pos |= bit;
                }
            }
            m
        })
        .collect())
}

#[inline]
fn satisfies(clauses: &[MaskClause], assignment: u32) -> bool {
    clauses
        .iter()
        .all(|c| (assignment & c.pos) | (!assignment & c.neg) != 0)
}

/// Exact label by enumerating all `2^num_vars` assignments.
pub fn solve_brute(formula: &Formula) -> Result<Label, OracleError> {
    let clauses = mask_clauses(formula)?;
    let total = 1u64 << formula.num_vars();
    let sat = (0..total).any(|a| satisfies(&clauses, a as u32));
    Ok(if sat { Label::Sat } else { Label::Unsat })
}

/// Number of satisfying assignments over the declared variables.
pub fn count_models(formula: &Formula) -> Result<u64, OracleError> {
    let clauses = mask_clauses(formula)?;
    let total = 1u64 << formula.num_vars();
    Ok((0..total).filter(|&a| satisfies(&clauses, a as u32)).count() as u64)
}
