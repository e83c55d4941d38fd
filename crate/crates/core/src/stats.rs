//! Corpus statistics: subsumed-clause prevalence and DPLL decision counts
//! before and after an augmentation chain.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::augment::{Chain, ChainError};
use crate::formula::Formula;
use crate::lpa::subsumed_indices;
use crate::oracle::{solve_dpll, OracleError, SolverConfig};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum StatsError {
    #[error("instance {index}: {source}")]
    Oracle { index: usize, source: OracleError },
    #[error("instance {index}: {source}")]
    Chain { index: usize, source: ChainError },
}

/// Whether subsumption elimination would remove at least one clause.
pub fn has_subsumed_clause(formula: &Formula) -> bool {
    !subsumed_indices(formula).is_empty()
}

/// Fraction of formulas containing at least one subsumed clause.
pub fn subsumed_fraction(formulas: &[Formula]) -> f64 {
    if formulas.is_empty() {
        return 0.0;
    }
    let hits = formulas.par_iter().filter(|f| has_subsumed_clause(f)).count();
    hits as f64 / formulas.len() as f64
}

/// Fraction of all clauses, pooled over the corpus, that subsumption
/// elimination would remove.
pub fn subsumed_clause_share(formulas: &[Formula]) -> f64 {
    let (removed, total) = formulas
        .par_iter()
        .map(|f| (subsumed_indices(f).len(), f.num_clauses()))
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    if total == 0 {
        0.0
    } else {
        removed as f64 / total as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionSummary {
    pub count: usize,
    pub median: f64,
    pub mean: f64,
    pub min: u64,
    pub max: u64,
    /// Share of instances decided without any branching.
    pub propagation_only: f64,
}

impl DecisionSummary {
    pub fn from_counts(counts: &[u64]) -> DecisionSummary {
        if counts.is_empty() {
            return DecisionSummary {
                count: 0,
                median: 0.0,
                mean: 0.0,
                min: 0,
                max: 0,
                propagation_only: 0.0,
            };
        }
        let mut sorted = counts.to_vec();
        sorted.sort_unstable();
        let n = sorted.len();
        let median = if n % 2 == 1 {
            sorted[n / 2] as f64
        } else {
            (sorted[n / 2 - 1] + sorted[n / 2]) as f64 / 2.0
        };
        DecisionSummary {
            count: n,
            median,
            mean: sorted.iter().sum::<u64>() as f64 / n as f64,
            min: sorted[0],
            max: sorted[n - 1],
            propagation_only: sorted.iter().filter(|&&d| d == 0).count() as f64 / n as f64,
        }
    }
}

/// DPLL decision count of every formula, in input order.
pub fn decision_counts(formulas: &[Formula], cfg: &SolverConfig) -> Result<Vec<u64>, StatsError> {
    formulas
        .par_iter()
        .enumerate()
        .map(|(index, f)| {
            solve_dpll(f, cfg)
                .map(|r| r.decisions)
                .map_err(|source| StatsError::Oracle { index, source })
        })
        .collect()
}

/// Applies `chain` to every formula, reseeded by position.
pub fn augment_all(formulas: &[Formula], chain: &Chain) -> Result<Vec<Formula>, StatsError> {
    formulas
        .par_iter()
        .enumerate()
        .map(|(index, f)| {
            chain
                .reseeded(index as u64)
                .apply(f)
                .map_err(|source| StatsError::Chain { index, source })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusStats {
    pub instances: usize,
    pub mean_vars: f64,
    pub mean_clauses: f64,
    /// Share of instances with at least one subsumed clause.
    pub subsumed_fraction: f64,
    /// Share of clauses that are subsumed.
    pub subsumed_clause_share: f64,
    pub decisions_before: DecisionSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decisions_after: Option<DecisionSummary>,
    /// Median after over median before; absent without a chain or when the
    /// median before is 0.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub median_ratio: Option<f64>,
}

pub fn corpus_stats(
    formulas: &[Formula],
    chain: Option<&Chain>,
    cfg: &SolverConfig,
) -> Result<CorpusStats, StatsError> {
    let n = formulas.len().max(1) as f64;
    let before = DecisionSummary::from_counts(&decision_counts(formulas, cfg)?);
    let after = match chain {
        Some(chain) => {
            let augmented = augment_all(formulas, chain)?;
            Some(DecisionSummary::from_counts(&decision_counts(&augmented, cfg)?))
        }
        None => None,
    };
    let median_ratio = after
        .as_ref()
        .filter(|_| before.median > 0.0)
        .map(|a| a.median / before.median);
    Ok(CorpusStats {
        instances: formulas.len(),
        mean_vars: formulas.iter().map(|f| f.num_vars() as f64).sum::<f64>() / n,
        mean_clauses: formulas.iter().map(|f| f.num_clauses() as f64).sum::<f64>() / n,
        subsumed_fraction: subsumed_fraction(formulas),
        subsumed_clause_share: subsumed_clause_share(formulas),
        decisions_before: before,
        chain: chain.map(ToString::to_string),
        decisions_after: after,
        median_ratio,
    })
}
