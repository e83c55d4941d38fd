//! Random instance generators.
//!
//! * **SR** grows a formula one random clause at a time, asking the oracle
//!   after each clause, until it turns unsatisfiable. Negating one literal
//!   of the last clause gives a satisfiable twin, so instances come in pairs
//!   that differ in a single literal.
//! * **UR** is uniform random k-SAT.
//! * **PR** is k-SAT where variable `i` is drawn with weight `i^(-β)`.
//!
//! All generators are deterministic in their seed and label their output
//! with [`crate::oracle::solve_dpll`].

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::index;
use rand::Rng as _;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{Clause, Formula, Label, Literal, Var};
use crate::oracle::{solve_dpll, OracleError, SolverConfig};
use crate::rng::{derive_seed, rng_from_seed, Rng};

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("SR generation did not reach an unsatisfiable formula within {0} clauses")]
    NoUnsat(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Family {
    Sr,
    Ur,
    Pr,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sr => "SR",
            Family::Ur => "UR",
            Family::Pr => "PR",
        })
    }
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, GenError> {
        match s.to_ascii_lowercase().as_str() {
            "sr" => Ok(Family::Sr),
            "ur" => Ok(Family::Ur),
            "pr" => Ok(Family::Pr),
            _ => Err(GenError::InvalidSpec(format!("unknown family `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumVars {
    Fixed(u32),
    /// Drawn uniformly per instance, bounds inclusive.
    Range(u32, u32),
}

impl NumVars {
    fn sample(self, seed: u64) -> u32 {
        match self {
            NumVars::Fixed(n) => n,
            NumVars::Range(lo, hi) => rng_from_seed(derive_seed(seed, u64::MAX)).gen_range(lo..=hi),
        }
    }

    fn min(self) -> u32 {
        match self {
            NumVars::Fixed(n) | NumVars::Range(n, _) => n,
        }
    }
}

/// Clause-length distribution of the SR generator:
/// `1 + Bernoulli(bernoulli) + Geometric(geometric)`, the geometric part
/// counting trials up to and including the first success.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SrConfig {
    pub bernoulli: f64,
    pub geometric: f64,
}

impl Default for SrConfig {
    fn default() -> Self {
        SrConfig {
            bernoulli: 0.3,
            geometric: 0.4,
        }
    }
}

impl SrConfig {
    fn clause_len(&self, rng: &mut Rng) -> usize {
        let mut len = 1 + rng.gen_bool(self.bernoulli) as usize;
        loop {
            len += 1;
            if rng.gen_bool(self.geometric) {
                break;
            }
        }
        len
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub num_vars: NumVars,
    /// UR and PR only.
    pub num_clauses: usize,
    /// UR and PR only.
    pub clause_len: usize,
    /// PR only.
    pub power_exponent: f64,
    pub seed: u64,
    #[serde(skip)]
    pub sr: SrConfig,
}

impl GenSpec {
    pub fn sr(num_vars: u32) -> GenSpec {
        GenSpec {
            family: Family::Sr,
            num_vars: NumVars::Fixed(num_vars),
            num_clauses: 0,
            clause_len: 0,
            power_exponent: 0.0,
            seed: 0,
            sr: SrConfig::default(),
        }
    }

    pub fn sr_range(lo: u32, hi: u32) -> GenSpec {
        GenSpec {
            num_vars: NumVars::Range(lo, hi),
            ..GenSpec::sr(lo)
        }
    }

    pub fn ur(num_vars: u32, num_clauses: usize, clause_len: usize) -> GenSpec {
        GenSpec {
            family: Family::Ur,
            num_vars: NumVars::Fixed(num_vars),
            num_clauses,
            clause_len,
            power_exponent: 0.0,
            seed: 0,
            sr: SrConfig::default(),
        }
    }

    pub fn pr(num_vars: u32, num_clauses: usize, clause_len: usize, power_exponent: f64) -> GenSpec {
        GenSpec {
            family: Family::Pr,
            power_exponent,
            ..GenSpec::ur(num_vars, num_clauses, clause_len)
        }
    }

    /// 10 variables, 41 clauses of 3 literals, exponent 1.7.
    pub fn pr10() -> GenSpec {
        GenSpec::pr(10, 41, 3, 1.7)
    }

    /// 40 variables, 147 clauses of 3 literals, exponent 2.5.
    pub fn pr40() -> GenSpec {
        GenSpec::pr(40, 147, 3, 2.5)
    }

    pub fn with_seed(mut self, seed: u64) -> GenSpec {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<(), GenError> {
        let bad = |msg: String| Err(GenError::InvalidSpec(msg));
        if let NumVars::Range(lo, hi) = self.num_vars {
            if lo > hi {
                return bad(format!("empty variable range {lo}..={hi}"));
            }
        }
        let n = self.num_vars.min() as usize;
        match self.family {
            Family::Sr => {
                if n < 2 {
                    return bad("SR needs at least 2 variables".into());
                }
                let p = [self.sr.bernoulli, self.sr.geometric];
                if !(0.0..=1.0).contains(&p[0]) || !(p[1] > 0.0 && p[1] <= 1.0) {
                    return bad(format!("SR probabilities out of range: {p:?}"));
                }
            }
            Family::Ur | Family::Pr => {
                if self.clause_len == 0 || self.clause_len > n {
                    return bad(format!(
                        "clause length {} must be in 1..={n}",
                        self.clause_len
                    ));
                }
                if self.family == Family::Pr && self.power_exponent.partial_cmp(&1.0) != Some(std::cmp::Ordering::Greater) {
                    return bad(format!(
                        "power-law exponent must exceed 1, got {}",
                        self.power_exponent
                    ));
                }
                if self.family == Family::Pr && self.num_clauses as f64 > distinct_clauses(n, self.clause_len) {
                    return bad(format!(
                        "{} distinct clauses of length {} over {n} variables do not exist",
                        self.num_clauses, self.clause_len
                    ));
                }
            }
        }
        Ok(())
    }

    /// Generates the instance (or SR pair) for this spec's own seed.
    pub fn generate(&self) -> Result<Vec<LabeledInstance>, GenError> {
        self.validate()?;
        generate_one(self, self.seed)
    }
}

/// Where an instance came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceMeta {
    pub family: Family,
    pub seed: u64,
    pub num_vars: u32,
    pub num_clauses: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power_exponent: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledInstance {
    pub formula: Formula,
    pub label: Label,
    pub meta: InstanceMeta,
}

fn label(formula: &Formula) -> Result<Label, GenError> {
    Ok(solve_dpll(formula, &SolverConfig::default())?.label)
}

fn random_literal(rng: &mut Rng, var_pos: usize) -> Literal {
    Literal::new(Var::new(var_pos as u32 + 1), rng.gen_bool(0.5))
}

/// SR pair over `num_vars` variables: `(sat, unsat)`.
pub fn gen_sr(num_vars: u32, seed: u64) -> Result<(LabeledInstance, LabeledInstance), GenError> {
    gen_sr_with(num_vars, seed, &SrConfig::default())
}

pub fn gen_sr_with(
    num_vars: u32,
    seed: u64,
    cfg: &SrConfig,
) -> Result<(LabeledInstance, LabeledInstance), GenError> {
    if num_vars < 2 {
        return Err(GenError::InvalidSpec("SR needs at least 2 variables".into()));
    }
    let n = num_vars as usize;
    let limit = 200 * n;
    let solver = SolverConfig::default();
    let mut rng = rng_from_seed(seed);
    let mut clauses: Vec<Clause> = Vec::new();
    let last = loop {
        if clauses.len() >= limit {
            return Err(GenError::NoUnsat(limit));
        }
        let len = cfg.clause_len(&mut rng).min(n);
        let lits: Vec<Literal> = index::sample(&mut rng, n, len)
            .into_iter()
            .map(|p| random_literal(&mut rng, p))
            .collect();
        clauses.push(Clause::new(lits.iter().copied()));
        let current = Formula::new_unchecked(num_vars, clauses.clone());
        if solve_dpll(&current, &solver)?.label == Label::Unsat {
            break lits;
        }
    };

    let unsat = Formula::new_unchecked(num_vars, clauses.clone());
    let mut flipped = last;
    flipped[0] = !flipped[0];
    *clauses.last_mut().unwrap() = Clause::new(flipped);
    let sat = Formula::new_unchecked(num_vars, clauses);

    let meta = |f: &Formula| InstanceMeta {
        family: Family::Sr,
        seed,
        num_vars,
        num_clauses: f.num_clauses(),
        clause_len: None,
        power_exponent: None,
    };
    let sat_label = label(&sat)?;
    debug_assert_eq!(sat_label, Label::Sat);
    Ok((
        LabeledInstance {
            meta: meta(&sat),
            label: sat_label,
            formula: sat,
        },
        LabeledInstance {
            meta: meta(&unsat),
            label: Label::Unsat,
            formula: unsat,
        },
    ))
}

/// Uniform random k-SAT: each clause has `clause_len` distinct variables
/// with fair-coin polarities.
pub fn gen_ur(
    num_vars: u32,
    num_clauses: usize,
    clause_len: usize,
    seed: u64,
) -> Result<LabeledInstance, GenError> {
    GenSpec::ur(num_vars, num_clauses, clause_len).validate()?;
    let n = num_vars as usize;
    let mut rng = rng_from_seed(seed);
    let clauses = (0..num_clauses)
        .map(|_| {
            let vars = index::sample(&mut rng, n, clause_len);
            Clause::new(vars.into_iter().map(|p| random_literal(&mut rng, p)))
        })
        .collect();
    let formula = Formula::new_unchecked(num_vars, clauses);
    Ok(LabeledInstance {
        label: label(&formula)?,
        meta: InstanceMeta {
            family: Family::Ur,
            seed,
            num_vars,
            num_clauses,
            clause_len: Some(clause_len),
            power_exponent: None,
        },
        formula,
    })
}

/// Number of distinct clauses with `k` distinct variables out of `n`.
fn distinct_clauses(n: usize, k: usize) -> f64 {
    let choose = (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64);
    choose * 2f64.powi(k as i32)
}

/// Per-variable sampling weights `i^(-exponent)` for `i = 1..=num_vars`.
pub fn power_law_weights(num_vars: u32, exponent: f64) -> Vec<f64> {
    (1..=num_vars).map(|i| (i as f64).powf(-exponent)).collect()
}

/// Draws single power-law clauses: `clause_len` distinct variables, variable
/// `i` with weight `i^(-exponent)`, repeats rejected and redrawn.
#[derive(Debug, Clone)]
pub struct PowerLawSampler {
    dist: WeightedIndex<f64>,
    clause_len: usize,
}

impl PowerLawSampler {
    pub fn new(num_vars: u32, clause_len: usize, exponent: f64) -> Result<PowerLawSampler, GenError> {
        if clause_len == 0 || clause_len > num_vars as usize {
            return Err(GenError::InvalidSpec(format!(
                "clause length {clause_len} not in 1..={num_vars}"
            )));
        }
        let dist = WeightedIndex::new(power_law_weights(num_vars, exponent))
            .map_err(|e| GenError::InvalidSpec(e.to_string()))?;
        Ok(PowerLawSampler { dist, clause_len })
    }

    pub fn sample_clause(&self, rng: &mut Rng) -> Clause {
        let mut picked: Vec<usize> = Vec::with_capacity(self.clause_len);
        while picked.len() < self.clause_len {
            let p = self.dist.sample(rng);
            if !picked.contains(&p) {
                picked.push(p);
            }
        }
        Clause::new(picked.into_iter().map(|p| random_literal(rng, p)))
    }
}

/// Power-law k-SAT built from [`PowerLawSampler`] clauses. A clause already
/// present in the formula is redrawn, so no clause subsumes another.
pub fn gen_pr(
    num_vars: u32,
    num_clauses: usize,
    clause_len: usize,
    power_exponent: f64,
    seed: u64,
) -> Result<LabeledInstance, GenError> {
    GenSpec::pr(num_vars, num_clauses, clause_len, power_exponent).validate()?;
    let sampler = PowerLawSampler::new(num_vars, clause_len, power_exponent)?;
    let mut rng = rng_from_seed(seed);
    let mut seen = HashSet::with_capacity(num_clauses);
    let mut clauses = Vec::with_capacity(num_clauses);
    while clauses.len() < num_clauses {
        let c = sampler.sample_clause(&mut rng);
        if seen.insert(c.clone()) {
            clauses.push(c);
        }
    }
    let formula = Formula::new_unchecked(num_vars, clauses);
    Ok(LabeledInstance {
        label: label(&formula)?,
        meta: InstanceMeta {
            family: Family::Pr,
            seed,
            num_vars,
            num_clauses,
            clause_len: Some(clause_len),
            power_exponent: Some(power_exponent),
        },
        formula,
    })
}

/// One instance (UR, PR) or one `[sat, unsat]` pair (SR) for `seed`.
fn generate_one(spec: &GenSpec, seed: u64) -> Result<Vec<LabeledInstance>, GenError> {
    let n = spec.num_vars.sample(seed);
    match spec.family {
        Family::Sr => {
            let (sat, unsat) = gen_sr_with(n, seed, &spec.sr)?;
            Ok(vec![sat, unsat])
        }
        Family::Ur => Ok(vec![gen_ur(n, spec.num_clauses, spec.clause_len, seed)?]),
        Family::Pr => Ok(vec![gen_pr(
            n,
            spec.num_clauses,
            spec.clause_len,
            spec.power_exponent,
            seed,
        )?]),
    }
}

/// `count` instances (UR, PR) or `count` pairs (SR, sat member first).
/// Item `i` uses seed `derive_seed(seed, i)`; an SR item whose oracle runs
/// out of budget is retried with further derived seeds. Generation runs in
/// parallel, output order is by item index.
pub fn gen_corpus(spec: &GenSpec, count: usize, seed: u64) -> Result<Vec<LabeledInstance>, GenError> {
    spec.validate()?;
    let items: Vec<Vec<LabeledInstance>> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let item_seed = derive_seed(seed, i);
            let mut attempt_seed = item_seed;
            for attempt in 1..=8u64 {
                match generate_one(spec, attempt_seed) {
                    Err(GenError::Oracle(OracleError::BudgetExhausted { .. })) => {
                        log::warn!("item {i}: oracle budget exhausted, retrying");
                        attempt_seed = derive_seed(item_seed, attempt);
                    }
                    other => return other,
                }
            }
            generate_one(spec, attempt_seed)
        })
        .collect::<Result<_, _>>()?;
    Ok(items.into_iter().flatten().collect())
}
