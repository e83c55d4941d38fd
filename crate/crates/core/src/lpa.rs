//! Label-preserving augmentations.
//!
//! Each transformation maps a formula to an equisatisfiable one. The seeded
//! variants take an intensity `rate` in `[0, 1]` that is turned into a count
//! with `⌈rate × base⌉`, where the base is named on each function. The
//! explicit variants ([`unit_propagate_literal`], [`add_unit_literal_with`],
//! [`eliminate_variable`]) perform one fully specified step.

use std::collections::HashSet;

use rand::seq::index;
use rand::seq::SliceRandom;
use rand::Rng as _;
use thiserror::Error;

use crate::formula::{Clause, Formula, Literal, Var};
use crate::rng::{rng_from_seed, Rng};

/// Slack for rate × base products such as `0.3 × 10 = 3.0000000000000004`.
const RATE_EPS: f64 = 1e-9;

pub(crate) fn check_rate(rate: f64) {
    assert!(
        (0.0..=1.0).contains(&rate),
        "augmentation rate must lie in [0, 1], got {rate}"
    );
}

/// `⌈rate × base⌉`, never more than `base`.
pub fn ceil_count(rate: f64, base: usize) -> usize {
    check_rate(rate);
    (((rate * base as f64) - RATE_EPS).ceil().max(0.0) as usize).min(base)
}

/// `⌊rate × base⌋`, never more than `base`.
pub fn floor_count(rate: f64, base: usize) -> usize {
    check_rate(rate);
    (((rate * base as f64) + RATE_EPS).floor() as usize).min(base)
}

// ---------------------------------------------------------------------------
// Unit propagation

/// One unit-propagation step on `lit`: drops every clause containing `lit`
/// and deletes `¬lit` from the rest.
pub fn unit_propagate_literal(formula: &Formula, lit: Literal) -> Formula {
    let clauses = formula
        .clauses()
        .iter()
        .filter(|c| !c.contains(lit))
        .map(|c| {
            if c.contains(!lit) {
                Clause::new(c.literals().iter().copied().filter(|&l| l != !lit))
            } else {
                c.clone()
            }
        })
        .collect();
    Formula::new_unchecked(formula.num_vars(), clauses)
}

fn unit_indices(formula: &Formula) -> Vec<usize> {
    formula
        .clauses()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_unit())
        .map(|(i, _)| i)
        .collect()
}

/// Applies `⌈rate × #unit clauses⌉` propagation steps. Each step rescans the
/// current formula and propagates a randomly chosen unit clause. Stops early
/// when no unit clause is left.
pub fn unit_propagate(formula: &Formula, rate: f64, seed: u64) -> Formula {
    let steps = ceil_count(rate, unit_indices(formula).len());
    let mut rng = rng_from_seed(seed);
    let mut current = formula.clone();
    for _ in 0..steps {
        let units = unit_indices(&current);
        let Some(&pick) = units.choose(&mut rng) else {
            break;
        };
        let lit = current.clauses()[pick].literals()[0];
        current = unit_propagate_literal(&current, lit);
    }
    current
}

/// Propagates unit clauses in clause order until none is left.
pub fn unit_propagate_fixpoint(formula: &Formula) -> Formula {
    let mut current = formula.clone();
    while let Some(&i) = unit_indices(&current).first() {
        let lit = current.clauses()[i].literals()[0];
        current = unit_propagate_literal(&current, lit);
    }
    current
}

// ---------------------------------------------------------------------------
// Add unit literal

/// A fully specified add-unit-literal step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuPlan {
    /// Literal of the fresh variable that becomes the unit clause.
    pub literal: Literal,
    /// Indices of existing clauses that receive the negation of `literal`.
    pub targets: Vec<usize>,
    /// Other literals of each new clause; `literal` is added to each.
    pub new_clauses: Vec<Vec<Literal>>,
}

/// Applies an [`AuPlan`]. The fresh unit clause comes first, followed by the
/// original clauses (targets extended with the negated literal) and then the
/// new clauses.
///
/// # Panics
///
/// If the plan's literal is not variable `num_vars + 1`, or a target index is
/// out of range.
pub fn add_unit_literal_with(formula: &Formula, plan: &AuPlan) -> Formula {
    let fresh = formula.num_vars() + 1;
    assert_eq!(plan.literal.var().index(), fresh, "AU needs a fresh variable");
    let neg = !plan.literal;
    let mut clauses = Vec::with_capacity(1 + formula.num_clauses() + plan.new_clauses.len());
    clauses.push(Clause::new([plan.literal]));
    let mut originals = formula.clauses().to_vec();
    for &t in &plan.targets {
        let c = &mut originals[t];
        *c = Clause::new(c.literals().iter().copied().chain([neg]));
    }
    clauses.extend(originals);
    for others in &plan.new_clauses {
        clauses.push(Clause::new(others.iter().copied().chain([plan.literal])));
    }
    Formula::new(fresh, clauses).expect("AU plan uses an out-of-range literal")
}

/// Draws an [`AuPlan`]: random polarity for the fresh variable,
/// `⌈rate × #clauses⌉` distinct target clauses and as many new clauses, each
/// with 1 to 3 random literals over the existing variables.
pub fn sample_au_plan(formula: &Formula, rate: f64, seed: u64) -> AuPlan {
    let mut rng = rng_from_seed(seed);
    let fresh = Var::new(formula.num_vars() + 1);
    let literal = Literal::new(fresh, rng.gen_bool(0.5));
    let m = formula.num_clauses();
    let count = ceil_count(rate, m);
    let mut targets = index::sample(&mut rng, m, count).into_vec();
    targets.sort_unstable();
    let n = formula.num_vars() as usize;
    let new_clauses = (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=3).min(n);
            index::sample(&mut rng, n, len)
                .into_iter()
                .map(|p| Literal::new(Var::new(p as u32 + 1), rng.gen_bool(0.5)))
                .collect()
        })
        .collect();
    AuPlan {
        literal,
        targets,
        new_clauses,
    }
}

/// Adds a unit clause over a fresh variable, inserts its negation into
/// `⌈rate × #clauses⌉` existing clauses and adds as many new clauses
/// containing it.
pub fn add_unit_literal(formula: &Formula, rate: f64, seed: u64) -> Formula {
    add_unit_literal_with(formula, &sample_au_plan(formula, rate, seed))
}

// ---------------------------------------------------------------------------
// Pure literals

/// Literals whose variable occurs in exactly one polarity, by variable index.
pub fn pure_literals(formula: &Formula) -> Vec<Literal> {
    formula
        .occurrences()
        .iter()
        .enumerate()
        .filter_map(|(pos, &[p, n])| {
            let var = Var::new(pos as u32 + 1);
            match (p > 0, n > 0) {
                (true, false) => Some(var.positive()),
                (false, true) => Some(var.negative()),
                _ => None,
            }
        })
        .collect()
}

/// Picks `⌈rate × #pure variables⌉` pure literals and deletes every clause
/// containing one of them.
pub fn pure_literal_eliminate(formula: &Formula, rate: f64, seed: u64) -> Formula {
    let pure = pure_literals(formula);
    let count = ceil_count(rate, pure.len());
    if count == 0 {
        return formula.clone();
    }
    let mut rng = rng_from_seed(seed);
    let chosen: HashSet<Literal> = index::sample(&mut rng, pure.len(), count)
        .into_iter()
        .map(|i| pure[i])
        .collect();
    let clauses = formula
        .clauses()
        .iter()
        .filter(|c| !c.literals().iter().any(|l| chosen.contains(l)))
        .cloned()
        .collect();
    Formula::new_unchecked(formula.num_vars(), clauses)
}

// ---------------------------------------------------------------------------
// Subsumption

/// Indices of clauses removed by subsumption: strict supersets of another
/// clause, and every copy of a duplicated clause except the first.
pub fn subsumed_indices(formula: &Formula) -> Vec<usize> {
    let clauses: Vec<Clause> = formula.clauses().iter().map(Clause::canonicalized).collect();
    (0..clauses.len())
        .filter(|&i| {
            clauses.iter().enumerate().any(|(j, other)| {
                j != i
                    && other.len() <= clauses[i].len()
                    && other.is_subset_of(&clauses[i])
                    && (other.len() < clauses[i].len() || j < i)
            })
        })
        .collect()
}

/// Removes every subsumed clause. Quadratic in the clause count.
pub fn subsumed_clause_eliminate(formula: &Formula) -> Formula {
    let removed: HashSet<usize> = subsumed_indices(formula).into_iter().collect();
    let clauses = formula
        .clauses()
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed.contains(i))
        .map(|(_, c)| c.clone())
        .collect();
    Formula::new_unchecked(formula.num_vars(), clauses)
}

/// Removes a single subsumed clause: the longest one, latest on ties.
/// Returns the formula unchanged when nothing is subsumed.
pub fn subsume_one(formula: &Formula) -> Formula {
    let target = subsumed_indices(formula)
        .into_iter()
        .max_by_key(|&i| (formula.clauses()[i].len(), i));
    match target {
        Some(t) => {
            let mut clauses = formula.clauses().to_vec();
            clauses.remove(t);
            Formula::new_unchecked(formula.num_vars(), clauses)
        }
        None => formula.clone(),
    }
}

// ---------------------------------------------------------------------------
// Resolution

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("clauses do not clash on {pivot}")]
pub struct ResolveError {
    pub pivot: Var,
}

/// Resolvent of `c1` and `c2` on `pivot`. One clause must contain the pivot
/// positively and the other negatively. Returns `None` for a tautological
/// resolvent.
pub fn resolve(c1: &Clause, c2: &Clause, pivot: Var) -> Result<Option<Clause>, ResolveError> {
    let (p, n) = (pivot.positive(), pivot.negative());
    let (with_pos, with_neg) = if c1.contains(p) && c2.contains(n) {
        (c1, c2)
    } else if c1.contains(n) && c2.contains(p) {
        (c2, c1)
    } else {
        return Err(ResolveError { pivot });
    };
    let resolvent = Clause::new(
        with_pos
            .literals()
            .iter()
            .copied()
            .filter(|&l| l != p)
            .chain(with_neg.literals().iter().copied().filter(|&l| l != n)),
    );
    Ok((!resolvent.is_tautology()).then_some(resolvent))
}

/// All `(positive clause, negative clause, pivot)` index triples.
fn clashing_pairs(formula: &Formula) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut occ = vec![(Vec::new(), Vec::new()); formula.num_vars() as usize];
    for (i, clause) in formula.clauses().iter().enumerate() {
        for lit in clause.literals() {
            let entry = &mut occ[lit.var().pos()];
            if lit.is_negated() {
                entry.1.push(i);
            } else {
                entry.0.push(i);
            }
        }
    }
    occ
}

/// Appends `⌈rate × #clauses⌉` resolvents. Each is drawn by picking a
/// clashing `(clause, clause, pivot)` occurrence uniformly at random; draws
/// that yield a tautology or a clause already present are retried, up to a
/// fixed attempt budget.
pub fn clause_resolution(formula: &Formula, rate: f64, seed: u64) -> Formula {
    let target = ceil_count(rate, formula.num_clauses());
    if target == 0 {
        return formula.clone();
    }
    let occ = clashing_pairs(formula);
    let weights: Vec<usize> = occ.iter().map(|(p, n)| p.len() * n.len()).collect();
    let total: usize = weights.iter().sum();
    if total == 0 {
        return formula.clone();
    }

    let mut rng = rng_from_seed(seed);
    let mut present: HashSet<Clause> = formula.clauses().iter().cloned().collect();
    let mut clauses = formula.clauses().to_vec();
    let mut added = 0;
    let budget = 10 * target + 50;
    for _ in 0..budget {
        if added == target {
            break;
        }
        let (var, i, j) = pick_clash(&mut rng, &occ, &weights, total);
        let Some(resolvent) = resolve(&formula.clauses()[i], &formula.clauses()[j], var)
            .expect("sampled pair clashes on pivot")
        else {
            continue;
        };
        if present.insert(resolvent.clone()) {
            clauses.push(resolvent);
            added += 1;
        }
    }
    Formula::new_unchecked(formula.num_vars(), clauses)
}

fn pick_clash(
    rng: &mut Rng,
    occ: &[(Vec<usize>, Vec<usize>)],
    weights: &[usize],
    total: usize,
) -> (Var, usize, usize) {
    let mut r = rng.gen_range(0..total);
    for (pos, &w) in weights.iter().enumerate() {
        if r < w {
            let (p, n) = &occ[pos];
            return (Var::new(pos as u32 + 1), p[r / n.len()], n[r % n.len()]);
        }
        r -= w;
    }
    unreachable!("r < total")
}

// ---------------------------------------------------------------------------
// Variable elimination

/// Clauses mentioning `var`, split by polarity, with the remaining clauses
/// and the non-tautological pairwise resolvents.
struct Elimination {
    occurrences: usize,
    kept: Vec<Clause>,
    resolvents: Vec<Clause>,
}

fn elimination(formula: &Formula, var: Var) -> Elimination {
    let (p, n) = (var.positive(), var.negative());
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut kept = Vec::new();
    let mut occurrences = 0;
    for clause in formula.clauses() {
        match (clause.contains(p), clause.contains(n)) {
            (false, false) => kept.push(clause.clone()),
            // always true, dropped with the rest of the occurrences
            (true, true) => occurrences += 1,
            (true, false) => {
                occurrences += 1;
                pos.push(clause)
            }
            (false, true) => {
                occurrences += 1;
                neg.push(clause)
            }
        }
    }
    let mut seen = HashSet::new();
    let mut resolvents = Vec::new();
    for c1 in &pos {
        for c2 in &neg {
            if let Some(r) = resolve(c1, c2, var).expect("clash on var") {
                if seen.insert(r.clone()) {
                    resolvents.push(r);
                }
            }
        }
    }
    Elimination {
        occurrences,
        kept,
        resolvents,
    }
}

/// Replaces every clause mentioning `var` by the non-tautological resolvents
/// on `var`. Resolvents are deduplicated and appended after the kept clauses.
pub fn eliminate_variable(formula: &Formula, var: Var) -> Formula {
    let Elimination {
        mut kept,
        resolvents,
        ..
    } = elimination(formula, var);
    kept.extend(resolvents);
    Formula::new_unchecked(formula.num_vars(), kept)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VeConfig {
    /// A variable is eligible when its resolvent count is at most this
    /// factor times the number of clauses it occurs in.
    pub resolvent_factor: f64,
}

impl Default for VeConfig {
    fn default() -> Self {
        VeConfig {
            resolvent_factor: 2.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VeOutcome {
    pub formula: Formula,
    /// Eliminated variables in elimination order.
    pub eliminated: Vec<Var>,
    /// How many eliminations were asked for.
    pub requested: usize,
}

/// Eliminates `max(1, ⌈rate × num_vars⌉)` variables with the default
/// [`VeConfig`].
pub fn variable_eliminate(formula: &Formula, rate: f64, seed: u64) -> VeOutcome {
    variable_eliminate_with(formula, rate, seed, &VeConfig::default())
}

/// Eliminates variables one at a time, each chosen uniformly among the
/// remaining variables whose elimination stays within the resolvent bound.
/// Stops early when no variable is eligible.
pub fn variable_eliminate_with(
    formula: &Formula,
    rate: f64,
    seed: u64,
    cfg: &VeConfig,
) -> VeOutcome {
    let n = formula.num_vars() as usize;
    let requested = ceil_count(rate, n).max(1).min(n);
    let mut rng = rng_from_seed(seed);
    let mut remaining: Vec<Var> = formula.vars().collect();
    let mut current = formula.clone();
    let mut eliminated = Vec::new();

    while eliminated.len() < requested {
        remaining.shuffle(&mut rng);
        let found = remaining.iter().enumerate().find_map(|(i, &var)| {
            let e = elimination(&current, var);
            let bound = cfg.resolvent_factor * e.occurrences as f64;
            (e.resolvents.len() as f64 <= bound).then_some((i, e))
        });
        let Some((i, e)) = found else {
            log::debug!(
                "VE: no eligible variable after {} of {requested} eliminations",
                eliminated.len()
            );
            break;
        };
        let var = remaining.swap_remove(i);
        let mut clauses = e.kept;
        clauses.extend(e.resolvents);
        current = Formula::new_unchecked(current.num_vars(), clauses);
        eliminated.push(var);
    }

    VeOutcome {
        formula: current,
        eliminated,
        requested,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::running_example;

    fn f(num_vars: u32, clauses: &[&[i64]]) -> Formula {
        Formula::from_dimacs_clauses(num_vars, clauses)
    }

    fn c(lits: &[i64]) -> Clause {
        Clause::from_dimacs(lits)
    }

    #[test]
    fn counts() {
        assert_eq!(ceil_count(0.3, 10), 3);
        assert_eq!(ceil_count(0.25, 4), 1);
        assert_eq!(ceil_count(0.1, 4), 1);
        assert_eq!(ceil_count(0.0, 4), 0);
        assert_eq!(ceil_count(1.0, 4), 4);
        assert_eq!(floor_count(0.3, 10), 3);
        assert_eq!(floor_count(0.3, 4), 1);
        assert_eq!(floor_count(1.0, 4), 4);
    }

    #[test]
    #[should_panic(expected = "rate")]
    fn rate_out_of_range_panics() {
        ceil_count(1.5, 3);
    }

    #[test]
    fn up_on_running_example() {
        let out = unit_propagate(&running_example(), 0.5, 0);
        assert_eq!(out, f(4, &[&[2, 3], &[2, 3, -4]]));
    }

    #[test]
    fn up_without_units_is_identity() {
        let g = f(3, &[&[1, 2], &[-2, 3]]);
        assert_eq!(unit_propagate(&g, 1.0, 9), g);
    }

    #[test]
    fn up_conflicting_units_yield_empty_clause() {
        let g = f(2, &[&[1], &[-1], &[1, 2]]);
        let out = unit_propagate(&g, 0.5, 3);
        assert!(out.contains_empty_clause());
    }

    #[test]
    fn up_fixpoint() {
        let g = f(3, &[&[1], &[-1, 2], &[-2, 3], &[-3, 1]]);
        assert_eq!(unit_propagate_fixpoint(&g), Formula::empty(3));
    }

    #[test]
    fn au_explicit_plan_matches_worked_example() {
        let plan = AuPlan {
            literal: Var::new(5).negative(),
            targets: vec![0],
            new_clauses: vec![vec![
                Var::new(1).positive(),
                Var::new(2).negative(),
                Var::new(3).positive(),
            ]],
        };
        let out = add_unit_literal_with(&running_example(), &plan);
        let expected = f(
            5,
            &[
                &[-5],
                &[5, 1],
                &[2, 3],
                &[1, -3, 4],
                &[-1, 2, 3, -4],
                &[-5, 1, -2, 3],
            ],
        );
        assert_eq!(out, expected);
    }

    #[test]
    fn au_rate_zero_only_adds_unit() {
        let g = running_example();
        let out = add_unit_literal(&g, 0.0, 11);
        assert_eq!(out.num_vars(), 5);
        assert_eq!(out.num_clauses(), 5);
        assert!(out.clauses()[0].is_unit());
        assert_eq!(&out.clauses()[1..], g.clauses());
    }

    #[test]
    fn au_on_empty_formula() {
        let out = add_unit_literal(&Formula::empty(0), 0.5, 1);
        assert_eq!(out.num_vars(), 1);
        assert_eq!(out.num_clauses(), 1);
    }

    #[test]
    fn pl_removes_everything_when_pure_literal_covers_all() {
        let g = f(2, &[&[1, 2], &[1, -2]]);
        assert_eq!(pure_literals(&g), vec![Var::new(1).positive()]);
        assert_eq!(pure_literal_eliminate(&g, 1.0, 0), Formula::empty(2));
    }

    #[test]
    fn pl_without_pure_literals_is_identity() {
        let g = f(2, &[&[1, 2], &[-1, -2]]);
        assert!(pure_literals(&g).is_empty());
        assert_eq!(pure_literal_eliminate(&g, 1.0, 0), g);
    }

    #[test]
    fn sc_on_running_example() {
        let out = subsumed_clause_eliminate(&running_example());
        assert_eq!(out, f(4, &[&[1], &[2, 3]]));
        let one = subsume_one(&running_example());
        assert_eq!(one, f(4, &[&[1], &[2, 3], &[1, -3, 4]]));
        assert_eq!(subsume_one(&f(2, &[&[1], &[2]])), f(2, &[&[1], &[2]]));
    }

    #[test]
    fn sc_duplicates_keep_first_and_empty_clause_wins() {
        let g = f(3, &[&[1, 2], &[3], &[1, 2], &[2, 1, 3]]);
        assert_eq!(subsumed_clause_eliminate(&g), f(3, &[&[1, 2], &[3]]));
        let h = f(2, &[&[1], &[], &[2]]);
        assert_eq!(subsumed_clause_eliminate(&h), f(2, &[&[]]));
    }

    #[test]
    fn sc_antichain_unchanged() {
        let g = f(3, &[&[1, 2], &[-1, 3], &[2, 3]]);
        assert_eq!(subsumed_clause_eliminate(&g), g);
    }

    #[test]
    fn resolve_examples() {
        let x3 = Var::new(3);
        assert_eq!(
            resolve(&c(&[2, 3]), &c(&[1, -3, 4]), x3).unwrap(),
            Some(c(&[1, 2, 4]))
        );
        // argument order does not matter
        assert_eq!(
            resolve(&c(&[1, -3, 4]), &c(&[2, 3]), x3).unwrap(),
            Some(c(&[1, 2, 4]))
        );
        assert_eq!(
            resolve(&c(&[-1, 2, 3, -4]), &c(&[1, -3, 4]), x3).unwrap(),
            None
        );
        assert_eq!(
            resolve(&c(&[1]), &c(&[-1]), Var::new(1)).unwrap(),
            Some(Clause::empty())
        );
        assert_eq!(
            resolve(&c(&[1, 2]), &c(&[1, 3]), Var::new(1)),
            Err(ResolveError { pivot: Var::new(1) })
        );
    }

    #[test]
    fn cr_rate_zero_and_no_clash() {
        let g = running_example();
        assert_eq!(clause_resolution(&g, 0.0, 4), g);
        let h = f(2, &[&[1, 2], &[1]]);
        assert_eq!(clause_resolution(&h, 1.0, 4), h);
    }

    #[test]
    fn cr_appends_only_fresh_nontautological_resolvents() {
        let g = running_example();
        for seed in 0..20 {
            let out = clause_resolution(&g, 1.0, seed);
            assert_eq!(&out.clauses()[..4], g.clauses());
            let added = &out.clauses()[4..];
            // only two non-tautological resolvents exist
            assert!(added.len() <= 2);
            for r in added {
                assert!(r == &c(&[1, 2, 4]) || r == &c(&[2, 3, -4]));
            }
        }
    }

    #[test]
    fn ve_eliminate_x3_on_running_example() {
        let out = eliminate_variable(&running_example(), Var::new(3));
        assert_eq!(out, f(4, &[&[1], &[1, 2, 4]]));
    }

    #[test]
    fn ve_absent_variable_is_trivial() {
        let g = f(3, &[&[1, 2]]);
        assert_eq!(eliminate_variable(&g, Var::new(3)), g);
    }

    #[test]
    fn ve_drops_clauses_tautological_on_the_pivot() {
        let g = f(2, &[&[1, -1, 2], &[-1, 2], &[1]]);
        let out = eliminate_variable(&g, Var::new(1));
        assert!(out.clauses().iter().all(|c| !c.mentions(Var::new(1))));
        assert_eq!(out, f(2, &[&[2]]));
    }

    #[test]
    fn ve_reports_elimination_count() {
        let g = running_example();
        let out = variable_eliminate(&g, 0.5, 3);
        assert_eq!(out.requested, 2);
        assert_eq!(out.eliminated.len(), 2);
        for v in &out.eliminated {
            assert!(out.formula.clauses().iter().all(|c| !c.mentions(*v)));
        }
        // nothing is eligible under a zero bound when every variable occurs
        // and produces resolvents
        let h = f(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]);
        let tight = VeConfig {
            resolvent_factor: 0.0,
        };
        let out = variable_eliminate_with(&h, 1.0, 0, &tight);
        assert_eq!(out.requested, 2);
        assert!(out.eliminated.is_empty());
        assert_eq!(out.formula, h);
    }
}
