//! Label-agnostic augmentations adapted from generic graph contrastive
//! learning: drop clauses, drop variables, link perturbation and subgraph.
//!
//! They act on the formula so the result is always a valid LIG⁺, but they do
//! not preserve satisfiability. Counts use `⌊rate × base⌋` except for the
//! subgraph walk length, which uses `⌈rate × #nodes⌉`.

use std::collections::HashSet;

use rand::seq::index;
use rand::Rng as _;
use thiserror::Error;

use crate::formula::{Clause, Formula, Literal, Var};
use crate::graph::{build_lig, literal_index};
use crate::lpa::{ceil_count, floor_count};
use crate::rng::rng_from_seed;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LaaError {
    #[error("subgraph sampling needs at least one clause")]
    EmptyFormula,
}

/// Removes `⌊rate × #clauses⌋` random clauses.
pub fn drop_clauses(formula: &Formula, rate: f64, seed: u64) -> Formula {
    let m = formula.num_clauses();
    let count = floor_count(rate, m);
    let mut rng = rng_from_seed(seed);
    let dropped: HashSet<usize> = index::sample(&mut rng, m, count).into_iter().collect();
    let clauses = formula
        .clauses()
        .iter()
        .enumerate()
        .filter(|(i, _)| !dropped.contains(i))
        .map(|(_, c)| c.clone())
        .collect();
    Formula::new(formula.num_vars(), clauses).unwrap()
}

/// Deletes every occurrence of `⌊rate × num_vars⌋` random variables. Clauses
/// left empty are removed; the variable count is unchanged.
pub fn drop_variables(formula: &Formula, rate: f64, seed: u64) -> Formula {
    let n = formula.num_vars() as usize;
    let count = floor_count(rate, n);
    let mut rng = rng_from_seed(seed);
    let dropped: HashSet<Var> = index::sample(&mut rng, n, count)
        .into_iter()
        .map(|p| Var::new(p as u32 + 1))
        .collect();
    drop_variable_set(formula, &dropped)
}

fn drop_variable_set(formula: &Formula, dropped: &HashSet<Var>) -> Formula {
    let clauses = formula
        .clauses()
        .iter()
        .filter_map(|c| {
            if !c.literals().iter().any(|l| dropped.contains(&l.var())) {
                return Some(c.clone());
            }
            let kept = Clause::new(
                c.literals()
                    .iter()
                    .copied()
                    .filter(|l| !dropped.contains(&l.var())),
            );
            (!kept.is_empty()).then_some(kept)
        })
        .collect();
    Formula::new(formula.num_vars(), clauses).unwrap()
}

/// Performs `⌊rate × #literal occurrences⌋` edits. Each edit is, with equal
/// probability, the removal of a random literal occurrence or the insertion
/// of a random literal into a random clause. Insertions of a literal already
/// in the clause are skipped. Clauses emptied by removal are deleted.
pub fn perturb_links(formula: &Formula, rate: f64, seed: u64) -> Formula {
    let edits = floor_count(rate, formula.num_literals());
    let n = formula.num_vars();
    let mut rng = rng_from_seed(seed);
    let mut clauses: Vec<Vec<Literal>> = formula
        .clauses()
        .iter()
        .map(|c| c.literals().to_vec())
        .collect();

    for _ in 0..edits {
        if rng.gen_bool(0.5) {
            let total: usize = clauses.iter().map(Vec::len).sum();
            if total == 0 {
                continue;
            }
            let mut r = rng.gen_range(0..total);
            let ci = clauses
                .iter()
                .position(|c| {
                    if r < c.len() {
                        true
                    } else {
                        r -= c.len();
                        false
                    }
                })
                .unwrap();
            clauses[ci].remove(r);
            if clauses[ci].is_empty() {
                clauses.remove(ci);
            }
        } else {
            if clauses.is_empty() || n == 0 {
                continue;
            }
            let ci = rng.gen_range(0..clauses.len());
            let lit = Literal::new(Var::new(rng.gen_range(1..=n)), rng.gen_bool(0.5));
            if !clauses[ci].contains(&lit) {
                clauses[ci].push(lit);
            }
        }
    }

    Formula::new(n, clauses.into_iter().map(Clause::new).collect()).unwrap()
}

/// Keeps the clauses whose node is in `visited`, each restricted to the
/// literals whose node is in `visited`. Node indices follow
/// [`crate::graph::LigGraph::adjacency`]. Clauses restricted to nothing are
/// dropped; clause order and the variable count are kept.
pub fn induced_subformula(formula: &Formula, visited: &HashSet<usize>) -> Formula {
    let offset = 2 * formula.num_vars() as usize;
    let clauses = formula
        .clauses()
        .iter()
        .enumerate()
        .filter(|(j, _)| visited.contains(&(offset + j)))
        .filter_map(|(_, c)| {
            let kept = Clause::new(
                c.literals()
                    .iter()
                    .copied()
                    .filter(|&l| visited.contains(&literal_index(l))),
            );
            (!kept.is_empty()).then_some(kept)
        })
        .collect();
    Formula::new(formula.num_vars(), clauses).unwrap()
}

/// Random walk over the LIG⁺ of `formula`: uniform start node, then
/// `⌈rate × #nodes⌉` moves to a uniform neighbour. Returns the set of
/// visited nodes.
pub fn random_walk(formula: &Formula, rate: f64, seed: u64) -> HashSet<usize> {
    let graph = build_lig(formula, true);
    let adj = graph.adjacency();
    let nodes = graph.num_nodes();
    let mut visited = HashSet::new();
    if nodes == 0 {
        return visited;
    }
    let steps = ceil_count(rate, nodes);
    let mut rng = rng_from_seed(seed);
    let mut at = rng.gen_range(0..nodes);
    visited.insert(at);
    for _ in 0..steps {
        let next = &adj[at];
        if next.is_empty() {
            break;
        }
        at = next[rng.gen_range(0..next.len())];
        visited.insert(at);
    }
    visited
}

/// Subformula induced by a random walk (see [`random_walk`] and
/// [`induced_subformula`]).
pub fn subgraph(formula: &Formula, rate: f64, seed: u64) -> Result<Formula, LaaError> {
    if formula.num_clauses() == 0 {
        return Err(LaaError::EmptyFormula);
    }
    let visited = random_walk(formula, rate, seed);
    Ok(induced_subformula(formula, &visited))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::running_example;

    fn f(num_vars: u32, clauses: &[&[i64]]) -> Formula {
        Formula::from_dimacs_clauses(num_vars, clauses)
    }

    #[test]
    fn rate_zero_is_identity() {
        let g = running_example();
        assert_eq!(drop_clauses(&g, 0.0, 1), g);
        assert_eq!(drop_variables(&g, 0.0, 1), g);
        assert_eq!(perturb_links(&g, 0.0, 1), g);
    }

    #[test]
    fn drop_all_clauses() {
        assert_eq!(drop_clauses(&running_example(), 1.0, 5), Formula::empty(4));
    }

    #[test]
    fn drop_clauses_count() {
        let out = drop_clauses(&running_example(), 0.5, 5);
        assert_eq!(out.num_clauses(), 2);
    }

    #[test]
    fn drop_variable_deletes_emptied_clauses() {
        let g = f(2, &[&[1, 2], &[-2]]);
        let dropped: HashSet<Var> = [Var::new(2)].into_iter().collect();
        assert_eq!(drop_variable_set(&g, &dropped), f(2, &[&[1]]));
        let out = drop_variables(&running_example(), 0.5, 3);
        assert_eq!(out.num_vars(), 4);
        let occ = out.occurrences();
        assert_eq!(occ.iter().filter(|o| o[0] + o[1] == 0).count(), 2);
    }

    #[test]
    fn perturb_links_keeps_formula_valid() {
        for seed in 0..50 {
            let out = perturb_links(&running_example(), 1.0, seed);
            assert_eq!(out.num_vars(), 4);
            assert!(out.is_canonical());
            assert!(!out.contains_empty_clause());
        }
    }

    #[test]
    fn full_walk_keeps_formula() {
        let g = running_example();
        let all: HashSet<usize> = (0..2 * 4 + 4).collect();
        assert_eq!(induced_subformula(&g, &all), g);
    }

    #[test]
    fn single_clause_restricted_to_one_literal() {
        let g = f(2, &[&[1, -2]]);
        // clause node is 4, literal x1 is node 0
        let visited: HashSet<usize> = [4, 0].into_iter().collect();
        assert_eq!(induced_subformula(&g, &visited), f(2, &[&[1]]));
    }

    #[test]
    fn subgraph_requires_clauses() {
        assert_eq!(
            subgraph(&Formula::empty(3), 0.5, 0),
            Err(LaaError::EmptyFormula)
        );
        let out = subgraph(&running_example(), 0.5, 0).unwrap();
        assert!(out.num_clauses() <= 4);
    }

    #[test]
    fn walk_length_bounds_visits() {
        let g = running_example();
        for seed in 0..20 {
            let visited = random_walk(&g, 0.25, seed);
            // 12 nodes, 3 steps
            assert!(!visited.is_empty() && visited.len() <= 4);
        }
    }
}
