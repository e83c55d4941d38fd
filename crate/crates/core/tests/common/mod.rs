#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sataug::gen::{gen_corpus, GenSpec};
use sataug::{Clause, Formula, Literal, Var};

pub const FIGURE_ONE: &[&[i64]] = &[&[1, -2, -3], &[-1, 2, 3]];

pub fn running_example() -> Formula {
    sataug::formula::running_example()
}

pub fn f(num_vars: u32, clauses: &[&[i64]]) -> Formula {
    Formula::from_dimacs_clauses(num_vars, clauses)
}

pub fn formulas(spec: &GenSpec, count: usize, seed: u64) -> Vec<Formula> {
    gen_corpus(spec, count, seed)
        .unwrap()
        .into_iter()
        .map(|i| i.formula)
        .collect()
}

/// `count` SR(10) formulas, both members of each pair.
pub fn sr10(count: usize, seed: u64) -> Vec<Formula> {
    formulas(&GenSpec::sr(10), count.div_ceil(2), seed)
        .into_iter()
        .take(count)
        .collect()
}

pub fn ur12(count: usize, seed: u64) -> Vec<Formula> {
    formulas(&GenSpec::ur(12, 51, 3), count, seed)
}

pub fn pr10(count: usize, seed: u64) -> Vec<Formula> {
    formulas(&GenSpec::pr10(), count, seed)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_clause(rng: &mut ChaCha8Rng, num_vars: u32, max_len: usize) -> Clause {
    let len = rng.gen_range(1..=max_len);
    Clause::new(
        (0..len).map(|_| Literal::new(Var::new(rng.gen_range(1..=num_vars)), rng.gen_bool(0.5))),
    )
}

/// Small random CNF, possibly with tautologies and duplicate clauses.
pub fn random_formula(rng: &mut ChaCha8Rng, max_vars: u32, max_clauses: usize) -> Formula {
    let n = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(0..=max_clauses);
    let clauses = (0..m).map(|_| random_clause(rng, n, 4)).collect();
    Formula::new(n, clauses).unwrap()
}
