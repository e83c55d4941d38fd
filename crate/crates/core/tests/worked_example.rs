mod common;

use common::{f, running_example};
use sataug::lpa::{
    add_unit_literal, clause_resolution, eliminate_variable, resolve, sample_au_plan,
    subsume_one, subsumed_clause_eliminate, unit_propagate, variable_eliminate,
};
use sataug::{Chain, Clause, Var};

#[test]
fn up_column() {
    let out = unit_propagate(&running_example(), 0.5, 123);
    assert_eq!(out, f(4, &[&[2, 3], &[2, 3, -4]]));
    assert_eq!(out.to_string(), "(x2 ∨ x3) ∧ (x2 ∨ x3 ∨ ¬x4)");
}

#[test]
fn au_column() {
    let plan = sample_au_plan(&running_example(), 0.25, 500);
    assert_eq!(plan.literal, Var::new(5).negative());
    assert_eq!(plan.targets, vec![0]);
    let out = add_unit_literal(&running_example(), 0.25, 500);
    assert_eq!(
        out.to_string(),
        "(¬x5) ∧ (x1 ∨ x5) ∧ (x2 ∨ x3) ∧ (x1 ∨ ¬x3 ∨ x4) ∧ (¬x1 ∨ x2 ∨ x3 ∨ ¬x4) ∧ (x1 ∨ ¬x2 ∨ x3 ∨ ¬x5)"
    );
}

#[test]
fn sc_column() {
    assert_eq!(
        subsume_one(&running_example()),
        f(4, &[&[1], &[2, 3], &[1, -3, 4]])
    );
    // the full rule also drops c3, which x1 subsumes
    assert_eq!(
        subsumed_clause_eliminate(&running_example()),
        f(4, &[&[1], &[2, 3]])
    );
}

#[test]
fn cr_column() {
    let out = clause_resolution(&running_example(), 0.25, 0);
    assert_eq!(
        out,
        f(4, &[&[1], &[2, 3], &[1, -3, 4], &[-1, 2, 3, -4], &[1, 2, 4]])
    );
}

#[test]
fn ve_column() {
    let phi = running_example();
    let out = variable_eliminate(&phi, 0.1, 4);
    assert_eq!(out.eliminated, vec![Var::new(3)]);
    assert_eq!(out.formula, f(4, &[&[1], &[1, 2, 4]]));
    assert_eq!(eliminate_variable(&phi, Var::new(3)), out.formula);
}

#[test]
fn resolvents_of_the_caption() {
    let phi = running_example();
    let c = phi.clauses();
    let x3 = Var::new(3);
    assert_eq!(resolve(&c[1], &c[2], x3), Ok(Some(Clause::from_dimacs(&[1, 2, 4]))));
    assert_eq!(resolve(&c[3], &c[2], x3), Ok(None));
    assert!(resolve(&c[0], &c[1], x3).is_err());
}

#[test]
fn cr_then_sc() {
    let chain: Chain = "CR:0.2:0,SC".parse().unwrap();
    let out = chain.apply(&running_example()).unwrap();
    assert_eq!(out, f(4, &[&[1], &[2, 3]]));
    let label = sataug::oracle::solve_brute(&running_example()).unwrap();
    assert_eq!(sataug::oracle::solve_brute(&out).unwrap(), label);
}
