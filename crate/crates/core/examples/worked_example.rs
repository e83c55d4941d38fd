//! The six label-preserving augmentations on the four-clause running example.

use sataug::formula::running_example;
use sataug::lpa::{
    add_unit_literal, clause_resolution, pure_literal_eliminate, subsume_one,
    subsumed_clause_eliminate, unit_propagate, variable_eliminate,
};
use sataug::oracle::count_models;

fn main() {
    let phi = running_example();
    println!("original  {phi}");
    println!("  models: {}\n", count_models(&phi).unwrap());

    let ve = variable_eliminate(&phi, 0.1, 4);
    let rows = [
        ("UP", unit_propagate(&phi, 0.5, 0)),
        ("AU", add_unit_literal(&phi, 0.25, 500)),
        ("PL", pure_literal_eliminate(&phi, 1.0, 0)),
        ("SC (one)", subsume_one(&phi)),
        ("SC (all)", subsumed_clause_eliminate(&phi)),
        ("CR", clause_resolution(&phi, 0.25, 0)),
        ("VE", ve.formula.clone()),
    ];
    for (name, f) in rows {
        println!("{name:<9} {f}");
        println!("  satisfiable: {}", count_models(&f).unwrap() > 0);
    }
    println!("\nVE eliminated {:?}", ve.eliminated);
}
