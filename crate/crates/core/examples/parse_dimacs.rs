//! Parsing DIMACS text, including the quirks found in benchmark files.

use sataug::formula::dimacs::{parse_dimacs, serialize_dimacs};
use sataug::oracle::{solve_dpll, SolverConfig};

const TEXT: &str = "c a clause may span lines
c and the header count may be wrong
p cnf 4 5
1 0
3 2
 0
-4 1 -3 0
3 -1 -4 2 0
%
0
";

fn main() -> anyhow::Result<()> {
    let parsed = parse_dimacs(TEXT)?;
    for w in &parsed.warnings {
        println!("warning: {w}");
    }
    let f = parsed.formula;
    println!("{f}");
    print!("{}", serialize_dimacs(&f));

    let r = solve_dpll(&f, &SolverConfig::default())?;
    println!("{} after {} decisions, {} propagations", r.label, r.decisions, r.propagations);
    if let Some(model) = r.assignment {
        println!("model: {model:?}");
    }

    for bad in ["1 2 0", "p cnf 2 1\n1 3 0", "p cnf 2 1\n1 2"] {
        println!("{bad:?}: {}", parse_dimacs(bad).unwrap_err());
    }
    Ok(())
}
