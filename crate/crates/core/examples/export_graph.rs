//! Builds the LIG+ of a small formula and prints its JSON document.

use sataug::graph::{build_lig, export_graph, import_graph, literal_index, Provenance};
use sataug::{Formula, Var};

fn main() -> anyhow::Result<()> {
    // (x ∨ ¬y ∨ ¬z) ∧ (¬x ∨ y ∨ z)
    let f = Formula::from_dimacs_clauses(3, &[&[1, -2, -3], &[-1, 2, 3]]);
    let g = build_lig(&f, true);
    println!(
        "{} literal nodes, {} clause nodes, {} incidence edges, {} variable edges",
        g.num_literal_nodes(),
        g.num_clauses(),
        g.cl_edges().len(),
        g.var_edges().len()
    );
    let y = Var::new(2);
    println!("y -> {}, ¬y -> {}", literal_index(y.positive()), literal_index(y.negative()));

    let prov = Provenance {
        source: Some("figure-one.cnf".into()),
        chain: None,
    };
    let mut buf = Vec::new();
    export_graph(&g, &prov, &mut buf)?;
    let text = String::from_utf8(buf)?;
    print!("{text}");

    let (back, _) = import_graph(&text)?;
    assert_eq!(back.to_formula(), f);
    Ok(())
}
