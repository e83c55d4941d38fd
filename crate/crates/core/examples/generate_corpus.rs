//! Generates small SR, UR and PR corpora and writes them as DIMACS.
//!
//! ```text
//! cargo run --example generate_corpus -- /tmp/corpus
//! ```

use std::fs;
use std::path::PathBuf;

use sataug::formula::dimacs::serialize_dimacs;
use sataug::gen::{gen_corpus, GenSpec};
use sataug::Label;

fn main() -> anyhow::Result<()> {
    let out: PathBuf = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("sataug-corpus"));

    let specs = [
        ("sr", GenSpec::sr(10)),
        ("ur", GenSpec::ur(12, 51, 3)),
        ("pr", GenSpec::pr10()),
    ];
    for (name, spec) in specs {
        let corpus = gen_corpus(&spec, 20, 7)?;
        let dir = out.join(name);
        fs::create_dir_all(&dir)?;
        for (i, inst) in corpus.iter().enumerate() {
            fs::write(dir.join(format!("{name}-{i:03}.cnf")), serialize_dimacs(&inst.formula))?;
        }
        let sat = corpus.iter().filter(|i| i.label == Label::Sat).count();
        let clauses: usize = corpus.iter().map(|i| i.formula.num_clauses()).sum();
        println!(
            "{name}: {} instances, {sat} SAT, {:.1} clauses on average -> {}",
            corpus.len(),
            clauses as f64 / corpus.len() as f64,
            dir.display()
        );
    }

    // SR instances come in pairs differing in one literal
    let pair = gen_corpus(&GenSpec::sr(6), 1, 3)?;
    let (sat, unsat) = (&pair[0].formula, &pair[1].formula);
    println!("\nSR pair, last clause: {} vs {}", sat.clauses().last().unwrap(), unsat.clauses().last().unwrap());
    Ok(())
}
