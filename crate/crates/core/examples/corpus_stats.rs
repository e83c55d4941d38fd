//! Subsumed-clause prevalence and DPLL decision counts before and after
//! `CR:0.15,SC`.

use sataug::gen::{gen_corpus, GenSpec};
use sataug::oracle::SolverConfig;
use sataug::stats::corpus_stats;
use sataug::{Chain, Formula};

fn main() -> anyhow::Result<()> {
    let chain: Chain = "CR:0.15,SC".parse()?;
    let families = [
        ("SR(10)", GenSpec::sr(10), 250),
        ("UR(12,51,3)", GenSpec::ur(12, 51, 3), 500),
        ("PR(10)", GenSpec::pr10(), 500),
    ];
    for (name, spec, count) in families {
        let formulas: Vec<Formula> = gen_corpus(&spec, count, 3)?
            .into_iter()
            .map(|i| i.formula)
            .collect();
        let s = corpus_stats(&formulas, Some(&chain), &SolverConfig::default())?;
        let after = s.decisions_after.as_ref().unwrap();
        println!("{name}");
        println!("  subsumed clauses     {:.1}%", 100.0 * s.subsumed_clause_share);
        println!("  instances with one   {:.1}%", 100.0 * s.subsumed_fraction);
        println!(
            "  median decisions     {} -> {}  (propagation only after: {:.1}%)",
            s.decisions_before.median,
            after.median,
            100.0 * after.propagation_only
        );
    }
    Ok(())
}
