//! Counts label flips under label-preserving and label-altering chains.

use rayon::prelude::*;

use sataug::gen::{gen_corpus, GenSpec};
use sataug::oracle::solve_brute;
use sataug::Chain;

fn main() -> anyhow::Result<()> {
    let corpus = gen_corpus(&GenSpec::sr(10), 250, 1)?;
    let chains = [
        "CR:0.2:42,SC:0:0",
        "VE:0.1:3,SC",
        "AU:0.3:1,UP:0.5:2,PL:0.5:3",
        "DC:0.3:1",
        "DV:0.3:1",
        "LP:0.3:1",
        "SG:0.3:1",
    ];
    for text in chains {
        let chain: Chain = text.parse()?;
        let flips = corpus
            .par_iter()
            .enumerate()
            .filter(|(i, inst)| {
                let out = chain.reseeded(*i as u64).apply(&inst.formula).unwrap();
                solve_brute(&out).unwrap() != inst.label
            })
            .count();
        let kind = if chain.is_label_preserving() { "LPA" } else { "LAA" };
        println!("{kind} {text:<28} {flips:>4} / {} labels changed", corpus.len());
    }
    Ok(())
}
