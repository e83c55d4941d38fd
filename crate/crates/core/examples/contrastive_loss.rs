//! Two augmented views per formula, a toy embedding, and the NT-Xent loss.
//!
//! The embedding is a hand-made feature vector; a real pipeline would feed
//! the exported graphs to a GNN instead.

use sataug::contrastive::{make_pair, nt_xent, ContrastiveConfig, EmbeddingBatch};
use sataug::gen::{gen_corpus, GenSpec};
use sataug::{Chain, Formula};

fn features(f: &Formula) -> Vec<f64> {
    let mut v = vec![0.0; 8];
    for c in f.clauses() {
        v[c.len().min(7)] += 1.0;
    }
    let occ = f.occurrences();
    v[0] = occ.iter().map(|o| (o[0] as f64 - o[1] as f64).abs()).sum();
    v
}

fn main() -> anyhow::Result<()> {
    let corpus = gen_corpus(&GenSpec::sr(10), 4, 5)?;
    let first: Chain = "CR:0.2:1,SC".parse()?;
    let second: Chain = "VE:0.1:2,SC".parse()?;

    let mut rows = Vec::new();
    for (i, inst) in corpus.iter().enumerate() {
        let (a, b) = make_pair(&inst.formula, &first.reseeded(i as u64), &second.reseeded(i as u64))?;
        println!("instance {i}: {} clauses -> views of {} and {}", inst.formula.num_clauses(), a.num_clauses(), b.num_clauses());
        rows.push(features(&a));
        rows.push(features(&b));
    }
    let batch = EmbeddingBatch::from_rows(rows)?;
    for tau in [0.1, 0.5, 1.0] {
        let loss = nt_xent(&batch, &ContrastiveConfig { temperature: tau })?;
        println!("tau = {tau}: loss {loss:.4}");
    }

    let same = EmbeddingBatch::from_rows(vec![vec![1.0, 2.0]; 4])?;
    println!("identical embeddings: {:.6} (ln 3 = {:.6})", nt_xent(&same, &ContrastiveConfig::default())?, 3f64.ln());
    Ok(())
}
