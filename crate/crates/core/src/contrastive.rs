//! Positive pairs and the NT-Xent contrastive loss.
//!
//! A batch holds `2n` embeddings where `(2k, 2k+1)` are the two views of
//! instance `k`. For an anchor `i` with partner `j`,
//!
//! ```text
//! L(i, j) = -log( exp(sim(i, j) / τ) / Σ_{k ≠ i} exp(sim(i, k) / τ) )
//! ```
//!
//! with cosine similarity `sim`. The batch loss is the mean of `L(i, j)` over
//! all `2n` ordered positive pairs.

use thiserror::Error;

use crate::augment::{apply_chain, Chain, ChainError};
use crate::formula::Formula;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ContrastiveError {
    #[error("embedding {0} has zero norm")]
    ZeroNorm(usize),
    #[error("embedding {0} has a non-finite entry")]
    NonFinite(usize),
    #[error("embedding dimension must be at least 1")]
    EmptyEmbedding,
    #[error("embedding {index} has dimension {got}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("batch must hold an even, nonzero number of embeddings, got {0}")]
    BatchSize(usize),
    #[error("temperature must be positive, got {0}")]
    Temperature(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Embedding(Vec<f64>);

impl Embedding {
    pub fn new(values: Vec<f64>) -> Result<Embedding, ContrastiveError> {
        if values.is_empty() {
            return Err(ContrastiveError::EmptyEmbedding);
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(ContrastiveError::NonFinite(0));
        }
        Ok(Embedding(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// `2n` embeddings of equal dimension; `(2k, 2k+1)` are positives.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingBatch {
    vectors: Vec<Embedding>,
}

impl EmbeddingBatch {
    pub fn new(vectors: Vec<Embedding>) -> Result<EmbeddingBatch, ContrastiveError> {
        if vectors.is_empty() || !vectors.len().is_multiple_of(2) {
            return Err(ContrastiveError::BatchSize(vectors.len()));
        }
        let expected = vectors[0].dim();
        for (index, v) in vectors.iter().enumerate() {
            if v.dim() != expected {
                return Err(ContrastiveError::DimensionMismatch {
                    index,
                    got: v.dim(),
                    expected,
                });
            }
        }
        Ok(EmbeddingBatch { vectors })
    }

    /// Builds a batch from raw rows.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<EmbeddingBatch, ContrastiveError> {
        let vectors = rows
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                Embedding::new(r).map_err(|e| match e {
                    ContrastiveError::NonFinite(_) => ContrastiveError::NonFinite(i),
                    e => e,
                })
            })
            .collect::<Result<_, _>>()?;
        EmbeddingBatch::new(vectors)
    }

    pub fn vectors(&self) -> &[Embedding] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Number of positive pairs.
    pub fn num_pairs(&self) -> usize {
        self.vectors.len() / 2
    }

    /// Index of the positive partner of `i`.
    #[inline]
    pub fn partner(i: usize) -> usize {
        i ^ 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContrastiveConfig {
    pub temperature: f64,
}

impl Default for ContrastiveConfig {
    fn default() -> Self {
        ContrastiveConfig { temperature: 0.5 }
    }
}

/// Two augmented views of one formula.
pub fn make_pair(
    formula: &Formula,
    first: &Chain,
    second: &Chain,
) -> Result<(Formula, Formula), ChainError> {
    Ok((apply_chain(formula, first)?, apply_chain(formula, second)?))
}

pub fn cosine_sim(a: &Embedding, b: &Embedding) -> Result<f64, ContrastiveError> {
    if a.dim() != b.dim() {
        return Err(ContrastiveError::DimensionMismatch {
            index: 1,
            got: b.dim(),
            expected: a.dim(),
        });
    }
    let (na, nb) = (a.norm(), b.norm());
    if na == 0.0 {
        return Err(ContrastiveError::ZeroNorm(0));
    }
    if nb == 0.0 {
        return Err(ContrastiveError::ZeroNorm(1));
    }
    let dot: f64 = a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum();
    Ok((dot / (na * nb)).clamp(-1.0, 1.0))
}

/// Mean NT-Xent loss over all ordered positive pairs of the batch.
pub fn nt_xent(batch: &EmbeddingBatch, cfg: &ContrastiveConfig) -> Result<f64, ContrastiveError> {
    let tau = cfg.temperature;
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(ContrastiveError::Temperature(tau));
    }
    let normalized: Vec<Vec<f64>> = batch
        .vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let n = v.norm();
            if n == 0.0 {
                Err(ContrastiveError::ZeroNorm(i))
            } else {
                Ok(v.0.iter().map(|x| x / n).collect())
            }
        })
        .collect::<Result<_, _>>()?;

    let size = normalized.len();
    let mut total = 0.0;
    let mut logits = Vec::with_capacity(size - 1);
    for i in 0..size {
        logits.clear();
        let mut positive = 0.0;
        for k in 0..size {
            if k == i {
                continue;
            }
            let s: f64 = normalized[i]
                .iter()
                .zip(&normalized[k])
                .map(|(x, y)| x * y)
                .sum();
            let logit = s.clamp(-1.0, 1.0) / tau;
            if k == EmbeddingBatch::partner(i) {
                positive = logit;
            }
            logits.push(logit);
        }
        let max = logits.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let lse = max + logits.iter().map(|l| (l - max).exp()).sum::<f64>().ln();
        total += lse - positive;
    }
    Ok(total / size as f64)
}
