//! Augmentation specs and chains.
//!
//! A chain is written `KIND:rate:seed[,KIND:rate:seed...]`, for example
//! `CR:0.2:42,SC:0:0`. The rate and seed may be omitted and default to 0, so
//! `CR:0.15,SC` is accepted too. [`Chain`]'s `Display` always writes the full
//! form, which parses back to the same chain.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::Formula;
use crate::laa::{self, LaaError};
use crate::lpa;
use crate::rng::derive_seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LpaKind {
    /// Unit propagation.
    Up,
    /// Add unit literal.
    Au,
    /// Pure literal elimination.
    Pl,
    /// Subsumed clause elimination.
    Sc,
    /// Clause resolution.
    Cr,
    /// Variable elimination.
    Ve,
}

impl LpaKind {
    pub const ALL: [LpaKind; 6] = [
        LpaKind::Up,
        LpaKind::Au,
        LpaKind::Pl,
        LpaKind::Sc,
        LpaKind::Cr,
        LpaKind::Ve,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LaaKind {
    /// Drop clauses.
    Dc,
    /// Drop variables.
    Dv,
    /// Link perturbation.
    Lp,
    /// Random-walk subgraph.
    Sg,
}

impl LaaKind {
    pub const ALL: [LaaKind; 4] = [LaaKind::Dc, LaaKind::Dv, LaaKind::Lp, LaaKind::Sg];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AugmentationKind {
    Lpa(LpaKind),
    Laa(LaaKind),
}

impl AugmentationKind {
    pub fn is_label_preserving(self) -> bool {
        matches!(self, AugmentationKind::Lpa(_))
    }

    pub fn code(self) -> &'static str {
        match self {
            AugmentationKind::Lpa(k) => match k {
                LpaKind::Up => "UP",
                LpaKind::Au => "AU",
                LpaKind::Pl => "PL",
                LpaKind::Sc => "SC",
                LpaKind::Cr => "CR",
                LpaKind::Ve => "VE",
            },
            AugmentationKind::Laa(k) => match k {
                LaaKind::Dc => "DC",
                LaaKind::Dv => "DV",
                LaaKind::Lp => "LP",
                LaaKind::Sg => "SG",
            },
        }
    }
}

impl From<LpaKind> for AugmentationKind {
    fn from(k: LpaKind) -> Self {
        AugmentationKind::Lpa(k)
    }
}

impl From<LaaKind> for AugmentationKind {
    fn from(k: LaaKind) -> Self {
        AugmentationKind::Laa(k)
    }
}

impl fmt::Display for LpaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        AugmentationKind::from(*self).fmt(f)
    }
}

impl fmt::Display for LaaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        AugmentationKind::from(*self).fmt(f)
    }
}

impl fmt::Display for AugmentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for AugmentationKind {
    type Err = ChainError;

    fn from_str(s: &str) -> Result<Self, ChainError> {
        use AugmentationKind::*;
        Ok(match s.to_ascii_uppercase().as_str() {
            "UP" => Lpa(LpaKind::Up),
            "AU" => Lpa(LpaKind::Au),
            "PL" => Lpa(LpaKind::Pl),
            "SC" => Lpa(LpaKind::Sc),
            "CR" => Lpa(LpaKind::Cr),
            "VE" => Lpa(LpaKind::Ve),
            "DC" => Laa(LaaKind::Dc),
            "DV" => Laa(LaaKind::Dv),
            "LP" => Laa(LaaKind::Lp),
            "SG" => Laa(LaaKind::Sg),
            _ => return Err(ChainError::UnknownKind(s.to_string())),
        })
    }
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ChainError {
    #[error("unknown augmentation `{0}`")]
    UnknownKind(String),
    #[error("invalid rate `{0}`, expected a number in [0, 1]")]
    InvalidRate(String),
    #[error("invalid seed `{0}`")]
    InvalidSeed(String),
    #[error("malformed chain element `{0}`")]
    Malformed(String),
    #[error(transparent)]
    Laa(#[from] LaaError),
}

/// One augmentation with its intensity and seed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AugmentationSpec {
    kind: AugmentationKind,
    rate: f64,
    seed: u64,
}

impl AugmentationSpec {
    pub fn new(
        kind: impl Into<AugmentationKind>,
        rate: f64,
        seed: u64,
    ) -> Result<AugmentationSpec, ChainError> {
        if !(0.0..=1.0).contains(&rate) {
            return Err(ChainError::InvalidRate(rate.to_string()));
        }
        Ok(AugmentationSpec {
            kind: kind.into(),
            rate,
            seed,
        })
    }

    pub fn kind(&self) -> AugmentationKind {
        self.kind
    }

    /// SC removes every subsumed clause and ignores its rate.
    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn with_seed(mut self, seed: u64) -> AugmentationSpec {
        self.seed = seed;
        self
    }

    pub fn apply(&self, formula: &Formula) -> Result<Formula, ChainError> {
        let (rate, seed) = (self.rate, self.seed);
        Ok(match self.kind {
            AugmentationKind::Lpa(kind) => match kind {
                LpaKind::Up => lpa::unit_propagate(formula, rate, seed),
                LpaKind::Au => lpa::add_unit_literal(formula, rate, seed),
                LpaKind::Pl => lpa::pure_literal_eliminate(formula, rate, seed),
                LpaKind::Sc => lpa::subsumed_clause_eliminate(formula),
                LpaKind::Cr => lpa::clause_resolution(formula, rate, seed),
                LpaKind::Ve => lpa::variable_eliminate(formula, rate, seed).formula,
            },
            AugmentationKind::Laa(kind) => match kind {
                LaaKind::Dc => laa::drop_clauses(formula, rate, seed),
                LaaKind::Dv => laa::drop_variables(formula, rate, seed),
                LaaKind::Lp => laa::perturb_links(formula, rate, seed),
                LaaKind::Sg => laa::subgraph(formula, rate, seed)?,
            },
        })
    }
}

impl fmt::Display for AugmentationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.kind, self.rate, self.seed)
    }
}

impl FromStr for AugmentationSpec {
    type Err = ChainError;

    fn from_str(s: &str) -> Result<Self, ChainError> {
        let mut parts = s.trim().split(':');
        let kind: AugmentationKind = parts.next().unwrap_or_default().trim().parse()?;
        let rate = match parts.next() {
            Some(r) => r
                .trim()
                .parse::<f64>()
                .map_err(|_| ChainError::InvalidRate(r.to_string()))?,
            None => 0.0,
        };
        let seed = match parts.next() {
            Some(t) => t
                .trim()
                .parse::<u64>()
                .map_err(|_| ChainError::InvalidSeed(t.to_string()))?,
            None => 0,
        };
        if parts.next().is_some() {
            return Err(ChainError::Malformed(s.to_string()));
        }
        AugmentationSpec::new(kind, rate, seed)
    }
}

/// Augmentations applied left to right.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Chain {
    specs: Vec<AugmentationSpec>,
}

impl Chain {
    pub fn new(specs: Vec<AugmentationSpec>) -> Chain {
        Chain { specs }
    }

    pub fn empty() -> Chain {
        Chain::default()
    }

    pub fn specs(&self) -> &[AugmentationSpec] {
        &self.specs
    }

    pub fn is_empty(&self) -> bool {
        self.specs.is_empty()
    }

    pub fn is_label_preserving(&self) -> bool {
        self.specs.iter().all(|s| s.kind.is_label_preserving())
    }

    /// Same chain with every seed mixed with `index`, for applying one chain
    /// to many instances.
    pub fn reseeded(&self, index: u64) -> Chain {
        Chain {
            specs: self
                .specs
                .iter()
                .map(|s| s.with_seed(derive_seed(s.seed, index)))
                .collect(),
        }
    }

    pub fn apply(&self, formula: &Formula) -> Result<Formula, ChainError> {
        let mut current = formula.clone();
        for spec in &self.specs {
            current = spec.apply(&current)?;
        }
        Ok(current)
    }
}

/// Applies `chain` to `formula`.
pub fn apply_chain(formula: &Formula, chain: &Chain) -> Result<Formula, ChainError> {
    chain.apply(formula)
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, spec) in self.specs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{spec}")?;
        }
        Ok(())
    }
}

impl FromStr for Chain {
    type Err = ChainError;

    fn from_str(s: &str) -> Result<Self, ChainError> {
        if s.trim().is_empty() {
            return Ok(Chain::empty());
        }
        s.split(',')
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(Chain::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{running_example, Clause};

    #[test]
    fn parse_and_display() {
        let chain: Chain = "CR:0.2:42,SC:0:0".parse().unwrap();
        assert_eq!(chain.specs().len(), 2);
        assert_eq!(chain.specs()[0].kind(), LpaKind::Cr.into());
        assert_eq!(chain.specs()[0].rate(), 0.2);
        assert_eq!(chain.specs()[0].seed(), 42);
        assert_eq!(chain.to_string(), "CR:0.2:42,SC:0:0");
        assert!(chain.is_label_preserving());

        let short: Chain = "CR:0.15,SC".parse().unwrap();
        assert_eq!(short.to_string(), "CR:0.15:0,SC:0:0");
        assert_eq!(short.to_string().parse::<Chain>().unwrap(), short);

        let laa: Chain = "dc:0.3:1".parse().unwrap();
        assert!(!laa.is_label_preserving());
        assert_eq!("".parse::<Chain>().unwrap(), Chain::empty());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            "XX:0.1:1".parse::<Chain>(),
            Err(ChainError::UnknownKind("XX".into()))
        );
        assert!(matches!(
            "CR:1.5:1".parse::<Chain>(),
            Err(ChainError::InvalidRate(_))
        ));
        assert!(matches!(
            "CR:abc".parse::<Chain>(),
            Err(ChainError::InvalidRate(_))
        ));
        assert!(matches!(
            "CR:0.1:-3".parse::<Chain>(),
            Err(ChainError::InvalidSeed(_))
        ));
        assert!(matches!(
            "CR:0.1:3:4".parse::<Chain>(),
            Err(ChainError::Malformed(_))
        ));
        assert!(matches!(
            "CR:0.1:3,".parse::<Chain>(),
            Err(ChainError::UnknownKind(_))
        ));
    }

    #[test]
    fn empty_chain_is_identity() {
        let f = running_example();
        assert_eq!(apply_chain(&f, &Chain::empty()).unwrap(), f);
    }

    #[test]
    fn cr_then_sc_on_running_example() {
        let f = running_example();
        let chain: Chain = "CR:0.2:0,SC".parse().unwrap();
        let out = apply_chain(&f, &chain).unwrap();
        let cr = lpa::clause_resolution(&f, 0.2, 0);
        assert_eq!(cr.num_clauses(), 5);
        assert_eq!(out, lpa::subsumed_clause_eliminate(&cr));
        // c4 is a superset of c2 in every case
        assert!(!out.clauses().contains(&Clause::from_dimacs(&[-1, 2, 3, -4])));
    }

    #[test]
    fn sg_error_propagates() {
        let chain: Chain = "DC:1:0,SG:0.5:0".parse().unwrap();
        assert_eq!(
            apply_chain(&running_example(), &chain),
            Err(ChainError::Laa(LaaError::EmptyFormula))
        );
    }

    #[test]
    fn reseeding_is_deterministic() {
        let chain: Chain = "CR:0.2:42,VE:0.1:7".parse().unwrap();
        assert_eq!(chain.reseeded(3), chain.reseeded(3));
        assert_ne!(chain.reseeded(3), chain.reseeded(4));
    }
}
