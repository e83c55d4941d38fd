//! # sataug
//!
//! Satisfiability-preserving augmentations of CNF formulas, label-agnostic
//! baselines, random instance generators, a small DPLL oracle, literal-clause
//! incidence graph export and the NT-Xent contrastive loss.
//!
//! ```
//! use sataug::{formula::running_example, augment::{apply_chain, Chain}, oracle};
//!
//! let f = running_example();
//! let chain: Chain = "CR:0.2:42,SC:0:0".parse().unwrap();
//! let g = apply_chain(&f, &chain).unwrap();
//! assert_eq!(oracle::solve_brute(&g).unwrap(), oracle::solve_brute(&f).unwrap());
//! ```

pub mod augment;
pub mod cli;
pub mod contrastive;
pub mod formula;
pub mod gen;
pub mod graph;
pub mod laa;
pub mod lpa;
pub mod oracle;
pub mod rng;
pub mod stats;

pub use augment::{apply_chain, AugmentationKind, AugmentationSpec, Chain, LaaKind, LpaKind};
pub use formula::{Clause, Formula, Label, Literal, Var};
