//! Exact-arithmetic toolkit for cyclic gradings of `sl(n)`.
//!
//! Everything in this crate is computed over the rationals with no floating
//! point and no tolerances: gradings of `sl(n)` induced by cyclically graded
//! vector spaces, certificates for the associated invariant theory, Toledo
//! characters and Arakelov-Milnor style degree windows, and dimensions of
//! Hitchin bases.
//!
//! The crate is organized around runnable examples; a thin `vinberg`
//! binary exposes the same operations as subcommands.
//!
//! | Example | Shows |
//! |---|---|
//! | `grading_tour` | cyclic gradings from graded vector spaces, soundness checks |
//! | `chain_to_cyclic` | `Z`-gradings, the grading element, collapse modulo `m` |
//! | `invariant_certificates` | invariant degrees, Jacobian, restriction, rank |
//! | `quasi_split_scan` | split / quasi-split classification across profiles |
//! | `toledo_windows` | Toledo characters, `sl_2`-triples, Milnor-Wood windows |
//! | `cyclic_chain_bounds` | one-sided degree bounds for cycles of length `>= 3` |
//! | `hitchin_bases` | Hitchin base dimensions and the pointwise Hitchin map |
//! | `verification_sweep` | the one-shot property sweep and fault detection |
//!
//! Run one with `cargo run --example <name>`.

pub mod error;
pub mod grading;
pub mod hitchin;
pub mod invariants;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod toledo;
pub mod verify;
pub mod zgrading;

pub use error::{Error, Result};
pub use grading::{CyclicGrading, GradedDims, QuiverPoint};
pub use hitchin::{HitchinBase, HitchinPair};
pub use invariants::InvariantSystem;
pub use matrix::Matrix;
pub use poly::Poly;
pub use scalar::Scalar;
pub use toledo::{BilinearFormSpec, HiggsType, Sl2Triple, ToledoCharacter};
pub use verify::{run_verify, Fault, VerifyOptions, VerifyReport};
pub use zgrading::ZGrading;
