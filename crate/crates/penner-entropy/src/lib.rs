//! Exact categorical-entropy computation for Dehn twist words on plumbings
//! of sphere cotangent bundles along trees.
//!
//! The library models a plumbing by its tree, a dimension `n >= 3`, a
//! bipartition of the vertices, and a grading datum `s(v,w)` per directed
//! edge with `s(v,w) + s(w,v) = n`. A symplectic automorphism is a word of
//! signed Dehn twists. Three independent computation routes are provided
//! and cross-checked:
//!
//! * [`twist`] rewrites cocore objects term by term under each twist,
//!   producing the twisted complex of a word power as a multiset of
//!   shifted generators;
//! * [`trace`] enumerates the same components as spawn paths through the
//!   word, with shifts recovered from the path alone;
//! * [`transfer`] multiplies per-twist transfer matrices exactly and
//!   extracts certified spectral-radius enclosures.
//!
//! For Penner-type words (signs constant on each bipartition class, up to
//! global inversion) the categorical entropy equals the natural log of the
//! spectral radius of the unsigned transfer product; [`entropy`] assembles
//! reports around that fact.
//!
//! Everything is exact: big integers for counts and matrices, symbolic
//! shifts `a + b*n`, and rational enclosures for spectral radii. Floating
//! point appears only when mapping finished enclosures through `log`.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion crate `penner-entropy-cli`.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod entropy;
pub mod error;
pub mod mat;
pub mod plumbing;
pub mod poly;
mod scc;
pub mod shift;
pub mod trace;
pub mod transfer;
pub mod twist;
pub mod word;

/// Exact rational numbers used for enclosures and tolerances.
pub type Rational = num_rational::BigRational;

pub use error::Error;
pub use plumbing::{build_plumbing, Bipartition, GradingAssignment, PlumbingSpec, Tree, Vertex};
pub use shift::ShiftExpr;
pub use word::{Letter, PennerPolarity, PennerReport, Sign, TwistWord};
