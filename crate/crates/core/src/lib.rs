//! Residue-constrained digraph coloring via ear decompositions.
//!
//! Given a strongly connected digraph with no directed cycle of length
//! congruent to 1 modulo `k`, [`proper::color_mod1`] builds a proper
//! `k`-coloring. Given any digraph with no directed cycle of length `r`
//! modulo `k`, [`acyclic::acyclic_color`] builds a `k`-coloring whose
//! classes induce acyclic subdigraphs. Both are constructive: they grow an
//! ear decomposition and extend a vertex potential ear by ear.
//!
//! [`bounds`] derives colorings from classical graph parameters (odd
//! circumference, circumference, longest path, odd/even cycle-length
//! counts), and [`clique_cycle`] routes a cycle through any set of pairwise
//! adjacent vertices of a strong digraph.
//!
//! Everything is verified against the exhaustive oracles in [`oracle`]:
//! cycle enumeration, residue censuses, and exact chromatic numbers. The
//! oracles refuse or abort loudly instead of approximating, so all
//! emptiness decisions are exact.

pub mod acyclic;
pub mod bounds;
pub mod clique_cycle;
pub mod coloring;
pub mod digraph;
pub mod ear;
mod error;
pub mod fixtures;
pub mod oracle;
pub mod proper;

pub use error::{Error, Result};

/// Caps for the exponential searches (cycle enumeration, ear discovery).
///
/// Hitting a cap is a hard error, never silent truncation: class-emptiness
/// decisions must be exact for the constructions to be sound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_cycles: usize,
    pub max_ear_paths: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_cycles: 1_000_000,
            max_ear_paths: 1_000_000,
        }
    }
}
