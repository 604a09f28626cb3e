//! Exact and estimated counting of rainbow-free colorings of 3-uniform
//! hypergraphs with respect to Fano plane copies, plus the supporting
//! machinery: copy enumeration, Turán-style extremal search, stability
//! diagnostics, weak regularity checks, and rigorous closed-form bounds.
//!
//! Everything here is deterministic: randomized routines take explicit
//! seeds, searches use fixed tie-breaking orders, and numeric claims are
//! decided in exact rational or directed-rounding interval arithmetic.
//! The crate is no_std (alloc required); IO lives in the companion CLI.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod coloring;
pub mod edgeset;
pub mod error;
pub mod extremal;
pub mod fano;
pub mod gen;
pub mod hypergraph;
pub mod matching;
pub mod real;
pub mod regularity;
pub mod rng;
pub mod stability;
pub mod triples;

pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use hypergraph::{Bipartition, Hypergraph3, LinkGraph, MultipartiteSpec};
