//! Finite-automaton presentations of `(Z^n, +)` built from a monic modulus
//! `t(x) = x^n + p_{n-1} x^{n-1} + ... + p_1 x - q`, the automorphisms of
//! `Z^2` they make recognizable, and Cayley automatic representations of
//! the semidirect products `Z^n x_A Z` assembled from them.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the command line
//! front end and anything touching the environment live in the companion
//! `torus-automata` crate.
//!
//! Module map:
//!
//! * [`ring`] exact polynomial arithmetic modulo `t`, the reduction sweep
//!   and the residue oracle.
//! * [`words`] digit strings, the length-lexicographic order, convolution.
//! * [`automata`] synchronized multi-track DFA/NFA engine.
//! * [`carry`] carry machines: the equivalence checker, the addition
//!   transducer and general linear-combination checkers.
//! * [`presentation`] the compiled presentation: `~`, `R`, `Dom`, `Add`,
//!   encode/decode.
//! * [`linmaps`] multiplication-by-`g` relations and the matrix bridge.
//! * [`pell`] Pell solvers, the recognizable-matrix enumerator and the
//!   monoid report.
//! * [`semidirect`] group arithmetic in `Z^2 x_A Z` and its multiplier
//!   automata.
//! * [`evidence`] finite Nerode lower bounds and zero-prefix witnesses.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod automata;
pub mod carry;
pub mod error;
pub mod evidence;
pub mod linmaps;
pub mod matrix;
pub mod pell;
pub mod presentation;
pub mod ring;
pub mod semidirect;
pub mod words;

pub use error::{Error, Result};
pub use ring::{IntVec, Polynomial, ReprParams};
pub use words::DigitString;

/// Default cap on subset-construction and product state counts.
pub const DEFAULT_STATE_BUDGET: usize = 1_000_000;
