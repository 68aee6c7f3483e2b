//! Exact combinatorics of torus quotients.
//!
//! From a fan map (primitive integer rays spanning the quotient space) this
//! crate derives the subtorus and its weights, the induced oriented
//! hyperplane arrangements with exact polytopes, the wall-and-chamber
//! structure of the positive cone, reports on natural morphisms and flips
//! across walls, detection of projective-bundle structure, and the
//! hyperkähler layer at β = 0: full-hyperplane walls, extended core and
//! core, hyperkähler morphisms and Mukai flops.
//!
//! All arithmetic is arbitrary-precision integer/rational; there is no
//! floating point anywhere. Every operation is a pure function of its
//! inputs with deterministic output ordering, so results are reproducible
//! byte for byte. The inner sweeps (vertex enumeration, sign-vector and
//! support enumeration) run data-parallel under the default `parallel`
//! feature and sequentially without it, with identical results.

pub mod arrangement;
pub mod chambers;
pub mod error;
pub mod exactla;
pub mod hyperkahler;
pub mod oracle;
pub mod quotient;
pub mod variation;

mod par;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
