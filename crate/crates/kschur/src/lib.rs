//! Exact combinatorics of k-bounded partitions and k-Schur functions,
//! Perron–Frobenius parametrization of the minimal boundary of the
//! k-bounded partition lattice, totally nonnegative Toeplitz matrices,
//! and central random walks on affine Grassmannian alcoves.
//!
//! The crate is organized bottom-up:
//!
//! * [`partition`]: partitions, (k+1)-cores, the bounded/core bijection
//!   and the chain-based conjugation ω_k;
//! * [`lattice`]: the graded graph B_k: covers, weak horizontal strips,
//!   irreducible partitions and rectangle factorization;
//! * [`symfunc`]: the algebra R[h_1..h_k] in the homogeneous and k-Schur
//!   bases: Kostka tables, Pieri products, positivity re-expansions;
//! * [`exact`]: exact rational and polynomial arithmetic;
//! * [`transfer`]: the transfer matrix Φ, its characteristic polynomial
//!   Ξ and the primitive-element data (M, Δ, P_κ);
//! * [`affine`]: alcove centers, the involution I and the symmetry Ψ;
//! * [`boundary`]: Perron–Frobenius evaluation, the maps f and g, the
//!   simplex normalization and the ζ polynomial;
//! * [`toeplitz`]: initial minors, total positivity, and reconstruction
//!   of a Toeplitz matrix from its corner minors;
//! * [`walk`]: the colored multigraph, central Markov chains, and the
//!   closed-form drift with its Monte-Carlo estimate.
//!
//! Each runnable capability has an example under `examples/`; the `kschur`
//! binary exposes the same functionality as subcommands.

pub mod affine;
pub mod boundary;
pub mod cli;
pub mod error;
pub mod exact;
pub mod lattice;
pub mod partition;
pub mod symfunc;
pub mod toeplitz;
pub mod transfer;
pub mod walk;

pub use error::{Error, Result};
pub use partition::Partition;
