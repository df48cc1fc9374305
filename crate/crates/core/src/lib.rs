//! Bipartite entanglement measures for small multi-qubit states and
//! the parameterized monogamy lower-bound families built on them.
//!
//! The crate is organized bottom-up:
//!
//! * [`cmatrix`] — dense complex matrices: Kronecker products, partial
//!   trace/transpose, Jacobi eigendecomposition, PSD square roots;
//! * [`qstate`] — pure states, the canonical three-qubit family,
//!   seeded random sampling, state-file ingestion;
//! * [`measures`] — concurrence, convex-roof extended negativity and
//!   the Bures measure;
//! * [`ineq`] — the scalar kernels bounding (1+t)^x and the competitor
//!   chains they dominate;
//! * [`monogamy`] — bound evaluators for tripartite and N-partite
//!   splits, descending-order variants, and curve tables;
//! * [`verify`] — seeded randomized sweeps of every documented
//!   invariant;
//! * [`cli`] — the command surface of the `qmono` binary.

pub mod cli;
pub mod cmatrix;
mod error;
pub mod ineq;
pub mod measures;
pub mod monogamy;
pub mod qstate;
pub mod verify;

pub use error::{Error, Result};
