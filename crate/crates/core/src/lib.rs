//! Quantum mechanics on a four-dimensional noncommutative phase space.
//!
//! The crate realizes the deformed two-mode boson algebra on a truncated
//! Fock space, builds coherent and entangled (`|λ>`, `|ξ>`) states, provides
//! an exact normal-ordering engine for the entangled representations, solves
//! the coupled two-dimensional oscillator in closed form, and evaluates the
//! associated Wigner functions. Every closed form is paired with an
//! independent numerical route (matrix commutators, dense diagonalization,
//! Gauss–Hermite quadrature) so the two can be compared.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod fock;
pub mod lambda_rep;
pub mod oscillator;
pub mod params;
pub mod quadrature;
pub mod states;
pub mod weyl;
pub mod wigner;

pub use error::{Error, Result};
pub use params::{NCParameters, Observable};
