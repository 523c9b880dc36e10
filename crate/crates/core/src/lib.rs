//! Exact computation in the partition category.
//!
//! Diagrams compose with a loop weight `t^ℓ`; linear combinations of diagrams
//! form the Hom spaces of the category, with scalars drawn from any ring in
//! [`scalars`]. On top of that sit central elements and their eigenvalues,
//! block combinatorics of Young diagrams, idempotent lifting over truncated
//! power series, and the relations of the quiver of the `t = 0` block.

#![no_std]

extern crate alloc;

pub mod blocks;
pub mod central;
pub mod diagrams;
pub mod error;
pub mod idemlift;
pub mod interp;
pub mod partalg;
pub mod quiver0;
pub mod scalars;
pub mod young;

pub use error::{Error, Result};
pub use scalars::{Polynomial, Rational, RationalFunction, TruncatedSeries};

/// Size caps shared by the enumerating operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n + m` accepted by diagram enumeration.
    pub max_arity: usize,
    /// Largest number of rows or columns of a dense coloring matrix.
    pub max_matrix_dim: usize,
    /// Largest number of r-cycles enumerated by brute force.
    pub max_cycles: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_arity: 12,
            max_matrix_dim: 4096,
            max_cycles: 5_000_000,
        }
    }
}
