//! Exact-arithmetic toolkit for the toric degeneration of the flag manifold
//! and its Schubert varieties to the Gelfand-Cetlin toric variety.
//!
//! Everything here is desk-scale combinatorics over exact integers: pipe
//! dreams and the permutations they trace, Gelfand-Cetlin patterns and
//! polytope faces, the `3^(n-i-j)` weight matrix driving the sagbi
//! degeneration of Pluecker coordinates, and squarefree monomial ideals
//! realizing antidiagonal initial ideals of Schubert determinantal ideals.
//! The headline check, [`ideals::verify_degeneration`], confirms for each
//! permutation `w` that the initial ideal of the Fulton generators equals
//! the intersection of the coordinate primes indexed by the reduced pipe
//! dreams of `w`.
//!
//! All types are immutable values and all operations are pure functions, so
//! sweeps parallelize per permutation (or per subset, per weight) with
//! deterministic merged output. Parallelism is provided by rayon behind the
//! default `parallel` feature; without it every sweep falls back to the
//! identical sequential loop.
//!
//! ```
//! use gcdegen::grid::Permutation;
//! use gcdegen::ideals::verify_degeneration;
//! use gcdegen::polyalg::{weyl_dim, HighestWeight};
//! use gcdegen::gcpattern::pattern_count;
//!
//! let w: Permutation = "2143".parse()?;
//! let report = verify_degeneration(&w)?;
//! assert!(report.equal);
//!
//! let lambda: HighestWeight = "2,1,0".parse()?;
//! assert_eq!(pattern_count(&lambda)?, weyl_dim(&lambda));
//! # Ok::<(), gcdegen::Error>(())
//! ```

pub mod error;
pub mod gcpattern;
pub mod grid;
pub mod ideals;
mod linalg;
pub mod parallel;
pub mod polyalg;
pub mod sagbi;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{Diagram, Permutation, PipeDream};
pub use polyalg::{HighestWeight, MultiPolynomial};
