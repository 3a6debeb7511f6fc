//! Rank and Cartan subalgebras of real matrix Lie algebras, in exact
//! rational arithmetic.
//!
//! ```
//! use cartan_core::{catalog, solver};
//!
//! let so6 = catalog::so_basis(6).unwrap();
//! let seed = [so6.basis()[0].clone()];
//! let result = solver::rank_and_cartan(&so6, &seed, &Default::default()).unwrap();
//! assert_eq!(result.rank(), 3);
//! ```

pub mod catalog;
pub mod lie;
pub mod linalg;
pub mod solver;

pub use catalog::{CatalogError, Family, LoadOptions};
pub use lie::{bracket, scala, Element, LieAlgebra, LieError};
pub use linalg::{RMatrix, Scalar, ShapeError, SubspaceBasis, Vector};
pub use solver::{
    rank_and_cartan, CartanElement, CartanResult, MaximalityCertificate, MaximalityVerdict,
    Origin, SearchBudget, Seed, SolverError,
};
