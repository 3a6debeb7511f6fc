//! Shared fixtures for the criterion benches.

use cartan_core::{LieAlgebra, RMatrix};

/// The algebra and seed of a catalog run: `(algebra, seed matrices)`.
pub fn so_with_first(t: usize) -> (LieAlgebra, Vec<RMatrix>) {
    let alg = cartan_core::catalog::so_basis(t).expect("t >= 2");
    let seed = vec![alg.basis()[0].clone()];
    (alg, seed)
}

pub fn g2_combined_seed() -> (LieAlgebra, Vec<RMatrix>) {
    let alg = cartan_core::catalog::g2_basis();
    let seed = vec![alg.expand(&cartan_core::linalg::int_vector(&[
        1, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0,
    ]))];
    (alg, seed)
}
