//! Matrix Lie algebras given by an explicit basis of square matrices.

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{
    gauss_jordan, is_zero_vector, nullspace, unit_vector, RMatrix, Scalar, ShapeError,
    SubspaceBasis, Vector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("an algebra needs at least one basis element")]
    EmptyBasis,
    #[error("basis element b{} is {rows}x{cols}, expected {ambient}x{ambient}", .index + 1)]
    NotSquare {
        index: usize,
        rows: usize,
        cols: usize,
        ambient: usize,
    },
    #[error("basis element b{} is a linear combination of the preceding ones", .index + 1)]
    DependentBasis { index: usize },
    #[error("[m, b{}] is not in the span of the basis; the algebra is not closed", .index + 1)]
    BracketOutsideAlgebra { index: usize },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// `[x, y] = xy - yx`
pub fn bracket(x: &RMatrix, y: &RMatrix) -> Result<RMatrix, ShapeError> {
    if !x.is_square() || x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(ShapeError {
            left_rows: x.rows(),
            left_cols: x.cols(),
            right_rows: y.rows(),
            right_cols: y.cols(),
        });
    }
    x.mul(y)?.sub(&y.mul(x)?)
}

/// Entrywise product sum `sum_ij x_ij y_ij`. Positive definite on real
/// matrices.
pub fn scala(x: &RMatrix, y: &RMatrix) -> Result<Scalar, ShapeError> {
    if x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(ShapeError {
            left_rows: x.rows(),
            left_cols: x.cols(),
            right_rows: y.rows(),
            right_cols: y.cols(),
        });
    }
    Ok(x
        .entries()
        .iter()
        .zip(y.entries())
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
}

/// An algebra element: coordinates over the basis together with the matrix
/// they expand to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vector,
    matrix: RMatrix,
}

impl Element {
    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coords)
    }
}

type SparseRow = Vec<(usize, Scalar)>;

fn sparse(row: &[Scalar]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

/// Precomputed reduction of the stacked basis: `transform * basis = reduced`,
/// with `reduced` in RREF. Pivot entries of a matrix give its coordinates
/// over `reduced` directly.
#[derive(Clone, Debug)]
struct CoordinateMap {
    pivots: Vec<usize>,
    reduced: Vec<SparseRow>,
    transform: Vec<SparseRow>,
}

impl CoordinateMap {
    fn build(basis: &[RMatrix]) -> Result<Self, LieError> {
        let n = basis.len();
        let width = basis[0].entries().len();
        let mut rows: Vec<Vec<Scalar>> = basis
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut row = b.entries().to_vec();
                row.extend(unit_vector(n, i));
                row
            })
            .collect();
        let pivots = gauss_jordan(&mut rows, width);
        if pivots.len() < n {
            // The first dependent element is the first whose prefix loses rank.
            let index = (1..n)
                .find(|&k| {
                    let mut prefix: Vec<Vec<Scalar>> =
                        basis[..=k].iter().map(|b| b.entries().to_vec()).collect();
                    gauss_jordan(&mut prefix, width).len() <= k
                })
                .unwrap_or(0);
            return Err(LieError::DependentBasis { index });
        }
        Ok(CoordinateMap {
            pivots,
            reduced: rows.iter().map(|r| sparse(&r[..width])).collect(),
            transform: rows.iter().map(|r| sparse(&r[width..])).collect(),
        })
    }

    fn coords(&self, m: &RMatrix) -> Option<Vector> {
        let flat = m.entries();
        let mut rebuilt = vec![Scalar::zero(); flat.len()];
        let mut coords = vec![Scalar::zero(); self.transform.len()];
        for ((&p, reduced), transform) in self.pivots.iter().zip(&self.reduced).zip(&self.transform) {
            let d = &flat[p];
            if d.is_zero() {
                continue;
            }
            for (j, v) in reduced {
                rebuilt[*j] += d * v;
            }
            for (j, v) in transform {
                coords[*j] += d * v;
            }
        }
        (rebuilt.as_slice() == flat).then_some(coords)
    }
}

/// A real matrix Lie algebra: an ordered, independent basis of `t x t`
/// matrices.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    ambient: usize,
    basis: Vec<RMatrix>,
    coordinates: CoordinateMap,
}

impl LieAlgebra {
    /// Validates shapes and independence. Closure is not checked here, see
    /// [`LieAlgebra::is_closed`].
    pub fn new(
        name: impl Into<String>,
        ambient: usize,
        basis: Vec<RMatrix>,
    ) -> Result<Self, LieError> {
        if basis.is_empty() {
            return Err(LieError::EmptyBasis);
        }
        if let Some((index, b)) = basis
            .iter()
            .enumerate()
            .find(|(_, b)| b.rows() != ambient || b.cols() != ambient)
        {
            return Err(LieError::NotSquare {
                index,
                rows: b.rows(),
                cols: b.cols(),
                ambient,
            });
        }
        let coordinates = CoordinateMap::build(&basis)?;
        Ok(LieAlgebra {
            name: name.into(),
            ambient,
            basis,
            coordinates,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Side length of the basis matrices.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[RMatrix] {
        &self.basis
    }

    /// `sum coords_i b_i`
    pub fn expand(&self, coords: &[Scalar]) -> RMatrix {
        assert_eq!(coords.len(), self.dim(), "coordinate vector has wrong length");
        let mut out = RMatrix::zeros(self.ambient, self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            out.add_scaled(c, b).expect("basis matrices are ambient-sized");
        }
        out
    }

    pub fn element(&self, coords: Vector) -> Element {
        let matrix = self.expand(&coords);
        Element { coords, matrix }
    }

    /// The basis element `b_{index+1}` as an [`Element`].
    pub fn basis_element(&self, index: usize) -> Element {
        Element {
            coords: unit_vector(self.dim(), index),
            matrix: self.basis[index].clone(),
        }
    }

    /// Coordinates of `m` over the basis, or `None` if `m` is not in the
    /// algebra (wrong shape included).
    pub fn coords_of(&self, m: &RMatrix) -> Option<Element> {
        if m.rows() != self.ambient || m.cols() != self.ambient {
            return None;
        }
        self.coordinates.coords(m).map(|coords| Element {
            coords,
            matrix: m.clone(),
        })
    }

    /// Matrix of `ad_m` in basis coordinates: column `l` holds the
    /// coordinates of `[m, b_l]`.
    pub fn ad_matrix(&self, m: &RMatrix) -> Result<RMatrix, LieError> {
        let n = self.dim();
        let mut ad = RMatrix::zeros(n, n);
        for (l, b) in self.basis.iter().enumerate() {
            let image = bracket(m, b)?;
            let coords = self
                .coordinates
                .coords(&image)
                .ok_or(LieError::BracketOutsideAlgebra { index: l })?;
            for (i, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    ad.set(i, l, c);
                }
            }
        }
        Ok(ad)
    }

    /// Canonical basis of the coordinate vectors `a` with `[m, sum a_i b_i] = 0`.
    pub fn ad_kernel(&self, m: &RMatrix) -> Result<SubspaceBasis, LieError> {
        Ok(nullspace(&self.ad_matrix(m)?))
    }

    /// First pair `(i, j)`, `i < j`, whose bracket leaves the span.
    pub fn closure_violation(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let b = bracket(&self.basis[i], &self.basis[j]).expect("square basis");
                self.coordinates.coords(&b).is_none()
            })
    }

    pub fn is_closed(&self) -> bool {
        self.closure_violation().is_none()
    }
}
