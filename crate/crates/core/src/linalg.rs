//! Exact rational dense linear algebra.
//!
//! Everything here works over [`Scalar`] (arbitrary precision rationals), so
//! there is no pivoting strategy beyond "first nonzero entry in column order":
//! row reduction is deterministic and its output is the unique reduced row
//! echelon form.
//!
//! Subspaces are carried around as [`SubspaceBasis`], which always stores the
//! RREF of its spanning vectors. Two subspaces are equal iff their bases are
//! equal.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational number.
pub type Scalar = BigRational;

/// Coordinate vector of fixed length.
pub type Vector = Vec<Scalar>;

/// Integer as a [`Scalar`].
pub fn int(value: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(value))
}

/// The fraction `numer / denom`, reduced. Panics if `denom` is zero.
pub fn frac(numer: i64, denom: i64) -> Scalar {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Vector of integers as a [`Vector`].
pub fn int_vector(values: &[i64]) -> Vector {
    values.iter().map(|&v| int(v)).collect()
}

/// Unit coordinate vector `e_index` of length `len`.
pub fn unit_vector(len: usize, index: usize) -> Vector {
    let mut v = vec![Scalar::zero(); len];
    v[index] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("shape mismatch: {left_rows}x{left_cols} against {right_rows}x{right_cols}")]
pub struct ShapeError {
    pub left_rows: usize,
    pub left_cols: usize,
    pub right_rows: usize,
    pub right_cols: usize,
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl RMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    /// The matrix with a single 1 at `(row, col)` (0-based).
    pub fn unit(rows: usize, cols: usize, row: usize, col: usize) -> Self {
        let mut m = RMatrix::zeros(rows, cols);
        m.data[row * cols + col] = Scalar::one();
        m
    }

    /// Builds a matrix from row-major entries. Fails if the length is not
    /// `rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, ShapeError> {
        if data.len() != rows * cols {
            return Err(ShapeError {
                left_rows: rows,
                left_cols: cols,
                right_rows: 1,
                right_cols: data.len(),
            });
        }
        Ok(RMatrix { rows, cols, data })
    }

    /// Builds a matrix from a list of rows. Ragged input is an error.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, ShapeError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(ShapeError {
                    left_rows: nrows,
                    left_cols: ncols,
                    right_rows: 1,
                    right_cols: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RMatrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Integer matrix literal. Panics on ragged rows.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        RMatrix::from_rows(rows.iter().map(|r| int_vector(r.as_ref())).collect())
            .expect("ragged integer matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.data[row * self.cols + col] = value;
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn transpose(&self) -> RMatrix {
        let mut t = RMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = &self.data[r * self.cols + c];
                if !v.is_zero() {
                    t.data[c * self.rows + r] = v.clone();
                }
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                self[(r, r)].is_zero() && (r + 1..self.cols).all(|c| self[(r, c)] == -&self[(c, r)])
            })
    }

    fn check_same_shape(&self, other: &RMatrix) -> Result<(), ShapeError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.mismatch(other));
        }
        Ok(())
    }

    fn mismatch(&self, other: &RMatrix) -> ShapeError {
        ShapeError {
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }

    /// Matrix product. Zero entries are skipped, which matters because
    /// almost every matrix this crate touches is very sparse.
    pub fn mul(&self, other: &RMatrix) -> Result<RMatrix, ShapeError> {
        if self.cols != other.rows {
            return Err(self.mismatch(other));
        }
        let mut out = RMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vector(&self, v: &[Scalar]) -> Result<Vector, ShapeError> {
        if v.len() != self.cols {
            return Err(ShapeError {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: v.len(),
                right_cols: 1,
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn add(&self, other: &RMatrix) -> Result<RMatrix, ShapeError> {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other)?;
        Ok(out)
    }

    pub fn sub(&self, other: &RMatrix) -> Result<RMatrix, ShapeError> {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other)?;
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> RMatrix {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &RMatrix) -> Result<(), ShapeError> {
        self.check_same_shape(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (dst, src) in self.data.iter_mut().zip(&other.data) {
            if !src.is_zero() {
                *dst += c * src;
            }
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for RMatrix {
    type Output = Scalar;

    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl fmt::Display for RMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination in place on a list of rows of common width.
///
/// Pivots are only taken in columns `0..pivot_limit`; columns past the limit
/// are carried along (used to track the row transformation). On return the
/// first `pivots.len()` rows are the nonzero rows of the reduced form,
/// ordered by pivot column.
pub(crate) fn gauss_jordan(rows: &mut [Vec<Scalar>], pivot_limit: usize) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..pivot_limit.min(width) {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);

        let mut pivot_row = std::mem::take(&mut rows[next]);
        let inv = pivot_row[col].recip();
        let support: Vec<usize> = (col..width).filter(|&c| !pivot_row[c].is_zero()).collect();
        if !inv.is_one() {
            for &c in &support {
                pivot_row[c] *= &inv;
            }
        }
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &c in &support {
                let delta = &factor * &pivot_row[c];
                row[c] -= delta;
            }
        }
        rows[next] = pivot_row;
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// Reduced row echelon form with its pivot columns.
pub fn rref(m: &RMatrix) -> Rref {
    let mut rows = m.to_rows();
    let pivots = gauss_jordan(&mut rows, m.cols());
    let matrix = if m.rows() == 0 {
        m.clone()
    } else {
        RMatrix::from_rows(rows).expect("row reduction preserves shape")
    };
    Rref { matrix, pivots }
}

pub fn rank(m: &RMatrix) -> usize {
    rref(m).rank()
}

/// Canonical basis of `{v : m v = 0}`.
pub fn nullspace(m: &RMatrix) -> SubspaceBasis {
    let mut rows = m.to_rows();
    let pivots = gauss_jordan(&mut rows, m.cols());
    SubspaceBasis::span(m.cols(), kernel_from_reduced(&rows, &pivots, m.cols()))
}

/// Kernel vectors read off a reduced row echelon form: one per free column.
fn kernel_from_reduced(rows: &[Vec<Scalar>], pivots: &[usize], cols: usize) -> Vec<Vector> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); cols];
            v[free] = Scalar::one();
            for (row, &p) in rows.iter().zip(pivots) {
                if !row[free].is_zero() {
                    v[p] = -&row[free];
                }
            }
            v
        })
        .collect()
}

/// Coefficients `c` with `sum c_i span_i = target`, or `None` when `target`
/// lies outside the span. Free coefficients are set to zero, so the answer is
/// unique whenever the span vectors are independent.
pub fn solve_in_span(span: &[Vector], target: &[Scalar]) -> Option<Vector> {
    let k = span.len();
    assert!(
        span.iter().all(|v| v.len() == target.len()),
        "span vectors and target must share one length"
    );
    // Columns are the span vectors, last column is the target.
    let mut rows: Vec<Vec<Scalar>> = (0..target.len())
        .map(|i| {
            let mut row: Vec<Scalar> = span.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = gauss_jordan(&mut rows, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut coeffs = vec![Scalar::zero(); k];
    for (row, &p) in rows.iter().zip(&pivots) {
        coeffs[p] = row[k].clone();
    }
    Some(coeffs)
}

/// Canonical basis of `span(a) ∩ span(b)`.
///
/// Solves `sum x_i a_i = sum y_j b_j` through the nullspace of `[A^t | -B^t]`
/// and maps each solution back through the `a` half.
pub fn intersect(a: &SubspaceBasis, b: &SubspaceBasis) -> SubspaceBasis {
    assert_eq!(a.ambient(), b.ambient(), "subspaces live in different spaces");
    let n = a.ambient();
    if a.is_zero() || b.is_zero() {
        return SubspaceBasis::zero(n);
    }
    let ka = a.dim();
    let system: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            a.vectors()
                .iter()
                .map(|v| v[i].clone())
                .chain(b.vectors().iter().map(|v| -&v[i]))
                .collect()
        })
        .collect();
    let system = RMatrix::from_rows(system).expect("rectangular system");
    let kernel = nullspace(&system);
    let vectors = kernel.vectors().iter().map(|sol| combine(&sol[..ka], a.vectors(), n));
    SubspaceBasis::span(n, vectors)
}

/// `sum coeffs_i vectors_i`
pub fn combine(coeffs: &[Scalar], vectors: &[Vector], len: usize) -> Vector {
    let mut out = vec![Scalar::zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        if c.is_zero() {
            continue;
        }
        for (dst, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *dst += c * x;
            }
        }
    }
    out
}

/// True iff the vectors are linearly independent. The empty list is.
pub fn independent(vs: &[Vector]) -> bool {
    if vs.is_empty() {
        return true;
    }
    let mut rows = vs.to_vec();
    let width = rows[0].len();
    gauss_jordan(&mut rows, width).len() == vs.len()
}

/// A subspace of `Q^ambient`, stored as the reduced row echelon form of its
/// spanning vectors (rows ordered by pivot column, zero rows dropped).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut rows: Vec<Vector> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector length differs from ambient"))
            .filter(|v| !is_zero_vector(v))
            .collect();
        let pivots = gauss_jordan(&mut rows, ambient);
        rows.truncate(pivots.len());
        SubspaceBasis {
            ambient,
            vectors: rows,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            vectors: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coefficients of `v` over this basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient");
        // The pivot entries of v are the coefficients; everything else must
        // then agree.
        let coeffs: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = combine(&coeffs, &self.vectors, self.ambient);
        (rebuilt.as_slice() == v).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Canonical basis of `span(self) + span(other)`.
    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient, other.ambient);
        SubspaceBasis::span(
            self.ambient,
            self.vectors.iter().chain(&other.vectors).cloned(),
        )
    }

    pub fn intersect(&self, other: &SubspaceBasis) -> SubspaceBasis {
        intersect(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RMatrix {
        RMatrix::from_i64_rows(rows)
    }

    fn span(ambient: usize, vs: &[&[i64]]) -> SubspaceBasis {
        SubspaceBasis::span(ambient, vs.iter().map(|v| int_vector(v)))
    }

    #[test]
    fn rref_identity() {
        let r = rref(&RMatrix::identity(3));
        assert_eq!(r.matrix, RMatrix::identity(3));
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank(), 3);
    }

    #[test]
    fn rref_proportional_rows() {
        let r = rref(&m(&[&[2, 4], &[1, 2]]));
        assert_eq!(r.matrix, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.pivots, vec![0]);
        assert_eq!(r.rank(), 1);
    }

    #[test]
    fn rref_permutation() {
        let r = rref(&m(&[&[0, 1], &[1, 0]]));
        assert_eq!(r.matrix, RMatrix::identity(2));
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_fractions() {
        let r = rref(&m(&[&[3, 1], &[0, 0]]));
        assert_eq!(r.matrix.row(0), &[int(1), frac(1, 3)]);
    }

    #[test]
    fn nullspace_single_row() {
        let a = m(&[&[1, 1]]);
        let k = nullspace(&a);
        assert_eq!(k.dim(), 1);
        let v = &k.vectors()[0];
        assert!(is_zero_vector(&a.mul_vector(v).unwrap()));
        assert_eq!(v, &int_vector(&[1, -1]));
    }

    #[test]
    fn nullspace_full_rank_and_zero_map() {
        assert!(nullspace(&RMatrix::identity(4)).is_zero());
        let k = nullspace(&RMatrix::zeros(2, 3));
        assert_eq!(k, SubspaceBasis::full(3));
    }

    #[test]
    fn solve_in_span_cases() {
        let std = [int_vector(&[1, 0]), int_vector(&[0, 1])];
        assert_eq!(solve_in_span(&std, &int_vector(&[3, 5])), Some(int_vector(&[3, 5])));
        assert_eq!(
            solve_in_span(&[int_vector(&[1, 1])], &int_vector(&[2, 2])),
            Some(int_vector(&[2]))
        );
        assert_eq!(solve_in_span(&[int_vector(&[1, 0])], &int_vector(&[0, 1])), None);
        assert_eq!(solve_in_span(&[], &int_vector(&[0, 0])), Some(vec![]));
        assert_eq!(solve_in_span(&[], &int_vector(&[0, 1])), None);
    }

    #[test]
    fn intersect_cases() {
        let plane = span(2, &[&[1, 0], &[0, 1]]);
        let diag = span(2, &[&[1, 1]]);
        assert_eq!(intersect(&plane, &diag), diag);
        assert!(intersect(&span(2, &[&[1, 0]]), &span(2, &[&[0, 1]])).is_zero());
        let a = span(4, &[&[1, 2, 0, 1], &[0, 1, 1, 1]]);
        assert_eq!(intersect(&a, &a), a);
    }

    #[test]
    fn intersect_skew_planes_in_three_space() {
        // z = 0 and x = y meet in the line (1, 1, 0)
        let a = span(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = span(3, &[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(intersect(&a, &b), span(3, &[&[1, 1, 0]]));
    }

    #[test]
    fn independence() {
        assert!(independent(&[int_vector(&[1, 0]), int_vector(&[0, 1])]));
        assert!(!independent(&[int_vector(&[1, 2]), int_vector(&[2, 4])]));
        assert!(independent(&[]));
    }

    #[test]
    fn subspace_membership() {
        let s = span(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(s.contains(&int_vector(&[1, 2, 1])));
        assert!(!s.contains(&int_vector(&[0, 0, 1])));
        // canonical basis is (1, 0, -1), (0, 1, 1)
        assert_eq!(s.coordinates(&int_vector(&[2, 1, -1])), Some(int_vector(&[2, 1])));
    }

    #[test]
    fn shape_errors() {
        let a = RMatrix::zeros(2, 3);
        assert!(a.mul(&a).is_err());
        assert!(a.add(&RMatrix::zeros(3, 2)).is_err());
        assert!(RMatrix::from_rows(vec![vec![int(1)], vec![]]).is_err());
    }

    #[test]
    fn symmetry_predicates() {
        assert!(m(&[&[0, 1], &[-1, 0]]).is_skew_symmetric());
        assert!(m(&[&[1, 2], &[2, 0]]).is_symmetric());
        assert!(!m(&[&[1, 2], &[2, 0]]).is_skew_symmetric());
    }
}
