//! Rank and Cartan subalgebra construction.
//!
//! A list of elements `v_1..v_r` is extended one element at a time. The
//! candidates for the next element form the constraint space
//!
//! ```text
//! L = { y : [v_k, y] = 0, [v_k^t, y] = 0, scala(y, v_k) = 0 for all k }
//! ```
//!
//! and the next element is any nonzero `y` in `L` with `[y, y^t] = 0`. The
//! set is maximal when no such `y` exists. That last condition is quadratic,
//! so it is decided by a tri-state procedure: certificates when `L = {0}`,
//! when `[y, y^t]` vanishes identically on `L`, or when `L` is small enough
//! to solve exactly; a bounded search otherwise.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lie::{bracket, scala, Element, LieAlgebra};
use crate::linalg::{combine, independent, nullspace, RMatrix, Scalar, SubspaceBasis, Vector};

/// How hard [`find_normal_witness`] looks before giving up.
///
/// Single basis vectors and pairwise sums/differences are always tried. The
/// box search then tries integer combinations with at most `max_support`
/// nonzero coefficients of absolute value at most `max_coeff`, stopping
/// after `max_candidates` evaluations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_coeff: u32,
    pub max_support: usize,
    pub max_candidates: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::level(2)
    }
}

impl SearchBudget {
    /// Level 0 disables the box search; level `k` allows coefficients up to
    /// `k` on `k + 1` basis vectors.
    pub fn level(level: u32) -> Self {
        SearchBudget {
            max_coeff: level,
            max_support: level as usize + 1,
            max_candidates: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("seed element {} is not in the algebra", .index + 1)]
    SeedNotInAlgebra { index: usize },
    #[error("seed element {} depends linearly on the previous ones", .index + 1)]
    SeedNotIndependent { index: usize },
    #[error("seed is not abelian: [v{}, v{}] != 0", .first + 1, .second + 1)]
    SeedNotAbelian { first: usize, second: usize },
    #[error("seed fails [x, y^t] = 0: [v{}, v{}^t] != 0", .first + 1, .second + 1)]
    SeedNotNormal { first: usize, second: usize },
    #[error(
        "could not decide maximality after {rank} elements: the constraint space has \
         dimension {space_dim} and the search budget found no normal element"
    )]
    MaximalityUndecided { rank: usize, space_dim: usize },
}

/// The user-supplied starting elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    elements: Vec<Element>,
}

impl Seed {
    pub fn from_matrices(alg: &LieAlgebra, matrices: &[RMatrix]) -> Result<Self, SolverError> {
        let elements = matrices
            .iter()
            .enumerate()
            .map(|(index, m)| alg.coords_of(m).ok_or(SolverError::SeedNotInAlgebra { index }))
            .collect::<Result<_, _>>()?;
        Ok(Seed { elements })
    }

    /// Seed from coordinate vectors. Panics if a vector has the wrong length.
    pub fn from_coords(alg: &LieAlgebra, coords: Vec<Vector>) -> Self {
        Seed {
            elements: coords.into_iter().map(|c| alg.element(c)).collect(),
        }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Runs the three admissibility checks, reporting the first failure.
    pub fn validate(&self) -> Result<(), SolverError> {
        if let Some(index) = first_dependent(&self.elements) {
            return Err(SolverError::SeedNotIndependent { index });
        }
        check_abelian(&self.elements)
            .map_err(|(first, second)| SolverError::SeedNotAbelian { first, second })?;
        check_normal_pairs(&self.elements)
            .map_err(|(first, second)| SolverError::SeedNotNormal { first, second })
    }
}

fn first_dependent(elements: &[Element]) -> Option<usize> {
    let coords: Vec<Vector> = elements.iter().map(|e| e.coords().to_vec()).collect();
    if independent(&coords) {
        return None;
    }
    (0..coords.len()).find(|&k| !independent(&coords[..=k]))
}

pub fn check_independent(elements: &[Element]) -> bool {
    let coords: Vec<Vector> = elements.iter().map(|e| e.coords().to_vec()).collect();
    independent(&coords)
}

/// `Ok` iff `[v_i, v_j] = 0` for all `i < j`; otherwise the first failing
/// pair.
pub fn check_abelian(elements: &[Element]) -> Result<(), (usize, usize)> {
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate().skip(i + 1) {
            if !commutator(x.matrix(), y.matrix()).is_zero() {
                return Err((i, j));
            }
        }
    }
    Ok(())
}

/// `Ok` iff `[v_i, v_j^t] = 0` for all `i <= j`; otherwise the first failing
/// pair.
pub fn check_normal_pairs(elements: &[Element]) -> Result<(), (usize, usize)> {
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate().skip(i) {
            if !commutator(x.matrix(), &y.matrix().transpose()).is_zero() {
                return Err((i, j));
            }
        }
    }
    Ok(())
}

fn commutator(x: &RMatrix, y: &RMatrix) -> RMatrix {
    bracket(x, y).expect("algebra elements share one ambient size")
}

/// `[y, y^t]`
fn normal_defect(y: &RMatrix) -> RMatrix {
    commutator(y, &y.transpose())
}

/// The constraint space `L` with the realized matrices of its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSpace {
    basis: SubspaceBasis,
    matrices: Vec<RMatrix>,
}

impl ConstraintSpace {
    /// No constraints: the whole algebra.
    pub fn whole(alg: &LieAlgebra) -> Self {
        ConstraintSpace {
            basis: SubspaceBasis::full(alg.dim()),
            matrices: alg.basis().to_vec(),
        }
    }

    pub fn basis(&self) -> &SubspaceBasis {
        &self.basis
    }

    pub fn matrices(&self) -> &[RMatrix] {
        &self.matrices
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_zero()
    }

    /// Adds the constraints of one more element `v`:
    /// `[v, y] = 0`, `[v^t, y] = 0` and `scala(y, v) = 0`.
    ///
    /// Works in coordinates over the current basis of `L`, so the system has
    /// `dim L` unknowns rather than `dim` of the algebra.
    pub fn refine(&self, alg: &LieAlgebra, v: &Element) -> ConstraintSpace {
        let d = self.dim();
        if d == 0 {
            return self.clone();
        }
        let m = v.matrix();
        let mt = m.transpose();
        // For symmetric or skew v the transpose constraint repeats the first.
        let transpose_redundant = m.is_symmetric() || m.is_skew_symmetric();

        let mut images: Vec<Vec<RMatrix>> = vec![self.matrices.iter().map(|e| commutator(m, e)).collect()];
        if !transpose_redundant {
            images.push(self.matrices.iter().map(|e| commutator(&mt, e)).collect());
        }
        let entries = m.entries().len();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for family in &images {
            for k in 0..entries {
                let row: Vec<Scalar> = family.iter().map(|img| img.entries()[k].clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let ortho: Vec<Scalar> = self
            .matrices
            .iter()
            .map(|e| scala(e, m).expect("same ambient"))
            .collect();
        if ortho.iter().any(|x| !x.is_zero()) {
            rows.push(ortho);
        }

        let kernel = if rows.is_empty() {
            SubspaceBasis::full(d)
        } else {
            nullspace(&RMatrix::from_rows(rows).expect("rows have length dim L"))
        };
        let n = alg.dim();
        let basis = SubspaceBasis::span(
            n,
            kernel
                .vectors()
                .iter()
                .map(|c| combine(c, self.basis.vectors(), n)),
        );
        let matrices = basis.vectors().iter().map(|c| alg.expand(c)).collect();
        ConstraintSpace { basis, matrices }
    }

    fn element(&self, alg: &LieAlgebra, coeffs: &[Scalar]) -> Element {
        alg.element(combine(coeffs, self.basis.vectors(), alg.dim()))
    }
}

/// Constraint space of a list of elements, built from scratch.
pub fn constraint_space(alg: &LieAlgebra, current: &[Element]) -> ConstraintSpace {
    current
        .iter()
        .fold(ConstraintSpace::whole(alg), |space, v| space.refine(alg, v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normality {
    IdenticallyNormal,
    NotIdentically,
}

/// The quadratic map `N(y) = [y, y^t]` on `L`, through its polarization:
/// for `y = sum c_i e_i`,
/// `N(y) = sum c_i^2 N(e_i) + sum_{i<j} c_i c_j ([e_i, e_j^t] + [e_j, e_i^t])`.
struct Polarization<'a> {
    matrices: &'a [RMatrix],
    transposes: Vec<RMatrix>,
    diagonal: Vec<RMatrix>,
    cross: HashMap<(usize, usize), RMatrix>,
}

impl<'a> Polarization<'a> {
    fn new(matrices: &'a [RMatrix]) -> Self {
        let transposes: Vec<RMatrix> = matrices.iter().map(RMatrix::transpose).collect();
        let diagonal = matrices
            .iter()
            .zip(&transposes)
            .map(|(e, et)| commutator(e, et))
            .collect();
        Polarization {
            matrices,
            transposes,
            diagonal,
            cross: HashMap::new(),
        }
    }

    fn cross(&mut self, i: usize, j: usize) -> &RMatrix {
        let key = if i < j { (i, j) } else { (j, i) };
        let (matrices, transposes) = (self.matrices, &self.transposes);
        self.cross.entry(key).or_insert_with(|| {
            let (a, b) = key;
            commutator(&matrices[a], &transposes[b])
                .add(&commutator(&matrices[b], &transposes[a]))
                .expect("same ambient")
        })
    }

    /// `N(sum c_i e_i)` for a sparse coefficient list.
    fn eval(&mut self, terms: &[(usize, Scalar)]) -> RMatrix {
        let size = self.matrices[0].rows();
        let mut out = RMatrix::zeros(size, size);
        for (a, (i, ci)) in terms.iter().enumerate() {
            out.add_scaled(&(ci * ci), &self.diagonal[*i]).expect("same ambient");
            for (j, cj) in &terms[a + 1..] {
                let coeff = ci * cj;
                let p = self.cross(*i, *j).clone();
                out.add_scaled(&coeff, &p).expect("same ambient");
            }
        }
        out
    }
}

/// Decides whether `[y, y^t]` vanishes for every `y` in `L`.
pub fn normality_on_space(space: &ConstraintSpace) -> Normality {
    let ms = space.matrices();
    // Skew or symmetric subspaces are normal throughout; this is a fast
    // sufficient test before the full polarization check.
    if ms.iter().all(RMatrix::is_skew_symmetric) || ms.iter().all(RMatrix::is_symmetric) {
        return Normality::IdenticallyNormal;
    }
    let mut pol = Polarization::new(ms);
    if pol.diagonal.iter().any(|d| !d.is_zero()) {
        return Normality::NotIdentically;
    }
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if !pol.cross(i, j).is_zero() {
                return Normality::NotIdentically;
            }
        }
    }
    Normality::IdenticallyNormal
}

/// Searches `L` for a nonzero `y` with `[y, y^t] = 0`.
///
/// Basis vectors of `L` are visited from the highest pivot column down.
/// Stages: any basis vector if `L` is identically normal; single basis
/// vectors; `e_i + e_j` and `e_i - e_j`; the bounded integer box.
pub fn find_normal_witness(
    alg: &LieAlgebra,
    space: &ConstraintSpace,
    budget: &SearchBudget,
) -> Option<Element> {
    let d = space.dim();
    if d == 0 {
        return None;
    }
    let order: Vec<usize> = (0..d).rev().collect();
    let unit = |i: usize| {
        let mut c = vec![Scalar::zero(); d];
        c[i] = Scalar::one();
        c
    };
    if normality_on_space(space) == Normality::IdenticallyNormal {
        return Some(space.element(alg, &unit(order[0])));
    }

    let mut pol = Polarization::new(space.matrices());
    if let Some(&i) = order.iter().find(|&&i| pol.diagonal[i].is_zero()) {
        return Some(space.element(alg, &unit(i)));
    }

    for (a, &i) in order.iter().enumerate() {
        for &j in &order[a + 1..] {
            for sign in [1i64, -1] {
                let terms = [(i, Scalar::one()), (j, Scalar::from_integer(sign.into()))];
                if pol.eval(&terms).is_zero() {
                    return Some(space.element(alg, &dense(&terms, d)));
                }
            }
        }
    }

    box_search(&mut pol, &order, budget).map(|terms| space.element(alg, &dense(&terms, d)))
}

fn dense(terms: &[(usize, Scalar)], d: usize) -> Vector {
    let mut c = vec![Scalar::zero(); d];
    for (i, v) in terms {
        c[*i] = v.clone();
    }
    c
}

fn box_search(
    pol: &mut Polarization<'_>,
    order: &[usize],
    budget: &SearchBudget,
) -> Option<Vec<(usize, Scalar)>> {
    let bound = budget.max_coeff as i64;
    if bound == 0 {
        return None;
    }
    let values: Vec<i64> = (1..=bound).flat_map(|v| [v, -v]).collect();
    let mut evaluated = 0u64;
    for support in 1..=budget.max_support.min(order.len()) {
        let mut subset: Vec<usize> = (0..support).collect();
        loop {
            let mut choice = vec![0usize; support];
            loop {
                let coeffs: Vec<i64> = choice.iter().map(|&c| values[c]).collect();
                // first coefficient positive and gcd 1: every line once
                let fresh = coeffs[0] > 0
                    && coeffs.iter().fold(0i64, |g, c| g.gcd(c)) == 1
                    && !coeffs.iter().all(|c| c.abs() == 1 && support <= 2);
                if fresh {
                    evaluated += 1;
                    if evaluated > budget.max_candidates {
                        return None;
                    }
                    let terms: Vec<(usize, Scalar)> = subset
                        .iter()
                        .zip(&coeffs)
                        .map(|(&s, &c)| (order[s], Scalar::from_integer(c.into())))
                        .collect();
                    if pol.eval(&terms).is_zero() {
                        return Some(terms);
                    }
                }
                if !advance(&mut choice, values.len()) {
                    break;
                }
            }
            if !next_subset(&mut subset, order.len()) {
                break;
            }
        }
    }
    None
}

/// Odometer increment; false once it wraps.
fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Next k-subset of `0..n` in lexicographic order.
fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Why a set was declared maximal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaximalityCertificate {
    /// The constraint space is `{0}`.
    TrivialConstraintSpace,
    /// The constraint space is nonzero but contains no nonzero real `y` with
    /// `[y, y^t] = 0`; proven exactly for spaces of dimension one or two.
    NoNormalElement { space_dim: usize },
}

impl fmt::Display for MaximalityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaximalityCertificate::TrivialConstraintSpace => f.write_str("constraint space is {0}"),
            MaximalityCertificate::NoNormalElement { space_dim } => write!(
                f,
                "constraint space of dimension {space_dim} has no nonzero normal element"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaximalityVerdict {
    Maximal(MaximalityCertificate),
    NotMaximal(Element),
    Undecided(usize),
}

pub fn check_maximal(alg: &LieAlgebra, current: &[Element], budget: &SearchBudget) -> MaximalityVerdict {
    decide(alg, &constraint_space(alg, current), budget)
}

/// Maximality verdict for an already computed constraint space.
pub fn decide(alg: &LieAlgebra, space: &ConstraintSpace, budget: &SearchBudget) -> MaximalityVerdict {
    match space.dim() {
        0 => MaximalityVerdict::Maximal(MaximalityCertificate::TrivialConstraintSpace),
        1 => {
            // N(c e) = c^2 N(e)
            let e = space.element(alg, &[Scalar::one()]);
            if normal_defect(e.matrix()).is_zero() {
                MaximalityVerdict::NotMaximal(e)
            } else {
                MaximalityVerdict::Maximal(MaximalityCertificate::NoNormalElement { space_dim: 1 })
            }
        }
        2 => decide_plane(alg, space),
        d => match find_normal_witness(alg, space, budget) {
            Some(w) => MaximalityVerdict::NotMaximal(w),
            None => MaximalityVerdict::Undecided(d),
        },
    }
}

/// Exact answer on a two-dimensional `L`. Each entry of
/// `N(a e_1 + b e_2)` is a binary quadratic form in `(a, b)`; a normal
/// element is a common real projective root of all of them.
fn decide_plane(alg: &LieAlgebra, space: &ConstraintSpace) -> MaximalityVerdict {
    let mut pol = Polarization::new(space.matrices());
    let n1 = pol.diagonal[0].clone();
    let n2 = pol.diagonal[1].clone();
    let p = pol.cross(0, 1).clone();
    let forms: Vec<[Scalar; 3]> = (0..n1.entries().len())
        .map(|k| {
            [
                n1.entries()[k].clone(),
                p.entries()[k].clone(),
                n2.entries()[k].clone(),
            ]
        })
        .collect();
    match common_root(&forms) {
        PlaneRoot::Everywhere => MaximalityVerdict::NotMaximal(space.element(alg, &[Scalar::zero(), Scalar::one()])),
        PlaneRoot::Rational(a, b) => MaximalityVerdict::NotMaximal(space.element(alg, &[a, b])),
        PlaneRoot::None => {
            MaximalityVerdict::Maximal(MaximalityCertificate::NoNormalElement { space_dim: 2 })
        }
        PlaneRoot::Irrational => MaximalityVerdict::Undecided(2),
    }
}

/// Common real projective roots of binary quadratic forms
/// `x a^2 + y ab + z b^2`, given as `[x, y, z]`.
#[derive(Clone, Debug, PartialEq, Eq)]
enum PlaneRoot {
    /// Every form is zero.
    Everywhere,
    Rational(Scalar, Scalar),
    /// A common real root exists but is not rational.
    Irrational,
    None,
}

fn common_root(forms: &[[Scalar; 3]]) -> PlaneRoot {
    let forms: Vec<&[Scalar; 3]> = forms.iter().filter(|f| f.iter().any(|x| !x.is_zero())).collect();
    let Some([qa, qb, qc]) = forms.first().copied() else {
        return PlaneRoot::Everywhere;
    };
    let vanishes = |a: &Scalar, b: &Scalar| {
        forms
            .iter()
            .all(|[x, y, z]| (x * a * a + y * a * b + z * b * b).is_zero())
    };
    let candidates: Vec<(Scalar, Scalar)> = if qa.is_zero() {
        // b (qb a + qc b): roots b = 0 and, if qb != 0, a = -qc b / qb
        let mut c = vec![(Scalar::one(), Scalar::zero())];
        if !qb.is_zero() {
            c.push((-qc.clone(), qb.clone()));
        }
        c
    } else {
        let disc = qb * qb - BigRational::from_integer(4.into()) * qa * qc;
        if disc.is_negative() {
            return PlaneRoot::None;
        }
        match rational_sqrt(&disc) {
            Some(root) => {
                let two_a = qa * BigRational::from_integer(2.into());
                vec![
                    ((-qb + &root) / &two_a, Scalar::one()),
                    ((-qb - &root) / &two_a, Scalar::one()),
                ]
            }
            None => {
                // Conjugate quadratic irrational roots: another form shares
                // one only if it is a rational multiple of this one.
                let proportional = forms
                    .iter()
                    .all(|[x, y, z]| qa * y == qb * x && qa * z == qc * x);
                return if proportional {
                    PlaneRoot::Irrational
                } else {
                    PlaneRoot::None
                };
            }
        }
    };
    candidates
        .into_iter()
        .find(|(a, b)| vanishes(a, b))
        .map_or(PlaneRoot::None, |(a, b)| PlaneRoot::Rational(a, b))
}

fn rational_sqrt(q: &Scalar) -> Option<Scalar> {
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

/// Scales a nonzero coordinate vector to coprime integers with a positive
/// first nonzero entry.
pub fn canonical_coords(v: &[Scalar]) -> Vector {
    let lcm = v
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v.to_vec();
    }
    let negative = ints.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative);
    let divisor = if negative { -gcd } else { gcd };
    ints.into_iter()
        .map(|x| BigRational::from_integer(x / &divisor))
        .collect()
}

/// The next element for `current`, if the set is not maximal.
pub fn extend_one(alg: &LieAlgebra, current: &[Element], budget: &SearchBudget) -> Option<Element> {
    match check_maximal(alg, current, budget) {
        MaximalityVerdict::NotMaximal(w) => Some(alg.element(canonical_coords(w.coords()))),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Seed,
    Added,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanElement {
    pub element: Element,
    pub origin: Origin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanResult {
    pub algebra: String,
    pub elements: Vec<CartanElement>,
    pub certificate: MaximalityCertificate,
}

impl CartanResult {
    pub fn rank(&self) -> usize {
        self.elements.len()
    }

    pub fn matrices(&self) -> Vec<RMatrix> {
        self.elements.iter().map(|e| e.element.matrix().clone()).collect()
    }

    /// Re-checks the output from scratch: independence, commutation,
    /// transpose commutation and a maximality certificate for the full set.
    pub fn verify(&self, alg: &LieAlgebra, budget: &SearchBudget) -> Result<(), String> {
        let elements: Vec<Element> = self.elements.iter().map(|e| e.element.clone()).collect();
        if !check_independent(&elements) {
            return Err("elements are linearly dependent".into());
        }
        if let Err((i, j)) = check_abelian(&elements) {
            return Err(format!("[v{}, v{}] != 0", i + 1, j + 1));
        }
        if let Err((i, j)) = check_normal_pairs(&elements) {
            return Err(format!("[v{}, v{}^t] != 0", i + 1, j + 1));
        }
        match check_maximal(alg, &elements, budget) {
            MaximalityVerdict::Maximal(_) => Ok(()),
            MaximalityVerdict::NotMaximal(_) => Err("set can still be extended".into()),
            MaximalityVerdict::Undecided(d) => Err(format!("maximality undecided (dim L = {d})")),
        }
    }
}

/// Extends `seed` to a Cartan subalgebra and reports the rank.
///
/// An empty seed starts from the first basis element `b` with `[b, b^t] = 0`.
pub fn rank_and_cartan(
    alg: &LieAlgebra,
    seed: &[RMatrix],
    budget: &SearchBudget,
) -> Result<CartanResult, SolverError> {
    let seed = Seed::from_matrices(alg, seed)?;
    rank_and_cartan_from_seed(alg, &seed, budget)
}

pub fn rank_and_cartan_from_seed(
    alg: &LieAlgebra,
    seed: &Seed,
    budget: &SearchBudget,
) -> Result<CartanResult, SolverError> {
    seed.validate()?;
    let mut elements: Vec<CartanElement> = seed
        .elements()
        .iter()
        .map(|e| CartanElement {
            element: e.clone(),
            origin: Origin::Seed,
        })
        .collect();
    if elements.is_empty() {
        if let Some(i) = (0..alg.dim()).find(|&i| normal_defect(&alg.basis()[i]).is_zero()) {
            elements.push(CartanElement {
                element: alg.basis_element(i),
                origin: Origin::Added,
            });
        }
    }

    let mut space = elements
        .iter()
        .fold(ConstraintSpace::whole(alg), |s, e| s.refine(alg, &e.element));
    loop {
        match decide(alg, &space, budget) {
            MaximalityVerdict::Maximal(certificate) => {
                return Ok(CartanResult {
                    algebra: alg.name().to_string(),
                    elements,
                    certificate,
                })
            }
            MaximalityVerdict::NotMaximal(w) => {
                let next = alg.element(canonical_coords(w.coords()));
                debug_assert!(elements
                    .iter()
                    .all(|e| scala(e.element.matrix(), next.matrix()).unwrap().is_zero()));
                space = space.refine(alg, &next);
                elements.push(CartanElement {
                    element: next,
                    origin: Origin::Added,
                });
                assert!(elements.len() <= alg.dim(), "independent set outgrew the algebra");
            }
            MaximalityVerdict::Undecided(space_dim) => {
                return Err(SolverError::MaximalityUndecided {
                    rank: elements.len(),
                    space_dim,
                })
            }
        }
    }
}
