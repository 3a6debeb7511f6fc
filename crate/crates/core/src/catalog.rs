//! Built-in matrix Lie algebras and a loader for user-supplied ones.
//!
//! Generators use 1-based indices: `F(p,q)` has a single 1 at row `p`,
//! column `q`; `J(p,q) = F(p,q) - F(q,p)`; `Z(p,q) = F(p,q) + F(q,p)`.
//! The fixed bases (g2, split g2, the so(4,4)+so(2,2) model) are tables of
//! signed generators so they can be audited entry by entry.

use std::fs::File;
use std::io::{BufReader, Read};
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::Value;
use thiserror::Error;

use crate::lie::{LieAlgebra, LieError};
use crate::linalg::{RMatrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    F,
    J,
    Z,
}

/// One signed generator inside a basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub sign: i8,
    pub kind: Generator,
    pub p: usize,
    pub q: usize,
}

const fn j(p: usize, q: usize) -> Term {
    Term { sign: 1, kind: Generator::J, p, q }
}

const fn z(p: usize, q: usize) -> Term {
    Term { sign: 1, kind: Generator::Z, p, q }
}

const fn neg(t: Term) -> Term {
    Term { sign: -t.sign, ..t }
}

pub fn f_matrix(t: usize, p: usize, q: usize) -> RMatrix {
    RMatrix::unit(t, t, p - 1, q - 1)
}

pub fn j_matrix(t: usize, p: usize, q: usize) -> RMatrix {
    generator(t, Generator::J, p, q)
}

pub fn z_matrix(t: usize, p: usize, q: usize) -> RMatrix {
    generator(t, Generator::Z, p, q)
}

fn generator(t: usize, kind: Generator, p: usize, q: usize) -> RMatrix {
    let mut m = f_matrix(t, p, q);
    let other = f_matrix(t, q, p);
    let sign = match kind {
        Generator::F => return m,
        Generator::J => -Scalar::from_integer(1.into()),
        Generator::Z => Scalar::from_integer(1.into()),
    };
    m.add_scaled(&sign, &other).expect("same size");
    m
}

fn realize(t: usize, terms: &[Term]) -> RMatrix {
    let mut m = RMatrix::zeros(t, t);
    for term in terms {
        let g = generator(t, term.kind, term.p, term.q);
        m.add_scaled(&Scalar::from_integer(term.sign.into()), &g)
            .expect("same size");
    }
    m
}

fn from_table(name: &str, t: usize, table: &[&[Term]]) -> LieAlgebra {
    let basis = table.iter().map(|terms| realize(t, terms)).collect();
    LieAlgebra::new(name, t, basis).expect("built-in basis tables are independent")
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{family} needs a matrix size of at least 2, got {t}")]
    InvalidParameter { family: &'static str, t: usize },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed algebra file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed algebra file: {0}")]
    Schema(String),
    #[error(
        "b{}[{},{}] is a floating point number; use an integer or a \"p/q\" string",
        .element + 1, .row + 1, .col + 1
    )]
    FloatEntry { element: usize, row: usize, col: usize },
    #[error("b{}[{},{}]: cannot read {text:?} as an exact rational", .element + 1, .row + 1, .col + 1)]
    BadEntry {
        element: usize,
        row: usize,
        col: usize,
        text: String,
    },
    #[error("b{} has {found} entries in row {}, expected {ambient}", .element + 1, .row + 1)]
    NotSquare {
        element: usize,
        row: usize,
        found: usize,
        ambient: usize,
    },
    #[error("b{} has {found} rows, expected {ambient}", .element + 1)]
    WrongRowCount {
        element: usize,
        found: usize,
        ambient: usize,
    },
    #[error("basis is not closed under the bracket: [b{}, b{}] leaves the span", .first + 1, .second + 1)]
    NotClosed { first: usize, second: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// so(t): `b_k = J(p,q)` for `p < q`, `p` outer.
pub fn so_basis(t: usize) -> Result<LieAlgebra, CatalogError> {
    if t < 2 {
        return Err(CatalogError::InvalidParameter { family: "so", t });
    }
    let basis = (1..t)
        .flat_map(|p| (p + 1..=t).map(move |q| (p, q)))
        .map(|(p, q)| j_matrix(t, p, q))
        .collect();
    Ok(LieAlgebra::new(format!("so({t})"), t, basis)?)
}

/// sl(t): off-diagonal `F(p,q)` row by row, then `F(1,1) - F(p,p)` for
/// `p = 2..t`.
pub fn sl_basis(t: usize) -> Result<LieAlgebra, CatalogError> {
    if t < 2 {
        return Err(CatalogError::InvalidParameter { family: "sl", t });
    }
    let mut basis: Vec<RMatrix> = (1..=t)
        .flat_map(|p| (1..=t).filter(move |&q| q != p).map(move |q| (p, q)))
        .map(|(p, q)| f_matrix(t, p, q))
        .collect();
    for p in 2..=t {
        basis.push(f_matrix(t, 1, 1).sub(&f_matrix(t, p, p)).expect("same size"));
    }
    Ok(LieAlgebra::new(format!("sl({t})"), t, basis)?)
}

const G2_TABLE: [&[Term]; 14] = [
    &[j(2, 3), j(6, 7)],
    &[j(2, 4), j(6, 8)],
    &[j(2, 5), j(7, 4)],
    &[j(2, 6), j(8, 4)],
    &[j(2, 7), j(4, 5)],
    &[j(2, 8), j(4, 6)],
    &[j(3, 4), j(7, 8)],
    &[j(3, 5), j(4, 6)],
    &[j(3, 6), j(5, 4)],
    &[j(3, 7), j(8, 4)],
    &[j(3, 8), j(4, 7)],
    &[j(5, 6), j(7, 8)],
    &[j(5, 7), j(8, 6)],
    &[j(5, 8), j(6, 7)],
];

const SPLIT_G2_TABLE: [&[Term]; 14] = [
    &[j(2, 3), neg(j(7, 6))],
    &[neg(j(4, 2)), j(6, 8)],
    &[z(2, 5), z(4, 7)],
    &[z(2, 6), neg(z(4, 8))],
    &[z(2, 7), neg(z(4, 5))],
    &[z(2, 8), z(4, 6)],
    &[j(3, 4), j(7, 8)],
    &[z(3, 5), neg(z(4, 6))],
    &[z(3, 6), z(4, 5)],
    &[z(3, 7), neg(z(4, 8))],
    &[z(3, 8), z(4, 7)],
    &[neg(j(6, 5)), neg(j(7, 8))],
    &[j(5, 7), j(6, 8)],
    &[j(5, 8), j(7, 6)],
];

const SO44_SO22_TABLE: [&[Term]; 34] = [
    &[z(1, 5)],
    &[z(1, 6)],
    &[z(1, 7)],
    &[z(1, 8)],
    &[z(2, 5)],
    &[z(2, 6)],
    &[z(2, 7)],
    &[z(2, 8)],
    &[z(3, 5)],
    &[z(3, 6)],
    &[z(3, 7)],
    &[z(3, 8)],
    &[z(4, 5)],
    &[z(4, 6)],
    &[z(4, 7)],
    &[z(4, 8)],
    &[j(1, 2)],
    &[j(1, 3)],
    &[j(1, 4)],
    &[j(2, 3)],
    &[j(2, 4)],
    &[j(3, 4)],
    &[j(5, 6)],
    &[j(5, 7)],
    &[j(5, 8)],
    &[j(6, 7)],
    &[j(6, 8)],
    &[j(7, 8)],
    &[j(9, 10)],
    &[j(11, 12)],
    &[z(9, 11)],
    &[z(9, 12)],
    &[z(10, 11)],
    &[z(10, 12)],
];

/// Compact g2 inside 8x8 skew matrices (first row and column unused).
pub fn g2_basis() -> LieAlgebra {
    from_table("g2", 8, &G2_TABLE)
}

/// Split g2, mixing skew (J) and symmetric (Z) generators.
pub fn split_g2_basis() -> LieAlgebra {
    from_table("split g2", 8, &SPLIT_G2_TABLE)
}

/// so(4,4) + so(2,2) acting on R^12, blocks 1..8 and 9..12.
pub fn so44_so22_basis() -> LieAlgebra {
    from_table("so(4,4)+so(2,2)", 12, &SO44_SO22_TABLE)
}

/// A named catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    So(usize),
    Sl(usize),
    G2,
    SplitG2,
    So44So22,
}

impl Family {
    pub fn build(self) -> Result<LieAlgebra, CatalogError> {
        match self {
            Family::So(t) => so_basis(t),
            Family::Sl(t) => sl_basis(t),
            Family::G2 => Ok(g2_basis()),
            Family::SplitG2 => Ok(split_g2_basis()),
            Family::So44So22 => Ok(so44_so22_basis()),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct LoadOptions {
    pub check_closure: bool,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions { check_closure: true }
    }
}

/// Parses an integer or `p/q` fraction, surrounding whitespace allowed.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer.parse().ok()?;
    let denom: BigInt = denom.parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(BigRational::new(numer, denom))
}

/// Reads an algebra from a JSON document:
///
/// ```json
/// { "name": "so(2)", "ambient": 2, "basis": [ [[0, 1], [-1, 0]] ] }
/// ```
///
/// Entries are integers or strings holding an integer or `p/q`. Floats are
/// rejected. Independence is always checked; closure unless disabled.
pub fn load_custom<R: Read>(reader: R, options: LoadOptions) -> Result<LieAlgebra, CatalogError> {
    let doc: Value = serde_json::from_reader(reader)?;
    let obj = doc
        .as_object()
        .ok_or_else(|| CatalogError::Schema("top level must be an object".into()))?;
    let ambient = obj
        .get("ambient")
        .and_then(Value::as_u64)
        .ok_or_else(|| CatalogError::Schema("`ambient` must be a positive integer".into()))?
        as usize;
    if ambient == 0 {
        return Err(CatalogError::Schema("`ambient` must be a positive integer".into()));
    }
    let name = match obj.get("name") {
        None | Some(Value::Null) => "custom".to_string(),
        Some(Value::String(s)) => s.clone(),
        Some(_) => return Err(CatalogError::Schema("`name` must be a string".into())),
    };
    let elements = obj
        .get("basis")
        .and_then(Value::as_array)
        .ok_or_else(|| CatalogError::Schema("`basis` must be an array of matrices".into()))?;

    let basis = elements
        .iter()
        .enumerate()
        .map(|(element, m)| parse_matrix(element, m, ambient))
        .collect::<Result<Vec<_>, _>>()?;
    let algebra = LieAlgebra::new(name, ambient, basis)?;
    if options.check_closure {
        if let Some((first, second)) = algebra.closure_violation() {
            return Err(CatalogError::NotClosed { first, second });
        }
    }
    Ok(algebra)
}

pub fn load_custom_path(path: &Path, options: LoadOptions) -> Result<LieAlgebra, CatalogError> {
    let file = File::open(path).map_err(|source| CatalogError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_custom(BufReader::new(file), options)
}

fn parse_matrix(element: usize, value: &Value, ambient: usize) -> Result<RMatrix, CatalogError> {
    let rows = value.as_array().ok_or_else(|| {
        CatalogError::Schema(format!("b{} must be an array of rows", element + 1))
    })?;
    if rows.len() != ambient {
        return Err(CatalogError::WrongRowCount {
            element,
            found: rows.len(),
            ambient,
        });
    }
    let mut data = Vec::with_capacity(ambient * ambient);
    for (row, cells) in rows.iter().enumerate() {
        let cells = cells.as_array().ok_or_else(|| {
            CatalogError::Schema(format!("row {} of b{} must be an array", row + 1, element + 1))
        })?;
        if cells.len() != ambient {
            return Err(CatalogError::NotSquare {
                element,
                row,
                found: cells.len(),
                ambient,
            });
        }
        for (col, cell) in cells.iter().enumerate() {
            data.push(parse_entry(cell).map_err(|kind| match kind {
                EntryProblem::Float => CatalogError::FloatEntry { element, row, col },
                EntryProblem::Unreadable(text) => CatalogError::BadEntry {
                    element,
                    row,
                    col,
                    text,
                },
            })?);
        }
    }
    Ok(RMatrix::from_entries(ambient, ambient, data).expect("counted entries"))
}

enum EntryProblem {
    Float,
    Unreadable(String),
}

fn parse_entry(cell: &Value) -> Result<Scalar, EntryProblem> {
    match cell {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Scalar::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Scalar::from_integer(u.into()))
            } else {
                Err(EntryProblem::Float)
            }
        }
        Value::String(s) => parse_scalar(s).ok_or_else(|| EntryProblem::Unreadable(s.clone())),
        other => Err(EntryProblem::Unreadable(other.to_string())),
    }
}
