//! Seed expressions: linear combinations of basis symbols.
//!
//! ```text
//! seeds := expr (';' expr)*
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := [coeff ['*']] 'b' index
//! coeff := integer | integer '/' integer
//! ```
//!
//! Whitespace is ignored and indices are 1-based.

use cartan_core::linalg::{int, Scalar, Vector};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeedParseError {
    #[error("seed {}: empty expression", .seed + 1)]
    Empty { seed: usize },
    #[error("seed {}: {message} at position {}", .seed + 1, .position + 1)]
    Syntax {
        seed: usize,
        position: usize,
        message: String,
    },
    #[error("seed {}: b{index} is out of range, the algebra has b1..b{dim}", .seed + 1)]
    IndexOutOfRange { seed: usize, index: usize, dim: usize },
}

/// Parses `;`-separated expressions into coordinate vectors of length `dim`.
/// Blank input is the empty seed.
pub fn parse_seed(text: &str, dim: usize) -> Result<Vec<Vector>, SeedParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .enumerate()
        .map(|(seed, expr)| parse_expression(expr, dim, seed))
        .collect()
}

fn parse_expression(expr: &str, dim: usize, seed: usize) -> Result<Vector, SeedParseError> {
    let chars: Vec<char> = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(SeedParseError::Empty { seed });
    }
    let mut parser = Parser {
        chars: &chars,
        pos: 0,
        seed,
    };
    let mut coords = vec![Scalar::zero(); dim];
    let mut first = true;
    while parser.pos < chars.len() {
        let negative = match parser.peek() {
            Some('+') => {
                parser.pos += 1;
                false
            }
            Some('-') => {
                parser.pos += 1;
                true
            }
            _ if first => false,
            _ => return Err(parser.error("expected '+' or '-'")),
        };
        first = false;
        let (coeff, index) = parser.term()?;
        if index == 0 || index > dim {
            return Err(SeedParseError::IndexOutOfRange { seed, index, dim });
        }
        if negative {
            coords[index - 1] -= coeff;
        } else {
            coords[index - 1] += coeff;
        }
    }
    Ok(coords)
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    seed: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, message: &str) -> SeedParseError {
        SeedParseError::Syntax {
            seed: self.seed,
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn term(&mut self) -> Result<(Scalar, usize), SeedParseError> {
        let coeff = match self.digits() {
            None => Scalar::one(),
            Some(numer) => {
                let numer: Scalar = Scalar::from_integer(numer.parse().expect("digits"));
                let value = if self.peek() == Some('/') {
                    self.pos += 1;
                    let denom = self.digits().ok_or_else(|| self.error("expected a denominator"))?;
                    let denom: Scalar = Scalar::from_integer(denom.parse().expect("digits"));
                    if denom.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    numer / denom
                } else {
                    numer
                };
                if self.peek() == Some('*') {
                    self.pos += 1;
                }
                value
            }
        };
        if self.peek() != Some('b') {
            return Err(self.error("expected a basis symbol 'b<index>'"));
        }
        self.pos += 1;
        let index = self
            .digits()
            .ok_or_else(|| self.error("expected a basis index"))?
            .parse::<usize>()
            .map_err(|_| self.error("basis index too large"))?;
        Ok((coeff, index))
    }
}

/// Renders coordinates as an expression the parser reads back exactly,
/// e.g. `-2/3*b21-2/3*b22+b23+b24`.
pub fn format_combination(coords: &[Scalar]) -> String {
    let mut out = String::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let magnitude = c.abs();
        if magnitude != int(1) {
            out.push_str(&magnitude.to_string());
            out.push('*');
        }
        out.push_str(&format!("b{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cartan_core::linalg::{frac, int_vector, unit_vector};
    use proptest::prelude::*;

    #[test]
    fn single_symbol() {
        assert_eq!(parse_seed("b1", 15).unwrap(), vec![unit_vector(15, 0)]);
    }

    #[test]
    fn combination_with_coefficient() {
        let mut expected = unit_vector(14, 0);
        expected[4] = int(5);
        assert_eq!(parse_seed("b1+5*b5", 14).unwrap(), vec![expected.clone()]);
        assert_eq!(parse_seed(" 5 b5 + b1 ", 14).unwrap(), vec![expected]);
    }

    #[test]
    fn split_g2_output_element() {
        let v = &parse_seed("2*b4-b10+3*b11", 14).unwrap()[0];
        assert_eq!(v, &int_vector(&[0, 0, 0, 2, 0, 0, 0, 0, 0, -1, 3, 0, 0, 0]));
    }

    #[test]
    fn fractions_and_leading_sign() {
        let v = &parse_seed("-2/3*b21 - 2/3*b22 + b23 + b24", 24).unwrap()[0];
        assert_eq!(v[20], frac(-2, 3));
        assert_eq!(v[21], frac(-2, 3));
        assert_eq!(v[22], int(1));
        assert_eq!(v[23], int(1));
    }

    #[test]
    fn several_seeds_and_blank() {
        assert_eq!(parse_seed("b1; b10", 15).unwrap().len(), 2);
        assert!(parse_seed("  ", 15).unwrap().is_empty());
    }

    #[test]
    fn repeated_symbols_add_up() {
        assert_eq!(parse_seed("b2+b2-3*b2", 3).unwrap()[0], int_vector(&[0, -1, 0]));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_seed("b16", 15), Err(SeedParseError::IndexOutOfRange { seed: 0, index: 16, dim: 15 }));
        assert!(matches!(parse_seed("b0", 15), Err(SeedParseError::IndexOutOfRange { .. })));
        assert_eq!(parse_seed("b1;;b2", 15), Err(SeedParseError::Empty { seed: 1 }));
        assert!(matches!(parse_seed("b1 b2", 15), Err(SeedParseError::Syntax { .. })));
        assert!(matches!(parse_seed("x1", 15), Err(SeedParseError::Syntax { .. })));
        assert!(matches!(parse_seed("1/0*b1", 15), Err(SeedParseError::Syntax { .. })));
        assert!(matches!(parse_seed("2*", 15), Err(SeedParseError::Syntax { .. })));
        assert!(matches!(parse_seed("b", 15), Err(SeedParseError::Syntax { .. })));
        assert!(matches!(parse_seed("b1+", 15), Err(SeedParseError::Syntax { .. })));
    }

    #[test]
    fn rendering() {
        let mut v = vec![int(0); 24];
        v[20] = frac(-2, 3);
        v[21] = frac(-2, 3);
        v[22] = int(1);
        v[23] = int(1);
        assert_eq!(format_combination(&v), "-2/3*b21-2/3*b22+b23+b24");
        assert_eq!(format_combination(&int_vector(&[0, 0, 0, 2, 0, 0, 0, 0, 0, -1, 3])), "2*b4-b10+3*b11");
        assert_eq!(format_combination(&int_vector(&[0, 0])), "0");
    }

    proptest! {
        #[test]
        fn rendered_expressions_parse_back(
            raw in prop::collection::vec((-7i64..=7, 1i64..=6), 1..12)
        ) {
            let coords: Vec<Scalar> = raw.iter().map(|&(n, d)| frac(n, d)).collect();
            prop_assume!(coords.iter().any(|c| !c.is_zero()));
            let text = format_combination(&coords);
            let parsed = parse_seed(&text, coords.len()).unwrap();
            prop_assert_eq!(parsed, vec![coords]);
        }
    }
}
