use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Scalar, ScalarField};
use crate::subspace::Subspace;

use super::SubspaceCode;

/// Maps each binary word `b` to the real line spanned by `((−1)^{b_1}, …, (−1)^{b_n})/√n`.
///
/// A word and its complement give the same line, so only the first of each
/// complementary pair is kept. Order of first appearance is preserved.
pub fn binary_to_lines(words: &[Vec<u8>], n: usize) -> Result<SubspaceCode> {
    if n == 0 {
        return Err(Error::InvalidArgument("word length must be positive".into()));
    }
    let mut seen = HashSet::new();
    let mut lines = Vec::new();
    for (index, word) in words.iter().enumerate() {
        if word.len() != n {
            return Err(Error::LengthMismatch { index, found: word.len(), expected: n });
        }
        if let Some(bad) = word.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidArgument(format!("word {index} contains the symbol {bad}")));
        }
        let canonical: Vec<u8> = word.iter().map(|&b| b ^ word[0]).collect();
        if !seen.insert(canonical) {
            continue;
        }
        let scale = 1.0 / (n as f64).sqrt();
        let row = CMatrix::from_fn(1, n, |_, j| Scalar::new(if word[j] == 0 { scale } else { -scale }, 0.0));
        lines.push(Subspace::from_orthonormal(row, ScalarField::Real)?);
    }
    SubspaceCode::new(lines)
}
