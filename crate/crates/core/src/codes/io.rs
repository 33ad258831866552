use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Scalar, ScalarField};
use crate::subspace::Subspace;

use super::SubspaceCode;

/// On-disk form of a code: each codeword is its orthonormal basis flattened
/// row-major into `[re, im]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeFile {
    pub beta: u8,
    pub n: usize,
    pub codewords: Vec<Vec<[f64; 2]>>,
}

impl CodeFile {
    pub fn from_code(code: &SubspaceCode) -> CodeFile {
        CodeFile {
            beta: code.field().beta(),
            n: code.ambient_dim(),
            codewords: code.codewords().iter().map(|c| c.basis().transpose().iter().map(|z| [z.re, z.im]).collect()).collect(),
        }
    }

    /// Rebuilds the code, re-checking orthonormality of every basis.
    pub fn to_code(&self) -> Result<SubspaceCode> {
        let field = ScalarField::from_beta(self.beta)
            .ok_or_else(|| Error::Format(format!("beta must be 1 or 2, got {}", self.beta)))?;
        if self.n == 0 {
            return Err(Error::Format("ambient dimension must be positive".into()));
        }
        let codewords = self
            .codewords
            .iter()
            .enumerate()
            .map(|(i, flat)| {
                if flat.len() % self.n != 0 {
                    return Err(Error::Format(format!("codeword {i} has {} entries, not a multiple of n = {}", flat.len(), self.n)));
                }
                if field == ScalarField::Real && flat.iter().any(|e| e[1] != 0.0) {
                    return Err(Error::Format(format!("codeword {i} has imaginary entries in a real code")));
                }
                let rows = flat.len() / self.n;
                let basis = CMatrix::from_fn(rows, self.n, |r, c| {
                    let [re, im] = flat[r * self.n + c];
                    Scalar::new(re, im)
                });
                Subspace::from_orthonormal(basis, field)
            })
            .collect::<Result<Vec<_>>>()?;
        SubspaceCode::new(codewords)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<CodeFile> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

impl SubspaceCode {
    pub fn to_json(&self) -> String {
        CodeFile::from_code(self).to_json()
    }

    pub fn from_json(text: &str) -> Result<SubspaceCode> {
        CodeFile::from_json(text)?.to_code()
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_json())
    }

    pub fn load(path: &Path) -> Result<SubspaceCode> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
        SubspaceCode::from_json(&text)
    }
}
