//! Analog subspace codes and their parameters.

mod binary;
mod cp;
mod ensemble;
mod io;

pub use binary::binary_to_lines;
pub use cp::{cp_distance_bound, cp_max_k_for_delta, cp_simplified_bound, CpSpec, DEFAULT_SIZE_CAP};
pub use ensemble::{ensemble_success_frequency, random_ensemble_code, EnsembleReport};
pub use io::CodeFile;

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Scalar, ScalarField};
use crate::subspace::{Projection, Subspace};
use crate::TOL_EQUAL;

/// Largest code searched pair-by-pair for its minimum distance.
pub const DEFAULT_PAIR_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinDistance {
    pub value: f64,
    /// Lowest-index pair attaining the minimum.
    pub pair: (usize, usize),
}

/// A finite set of distinct subspaces of a common ambient space.
#[derive(Debug, Clone)]
pub struct SubspaceCode {
    ambient_dim: usize,
    field: ScalarField,
    codewords: Vec<Subspace>,
    projections: OnceLock<Vec<Projection>>,
    min_distance: OnceLock<MinDistance>,
}

/// `[n, l, M, d_min]` together with the normalized quantities
/// `λ = l/n`, `R = ln(M)/n` and `δ = d_min/(2l)`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CodeParameters {
    pub n: usize,
    pub l: usize,
    pub size: usize,
    pub d_min: f64,
    pub lambda: f64,
    pub rate: f64,
    pub delta: f64,
}

impl SubspaceCode {
    pub fn new(codewords: Vec<Subspace>) -> Result<SubspaceCode> {
        let first = codewords.first().ok_or(Error::EmptyCode)?;
        let ambient_dim = first.ambient_dim();
        let mut field = first.field();
        for c in &codewords {
            if c.ambient_dim() != ambient_dim {
                return Err(Error::AmbientMismatch(ambient_dim, c.ambient_dim()));
            }
            field = field.join(c.field());
        }
        Ok(SubspaceCode {
            ambient_dim,
            field,
            codewords,
            projections: OnceLock::new(),
            min_distance: OnceLock::new(),
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn codewords(&self) -> &[Subspace] {
        &self.codewords
    }

    pub fn codeword(&self, index: usize) -> &Subspace {
        &self.codewords[index]
    }

    /// `l(C)`, the largest codeword dimension.
    pub fn max_dim(&self) -> usize {
        self.codewords.iter().map(Subspace::dim).max().unwrap_or(0)
    }

    pub fn is_constant_dimension(&self) -> bool {
        self.codewords.iter().all(|c| c.dim() == self.codewords[0].dim())
    }

    /// Projection matrices of all codewords, computed once.
    pub fn projections(&self) -> &[Projection] {
        self.projections.get_or_init(|| self.codewords.par_iter().map(Subspace::projection).collect())
    }

    pub fn cached_min_distance(&self) -> Option<MinDistance> {
        self.min_distance.get().copied()
    }

    /// Exact minimum distance over all unordered pairs, with the default cap.
    pub fn min_distance(&self) -> Result<MinDistance> {
        self.min_distance_exhaustive(DEFAULT_PAIR_CAP)
    }

    /// Exact minimum of `d(Cᵢ, Cⱼ)` over all `i < j`. Fails on codes larger
    /// than `cap` and on codes whose closest pair is numerically equal.
    pub fn min_distance_exhaustive(&self, cap: usize) -> Result<MinDistance> {
        if let Some(found) = self.min_distance.get() {
            return Ok(*found);
        }
        let size = self.len();
        if size > cap {
            return Err(Error::CapExceeded { size, cap });
        }
        if size < 2 {
            return Err(Error::TooFewCodewords);
        }
        let proj = self.projections();
        let best = (0..size - 1)
            .into_par_iter()
            .map(|i| {
                let mut row_best = MinDistance { value: f64::INFINITY, pair: (i, i + 1) };
                for j in i + 1..size {
                    let d = proj[i].distance(&proj[j]).expect("codewords share the ambient space");
                    if d < row_best.value {
                        row_best = MinDistance { value: d, pair: (i, j) };
                    }
                }
                row_best
            })
            .reduce_with(|a, b| {
                // Exact comparison with lowest-pair tie-break keeps the result
                // independent of how rayon splits the work.
                match a.value.total_cmp(&b.value) {
                    std::cmp::Ordering::Less => a,
                    std::cmp::Ordering::Greater => b,
                    std::cmp::Ordering::Equal => {
                        if a.pair <= b.pair {
                            a
                        } else {
                            b
                        }
                    }
                }
            })
            .expect("at least one pair");
        if best.value < TOL_EQUAL {
            return Err(Error::DuplicateCodewords(best.pair.0, best.pair.1));
        }
        Ok(*self.min_distance.get_or_init(|| best))
    }

    pub fn parameters(&self) -> Result<CodeParameters> {
        self.parameters_with_cap(DEFAULT_PAIR_CAP)
    }

    pub fn parameters_with_cap(&self, cap: usize) -> Result<CodeParameters> {
        let d_min = self.min_distance_exhaustive(cap)?.value;
        let (n, l, size) = (self.ambient_dim, self.max_dim(), self.len());
        Ok(CodeParameters {
            n,
            l,
            size,
            d_min,
            lambda: l as f64 / n as f64,
            rate: (size as f64).ln() / n as f64,
            delta: if l == 0 { 0.0 } else { d_min / (2.0 * l as f64) },
        })
    }

    /// `C⊥ = {U⊥ : U ∈ C}`. The minimum distance carries over unchanged.
    pub fn dual(&self) -> SubspaceCode {
        let duals = self.codewords.par_iter().map(Subspace::complement).collect();
        let dual = SubspaceCode::new(duals).expect("dual of a nonempty code is nonempty");
        if let Some(d) = self.min_distance.get() {
            let _ = dual.min_distance.set(*d);
        }
        dual
    }

    /// Maps a constant-dimension code in `G_{m,n}(ℂ)` to `G_{2m,2n}(ℝ)` by
    /// replacing each basis `Z = X + iY` with `[[X, Y], [−Y, X]]`.
    /// Distances double while `M` and the normalized distance are preserved.
    pub fn complex_to_real_double(&self) -> Result<SubspaceCode> {
        if !self.is_constant_dimension() {
            return Err(Error::NotConstantDimension);
        }
        let doubled = self
            .codewords
            .iter()
            .map(|c| Subspace::from_orthonormal(realify(c.basis()), ScalarField::Real))
            .collect::<Result<Vec<_>>>()?;
        SubspaceCode::new(doubled)
    }
}

fn realify(z: &CMatrix) -> CMatrix {
    let (m, n) = z.shape();
    CMatrix::from_fn(2 * m, 2 * n, |i, j| {
        let (bi, bj) = (i / m, j / n);
        let e = z[(i % m, j % n)];
        let v = match (bi, bj) {
            (0, 0) | (1, 1) => e.re,
            (0, 1) => e.im,
            _ => -e.im,
        };
        Scalar::new(v, 0.0)
    })
}
