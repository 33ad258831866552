//! Subspaces of `L^n` stored as orthonormal row bases, their orthogonal
//! projections, and the distances between them.
//!
//! The central quantity is the squared projection distance
//! `d(U, V) = ‖P_U − P_V‖² = tr((P_U − P_V)²)`, defined for subspaces of any
//! dimensions. On a Grassmannian it equals twice the squared chordal distance.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, Scalar, ScalarField};
use crate::{TOL_EQUAL, TOL_ORTH};

/// An `m`-dimensional subspace of an `n`-dimensional ambient space.
///
/// The basis is `m × n` with orthonormal rows. The zero subspace has an empty
/// `0 × n` basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    field: ScalarField,
    basis: CMatrix,
}

impl Subspace {
    /// Row space of `raw`, with the field inferred from the entries.
    pub fn row_space(raw: &CMatrix) -> Subspace {
        let field = if linalg::is_real(raw) { ScalarField::Real } else { ScalarField::Complex };
        Self::row_space_in(raw, field)
    }

    /// Row space of `raw` as a subspace of `field^n`. The dimension is the
    /// numerical rank of `raw`.
    pub fn row_space_in(raw: &CMatrix, field: ScalarField) -> Subspace {
        let mut basis = linalg::row_space_basis(raw);
        if field == ScalarField::Real {
            linalg::drop_imaginary(&mut basis);
        }
        Subspace { field, basis }
    }

    /// Wraps a basis that is already orthonormal, checking it entrywise.
    pub fn from_orthonormal(basis: CMatrix, field: ScalarField) -> Result<Subspace> {
        if field == ScalarField::Real && !linalg::is_real(&basis) {
            return Err(Error::Format("real subspace with nonzero imaginary parts".into()));
        }
        let gram = &basis * basis.adjoint();
        let err = linalg::max_abs_diff(&gram, &linalg::identity(basis.nrows()));
        if err > TOL_ORTH {
            return Err(Error::Format(format!("basis rows are not orthonormal (deviation {err:.3e})")));
        }
        Ok(Subspace { field, basis })
    }

    pub fn zero(n: usize, field: ScalarField) -> Subspace {
        Subspace { field, basis: linalg::zeros(0, n) }
    }

    pub fn full(n: usize, field: ScalarField) -> Subspace {
        Subspace { field, basis: linalg::identity(n) }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(n: usize, axes: &[usize], field: ScalarField) -> Subspace {
        let mut raw = linalg::zeros(axes.len(), n);
        for (row, &axis) in axes.iter().enumerate() {
            raw[(row, axis)] = Scalar::new(1.0, 0.0);
        }
        Self::row_space_in(&raw, field)
    }

    /// Row space of an `m × n` i.i.d. standard Gaussian matrix, which is
    /// uniformly distributed on the Grassmannian `G_{m,n}`.
    pub fn random<R: Rng + ?Sized>(n: usize, m: usize, field: ScalarField, rng: &mut R) -> Result<Subspace> {
        if m > n {
            return Err(Error::DimensionOverflow { needed: m, ambient: n });
        }
        let raw = linalg::gaussian(m, n, field, rng);
        Ok(Self::row_space_in(&raw, field))
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn basis(&self) -> &CMatrix {
        &self.basis
    }

    pub fn projection(&self) -> Projection {
        Projection { matrix: self.basis.adjoint() * &self.basis, dim: self.dim() }
    }

    /// Orthogonal complement `U⊥`, of dimension `n − dim U`.
    pub fn complement(&self) -> Subspace {
        let n = self.ambient_dim();
        let residual = linalg::identity(n) - self.projection().matrix;
        // I − P_U has singular values 1 (multiplicity n − dim U) and 0, so the
        // leading directions are the complement even when U fills the space.
        let mut basis = linalg::dominant_row_space(&residual, n - self.dim());
        if self.field == ScalarField::Real {
            linalg::drop_imaginary(&mut basis);
        }
        Subspace { field: self.field, basis }
    }

    /// `U + V`: the row space of the stacked bases.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient_dim();
        let mut stacked = linalg::zeros(self.dim() + other.dim(), n);
        stacked.rows_mut(0, self.dim()).copy_from(&self.basis);
        stacked.rows_mut(self.dim(), other.dim()).copy_from(&other.basis);
        Ok(Self::row_space_in(&stacked, self.field.join(other.field)))
    }

    /// `U ⊕ V`, which requires `U ∩ V = {0}`.
    pub fn direct_sum(&self, other: &Subspace) -> Result<Subspace> {
        let sum = self.sum(other)?;
        let expected = self.dim() + other.dim();
        if sum.dim() < expected {
            return Err(Error::NontrivialIntersection { sum: sum.dim(), expected });
        }
        Ok(sum)
    }

    /// Image under a change of basis: the row space of `basis · Q`.
    pub fn transform(&self, q: &CMatrix) -> Result<Subspace> {
        if q.nrows() != self.ambient_dim() || q.ncols() != self.ambient_dim() {
            return Err(Error::AmbientMismatch(self.ambient_dim(), q.nrows()));
        }
        let field = if linalg::is_real(q) { self.field } else { ScalarField::Complex };
        Ok(Self::row_space_in(&(&self.basis * q), field))
    }

    /// True when `other ⊆ self`, i.e. `P_U Tᴴ = Tᴴ` within `tol`.
    pub fn contains(&self, other: &Subspace, tol: f64) -> bool {
        if self.ambient_dim() != other.ambient_dim() {
            return false;
        }
        let t_h = other.basis.adjoint();
        let projected = self.projection().matrix * &t_h;
        linalg::max_abs_diff(&projected, &t_h) <= tol
    }

    /// Subspace equality up to `TOL_EQUAL` in projection distance.
    pub fn approx_eq(&self, other: &Subspace) -> bool {
        distance(self, other).map(|d| d < TOL_EQUAL).unwrap_or(false)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::AmbientMismatch(self.ambient_dim(), other.ambient_dim()));
        }
        Ok(())
    }
}

/// Orthogonal projection `P = Zᴴ Z` onto a subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Projection {
    matrix: CMatrix,
    dim: usize,
}

impl Projection {
    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Dimension of the projected subspace, equal to `tr(P)`.
    pub fn rank(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `‖P − Q‖²`.
    pub fn distance(&self, other: &Projection) -> Result<f64> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::AmbientMismatch(self.ambient_dim(), other.ambient_dim()));
        }
        Ok(self.matrix.iter().zip(other.matrix.iter()).map(|(a, b)| (a - b).norm_sqr()).sum())
    }
}

/// Squared projection distance `‖P_U − P_V‖²`.
pub fn distance(u: &Subspace, v: &Subspace) -> Result<f64> {
    u.check_ambient(v)?;
    u.projection().distance(&v.projection())
}

/// The same distance for equal-dimension subspaces, evaluated through the
/// cross-Gram matrix as `2(m − ‖Z Tᴴ‖²)`.
pub fn distance_via_gram(u: &Subspace, v: &Subspace) -> Result<f64> {
    u.check_ambient(v)?;
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    let cross = u.basis() * v.basis().adjoint();
    Ok((2.0 * (u.dim() as f64 - linalg::frobenius_sq(&cross))).max(0.0))
}

/// Generalized chordal distance `‖P_U − P_V‖ / √2`.
pub fn chordal_distance(u: &Subspace, v: &Subspace) -> Result<f64> {
    Ok((distance(u, v)? / 2.0).sqrt())
}

/// Principal angles `θᵢ = arccos σᵢ(Z Tᴴ)` in nondecreasing order, each in
/// `[0, π/2]`.
pub fn principal_angles(u: &Subspace, v: &Subspace) -> Result<Vec<f64>> {
    u.check_ambient(v)?;
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    if u.dim() == 0 {
        return Err(Error::InvalidArgument("principal angles need dim >= 1".into()));
    }
    let cross = u.basis() * v.basis().adjoint();
    Ok(linalg::singular_values(&cross).into_iter().map(|s| s.clamp(0.0, 1.0).acos()).collect())
}
