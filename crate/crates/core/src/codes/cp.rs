//! Character-polynomial line codes in `G_{1,q−1}(ℂ)`.

use crate::error::{Error, Result};
use crate::field::{CharacterTable, Element, FiniteField};
use crate::linalg::{CMatrix, ScalarField};
use crate::subspace::Subspace;

use super::SubspaceCode;

/// Default limit on the number of codewords `cp_construct` will enumerate.
pub const DEFAULT_SIZE_CAP: u128 = 1_000_000;

#[derive(Debug, Clone)]
pub struct CpSpec {
    field: FiniteField,
    k: usize,
    character: Element,
}

impl CpSpec {
    /// Polynomials of degree at most `k` under the character `χ₁`.
    pub fn new(field: FiniteField, k: usize) -> Result<CpSpec> {
        if k == 0 || k as u64 >= field.order() as u64 {
            return Err(Error::InvalidArgument(format!(
                "polynomial degree must satisfy 1 <= k < q, got k = {k}, q = {}",
                field.order()
            )));
        }
        Ok(CpSpec { field, k, character: Element::ONE })
    }

    pub fn over_prime(p: u32, k: usize) -> Result<CpSpec> {
        CpSpec::new(FiniteField::new(p, 1)?, k)
    }

    pub fn with_character(mut self, index: Element) -> Result<CpSpec> {
        self.field.element(index.value())?;
        if index.is_zero() {
            return Err(Error::TrivialCharacter);
        }
        self.character = index;
        Ok(self)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn max_degree(&self) -> usize {
        self.k
    }

    pub fn character_index(&self) -> Element {
        self.character
    }

    /// `n = q − 1`.
    pub fn length(&self) -> usize {
        self.field.order() as usize - 1
    }

    /// Nonzero field elements in encoding order.
    pub fn evaluation_points(&self) -> Vec<Element> {
        self.field.nonzero_elements().collect()
    }

    /// Degrees `i ∈ [1, k]` not divisible by `p`, ascending.
    pub fn monomial_set(&self) -> Vec<usize> {
        let p = self.field.characteristic() as usize;
        (1..=self.k).filter(|i| i % p != 0).collect()
    }

    /// `q^{|S|}`, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        let q = self.field.order() as u128;
        u32::try_from(self.monomial_set().len())
            .ok()
            .and_then(|s| q.checked_pow(s))
            .unwrap_or(u128::MAX)
    }

    pub fn distance_bound(&self) -> f64 {
        cp_distance_bound(self.field.order() as u64, self.k)
    }

    /// The codeword of `f(x) = Σ coeffs[r]·x^{S[r]}` for the monomial set `S`.
    pub fn codeword(&self, coeffs: &[Element]) -> Result<Subspace> {
        let degrees = self.monomial_set();
        if coeffs.len() != degrees.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                degrees.len(),
                coeffs.len()
            )));
        }
        for c in coeffs {
            self.field.element(c.value()).map_err(|_| Error::ForeignElement)?;
        }
        let table = CharacterTable::new(&self.field, self.character);
        let powers = self.point_powers(&degrees);
        Ok(self.line(&table, &powers, coeffs))
    }

    /// Every codeword, indexed by the base-`q` encoding of its coefficients
    /// (lowest monomial degree least significant). Index 0 is the zero polynomial.
    pub fn construct(&self) -> Result<SubspaceCode> {
        self.construct_with_cap(DEFAULT_SIZE_CAP)
    }

    pub fn construct_with_cap(&self, cap: u128) -> Result<SubspaceCode> {
        let size = self.size();
        if size > cap {
            return Err(Error::SizeOverflow { size, cap });
        }
        let degrees = self.monomial_set();
        let table = CharacterTable::new(&self.field, self.character);
        let powers = self.point_powers(&degrees);
        let q = self.field.order();
        let mut coeffs = vec![Element::ZERO; degrees.len()];
        let mut codewords = Vec::with_capacity(size as usize);
        for index in 0..size as u64 {
            let mut rest = index;
            for c in coeffs.iter_mut() {
                *c = self.field.element((rest % q as u64) as u32)?;
                rest /= q as u64;
            }
            codewords.push(self.line(&table, &powers, &coeffs));
        }
        SubspaceCode::new(codewords)
    }

    /// `powers[i][r] = α_i^{S[r]}`.
    fn point_powers(&self, degrees: &[usize]) -> Vec<Vec<Element>> {
        self.field
            .nonzero_elements()
            .map(|a| degrees.iter().map(|&d| self.field.pow(a, d as u64)).collect())
            .collect()
    }

    fn line(&self, table: &CharacterTable, powers: &[Vec<Element>], coeffs: &[Element]) -> Subspace {
        let n = powers.len();
        let scale = 1.0 / (n as f64).sqrt();
        let row = CMatrix::from_fn(1, n, |_, i| {
            let value = powers[i]
                .iter()
                .zip(coeffs)
                .fold(Element::ZERO, |acc, (&x, &c)| self.field.add(acc, self.field.mul(c, x)));
            table.eval(value) * scale
        });
        Subspace::from_orthonormal(row, ScalarField::Complex).expect("character vectors have unit norm")
    }
}

/// `1 − ((k−1)√q + 1)²/n²` with `n = q − 1`. Negative values are returned as is.
pub fn cp_distance_bound(q: u64, k: usize) -> f64 {
    let n = (q - 1) as f64;
    let s = (k as f64 - 1.0) * (q as f64).sqrt() + 1.0;
    1.0 - s * s / (n * n)
}

/// `1 − qR²/(ln q)²`.
pub fn cp_simplified_bound(q: u64, rate: f64) -> f64 {
    let lq = (q as f64).ln();
    1.0 - q as f64 * rate * rate / (lq * lq)
}

/// Largest `k < q` whose distance bound reaches `delta`, or 0 if none does.
pub fn cp_max_k_for_delta(q: u64, delta: f64) -> usize {
    // The bound decreases in k, so the feasible degrees form a prefix.
    (1..q as usize).take_while(|&k| cp_distance_bound(q, k) >= delta).last().unwrap_or(0)
}
