//! Additive characters `χ_j(a) = e(tr(j·a)/p)` and their exponential sums.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::linalg::Scalar;

use super::{Element, FiniteField, Poly};

/// `e(k/p) = exp(2πi k/p)`.
pub fn root_of_unity(p: u32, k: u32) -> Scalar {
    Scalar::from_polar(1.0, TAU * (k % p) as f64 / p as f64)
}

pub fn additive_character(field: &FiniteField, index: Element, a: Element) -> Scalar {
    root_of_unity(field.characteristic(), field.trace(field.mul(index, a)))
}

/// The character `χ_j` tabulated over the whole field.
///
/// Values are stored as trace residues `tr(j·a) ∈ [0, p)` so that sums can
/// be accumulated as exact integer counts per `p`-th root of unity.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    index: Element,
    residues: Vec<u32>,
    roots: Vec<Scalar>,
}

impl CharacterTable {
    pub fn new(field: &FiniteField, index: Element) -> CharacterTable {
        let p = field.characteristic();
        CharacterTable {
            index,
            residues: field.elements().map(|a| field.trace(field.mul(index, a))).collect(),
            roots: (0..p).map(|k| root_of_unity(p, k)).collect(),
        }
    }

    pub fn index(&self) -> Element {
        self.index
    }

    pub fn is_trivial(&self) -> bool {
        self.index.is_zero()
    }

    /// `tr(j·a)`.
    pub fn residue(&self, a: Element) -> u32 {
        self.residues[a.value() as usize]
    }

    pub fn eval(&self, a: Element) -> Scalar {
        self.roots[self.residue(a) as usize]
    }

    /// `Σ_k counts[k] · e(k/p)`.
    pub fn combine(&self, counts: &[u64]) -> Scalar {
        counts.iter().zip(&self.roots).map(|(&c, &w)| w * c as f64).sum()
    }
}

/// Exhaustive character sum `Σ_{a ∈ F_q} χ_j(f(a))`.
///
/// Requires a nontrivial character and `deg f = d ≥ 1` with `gcd(d, q) = 1`,
/// the hypotheses under which `|sum| ≤ (d − 1)√q`.
pub fn weil_sum(field: &FiniteField, f: &Poly, index: Element) -> Result<Scalar> {
    f.check_in(field)?;
    if index.is_zero() {
        return Err(Error::TrivialCharacter);
    }
    let order = field.order() as u64;
    let degree = f.degree().unwrap_or(0);
    if degree == 0 || degree as u64 % field.characteristic() as u64 == 0 {
        return Err(Error::DegreeConditionViolated { degree, order });
    }
    let table = CharacterTable::new(field, index);
    let mut counts = vec![0u64; field.characteristic() as usize];
    for a in field.elements() {
        counts[table.residue(f.eval(field, a)) as usize] += 1;
    }
    Ok(table.combine(&counts))
}

/// `(d − 1)√q`.
pub fn weil_bound(degree: usize, order: u32) -> f64 {
    degree.saturating_sub(1) as f64 * (order as f64).sqrt()
}
