use crate::error::{Error, Result};

use super::{Element, FiniteField};

/// A polynomial over `GF(q)`, coefficients indexed by monomial degree.
/// Trailing zero coefficients are stripped, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Element>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Element>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    /// `c · x^degree`.
    pub fn monomial(c: Element, degree: usize) -> Poly {
        let mut coeffs = vec![Element::ZERO; degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    /// Builds a polynomial from encoded coefficient values, checking them against the field.
    pub fn from_values(field: &FiniteField, values: &[u32]) -> Result<Poly> {
        let coeffs = values.iter().map(|&v| field.element(v)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation at `a`.
    pub fn eval(&self, field: &FiniteField, a: Element) -> Element {
        self.coeffs.iter().rev().fold(Element::ZERO, |acc, &c| field.add(field.mul(acc, a), c))
    }

    pub fn sub(&self, field: &FiniteField, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).copied().unwrap_or(Element::ZERO);
        Poly::new((0..len).map(|i| field.sub(get(self, i), get(other, i))).collect())
    }

    pub fn scale(&self, field: &FiniteField, c: Element) -> Poly {
        Poly::new(self.coeffs.iter().map(|&x| field.mul(c, x)).collect())
    }

    pub(crate) fn check_in(&self, field: &FiniteField) -> Result<()> {
        if self.coeffs.iter().any(|c| c.value() >= field.order()) {
            return Err(Error::ForeignElement);
        }
        Ok(())
    }
}

// Polynomials over the prime field GF(p), used to pick the field modulus.
// Coefficients are plain residues, lowest degree first.

fn rem_mod_p(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let p64 = p as u64;
    let mut r: Vec<u64> = num.iter().map(|&c| c as u64).collect();
    let dd = den.len() - 1;
    let lead_inv = inverse_mod(den[dd] as u64, p64);
    while r.len() > dd {
        let top = *r.last().unwrap();
        if top != 0 {
            let factor = top * lead_inv % p64;
            let shift = r.len() - 1 - dd;
            for (k, &c) in den.iter().enumerate() {
                r[shift + k] = (r[shift + k] + (p64 - factor) * c as u64 % p64) % p64;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p−2) inverts a.
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Monic polynomial of degree `deg` whose lower coefficients encode `index` in base `p`.
fn monic_from_index(mut index: u64, deg: usize, p: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(deg + 1);
    for _ in 0..deg {
        out.push((index % p as u64) as u32);
        index /= p as u64;
    }
    out.push(1);
    out
}

/// Irreducibility by exhaustive trial division with every monic polynomial
/// of degree `1..=deg/2`.
pub(crate) fn is_irreducible_mod_p(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            if rem_mod_p(f, &monic_from_index(idx, d, p), p).is_empty() {
                return false;
            }
        }
    }
    true
}

pub(crate) fn lowest_irreducible(p: u32, m: usize) -> Vec<u32> {
    let count = (p as u64).pow(m as u32);
    (0..count)
        .map(|idx| monic_from_index(idx, m, p))
        .find(|f| is_irreducible_mod_p(f, p))
        .expect("irreducible polynomials exist in every degree")
}
