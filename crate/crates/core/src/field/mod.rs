//! Arithmetic in `GF(p^m)` for field orders up to `2^16`.
//!
//! Elements are stored by their integer encoding: the coefficient vector
//! `(c₀, …, c_{m−1})` of `c₀ + c₁x + … + c_{m−1}x^{m−1}` in the polynomial basis
//! is read as the base-`p` number `Σ cᵢ pⁱ`. The modulus is the first monic
//! irreducible polynomial of degree `m` in that same encoding order of its
//! lower coefficients, so fields are identical across runs.
//!
//! Fields with `q ≤ 2^12` precompute log/antilog tables against a primitive
//! element; larger fields multiply by schoolbook polynomial arithmetic.

mod character;
mod poly;
mod prime;

pub use character::{additive_character, root_of_unity, weil_bound, weil_sum, CharacterTable};
pub use poly::Poly;
pub use prime::{is_prime, largest_prime_below, prime_power};

use crate::error::{Error, Result};

pub const MAX_ORDER: u64 = 1 << 16;
const TABLE_ORDER_LIMIT: u32 = 1 << 12;

/// An element of some `GF(q)`, identified by its integer encoding in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Element(u32);

impl Element {
    pub const ZERO: Element = Element(0);
    pub const ONE: Element = Element(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone)]
struct LogTables {
    /// `exp[i] = g^i` for `i ∈ [0, 2(q−1))`, doubled so sums of logs need no reduction.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, lowest degree first, length `m + 1`.
    modulus: Vec<u32>,
    /// `p^i` for `i ∈ [0, m]`.
    powers: Vec<u32>,
    /// Absolute traces of the basis monomials `1, x, …, x^{m−1}`.
    basis_traces: Vec<u32>,
    tables: Option<LogTables>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    /// `GF(p^m)` with the deterministic modulus choice described above.
    pub fn new(p: u32, m: u32) -> Result<FiniteField> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER).ok_or(Error::FieldTooLarge(
            (p as u64).saturating_pow(m),
        ))?;
        let modulus = poly::lowest_irreducible(p, m as usize);
        let powers = (0..=m).map(|i| p.pow(i)).collect();
        let mut field = FiniteField {
            p,
            m,
            q: q as u32,
            modulus,
            powers,
            basis_traces: Vec::new(),
            tables: None,
        };
        if field.q <= TABLE_ORDER_LIMIT {
            field.tables = Some(field.build_tables());
        }
        field.basis_traces = (0..m).map(|i| field.trace_by_frobenius(Element(p.pow(i)))).collect();
        Ok(field)
    }

    /// The field of the given prime-power order.
    pub fn with_order(q: u64) -> Result<FiniteField> {
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let (p, m) = prime_power(q).ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        Self::new(p as u32, m)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients of the monic modulus, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn element(&self, value: u32) -> Result<Element> {
        if value >= self.q {
            return Err(Error::InvalidArgument(format!("{value} is not an element of GF({})", self.q)));
        }
        Ok(Element(value))
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Element> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidArgument(format!("invalid coefficient vector {coeffs:?}")));
        }
        Ok(Element(coeffs.iter().zip(&self.powers).map(|(c, w)| c * w).sum()))
    }

    pub fn coeffs(&self, a: Element) -> Vec<u32> {
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    /// Every element in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.q).map(Element)
    }

    /// The nonzero elements in encoding order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Element> {
        (1..self.q).map(Element)
    }

    /// Embeds an integer residue into the prime subfield.
    pub fn from_int(&self, value: i64) -> Element {
        Element(value.rem_euclid(self.p as i64) as u32)
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        if self.m == 1 {
            return Element((a.0 + b.0) % self.p);
        }
        if self.p == 2 {
            return Element(a.0 ^ b.0);
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: Element) -> Element {
        if self.p == 2 {
            return a;
        }
        self.digitwise(a, Element(0), |x, _| (self.p - x) % self.p)
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        if a.0 == 0 || b.0 == 0 {
            return Element(0);
        }
        if let Some(t) = &self.tables {
            return Element(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]);
        }
        self.mul_schoolbook(a, b)
    }

    pub fn inv(&self, a: Element) -> Result<Element> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.tables {
            let order = self.q - 1;
            return Ok(Element(t.exp[((order - t.log[a.0 as usize]) % order) as usize]));
        }
        Ok(self.pow(a, (self.q - 2) as u64))
    }

    pub fn div(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Element, mut e: u64) -> Element {
        let mut base = a;
        let mut acc = Element::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Absolute trace `a + a^p + … + a^{p^{m−1}}` as a residue in `[0, p)`.
    pub fn trace(&self, a: Element) -> u32 {
        if self.m == 1 {
            return a.0;
        }
        let mut v = a.0;
        let mut acc = 0u64;
        for &t in &self.basis_traces {
            acc += (v % self.p) as u64 * t as u64;
            v /= self.p;
        }
        (acc % self.p as u64) as u32
    }

    fn trace_by_frobenius(&self, a: Element) -> u32 {
        let mut acc = Element::ZERO;
        let mut conj = a;
        for _ in 0..self.m {
            acc = self.add(acc, conj);
            conj = self.pow(conj, self.p as u64);
        }
        debug_assert!(acc.0 < self.p, "trace must land in the prime subfield");
        acc.0
    }

    fn digitwise(&self, a: Element, b: Element, op: impl Fn(u32, u32) -> u32) -> Element {
        let (mut x, mut y, mut out) = (a.0, b.0, 0);
        for w in &self.powers[..self.m as usize] {
            out += op(x % self.p, y % self.p) * w;
            x /= self.p;
            y /= self.p;
        }
        Element(out)
    }

    fn mul_schoolbook(&self, a: Element, b: Element) -> Element {
        let m = self.m as usize;
        let p = self.p as u64;
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce with the monic modulus from the top degree down.
        for deg in (m..prod.len()).rev() {
            let lead = prod[deg];
            if lead == 0 {
                continue;
            }
            for (k, &c) in self.modulus[..m].iter().enumerate() {
                let idx = deg - m + k;
                prod[idx] = (prod[idx] + (p - lead) * c as u64) % p;
            }
            prod[deg] = 0;
        }
        Element(prod[..m].iter().zip(&self.powers).map(|(&c, &w)| c as u32 * w).sum())
    }

    fn build_tables(&self) -> LogTables {
        let order = self.q - 1;
        let factors = prime::distinct_prime_factors(order as u64);
        let generator = (1..self.q)
            .map(Element)
            .find(|&g| {
                order == 1 || factors.iter().all(|&r| self.pow_schoolbook(g, order as u64 / r) != Element::ONE)
            })
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut cur = Element::ONE;
        for i in 0..order {
            exp.push(cur.0);
            log[cur.0 as usize] = i;
            cur = self.mul_schoolbook(cur, generator);
        }
        exp.extend_from_within(..);
        LogTables { exp, log }
    }

    fn pow_schoolbook(&self, a: Element, mut e: u64) -> Element {
        let mut base = a;
        let mut acc = Element::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_schoolbook(acc, base);
            }
            base = self.mul_schoolbook(base, base);
            e >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FiniteField::new(4, 1), Err(Error::NotPrime(4)));
        assert!(matches!(FiniteField::new(2, 17), Err(Error::FieldTooLarge(_))));
        assert!(FiniteField::new(3, 0).is_err());
        assert!(FiniteField::with_order(12).is_err());
    }

    #[test]
    fn moduli_are_deterministic() {
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FiniteField::new(5, 1).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn gf4_products_by_long_division() {
        // x·x = x² ≡ x + 1 (mod x² + x + 1)
        let f = FiniteField::new(2, 2).unwrap();
        let x = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.coeffs(f.mul(x, x)), vec![1, 1]);
        assert_eq!(f.trace(x), 1);
    }

    #[test]
    fn identities_hold_in_every_small_field() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49] {
            let f = FiniteField::with_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, Element::ZERO), a);
                assert_eq!(f.add(a, f.neg(a)), Element::ZERO);
                assert_eq!(f.mul(a, Element::ONE), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Element::ONE);
                    assert_eq!(f.pow(a, q - 1), Element::ONE);
                }
                assert_eq!(f.trace(a), f.trace_by_frobenius(a));
            }
            assert_eq!(f.inv(Element::ZERO), Err(Error::DivisionByZero));
            assert_eq!(f.trace(Element::ZERO), 0);
        }
    }

    #[test]
    fn table_and_schoolbook_multiplication_agree() {
        for q in [8u64, 81, 125, 1024] {
            let f = FiniteField::with_order(q).unwrap();
            assert!(f.tables.is_some());
            for a in f.elements().step_by(3) {
                for b in f.elements().step_by(5) {
                    assert_eq!(f.mul(a, b), f.mul_schoolbook(a, b));
                }
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = FiniteField::new(2, 16).unwrap();
        assert!(f.tables.is_none());
        let a = f.element(0xBEEF).unwrap();
        assert_eq!(f.mul(a, f.inv(a).unwrap()), Element::ONE);
        assert_eq!(f.trace(a), f.trace_by_frobenius(a));
        // Frobenius is additive.
        let b = f.element(0x1234).unwrap();
        assert_eq!(f.pow(f.add(a, b), 2), f.add(f.pow(a, 2), f.pow(b, 2)));
    }

    #[test]
    fn prime_field_trace_is_identity() {
        let f = FiniteField::new(7, 1).unwrap();
        for a in f.elements() {
            assert_eq!(f.trace(a), a.value());
        }
    }
}
