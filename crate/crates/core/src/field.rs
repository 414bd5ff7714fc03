//! Exact arithmetic in small finite fields `GF(p^n)`.
//!
//! Elements are stored as indices `sum c_i p^i` of their coefficient vectors
//! modulo a fixed monic irreducible polynomial, and all operations go
//! through precomputed tables. Fields are limited to [`MAX_FIELD_SIZE`]
//! elements.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};

pub const MAX_FIELD_SIZE: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `GF(p^degree)` as `GF(p)[x] / (modulus)`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldDescriptor {
    p: u64,
    degree: u32,
    /// Monic, low-to-high coefficients, length `degree + 1`.
    modulus: Vec<u64>,
    size: usize,
    add: Vec<FieldElement>,
    mul: Vec<FieldElement>,
    neg: Vec<FieldElement>,
    inv: Vec<FieldElement>,
}

impl fmt::Debug for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldDescriptor")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Remainder of `a` modulo the monic polynomial `b` over `GF(p)`.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn digits(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = n % p;
            n /= p;
            d
        })
        .collect()
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut divisor = digits(low, p, d);
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Builds `GF(p^degree)` with the smallest monic irreducible modulus,
/// ordering candidates by `sum c_i p^i` over their non-leading coefficients.
pub fn build_field(p: u64, degree: u32) -> Result<FieldDescriptor> {
    arith::require_prime(p)?;
    if degree == 0 {
        return Err(Error::domain("field degree must be at least 1"));
    }
    let size = p
        .checked_pow(degree)
        .filter(|&s| s <= MAX_FIELD_SIZE)
        .ok_or_else(|| {
            Error::Capacity(format!(
                "GF({p}^{degree}) exceeds the {MAX_FIELD_SIZE}-element field limit"
            ))
        })?;
    let modulus = (0..size)
        .map(|low| {
            let mut m = digits(low, p, degree as usize);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .ok_or_else(|| {
            Error::consistency(format!(
                "no irreducible polynomial of degree {degree} over GF({p})"
            ))
        })?;
    Ok(FieldDescriptor::with_modulus(p, degree, modulus))
}

impl FieldDescriptor {
    fn with_modulus(p: u64, degree: u32, modulus: Vec<u64>) -> Self {
        let size = p.pow(degree) as usize;
        let n = degree as usize;
        let coeffs: Vec<Vec<u64>> = (0..size as u64).map(|i| digits(i, p, n)).collect();
        let encode = |c: &[u64]| -> FieldElement {
            FieldElement(c.iter().rev().fold(0u64, |acc, &d| acc * p + d) as u8)
        };
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        for a in &coeffs {
            for b in &coeffs {
                let sum: Vec<u64> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
                add.push(encode(&sum));
                let mut prod = vec![0u64; 2 * n - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut rem = poly_rem(&prod, &modulus, p);
                rem.resize(n, 0);
                mul.push(encode(&rem));
            }
        }
        let mut neg = vec![FieldElement::ZERO; size];
        let mut inv = vec![FieldElement::ZERO; size];
        for a in 0..size {
            for b in 0..size {
                if add[a * size + b].is_zero() {
                    neg[a] = FieldElement(b as u8);
                }
                if mul[a * size + b] == FieldElement::ONE {
                    inv[a] = FieldElement(b as u8);
                }
            }
        }
        FieldDescriptor {
            p,
            degree,
            modulus,
            size,
            add,
            mul,
            neg,
            inv,
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn element(&self, index: usize) -> Result<FieldElement> {
        if index < self.size {
            Ok(FieldElement(index as u8))
        } else {
            Err(Error::domain(format!(
                "{index} is not an element index of GF({})",
                self.size
            )))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size).map(|i| FieldElement(i as u8))
    }

    /// Element with the given low-to-high polynomial coefficients.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        let mut padded: Vec<u64> = coeffs.iter().map(|c| c % self.p).collect();
        padded.resize(padded.len().max(self.degree as usize + 1), 0);
        let mut rem = poly_rem(&padded, &self.modulus, self.p);
        rem.resize(self.degree as usize, 0);
        FieldElement(rem.iter().rev().fold(0u64, |acc, &d| acc * self.p + d) as u8)
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u64> {
        digits(x.0 as u64, self.p, self.degree as usize)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add[a.index() * self.size + b.index()]
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul[a.index() * self.size + b.index()]
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.neg[a.index()]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (!a.is_zero()).then(|| self.inv[a.index()])
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `x -> x^(p^nu)`, the involution of `GF(p^(2 nu))` fixing `GF(p^nu)`.
    pub fn frobenius_conjugate(&self, x: FieldElement, nu: u32) -> Result<FieldElement> {
        if self.degree != 2 * nu {
            return Err(Error::domain(format!(
                "conjugation x^(p^{nu}) needs a field of degree {}, this one has degree {}",
                2 * nu,
                self.degree
            )));
        }
        Ok(self.pow(x, self.p.pow(nu)))
    }
}
