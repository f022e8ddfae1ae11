//! Exact arithmetic in GF(p^n).
//!
//! Elements are polynomials over Z_p reduced modulo a fixed monic irreducible
//! of degree n. Every element carries a canonical index in `0..q` obtained by
//! reading its coefficient vector (constant term first) as base-p digits, so
//! `index = c_0 + c_1 p + ... + c_{n-1} p^{n-1}`. All "smallest element"
//! tie-breaks in the crate use this index.
//!
//! Addition, multiplication, negation and inversion are tabulated when the
//! field is built; a [`FieldSpec`] is immutable afterwards.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest field order for which arithmetic tables are built.
pub const MAX_ORDER: usize = 1024;

/// Fields up to this order invert by exhaustive search, larger ones by the
/// extended Euclidean algorithm.
const SEARCH_INVERSE_LIMIT: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("field order {p}^{n} exceeds the supported maximum {max}")]
    TooLarge { p: u32, n: u32, max: usize },
    #[error("modulus {0:?} is not a monic polynomial of the requested degree")]
    NotMonic(Vec<u32>),
    #[error("modulus {0:?} is reducible over Z_p")]
    Reducible(Vec<u32>),
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("element index {index} out of range for a field of order {q}")]
    IndexOutOfRange { index: u64, q: usize },
    #[error("unsupported power-coset exponent {0} (expected 2 or 3)")]
    UnsupportedExponent(u32),
}

/// Serialized form of a field: `{"p": int, "n": int, "modulus": [int, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescription {
    pub p: u32,
    pub n: u32,
    pub modulus: Vec<u32>,
}

/// A finite field GF(p^n) with precomputed operation tables.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    n: u32,
    modulus: Vec<u32>,
    q: usize,
    key: u64,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Polynomials over Z_p, constant term first, no trailing zeros except for the
// zero polynomial which is the empty vector.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is prime and a != 0 mod p
    let mut r = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Remainder and quotient of `a` by `b` (b nonzero) over Z_p.
fn poly_divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod_p(*b.last().unwrap(), p) as u64;
    let mut quot = vec![0u32; r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = (*r.last().unwrap() as u64 * lead_inv % p as u64) as u32;
        quot[shift] = c;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = trim(r);
    }
    (trim(quot), r)
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p
/// digits of `k` with `c_0` as the most significant digit.
fn monic_from_rank(k: u64, deg: u32, p: u32) -> Vec<u32> {
    let mut coeffs = vec![0u32; deg as usize + 1];
    let mut rest = k;
    for i in (0..deg as usize).rev() {
        coeffs[i] = (rest % p as u64) as u32;
        rest /= p as u64;
    }
    coeffs[deg as usize] = 1;
    coeffs
}

/// Irreducibility by trial division against every monic polynomial of degree
/// `1..=deg/2`.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let poly = trim(poly.to_vec());
    if poly.len() < 2 {
        return false;
    }
    let deg = (poly.len() - 1) as u32;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d);
        for k in 0..count {
            let divisor = monic_from_rank(k, d, p);
            let (_, r) = poly_divrem(&poly, &divisor, p);
            if r.is_empty() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of degree `n` over Z_p,
/// comparing coefficient vectors constant term first.
pub fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    let count = (p as u64).pow(n);
    (0..count)
        .map(|k| monic_from_rank(k, n, p))
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree")
}

fn fnv_key(p: u32, modulus: &[u32]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for word in std::iter::once(p).chain(modulus.iter().copied()) {
        for byte in word.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    h
}

impl FieldSpec {
    /// Builds GF(p^n). Without an override the modulus is
    /// [`smallest_irreducible`]`(p, n)`.
    pub fn new(p: u32, n: u32, modulus_override: Option<Vec<u32>>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n < 1 {
            return Err(FieldError::InvalidDegree);
        }
        let q = (p as u64)
            .checked_pow(n)
            .filter(|&q| q <= MAX_ORDER as u64)
            .ok_or(FieldError::TooLarge {
                p,
                n,
                max: MAX_ORDER,
            })? as usize;

        let modulus = match modulus_override {
            Some(m) => {
                if m.len() != n as usize + 1 || m[n as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(FieldError::NotMonic(m));
                }
                if !is_irreducible(&m, p) {
                    return Err(FieldError::Reducible(m));
                }
                m
            }
            None => smallest_irreducible(p, n),
        };

        let mut spec = FieldSpec {
            p,
            n,
            key: fnv_key(p, &modulus),
            modulus,
            q,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
        };
        spec.build_tables();
        Ok(spec)
    }

    /// The prime field Z_p.
    pub fn prime(p: u32) -> Result<Self, FieldError> {
        Self::new(p, 1, None)
    }

    pub fn from_description(desc: &FieldDescription) -> Result<Self, FieldError> {
        Self::new(desc.p, desc.n, Some(desc.modulus.clone()))
    }

    pub fn description(&self) -> FieldDescription {
        FieldDescription {
            p: self.p,
            n: self.n,
            modulus: self.modulus.clone(),
        }
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let p = self.p;
        let coeffs: Vec<Vec<u32>> = (0..q).map(|i| self.coeffs_of(i)).collect();
        self.add = vec![0; q * q];
        self.mul = vec![0; q * q];
        for i in 0..q {
            for j in 0..q {
                let sum: Vec<u32> = coeffs[i]
                    .iter()
                    .zip(&coeffs[j])
                    .map(|(a, b)| (a + b) % p)
                    .collect();
                self.add[i * q + j] = self.index_of(&sum) as u16;
                if j < i {
                    self.mul[i * q + j] = self.mul[j * q + i];
                    continue;
                }
                let prod = poly_mul(&trim(coeffs[i].clone()), &trim(coeffs[j].clone()), p);
                let (_, r) = poly_divrem(&prod, &self.modulus, p);
                self.mul[i * q + j] = self.index_of(&r) as u16;
            }
        }
        self.neg = (0..q)
            .map(|i| {
                let c: Vec<u32> = coeffs[i].iter().map(|&a| (p - a) % p).collect();
                self.index_of(&c) as u16
            })
            .collect();
        self.inv = (0..q)
            .map(|i| {
                if i == 0 {
                    0
                } else if q <= SEARCH_INVERSE_LIMIT {
                    self.invert_by_search(i)
                } else {
                    self.invert_by_euclid(i)
                }
            })
            .collect();
    }

    /// Coefficient vector (length n, constant term first) of the element with
    /// the given index.
    fn coeffs_of(&self, index: usize) -> Vec<u32> {
        let mut rest = index;
        (0..self.n)
            .map(|_| {
                let c = (rest % self.p as usize) as u32;
                rest /= self.p as usize;
                c
            })
            .collect()
    }

    fn index_of(&self, coeffs: &[u32]) -> usize {
        coeffs
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    pub(crate) fn invert_by_search(&self, index: usize) -> u16 {
        (1..self.q)
            .find(|&j| self.mul[index * self.q + j] == 1)
            .expect("nonzero elements of a field are invertible") as u16
    }

    pub(crate) fn invert_by_euclid(&self, index: usize) -> u16 {
        let p = self.p;
        // Invariant: s_i * a = r_i mod modulus.
        let (mut r0, mut r1) = (self.modulus.clone(), trim(self.coeffs_of(index)));
        let (mut s0, mut s1): (Vec<u32>, Vec<u32>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (quot, rem) = poly_divrem(&r0, &r1, p);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1, p), p);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant since the modulus is irreducible
        let c = inv_mod_p(r0[0], p) as u64;
        let mut inv: Vec<u32> = s0
            .iter()
            .map(|&x| (x as u64 * c % p as u64) as u32)
            .collect();
        let (_, r) = poly_divrem(&inv, &self.modulus, p);
        inv = r;
        inv.resize(self.n as usize, 0);
        self.index_of(&inv) as u16
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement {
            field: self,
            index: 0,
        }
    }

    pub fn one(&self) -> FieldElement<'_> {
        FieldElement {
            field: self,
            index: 1,
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn int(&self, k: i64) -> FieldElement<'_> {
        let r = k.rem_euclid(self.p as i64) as u16;
        FieldElement {
            field: self,
            index: r,
        }
    }

    pub fn elem(&self, index: usize) -> Result<FieldElement<'_>, FieldError> {
        if index < self.q {
            Ok(FieldElement {
                field: self,
                index: index as u16,
            })
        } else {
            Err(FieldError::IndexOutOfRange {
                index: index as u64,
                q: self.q,
            })
        }
    }

    /// Element from a coefficient vector (constant term first); coefficients
    /// are reduced mod p and the vector may be shorter than n.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement<'_>, FieldError> {
        let mut c: Vec<u32> = coeffs.iter().map(|&x| x % self.p).collect();
        let (_, r) = poly_divrem(&c, &self.modulus, self.p);
        c = r;
        c.resize(self.n as usize, 0);
        self.elem(self.index_of(&c))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> + Clone + '_ {
        (0..self.q).map(move |i| FieldElement {
            field: self,
            index: i as u16,
        })
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement<'_>> + Clone + '_ {
        self.elements().skip(1)
    }

    pub(crate) fn add_idx(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }

    pub(crate) fn mul_idx(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub(crate) fn neg_idx(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    pub(crate) fn inv_idx(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    fn same(&self, other: &FieldSpec) -> bool {
        std::ptr::eq(self, other) || self.key == other.key && self == other
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: FieldElement<'_>) -> Result<usize, FieldError> {
        if !self.same(a.field) {
            return Err(FieldError::MixedFields);
        }
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let mut x = a;
        let mut k = 1;
        while !x.is_one() {
            x = x * a;
            k += 1;
        }
        Ok(k)
    }

    /// Smallest-index element of multiplicative order q - 1.
    pub fn generator(&self) -> FieldElement<'_> {
        self.nonzero()
            .find(|&a| self.order_of(a).ok() == Some(self.q - 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// Cosets of the k-th powers in F*, plus the zero class.
    pub fn power_cosets(&self, k: u32) -> Result<PowerCosets, FieldError> {
        if k != 2 && k != 3 {
            return Err(FieldError::UnsupportedExponent(k));
        }
        let s = self.generator();
        let count = gcd(k as usize, self.q - 1);
        let powers: Vec<FieldElement<'_>> = {
            let mut seen = vec![false; self.q];
            let mut out = Vec::new();
            for x in self.nonzero() {
                let y = x.pow(k as u64);
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    out.push(y);
                }
            }
            out.sort();
            out
        };
        let mut reps = vec![0u16];
        let mut class_of = vec![u16::MAX; self.q];
        class_of[0] = 0;
        let mut rep = self.one();
        for i in 0..count {
            reps.push(rep.index);
            for &h in &powers {
                class_of[(rep * h).index()] = (i + 1) as u16;
            }
            rep = rep * s;
        }
        debug_assert!(class_of.iter().all(|&c| c != u16::MAX));
        Ok(PowerCosets {
            k,
            reps,
            kth_powers: powers.iter().map(|x| x.index).collect(),
            class_of,
        })
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// F*/(F*)^k together with the zero class.
///
/// Class 0 is `{0}`; class `i + 1` is the coset `s^i (F*)^k` for the
/// generator `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerCosets {
    pub k: u32,
    /// Representative element index per class: `0, 1, s, s^2, ...`.
    pub reps: Vec<u16>,
    /// Sorted indices of the nonzero k-th powers.
    pub kth_powers: Vec<u16>,
    class_of: Vec<u16>,
}

impl PowerCosets {
    pub fn class_of(&self, a: FieldElement<'_>) -> usize {
        self.class_of[a.index()] as usize
    }

    pub fn nonzero_classes(&self) -> usize {
        self.reps.len() - 1
    }

    pub fn representative(&self, a: FieldElement<'_>) -> usize {
        self.reps[self.class_of(a)] as usize
    }
}

/// An element of a [`FieldSpec`].
///
/// The arithmetic operators panic on operands from different fields; the
/// `try_*` methods report [`FieldError::MixedFields`] instead.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f FieldSpec,
    index: u16,
}

impl<'f> FieldElement<'f> {
    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub(crate) fn raw(&self) -> u16 {
        self.index
    }

    pub(crate) fn from_raw(field: &'f FieldSpec, index: u16) -> Self {
        FieldElement { field, index }
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs_of(self.index as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }

    pub fn is_one(&self) -> bool {
        self.index == 1
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.field.same(other.field) {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    pub fn try_add(self, other: Self) -> Result<Self, FieldError> {
        self.check(&other)?;
        Ok(FieldElement {
            field: self.field,
            index: self.field.add_idx(self.index, other.index),
        })
    }

    pub fn try_sub(self, other: Self) -> Result<Self, FieldError> {
        self.check(&other)?;
        let neg = self.field.neg_idx(other.index);
        Ok(FieldElement {
            field: self.field,
            index: self.field.add_idx(self.index, neg),
        })
    }

    pub fn try_mul(self, other: Self) -> Result<Self, FieldError> {
        self.check(&other)?;
        Ok(FieldElement {
            field: self.field,
            index: self.field.mul_idx(self.index, other.index),
        })
    }

    pub fn try_div(self, other: Self) -> Result<Self, FieldError> {
        self.check(&other)?;
        Ok(self * other.inv()?)
    }

    pub fn inv(self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(FieldElement {
            field: self.field,
            index: self.field.inv_idx(self.index),
        })
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn square(self) -> Self {
        self * self
    }

    pub fn cube(self) -> Self {
        self * self * self
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.field.same(other.field)
    }
}

impl Eq for FieldElement<'_> {}

impl Hash for FieldElement<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.key.hash(state);
        self.index.hash(state);
    }
}

impl PartialOrd for FieldElement<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement<'_> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index.cmp(&other.index)
    }
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)
    }
}

impl fmt::Display for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)
    }
}

impl Serialize for FieldElement<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u16(self.index)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'f> $tr for FieldElement<'f> {
            type Output = FieldElement<'f>;

            fn $method(self, rhs: Self) -> Self::Output {
                self.$checked(rhs).expect("mixed-field operands")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<'f> Neg for FieldElement<'f> {
    type Output = FieldElement<'f>;

    fn neg(self) -> Self::Output {
        FieldElement {
            field: self.field,
            index: self.field.neg_idx(self.index),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_degree_one_modulus() {
        let f = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.q(), 2);
        assert_eq!(f.elements().count(), 2);
    }

    #[test]
    fn gf4_modulus_is_t2_t_1() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let t = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(t * t, f.from_coeffs(&[1, 1]).unwrap());
    }

    #[test]
    fn gf9_modulus_matches_exhaustive_root_scan() {
        // Oracle: a monic quadratic over F_3 is irreducible iff it has no root.
        let oracle = (0..9u32)
            .map(|k| (k / 3, k % 3)) // (c0, c1), c0 most significant
            .find(|&(c0, c1)| (0..3u32).all(|x| (x * x + c1 * x + c0) % 3 != 0))
            .unwrap();
        let f = FieldSpec::new(3, 2, None).unwrap();
        assert_eq!(f.modulus(), &[oracle.0, oracle.1, 1]);
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn small_prime_arithmetic() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(f2.one() + f2.one(), f2.zero());
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.int(3) * f5.int(4), f5.int(2));
        assert_eq!(f5.int(2).inv().unwrap(), f5.int(3));
        assert_eq!(-f5.int(2).inv().unwrap(), f5.int(2));
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.int(3).inv().unwrap(), f7.int(5));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FieldSpec::new(4, 1, None).unwrap_err(),
            FieldError::NotPrime(4)
        );
        assert_eq!(
            FieldSpec::new(3, 0, None).unwrap_err(),
            FieldError::InvalidDegree
        );
        assert_eq!(
            FieldSpec::new(2, 2, Some(vec![1, 0, 1])).unwrap_err(),
            FieldError::Reducible(vec![1, 0, 1])
        );
        assert!(matches!(
            FieldSpec::new(2, 2, Some(vec![1, 1, 0])),
            Err(FieldError::NotMonic(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 11, None),
            Err(FieldError::TooLarge { .. })
        ));
    }

    #[test]
    fn override_modulus_builds_isomorphic_copy() {
        let f = FieldSpec::new(3, 2, Some(vec![2, 1, 1])).unwrap();
        assert_eq!(f.modulus(), &[2, 1, 1]);
        assert_eq!(f.q(), 9);
        // t^2 = -t - 2 = 2t + 1
        let t = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(t * t, f.from_coeffs(&[1, 2]).unwrap());
    }

    #[test]
    fn zero_inverse_is_a_domain_error() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.zero().inv().unwrap_err(), FieldError::ZeroInverse);
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let f5 = FieldSpec::prime(5).unwrap();
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(
            f5.one().try_add(f7.one()).unwrap_err(),
            FieldError::MixedFields
        );
        assert_eq!(
            f5.one().try_mul(f7.one()).unwrap_err(),
            FieldError::MixedFields
        );
        // a second instance of the same field is compatible
        let g5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.int(2).try_add(g5.int(2)).unwrap(), f5.int(4));
    }

    #[test]
    fn generators() {
        assert_eq!(FieldSpec::prime(2).unwrap().generator().index(), 1);
        assert_eq!(FieldSpec::prime(5).unwrap().generator().index(), 2);
        assert_eq!(FieldSpec::prime(7).unwrap().generator().index(), 3);
    }

    #[test]
    fn power_coset_examples() {
        let f5 = FieldSpec::prime(5).unwrap();
        let sq = f5.power_cosets(2).unwrap();
        assert_eq!(sq.reps, vec![0, 1, 2]);
        assert_eq!(sq.kth_powers, vec![1, 4]);

        let f7 = FieldSpec::prime(7).unwrap();
        let cu = f7.power_cosets(3).unwrap();
        assert_eq!(cu.kth_powers, vec![1, 6]);
        assert_eq!(cu.reps, vec![0, 1, 3, 2]);

        let f8 = FieldSpec::new(2, 3, None).unwrap();
        assert_eq!(f8.power_cosets(3).unwrap().nonzero_classes(), 1);
        assert_eq!(
            f8.power_cosets(4).unwrap_err(),
            FieldError::UnsupportedExponent(4)
        );
    }

    #[test]
    fn inversion_routes_agree() {
        for (p, n) in [
            (2, 1),
            (2, 2),
            (2, 3),
            (3, 1),
            (3, 2),
            (5, 1),
            (7, 1),
            (5, 2),
            (3, 3),
            (2, 5),
        ] {
            let f = FieldSpec::new(p, n, None).unwrap();
            for i in 1..f.q() {
                assert_eq!(
                    f.invert_by_search(i),
                    f.invert_by_euclid(i),
                    "GF({p}^{n}) element {i}"
                );
            }
        }
    }

    #[test]
    fn description_round_trip() {
        let f = FieldSpec::new(3, 2, None).unwrap();
        let json = serde_json::to_string(&f.description()).unwrap();
        assert_eq!(json, r#"{"p":3,"n":2,"modulus":[1,0,1]}"#);
        let back: FieldDescription = serde_json::from_str(&json).unwrap();
        assert_eq!(FieldSpec::from_description(&back).unwrap(), f);
    }
}
