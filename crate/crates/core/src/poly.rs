//! Dense univariate polynomials over a finite field.

use std::fmt;

use crate::field::{FieldElement, FieldSpec};

/// Coefficients are stored constant term first with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<'f> {
    field: &'f FieldSpec,
    coeffs: Vec<FieldElement<'f>>,
}

impl<'f> Poly<'f> {
    pub fn new(field: &'f FieldSpec, coeffs: Vec<FieldElement<'f>>) -> Self {
        let mut p = Poly { field, coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from coefficients, constant term first.
    pub fn from_coeffs(field: &'f FieldSpec, coeffs: &[FieldElement<'f>]) -> Self {
        Self::new(field, coeffs.to_vec())
    }

    pub fn zero(field: &'f FieldSpec) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FieldElement<'f>) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// The monomial `c·tᵏ`.
    pub fn monomial(c: FieldElement<'f>, k: usize) -> Self {
        let mut coeffs = vec![c.field().zero(); k + 1];
        coeffs[k] = c;
        Self::new(c.field(), coeffs)
    }

    /// The indeterminate `t`.
    pub fn t(field: &'f FieldSpec) -> Self {
        Self::monomial(field.one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> FieldElement<'f> {
        self.coeffs
            .get(k)
            .copied()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[FieldElement<'f>] {
        &self.coeffs
    }

    pub fn eval(&self, x: FieldElement<'f>) -> FieldElement<'f> {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    pub fn add(&self, other: &Poly<'f>) -> Poly<'f> {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.field,
            (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        )
    }

    pub fn sub(&self, other: &Poly<'f>) -> Poly<'f> {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.field,
            (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect(),
        )
    }

    pub fn scale(&self, c: FieldElement<'f>) -> Poly<'f> {
        Self::new(self.field, self.coeffs.iter().map(|&x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly<'f>) -> Poly<'f> {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Self::new(self.field, out)
    }

    pub fn pow(&self, k: u32) -> Poly<'f> {
        (0..k).fold(Self::constant(self.field.one()), |acc, _| acc.mul(self))
    }

    pub fn roots(&self) -> Vec<FieldElement<'f>> {
        self.field
            .elements()
            .filter(|&x| self.eval(x).is_zero())
            .collect()
    }
}

impl fmt::Debug for Poly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}t"),
                _ => format!("{c}t^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        let f = FieldSpec::prime(7).unwrap();
        let t = Poly::t(&f);
        let one = Poly::constant(f.one());
        // (t + 1)(t − 1) = t² − 1
        let lhs = t.add(&one).mul(&t.sub(&one));
        let rhs = t.pow(2).sub(&one);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.degree(), Some(2));
        assert_eq!(lhs.eval(f.int(3)), f.int(8));
        assert!(t.sub(&t).is_zero());
    }

    #[test]
    fn roots_of_t2_t_1_mod_7() {
        let f = FieldSpec::prime(7).unwrap();
        let p = Poly::from_coeffs(&f, &[f.one(), f.one(), f.one()]);
        assert_eq!(p.roots(), vec![f.int(2), f.int(4)]);
    }

    #[test]
    fn frobenius_square_in_char_2() {
        let f = FieldSpec::new(2, 2, None).unwrap();
        let t = Poly::t(&f);
        let p = t.pow(3).add(&t).add(&Poly::constant(f.one()));
        let sq = p.mul(&p);
        assert_eq!(sq, t.pow(6).add(&t.pow(2)).add(&Poly::constant(f.one())));
    }
}
