//! Two-dimensional algebras given by structure constants, and the action of
//! GL(2, q) by change of basis.
//!
//! A [`StructureMatrix`] `((α₁, α₂, α₃, α₄), (β₁, β₂, β₃, β₄))` encodes
//!
//! ```text
//! e₁e₁ = α₁e₁ + β₁e₂    e₁e₂ = α₂e₁ + β₂e₂
//! e₂e₁ = α₃e₁ + β₃e₂    e₂e₂ = α₄e₁ + β₄e₂
//! ```
//!
//! so column `2(i-1) + j` holds the coordinates of `eᵢeⱼ`. A [`BasisChange`]
//! `g` acts by `A ↦ g · A · (g⁻¹ ⊗ g⁻¹)`; the columns of `g⁻¹` are the new
//! basis vectors written in the old basis.

use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::Serialize;
use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("basis change is singular (determinant zero)")]
    Singular,
    #[error("matrix is not of fifth-subset shape ((a1,a2,a2,a4),(b1,-a1,-a1,-a2))")]
    NotFifthShape,
    #[error("malformed structure matrix: {0}")]
    Malformed(String),
}

pub type Vector2<'f> = [FieldElement<'f>; 2];

/// The 2×4 matrix of structure constants of a two-dimensional algebra.
///
/// Entries are stored as element indices in the order α₁..α₄, β₁..β₄; the
/// derived ordering is lexicographic in that order, which is also the order of
/// [`StructureMatrix::code`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructureMatrix<'f> {
    entries: [u16; 8],
    field: FieldRef<'f>,
}

/// Field handle that compares equal for equal fields so the derived traits on
/// [`StructureMatrix`] only look at the entries.
#[derive(Clone, Copy)]
struct FieldRef<'f>(&'f FieldSpec);

impl PartialEq for FieldRef<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}
impl Eq for FieldRef<'_> {}
impl std::hash::Hash for FieldRef<'_> {
    fn hash<H: std::hash::Hasher>(&self, _: &mut H) {}
}
impl PartialOrd for FieldRef<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FieldRef<'_> {
    fn cmp(&self, _: &Self) -> std::cmp::Ordering {
        std::cmp::Ordering::Equal
    }
}

impl<'f> StructureMatrix<'f> {
    pub fn new(
        alpha: [FieldElement<'f>; 4],
        beta: [FieldElement<'f>; 4],
    ) -> Result<Self, AlgebraError> {
        let field = alpha[0].field();
        let mut entries = [0u16; 8];
        for (slot, e) in entries.iter_mut().zip(alpha.iter().chain(beta.iter())) {
            if e.field() != field {
                return Err(FieldError::MixedFields.into());
            }
            *slot = e.raw();
        }
        Ok(StructureMatrix {
            entries,
            field: FieldRef(field),
        })
    }

    pub fn zero(field: &'f FieldSpec) -> Self {
        StructureMatrix {
            entries: [0; 8],
            field: FieldRef(field),
        }
    }

    pub fn from_indices(field: &'f FieldSpec, idx: [usize; 8]) -> Result<Self, AlgebraError> {
        let mut entries = [0u16; 8];
        for (slot, &i) in entries.iter_mut().zip(idx.iter()) {
            *slot = field.elem(i)?.raw();
        }
        Ok(StructureMatrix {
            entries,
            field: FieldRef(field),
        })
    }

    /// Inverse of [`code`](Self::code).
    pub fn from_code(field: &'f FieldSpec, mut code: u64) -> Self {
        let q = field.q() as u64;
        let mut entries = [0u16; 8];
        for slot in entries.iter_mut().rev() {
            *slot = (code % q) as u16;
            code /= q;
        }
        StructureMatrix {
            entries,
            field: FieldRef(field),
        }
    }

    /// Base-q integer with α₁ as the most significant digit.
    pub fn code(&self) -> u64 {
        let q = self.field.0.q() as u64;
        self.entries.iter().fold(0, |acc, &e| acc * q + e as u64)
    }

    /// Builds the fifth-subset shape `((α₁, α₂, α₂, α₄), (β₁, −α₁, −α₁, −α₂))`.
    pub fn fifth_shape(
        a1: FieldElement<'f>,
        a2: FieldElement<'f>,
        a4: FieldElement<'f>,
        b1: FieldElement<'f>,
    ) -> Result<Self, AlgebraError> {
        Self::new([a1, a2, a2, a4], [b1, -a1, -a1, -a2])
    }

    pub fn field(&self) -> &'f FieldSpec {
        self.field.0
    }

    pub fn entry(&self, k: usize) -> FieldElement<'f> {
        FieldElement::from_raw(self.field.0, self.entries[k])
    }

    pub fn alpha(&self) -> [FieldElement<'f>; 4] {
        std::array::from_fn(|k| self.entry(k))
    }

    pub fn beta(&self) -> [FieldElement<'f>; 4] {
        std::array::from_fn(|k| self.entry(4 + k))
    }

    pub fn indices(&self) -> [usize; 8] {
        self.entries.map(|e| e as usize)
    }

    pub(crate) fn raw(&self) -> &[u16; 8] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// `(α₁, α₂, α₄, β₁)` if the matrix has fifth-subset shape.
    pub fn fifth_params(&self) -> Result<[FieldElement<'f>; 4], AlgebraError> {
        let [a1, a2, a3, a4] = self.alpha();
        let [b1, b2, b3, b4] = self.beta();
        if a3 == a2 && b2 == -a1 && b3 == -a1 && b4 == -a2 {
            Ok([a1, a2, a4, b1])
        } else {
            Err(AlgebraError::NotFifthShape)
        }
    }

    pub fn is_fifth_shape(&self) -> bool {
        self.fifth_params().is_ok()
    }

    /// Parses the flat comma-separated form `a1,a2,a3,a4,b1,b2,b3,b4` of
    /// element indices.
    pub fn parse_flat(field: &'f FieldSpec, text: &str) -> Result<Self, AlgebraError> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 8 {
            return Err(AlgebraError::Malformed(format!(
                "expected 8 entries, found {}",
                parts.len()
            )));
        }
        let mut idx = [0usize; 8];
        for (slot, part) in idx.iter_mut().zip(&parts) {
            *slot = part
                .parse()
                .map_err(|_| AlgebraError::Malformed(format!("not an element index: {part:?}")))?;
        }
        Self::from_indices(field, idx).map_err(|e| match e {
            AlgebraError::Field(FieldError::IndexOutOfRange { index, q }) => {
                AlgebraError::Malformed(format!("entry {index} out of range 0..{q}"))
            }
            other => other,
        })
    }

    /// Parses the text form `[[a1,a2,a3,a4],[b1,b2,b3,b4]]`.
    pub fn parse_text(field: &'f FieldSpec, text: &str) -> Result<Self, AlgebraError> {
        let flat: String = text
            .chars()
            .filter(|c| !matches!(c, '[' | ']' | ' '))
            .collect();
        let bracket_ok = text.trim().starts_with("[[") && text.trim().ends_with("]]");
        if !bracket_ok {
            return Err(AlgebraError::Malformed(format!(
                "expected [[..],[..]], got {text:?}"
            )));
        }
        Self::parse_flat(field, &flat)
    }
}

impl fmt::Display for StructureMatrix<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(
            f,
            "[[{},{},{},{}],[{},{},{},{}]]",
            e[0], e[1], e[2], e[3], e[4], e[5], e[6], e[7]
        )
    }
}

impl fmt::Debug for StructureMatrix<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for StructureMatrix<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(8))?;
        for e in &self.entries {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

/// `xy` for `x = u₁e₁ + u₂e₂`, `y = v₁e₁ + v₂e₂`.
pub fn product<'f>(
    a: &StructureMatrix<'f>,
    x: Vector2<'f>,
    y: Vector2<'f>,
) -> Result<Vector2<'f>, AlgebraError> {
    let field = a.field();
    if x.iter().chain(y.iter()).any(|e| e.field() != field) {
        return Err(FieldError::MixedFields.into());
    }
    Ok(product_unchecked(a, x, y))
}

pub(crate) fn product_unchecked<'f>(
    a: &StructureMatrix<'f>,
    x: Vector2<'f>,
    y: Vector2<'f>,
) -> Vector2<'f> {
    let coeff = [x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1]];
    let alpha = a.alpha();
    let beta = a.beta();
    let mut out = [a.field().zero(); 2];
    for k in 0..4 {
        out[0] = out[0] + coeff[k] * alpha[k];
        out[1] = out[1] + coeff[k] * beta[k];
    }
    out
}

/// An invertible 2×2 change of basis, parameterized by the entries of `g⁻¹`
///
/// ```text
/// g⁻¹ = ( ξ₁  η₁ )
///       ( ξ₂  η₂ )      Δ = ξ₁η₂ − ξ₂η₁
/// ```
///
/// The forward matrix `g` is the adjugate of `g⁻¹` divided by `Δ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisChange<'f> {
    field: FieldRef<'f>,
    inv: [u16; 4],
    fwd: [u16; 4],
    det: u16,
    /// `(g⁻¹ ⊗ g⁻¹)` row-major, standard layout.
    kron: [u16; 16],
}

impl<'f> BasisChange<'f> {
    pub fn from_inverse(
        xi1: FieldElement<'f>,
        eta1: FieldElement<'f>,
        xi2: FieldElement<'f>,
        eta2: FieldElement<'f>,
    ) -> Result<Self, AlgebraError> {
        let det = xi1.try_mul(eta2)?.try_sub(xi2.try_mul(eta1)?)?;
        let det_inv = det.inv().map_err(|_| AlgebraError::Singular)?;
        let fwd = [
            eta2 * det_inv,
            -eta1 * det_inv,
            -xi2 * det_inv,
            xi1 * det_inv,
        ];
        let inv = [xi1, eta1, xi2, eta2];
        let field = xi1.field();
        let mut kron = [0u16; 16];
        for (r, slot) in kron.chunks_mut(4).enumerate() {
            let (k, l) = (r / 2, r % 2);
            for (c, out) in slot.iter_mut().enumerate() {
                let (i, j) = (c / 2, c % 2);
                *out = (inv[2 * k + i] * inv[2 * l + j]).raw();
            }
        }
        let g = BasisChange {
            field: FieldRef(field),
            inv: inv.map(|e| e.raw()),
            fwd: fwd.map(|e| e.raw()),
            det: det.raw(),
            kron,
        };
        debug_assert!(g.check_inverse());
        Ok(g)
    }

    pub fn from_inverse_indices(
        field: &'f FieldSpec,
        idx: [usize; 4],
    ) -> Result<Self, AlgebraError> {
        Self::from_inverse(
            field.elem(idx[0])?,
            field.elem(idx[1])?,
            field.elem(idx[2])?,
            field.elem(idx[3])?,
        )
    }

    /// Builds the change of basis whose forward matrix is `g` (row-major).
    pub fn from_forward(g: [FieldElement<'f>; 4]) -> Result<Self, AlgebraError> {
        let [a, b, c, d] = g;
        let det = a.try_mul(d)?.try_sub(b.try_mul(c)?)?;
        let det_inv = det.inv().map_err(|_| AlgebraError::Singular)?;
        Self::from_inverse(d * det_inv, -b * det_inv, -c * det_inv, a * det_inv)
    }

    pub fn identity(field: &'f FieldSpec) -> Self {
        Self::from_inverse(field.one(), field.zero(), field.zero(), field.one())
            .expect("identity is invertible")
    }

    fn elem(&self, raw: u16) -> FieldElement<'f> {
        FieldElement::from_raw(self.field.0, raw)
    }

    pub fn field(&self) -> &'f FieldSpec {
        self.field.0
    }

    /// `(ξ₁, η₁, ξ₂, η₂)`.
    pub fn inverse_entries(&self) -> [FieldElement<'f>; 4] {
        self.inv.map(|r| self.elem(r))
    }

    /// Entries of `g`, row-major.
    pub fn forward_entries(&self) -> [FieldElement<'f>; 4] {
        self.fwd.map(|r| self.elem(r))
    }

    /// `Δ = ξ₁η₂ − ξ₂η₁`, the determinant of `g⁻¹`.
    pub fn delta(&self) -> FieldElement<'f> {
        self.elem(self.det)
    }

    fn check_inverse(&self) -> bool {
        let g = self.forward_entries();
        let h = self.inverse_entries();
        let f = self.field();
        (0..2).all(|i| {
            (0..2).all(|j| {
                let v = g[2 * i] * h[j] + g[2 * i + 1] * h[2 + j];
                v == if i == j { f.one() } else { f.zero() }
            })
        })
    }

    /// The change of basis `h` with `act(h, A) = act(self, act(other, A))`.
    pub fn compose(&self, other: &BasisChange<'f>) -> BasisChange<'f> {
        let a = self.forward_entries();
        let b = other.forward_entries();
        let prod = [
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        ];
        Self::from_forward(prod).expect("product of invertible matrices is invertible")
    }

    pub fn inverse(&self) -> BasisChange<'f> {
        Self::from_forward(self.inverse_entries()).expect("inverse is invertible")
    }

    pub fn is_identity(&self) -> bool {
        self.inv == [1, 0, 0, 1]
    }
}

impl fmt::Display for BasisChange<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x1, e1, x2, e2] = self.inv;
        write!(f, "ξ₁={x1} η₁={e1} ξ₂={x2} η₂={e2}")
    }
}

impl fmt::Debug for BasisChange<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for BasisChange<'_> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("BasisChange", 4)?;
        s.serialize_field("xi1", &self.inv[0])?;
        s.serialize_field("eta1", &self.inv[1])?;
        s.serialize_field("xi2", &self.inv[2])?;
        s.serialize_field("eta2", &self.inv[3])?;
        s.end()
    }
}

/// Row/column convention for the Kronecker square of `g⁻¹`.
///
/// `Standard` reads `g⁻¹` with the ξ's in the first column and indexes the
/// tensor basis as `(i, j) ↦ 2(i−1) + j`; `Transposed` reads the same four
/// numbers as the transpose. Only `Standard` reproduces the closed-form
/// fifth-subset formulas, see [`act_fifth_explicit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorLayout {
    Standard,
    Transposed,
}

/// `g · A · (g⁻¹ ⊗ g⁻¹)`.
pub fn act<'f>(g: &BasisChange<'f>, a: &StructureMatrix<'f>) -> StructureMatrix<'f> {
    debug_assert!(g.field() == a.field(), "mixed-field operands");
    let field = a.field();
    let e = a.raw();
    let k = &g.kron;
    // m = A · K, 2×4
    let mut m = [0u16; 8];
    for r in 0..2 {
        for c in 0..4 {
            let mut acc = 0u16;
            for t in 0..4 {
                let prod = field.mul_idx(e[4 * r + t], k[4 * t + c]);
                acc = field.add_idx(acc, prod);
            }
            m[4 * r + c] = acc;
        }
    }
    let gf = &g.fwd;
    let mut out = [0u16; 8];
    for s in 0..2 {
        for c in 0..4 {
            let x = field.mul_idx(gf[2 * s], m[c]);
            let y = field.mul_idx(gf[2 * s + 1], m[4 + c]);
            out[4 * s + c] = field.add_idx(x, y);
        }
    }
    StructureMatrix {
        entries: out,
        field: a.field,
    }
}

/// Checked variant of [`act`].
pub fn try_act<'f>(
    g: &BasisChange<'f>,
    a: &StructureMatrix<'f>,
) -> Result<StructureMatrix<'f>, AlgebraError> {
    if g.field() != a.field() {
        return Err(FieldError::MixedFields.into());
    }
    Ok(act(g, a))
}

/// The action under an explicit tensor layout, computed with generic matrix
/// products.
pub fn act_with_layout<'f>(
    layout: TensorLayout,
    g: &BasisChange<'f>,
    a: &StructureMatrix<'f>,
) -> StructureMatrix<'f> {
    use crate::linalg::Matrix;
    let inv = g.inverse_entries();
    let fwd = g.forward_entries();
    let (p, gm) = match layout {
        TensorLayout::Standard => (
            Matrix::from_fn(2, 2, |i, j| inv[2 * i + j]),
            Matrix::from_fn(2, 2, |i, j| fwd[2 * i + j]),
        ),
        TensorLayout::Transposed => (
            Matrix::from_fn(2, 2, |i, j| inv[2 * j + i]),
            Matrix::from_fn(2, 2, |i, j| fwd[2 * j + i]),
        ),
    };
    let am = Matrix::from_fn(2, 4, |r, c| a.entry(4 * r + c));
    let out = gm.mul(&am).mul(&p.kron(&p));
    let alpha = std::array::from_fn(|c| out.get(0, c));
    let beta = std::array::from_fn(|c| out.get(1, c));
    StructureMatrix::new(alpha, beta).expect("single field")
}

/// `(α′₁, α′₂, α′₄, β′₁)` of `act(g, A)` for a fifth-subset matrix, evaluated
/// from the closed-form polynomials in ξᵢ, ηᵢ. Integer coefficients are taken
/// in the field, so the same formulas cover characteristics 2 and 3.
pub fn act_fifth_explicit<'f>(
    g: &BasisChange<'f>,
    a: &StructureMatrix<'f>,
) -> Result<[FieldElement<'f>; 4], AlgebraError> {
    if g.field() != a.field() {
        return Err(FieldError::MixedFields.into());
    }
    let [a1, a2, a4, b1] = a.fifth_params()?;
    let f = a.field();
    let [x1, e1, x2, e2] = g.inverse_entries();
    let delta_inv = g.delta().inv().map_err(|_| AlgebraError::Singular)?;
    let two = f.int(2);
    let three = f.int(3);

    let a1p = delta_inv
        * (-b1 * e1 * x1.square()
            + a1 * e2 * x1.square()
            + two * a1 * e1 * x1 * x2
            + two * a2 * e2 * x1 * x2
            + a2 * e1 * x2.square()
            + a4 * e2 * x2.square());
    let a2p = -delta_inv
        * (b1 * e1.square() * x1
            - two * a1 * e1 * e2 * x1
            - a2 * e2.square() * x1
            - a1 * e1.square() * x2
            - two * a2 * e1 * e2 * x2
            - a4 * e2.square() * x2);
    let a4p = -delta_inv
        * (b1 * e1.cube()
            - three * a1 * e1.square() * e2
            - three * a2 * e1 * e2.square()
            - a4 * e2.cube());
    let b1p = delta_inv
        * (b1 * x1.cube()
            - three * a1 * x1.square() * x2
            - three * a2 * x1 * x2.square()
            - a4 * x2.cube());
    Ok([a1p, a2p, a4p, b1p])
}

/// GL(2, q), enumerated in lexicographic order of the `g⁻¹` entry indices
/// `(ξ₁, η₁, ξ₂, η₂)`.
#[derive(Clone, Debug)]
pub struct GlGroup<'f> {
    field: &'f FieldSpec,
    elements: Vec<BasisChange<'f>>,
}

impl<'f> GlGroup<'f> {
    pub fn new(field: &'f FieldSpec) -> Self {
        let q = field.q();
        let mut elements = Vec::with_capacity(Self::order_of(q) as usize);
        for code in 0..q.pow(4) {
            let idx = [
                code / (q * q * q),
                code / (q * q) % q,
                code / q % q,
                code % q,
            ];
            if let Ok(g) = BasisChange::from_inverse_indices(field, idx) {
                elements.push(g);
            }
        }
        GlGroup { field, elements }
    }

    /// `(q² − 1)(q² − q)`.
    pub fn order_of(q: usize) -> u64 {
        let q = q as u64;
        (q * q - 1) * (q * q - q)
    }

    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[BasisChange<'f>] {
        &self.elements
    }

    /// First `g` in enumeration order with `act(g, A) = B`.
    pub fn find_witness(
        &self,
        a: &StructureMatrix<'f>,
        b: &StructureMatrix<'f>,
    ) -> Option<BasisChange<'f>> {
        self.elements
            .par_iter()
            .find_first(|g| act(g, a) == *b)
            .copied()
    }

    /// Isomorphism witness or `None`, with a fingerprint pre-filter.
    pub fn is_isomorphic(
        &self,
        a: &StructureMatrix<'f>,
        b: &StructureMatrix<'f>,
    ) -> Result<Option<BasisChange<'f>>, AlgebraError> {
        if a.field() != self.field || b.field() != self.field {
            return Err(FieldError::MixedFields.into());
        }
        if a == b {
            return Ok(Some(BasisChange::identity(self.field)));
        }
        if quick_invariants(a) != quick_invariants(b) {
            return Ok(None);
        }
        Ok(self.find_witness(a, b))
    }

    pub fn automorphism_order(&self, a: &StructureMatrix<'f>) -> usize {
        self.elements.par_iter().filter(|g| act(g, a) == *a).count()
    }

    /// Sorted, deduplicated codes of the orbit of `a`.
    pub fn orbit_codes(&self, a: &StructureMatrix<'f>) -> Vec<u64> {
        let mut codes: Vec<u64> = self.elements.par_iter().map(|g| act(g, a).code()).collect();
        codes.sort_unstable();
        codes.dedup();
        codes
    }

    /// Lexicographically smallest member of the orbit of `a`.
    pub fn canonical_form(&self, a: &StructureMatrix<'f>) -> StructureMatrix<'f> {
        let code = self
            .elements
            .par_iter()
            .map(|g| act(g, a).code())
            .min()
            .expect("group is nonempty");
        StructureMatrix::from_code(self.field, code)
    }

    pub fn invariants(&self, a: &StructureMatrix<'f>) -> InvariantFingerprint {
        let quick = quick_invariants(a);
        InvariantFingerprint {
            commutative: quick.commutative,
            idempotent_count: quick.idempotent_count,
            power3_associative: quick.power3_associative,
            automorphism_order: self.automorphism_order(a),
            left_unit_exists: quick.left_unit_exists,
            right_unit_exists: quick.right_unit_exists,
            cube_zero_count: quick.cube_zero_count,
        }
    }
}

/// Isomorphism witness by exhaustive search over GL(2, q).
pub fn is_isomorphic<'f>(
    a: &StructureMatrix<'f>,
    b: &StructureMatrix<'f>,
) -> Result<Option<BasisChange<'f>>, AlgebraError> {
    GlGroup::new(a.field()).is_isomorphic(a, b)
}

/// Size of the stabilizer of `a` in GL(2, q).
pub fn automorphism_order(a: &StructureMatrix<'_>) -> usize {
    GlGroup::new(a.field()).automorphism_order(a)
}

/// Invariants of an algebra that are constant on GL(2, q)-orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct InvariantFingerprint {
    pub commutative: bool,
    /// Nonzero `x` with `xx = x`.
    pub idempotent_count: usize,
    /// `x(xx) = (xx)x` for all `x`.
    pub power3_associative: bool,
    pub automorphism_order: usize,
    pub left_unit_exists: bool,
    pub right_unit_exists: bool,
    /// Nonzero `x` with `x(xx) = 0`.
    pub cube_zero_count: usize,
}

impl InvariantFingerprint {
    /// Name of the first field in which the two fingerprints differ.
    pub fn first_difference(&self, other: &InvariantFingerprint) -> Option<&'static str> {
        if self.commutative != other.commutative {
            Some("commutative")
        } else if self.idempotent_count != other.idempotent_count {
            Some("idempotent_count")
        } else if self.power3_associative != other.power3_associative {
            Some("power3_associative")
        } else if self.automorphism_order != other.automorphism_order {
            Some("automorphism_order")
        } else if self.left_unit_exists != other.left_unit_exists {
            Some("left_unit_exists")
        } else if self.right_unit_exists != other.right_unit_exists {
            Some("right_unit_exists")
        } else if self.cube_zero_count != other.cube_zero_count {
            Some("cube_zero_count")
        } else {
            None
        }
    }
}

/// The fingerprint without the stabilizer scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct QuickInvariants {
    commutative: bool,
    idempotent_count: usize,
    power3_associative: bool,
    left_unit_exists: bool,
    right_unit_exists: bool,
    cube_zero_count: usize,
}

pub(crate) fn quick_invariants(a: &StructureMatrix<'_>) -> QuickInvariants {
    let f = a.field();
    let [_, a2, a3, _] = a.alpha();
    let [_, b2, b3, _] = a.beta();
    let commutative = a2 == a3 && b2 == b3;

    let vectors: Vec<Vector2<'_>> = f
        .elements()
        .flat_map(|u| f.elements().map(move |v| [u, v]))
        .collect();
    let mut idempotent_count = 0;
    let mut power3_associative = true;
    let mut cube_zero_count = 0;
    for &x in &vectors[1..] {
        let xx = product_unchecked(a, x, x);
        if xx == x {
            idempotent_count += 1;
        }
        let left = product_unchecked(a, x, xx);
        let right = product_unchecked(a, xx, x);
        if left != right {
            power3_associative = false;
        }
        if left.iter().all(|e| e.is_zero()) {
            cube_zero_count += 1;
        }
    }
    let basis = [[f.one(), f.zero()], [f.zero(), f.one()]];
    let left_unit_exists = vectors
        .iter()
        .any(|&e| basis.iter().all(|&b| product_unchecked(a, e, b) == b));
    let right_unit_exists = vectors
        .iter()
        .any(|&e| basis.iter().all(|&b| product_unchecked(a, b, e) == b));
    QuickInvariants {
        commutative,
        idempotent_count,
        power3_associative,
        left_unit_exists,
        right_unit_exists,
        cube_zero_count,
    }
}

/// Full fingerprint of an algebra.
pub fn invariants(a: &StructureMatrix<'_>) -> InvariantFingerprint {
    GlGroup::new(a.field()).invariants(a)
}
