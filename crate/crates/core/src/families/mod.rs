//! The corrected catalog of two-dimensional algebra families, their
//! parameter moves and parameter-orbit counts.
//!
//! Each characteristic case (≠ 2, 3 / = 2 / = 3) has its own numbered list.
//! The dropped items `A13`, `A12,2`, `A12,3` and `A13,3` cannot be
//! constructed; the items `A10`, `A11`, `A8,2`, `A9,2`, `A9,3`, `A10,3` use
//! the corrected move sets.

mod beta;
mod reduce;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{act, AlgebraError, BasisChange, GlGroup, StructureMatrix};
use crate::field::{FieldElement, FieldError, FieldSpec};

pub use beta::{
    admissible, beta_prime, identity_checks, original_condition, poly_identities, range_count_x2ax,
    IdentityCheck,
};
pub use reduce::{reduce_fifth_family, Reduction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("family {label} belongs to {expected}, field has {found}")]
    CharMismatch {
        label: String,
        expected: CharCase,
        found: CharCase,
    },
    #[error("item {0} is omitted from the corrected catalog")]
    OmittedLabel(String),
    #[error("unknown family label {0:?}")]
    UnknownLabel(String),
    #[error("{label} takes {expected} parameters, got {found}")]
    Arity {
        label: String,
        expected: usize,
        found: usize,
    },
    #[error("parameters of {label} out of domain: {reason}")]
    OutOfDomain { label: String, reason: String },
    #[error("{label} has no {what}")]
    WrongFamily { label: String, what: &'static str },
    #[error("denominator vanishes at t = {t}")]
    VanishingDenominator { t: usize },
    #[error("operation requires {required}, field has characteristic {found}")]
    WrongCharacteristic { required: &'static str, found: u32 },
    #[error("the zero algebra has no family")]
    Trivial,
    #[error("no isomorphism realizes move {mv} on {label}{params:?}")]
    MoveFailed {
        mv: String,
        label: String,
        params: Vec<usize>,
    },
    #[error("fifth-subset reduction failed to verify on {matrix}")]
    ReductionFailed { matrix: String },
}

/// Which of the three catalog lists applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CharCase {
    #[serde(rename = "char!=2,3")]
    General,
    #[serde(rename = "char=2")]
    Two,
    #[serde(rename = "char=3")]
    Three,
}

impl CharCase {
    pub fn of(field: &FieldSpec) -> CharCase {
        match field.characteristic() {
            2 => CharCase::Two,
            3 => CharCase::Three,
            _ => CharCase::General,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CharCase::General => "char!=2,3",
            CharCase::Two => "char=2",
            CharCase::Three => "char=3",
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            CharCase::General => "",
            CharCase::Two => ",2",
            CharCase::Three => ",3",
        }
    }

    fn last_number(self) -> u8 {
        match self {
            CharCase::General => 12,
            CharCase::Two | CharCase::Three => 11,
        }
    }

    fn omitted_number(self) -> &'static [u8] {
        match self {
            CharCase::General => &[13],
            CharCase::Two => &[12],
            CharCase::Three => &[12, 13],
        }
    }
}

impl fmt::Display for CharCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The role a family plays, shared across characteristic lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    /// Items 1..8 of the ≠2 lists (and 1..7 of the char-2 list) by number.
    Low(u8),
    /// `((1/3, 0, 0, 0), (1, 2/3, −1/3, 0))`
    Nine,
    /// `((0,1,1,1),(β₁,0,0,−1))`
    BetaPrime,
    /// `((0,0,0,1),(β₁,0,0,0))`
    Cube,
    /// `((0,1,1,0),(β₁,0,0,−1))`
    Square,
    /// `((1,1,1,0),(β₁,1,1,1))`
    Shift2,
    /// `((0,1,1,0),(β₁,0,0,1))`
    ScaleShift2,
}

/// A catalog item such as `A10`, `A8,2` or `A9,3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    case: CharCase,
    number: u8,
}

impl FamilyId {
    pub fn new(case: CharCase, number: u8) -> Result<FamilyId, FamilyError> {
        let id = FamilyId { case, number };
        if case.omitted_number().contains(&number) {
            return Err(FamilyError::OmittedLabel(id.label()));
        }
        if number == 0 || number > case.last_number() {
            return Err(FamilyError::UnknownLabel(id.label()));
        }
        Ok(id)
    }

    /// Parses labels like `A10`, `A8,2`, `A_{9,3}`.
    pub fn parse(label: &str) -> Result<FamilyId, FamilyError> {
        let unknown = || FamilyError::UnknownLabel(label.to_string());
        let body: String = label
            .trim()
            .strip_prefix('A')
            .ok_or_else(unknown)?
            .chars()
            .filter(|c| !matches!(c, '_' | '{' | '}' | ' '))
            .collect();
        let (num, case) = match body.split_once(',') {
            None => (body.as_str(), CharCase::General),
            Some((n, "2")) => (n, CharCase::Two),
            Some((n, "3")) => (n, CharCase::Three),
            Some(_) => return Err(unknown()),
        };
        let number: u8 = num.parse().map_err(|_| unknown())?;
        FamilyId::new(case, number)
    }

    pub fn case(&self) -> CharCase {
        self.case
    }

    pub fn number(&self) -> u8 {
        self.number
    }

    pub fn label(&self) -> String {
        format!("A{}{}", self.number, self.case.suffix())
    }

    /// Every catalog item for `case`, in catalog order.
    pub fn all(case: CharCase) -> Vec<FamilyId> {
        (1..=case.last_number())
            .map(|number| FamilyId { case, number })
            .collect()
    }

    fn kind(&self) -> Kind {
        match (self.case, self.number) {
            (CharCase::General, 9) => Kind::Nine,
            (CharCase::General, 10) | (CharCase::Three, 9) | (CharCase::Two, 8) => Kind::BetaPrime,
            (CharCase::General, 11) | (CharCase::Three, 10) | (CharCase::Two, 9) => Kind::Cube,
            (CharCase::General, 12) | (CharCase::Three, 11) => Kind::Square,
            (CharCase::Two, 10) => Kind::Shift2,
            (CharCase::Two, 11) => Kind::ScaleShift2,
            (_, n) => Kind::Low(n),
        }
    }

    /// Parameter names in the order of [`FamilyClass::params`].
    pub fn param_names(&self) -> &'static [&'static str] {
        match (self.case, self.kind()) {
            (_, Kind::Nine) => &[],
            (_, Kind::BetaPrime | Kind::Cube | Kind::Square | Kind::Shift2 | Kind::ScaleShift2) => {
                &["b1"]
            }
            (_, Kind::Low(1)) => &["a1", "a2", "a4", "b1"],
            (_, Kind::Low(2 | 3)) => &["a1", "a4", "b2"],
            (CharCase::Two, Kind::Low(4)) => &["a1", "b1", "b2"],
            (_, Kind::Low(4)) => &["b1", "b2"],
            (CharCase::Two, Kind::Low(5)) => &["a1", "a4"],
            (_, Kind::Low(5)) => &["a1"],
            (_, Kind::Low(6)) => &["a1", "a4"],
            (CharCase::Two, Kind::Low(7)) => &["a1", "b1"],
            (_, Kind::Low(7)) => &["a1", "a4"],
            (_, Kind::Low(8)) => &["b1"],
            (_, Kind::Low(_)) => unreachable!("low items stop at 8"),
        }
    }

    pub fn arity(&self) -> usize {
        self.param_names().len()
    }

    /// Whether the family is one of the three fifth-subset targets.
    pub fn is_fifth_target(&self) -> bool {
        matches!(
            self.kind(),
            Kind::BetaPrime | Kind::Cube | Kind::Square | Kind::Shift2 | Kind::ScaleShift2
        )
    }

    /// The family of the given role within `case`.
    fn with_kind(case: CharCase, kind: Kind) -> FamilyId {
        FamilyId::all(case)
            .into_iter()
            .find(|id| id.kind() == kind)
            .expect("kind present in this characteristic")
    }

    /// Families whose parameter moves are the rational map `β₁ ↦ β′₁(a)`.
    pub fn beta_prime_family(case: CharCase) -> FamilyId {
        Self::with_kind(case, Kind::BetaPrime)
    }

    /// The `((0,0,0,1),(β₁,0,0,0))` family of `case`.
    pub fn cube_family(case: CharCase) -> FamilyId {
        Self::with_kind(case, Kind::Cube)
    }

    fn check_domain(&self, p: &[FieldElement<'_>]) -> Result<(), FamilyError> {
        let out = |reason: &str| {
            Err(FamilyError::OutOfDomain {
                label: self.label(),
                reason: reason.to_string(),
            })
        };
        match (self.case, self.kind()) {
            (CharCase::Two, Kind::Low(2)) => {
                if p[1].is_zero() && !p[2].is_one() {
                    return out("a4 = 0 is allowed only at the special point (a1, 0, 1)");
                }
            }
            (CharCase::Two, Kind::Low(5)) => {
                if p[1].is_zero() && !p[0].is_one() {
                    return out("a4 = 0 is allowed only at the special point (1, 0)");
                }
            }
            (CharCase::General | CharCase::Three, Kind::Low(2 | 6)) if p[1].is_zero() => {
                return out("a4 must be nonzero");
            }
            _ => {}
        }
        Ok(())
    }

    /// Structure constants with parameters substituted.
    fn build<'f>(&self, field: &'f FieldSpec, p: &[FieldElement<'f>]) -> StructureMatrix<'f> {
        let z = field.zero();
        let o = field.one();
        let (alpha, beta) = match (self.case, self.kind()) {
            (_, Kind::Nine) => {
                let third = field.int(3).inv().expect("characteristic is not 3");
                ([third, z, z, z], [o, field.int(2) * third, -third, z])
            }
            (_, Kind::BetaPrime) => ([z, o, o, o], [p[0], z, z, -o]),
            (_, Kind::Cube) => ([z, z, z, o], [p[0], z, z, z]),
            (_, Kind::Square) => ([z, o, o, z], [p[0], z, z, -o]),
            (_, Kind::Shift2) => ([o, o, o, z], [p[0], o, o, o]),
            (_, Kind::ScaleShift2) => ([z, o, o, z], [p[0], z, z, o]),
            (CharCase::Two, Kind::Low(n)) => match n {
                1 => ([p[0], p[1], p[1] + o, p[2]], [p[3], p[0], o + p[0], p[1]]),
                2 => ([p[0], z, z, p[1]], [o, p[2], o + p[0], z]),
                3 => ([p[0], z, z, p[1]], [z, p[2], o + p[0], z]),
                4 => ([p[0], o, o, z], [p[1], p[2], o + p[0], o]),
                5 => ([p[0], z, z, p[1]], [o, o + p[0], p[0], z]),
                6 => ([p[0], z, z, p[1]], [z, o + p[0], p[0], z]),
                7 => ([p[0], o, o, z], [p[1], o + p[0], p[0], o]),
                _ => unreachable!("char-2 low items stop at 7"),
            },
            (_, Kind::Low(n)) => match n {
                1 => ([p[0], p[1], o + p[1], p[2]], [p[3], -p[0], o - p[0], -p[1]]),
                2 => ([p[0], z, z, p[1]], [o, p[2], o - p[0], z]),
                3 => ([p[0], z, z, p[1]], [z, p[2], o - p[0], z]),
                4 => ([z, o, o, z], [p[0], p[1], o, -o]),
                5 => ([p[0], z, z, z], [o, field.int(2) * p[0] - o, o - p[0], z]),
                6 => ([p[0], z, z, p[1]], [o, o - p[0], -p[0], z]),
                7 => ([p[0], z, z, p[1]], [z, o - p[0], -p[0], z]),
                8 => ([z, o, o, z], [p[0], o, z, -o]),
                _ => unreachable!("low items stop at 8"),
            },
        };
        StructureMatrix::new(alpha, beta).expect("single field")
    }

    /// The move set of this item; empty when every parameter value is its
    /// own class.
    pub fn equivalence_moves(&self) -> Vec<EquivalenceMove> {
        match (self.case, self.kind()) {
            (_, Kind::BetaPrime) => vec![EquivalenceMove::BetaPrime(self.case)],
            (_, Kind::Cube) => vec![EquivalenceMove::ScaleCube],
            (_, Kind::Square) => vec![EquivalenceMove::ScaleSquare { param: 0 }],
            (_, Kind::Shift2) => vec![EquivalenceMove::ShiftA10Two],
            (_, Kind::ScaleShift2) => vec![EquivalenceMove::ScaleShiftA11Two],
            (CharCase::Two, Kind::Low(3 | 6)) => vec![EquivalenceMove::ScaleSquare { param: 1 }],
            (CharCase::Two, Kind::Low(4)) => vec![EquivalenceMove::ShiftA4Two],
            (CharCase::Two, Kind::Low(7)) => vec![EquivalenceMove::ShiftA7Two],
            (CharCase::Two, _) => vec![],
            (_, Kind::Low(3 | 7)) => vec![EquivalenceMove::ScaleSquare { param: 1 }],
            _ => vec![],
        }
    }

    /// Every admissible parameter vector, in lexicographic index order.
    pub fn param_domain<'f>(&self, field: &'f FieldSpec) -> Vec<Vec<FieldElement<'f>>> {
        let k = self.arity();
        let q = field.q();
        let total = q.pow(k as u32);
        (0..total)
            .map(|mut code| {
                let mut v = vec![field.zero(); k];
                for slot in v.iter_mut().rev() {
                    *slot = field.elem(code % q).expect("index below q");
                    code /= q;
                }
                v
            })
            .filter(|v| self.check_domain(v).is_ok())
            .collect()
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A family together with a parameter vector (as element indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyClass {
    pub id: FamilyId,
    pub params: Vec<usize>,
}

impl FamilyClass {
    pub fn new(id: FamilyId, params: Vec<usize>) -> FamilyClass {
        FamilyClass { id, params }
    }

    pub fn from_elements(id: FamilyId, params: &[FieldElement<'_>]) -> FamilyClass {
        FamilyClass {
            id,
            params: params.iter().map(|e| e.index()).collect(),
        }
    }

    pub fn elements<'f>(&self, field: &'f FieldSpec) -> Result<Vec<FieldElement<'f>>, FamilyError> {
        Ok(self
            .params
            .iter()
            .map(|&i| field.elem(i))
            .collect::<Result<_, _>>()?)
    }
}

impl fmt::Display for FamilyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.params.is_empty() {
            return write!(f, "{}", self.id);
        }
        let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.id, ps.join(","))
    }
}

impl Serialize for FamilyClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("FamilyClass", 3)?;
        s.serialize_field("char_case", self.id.case.name())?;
        s.serialize_field("label", &self.id.label())?;
        s.serialize_field("params", &self.params)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for FamilyClass {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            char_case: CharCase,
            label: String,
            params: Vec<usize>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let id = FamilyId::parse(&raw.label).map_err(serde::de::Error::custom)?;
        if id.case != raw.char_case {
            return Err(serde::de::Error::custom(format!(
                "label {} does not belong to {}",
                raw.label, raw.char_case
            )));
        }
        Ok(FamilyClass {
            id,
            params: raw.params,
        })
    }
}

fn check_case(id: FamilyId, field: &FieldSpec) -> Result<(), FamilyError> {
    let found = CharCase::of(field);
    if found != id.case {
        return Err(FamilyError::CharMismatch {
            label: id.label(),
            expected: id.case,
            found,
        });
    }
    Ok(())
}

/// The structure matrix of a catalog class.
pub fn representative<'f>(
    cls: &FamilyClass,
    field: &'f FieldSpec,
) -> Result<StructureMatrix<'f>, FamilyError> {
    check_case(cls.id, field)?;
    if cls.params.len() != cls.id.arity() {
        return Err(FamilyError::Arity {
            label: cls.id.label(),
            expected: cls.id.arity(),
            found: cls.params.len(),
        });
    }
    let params = cls.elements(field)?;
    cls.id.check_domain(&params)?;
    Ok(cls.id.build(field, &params))
}

/// Free scalars of a move instance; `b` is used only by the
/// `b²(β₁ + a²)` move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoveScalars<'f> {
    pub a: FieldElement<'f>,
    pub b: FieldElement<'f>,
}

/// A parameter transformation that maps a class to an isomorphic one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceMove {
    /// `p ↦ a²p`, `a ≠ 0`.
    ScaleSquare { param: usize },
    /// `β₁ ↦ a³β₁`, `a ≠ 0`.
    ScaleCube,
    /// `β₁ ↦ β′₁(a)` for admissible `a`.
    BetaPrime(CharCase),
    /// `β₁ ↦ β₁ + (1 + β₂)a + a²`.
    ShiftA4Two,
    /// `β₁ ↦ β₁ + aα₁ + a + a²`.
    ShiftA7Two,
    /// `β₁ ↦ β₁ + a + a²`.
    ShiftA10Two,
    /// `β₁ ↦ b²(β₁ + a²)`, `b ≠ 0`.
    ScaleShiftA11Two,
}

impl EquivalenceMove {
    pub fn describe(&self) -> String {
        match self {
            EquivalenceMove::ScaleSquare { param: 0 } => "b1 -> a^2 b1".into(),
            EquivalenceMove::ScaleSquare { .. } => "a4 -> a^2 a4".into(),
            EquivalenceMove::ScaleCube => "b1 -> a^3 b1".into(),
            EquivalenceMove::BetaPrime(_) => "b1 -> b1'(a)".into(),
            EquivalenceMove::ShiftA4Two => "b1 -> b1 + (1 + b2)a + a^2".into(),
            EquivalenceMove::ShiftA7Two => "b1 -> b1 + a a1 + a + a^2".into(),
            EquivalenceMove::ShiftA10Two => "b1 -> b1 + a + a^2".into(),
            EquivalenceMove::ScaleShiftA11Two => "b1 -> b^2 (b1 + a^2)".into(),
        }
    }

    /// All scalar instantiations, admissible or not.
    pub fn instances<'f>(&self, field: &'f FieldSpec) -> Vec<MoveScalars<'f>> {
        let one = field.one();
        match self {
            EquivalenceMove::ScaleSquare { .. } | EquivalenceMove::ScaleCube => {
                field.nonzero().map(|a| MoveScalars { a, b: one }).collect()
            }
            EquivalenceMove::ScaleShiftA11Two => field
                .elements()
                .flat_map(|a| field.nonzero().map(move |b| MoveScalars { a, b }))
                .collect(),
            _ => field
                .elements()
                .map(|a| MoveScalars { a, b: one })
                .collect(),
        }
    }

    /// Moved parameters, or `None` when the instance is not admissible.
    pub fn apply<'f>(
        &self,
        params: &[FieldElement<'f>],
        s: MoveScalars<'f>,
    ) -> Option<Vec<FieldElement<'f>>> {
        let mut out = params.to_vec();
        let a = s.a;
        match *self {
            EquivalenceMove::ScaleSquare { param } => {
                if a.is_zero() {
                    return None;
                }
                out[param] = a.square() * params[param];
            }
            EquivalenceMove::ScaleCube => {
                if a.is_zero() {
                    return None;
                }
                out[0] = a.cube() * params[0];
            }
            EquivalenceMove::BetaPrime(case) => {
                let id = FamilyId::beta_prime_family(case);
                if !admissible(id, params[0], a).ok()? {
                    return None;
                }
                out[0] = beta_prime(case, params[0], a).ok()?;
            }
            EquivalenceMove::ShiftA4Two => {
                let one = a.field().one();
                out[1] = params[1] + (one + params[2]) * a + a.square();
            }
            EquivalenceMove::ShiftA7Two => {
                out[1] = params[1] + a * params[0] + a + a.square();
            }
            EquivalenceMove::ShiftA10Two => {
                out[0] = params[0] + a + a.square();
            }
            EquivalenceMove::ScaleShiftA11Two => {
                if s.b.is_zero() {
                    return None;
                }
                out[0] = s.b.square() * (params[0] + a.square());
            }
        }
        Some(out)
    }

    /// Explicit `g⁻¹` entries `(ξ₁, η₁, ξ₂, η₂)` where a closed form is known.
    fn explicit_witness<'f>(
        &self,
        params: &[FieldElement<'f>],
        s: MoveScalars<'f>,
    ) -> Option<[FieldElement<'f>; 4]> {
        let a = s.a;
        let f = a.field();
        let (z, o) = (f.zero(), f.one());
        match *self {
            EquivalenceMove::ScaleSquare { param: 0 } => Some([a, z, z, o]),
            EquivalenceMove::ScaleSquare { .. } => Some([o, z, z, a]),
            EquivalenceMove::ScaleCube => Some([a.square(), z, z, a]),
            EquivalenceMove::ShiftA10Two => Some([o, z, a, o]),
            EquivalenceMove::ScaleShiftA11Two => Some([s.b, z, a * s.b, o]),
            EquivalenceMove::BetaPrime(case) => beta::xi0_witness(case, params[0], a),
            EquivalenceMove::ShiftA4Two | EquivalenceMove::ShiftA7Two => None,
        }
    }

    /// A basis change taking the representative at `params` to the
    /// representative at `apply(params, s)`.
    ///
    /// Uses a closed form when one is known and otherwise searches GL(2, q)
    /// in lexicographic order. The result is always verified.
    pub fn witness<'f>(
        &self,
        id: FamilyId,
        field: &'f FieldSpec,
        params: &[FieldElement<'f>],
        s: MoveScalars<'f>,
    ) -> Result<BasisChange<'f>, FamilyError> {
        let failed = || FamilyError::MoveFailed {
            mv: self.describe(),
            label: id.label(),
            params: params.iter().map(|e| e.index()).collect(),
        };
        let moved = self.apply(params, s).ok_or_else(failed)?;
        let from = id.build(field, params);
        let to = id.build(field, &moved);
        if let Some([x1, e1, x2, e2]) = self.explicit_witness(params, s) {
            if let Ok(g) = BasisChange::from_inverse(x1, e1, x2, e2) {
                if act(&g, &from) == to {
                    return Ok(g);
                }
            }
        }
        GlGroup::new(field)
            .find_witness(&from, &to)
            .ok_or_else(failed)
    }

    /// Whether the explicit closed form (if any) verifies for this instance.
    pub fn has_explicit_witness<'f>(
        &self,
        id: FamilyId,
        field: &'f FieldSpec,
        params: &[FieldElement<'f>],
        s: MoveScalars<'f>,
    ) -> bool {
        let Some(moved) = self.apply(params, s) else {
            return false;
        };
        let Some([x1, e1, x2, e2]) = self.explicit_witness(params, s) else {
            return false;
        };
        BasisChange::from_inverse(x1, e1, x2, e2)
            .map(|g| act(&g, &id.build(field, params)) == id.build(field, &moved))
            .unwrap_or(false)
    }
}

impl fmt::Display for EquivalenceMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// The move set of a family.
pub fn equivalence_moves(id: FamilyId) -> Vec<EquivalenceMove> {
    id.equivalence_moves()
}

/// Orbits of a family's parameter domain under the closure of its moves.
#[derive(Debug, Clone)]
pub struct ParamOrbits<'f> {
    pub id: FamilyId,
    field: &'f FieldSpec,
    domain: Vec<Vec<FieldElement<'f>>>,
    position: HashMap<Vec<usize>, usize>,
    /// Domain position of the class representative of each domain point.
    root: Vec<usize>,
    reps: Vec<usize>,
}

impl<'f> ParamOrbits<'f> {
    pub fn compute(id: FamilyId, field: &'f FieldSpec) -> Result<Self, FamilyError> {
        check_case(id, field)?;
        let domain = id.param_domain(field);
        let position: HashMap<Vec<usize>, usize> = domain
            .iter()
            .enumerate()
            .map(|(i, p)| (p.iter().map(|e| e.index()).collect(), i))
            .collect();
        let mut parent: Vec<usize> = (0..domain.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for mv in id.equivalence_moves() {
            let instances = mv.instances(field);
            for (i, p) in domain.iter().enumerate() {
                for &s in &instances {
                    let Some(moved) = mv.apply(p, s) else {
                        continue;
                    };
                    let key: Vec<usize> = moved.iter().map(|e| e.index()).collect();
                    let j = *position.get(&key).ok_or_else(|| FamilyError::OutOfDomain {
                        label: id.label(),
                        reason: format!("move {mv} leaves the domain at {key:?}"),
                    })?;
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
                        parent[hi] = lo;
                    }
                }
            }
        }
        let root: Vec<usize> = (0..domain.len()).map(|i| find(&mut parent, i)).collect();
        let reps: Vec<usize> = (0..domain.len()).filter(|&i| root[i] == i).collect();
        Ok(ParamOrbits {
            id,
            field,
            domain,
            position,
            root,
            reps,
        })
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Smallest-index representative of every orbit, in index order.
    pub fn representatives(&self) -> Vec<FamilyClass> {
        self.reps
            .iter()
            .map(|&i| FamilyClass::from_elements(self.id, &self.domain[i]))
            .collect()
    }

    /// The representative class of the orbit containing `params`.
    pub fn canonical(&self, params: &[usize]) -> Option<FamilyClass> {
        let &i = self.position.get(params)?;
        Some(FamilyClass::from_elements(
            self.id,
            &self.domain[self.root[i]],
        ))
    }

    /// Members of each orbit, grouped by representative.
    pub fn classes(&self) -> Vec<Vec<FamilyClass>> {
        let mut groups: Vec<Vec<FamilyClass>> = vec![Vec::new(); self.reps.len()];
        let slot: HashMap<usize, usize> =
            self.reps.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        for (i, p) in self.domain.iter().enumerate() {
            groups[slot[&self.root[i]]].push(FamilyClass::from_elements(self.id, p));
        }
        groups
    }

    /// A chain of move instances from `params` to its orbit representative,
    /// found by breadth-first search.
    pub fn path_to_canonical(
        &self,
        params: &[usize],
    ) -> Option<Vec<(EquivalenceMove, Vec<FieldElement<'f>>, MoveScalars<'f>)>> {
        let start = *self.position.get(params)?;
        let target = self.root[start];
        let moves = self.id.equivalence_moves();
        let mut prev: HashMap<usize, (usize, EquivalenceMove, MoveScalars<'f>)> = HashMap::new();
        let mut queue = VecDeque::from([start]);
        let mut seen = vec![false; self.domain.len()];
        seen[start] = true;
        while let Some(i) = queue.pop_front() {
            if i == target {
                let mut path = Vec::new();
                let mut cur = i;
                while cur != start {
                    let (from, mv, s) = prev[&cur];
                    path.push((mv, self.domain[from].clone(), s));
                    cur = from;
                }
                path.reverse();
                return Some(path);
            }
            for mv in &moves {
                for s in mv.instances(self.field) {
                    let Some(moved) = mv.apply(&self.domain[i], s) else {
                        continue;
                    };
                    let key: Vec<usize> = moved.iter().map(|e| e.index()).collect();
                    let j = self.position[&key];
                    if !seen[j] {
                        seen[j] = true;
                        prev.insert(j, (i, *mv, s));
                        queue.push_back(j);
                    }
                }
            }
        }
        None
    }
}

/// Orbit representatives of a family's parameters.
pub fn param_orbits(id: FamilyId, field: &FieldSpec) -> Result<Vec<FamilyClass>, FamilyError> {
    Ok(ParamOrbits::compute(id, field)?.representatives())
}

/// Number of parameter orbits of a family.
pub fn family_count(id: FamilyId, field: &FieldSpec) -> Result<usize, FamilyError> {
    Ok(ParamOrbits::compute(id, field)?.count())
}

/// Closed-form count of a family, or `None` for the β′-type families which
/// only have a computed count.
pub fn closed_form_count(id: FamilyId, field: &FieldSpec) -> Result<Option<u64>, FamilyError> {
    check_case(id, field)?;
    let q = field.q() as u64;
    let n = field.n();
    let value = match (id.case, id.kind()) {
        (_, Kind::BetaPrime) => return Ok(None),
        (_, Kind::Nine) => 1,
        (CharCase::Two, Kind::Cube) => {
            if n % 2 == 1 {
                2
            } else {
                4
            }
        }
        (CharCase::Three, Kind::Cube) => 2,
        (_, Kind::Cube) => {
            if (q - 2).is_multiple_of(3) {
                2
            } else {
                4
            }
        }
        (_, Kind::Square) => 3,
        (_, Kind::Shift2) => 2,
        (_, Kind::ScaleShift2) => 1,
        (CharCase::Two, Kind::Low(k)) => match k {
            1 => q.pow(4),
            2 => q * q * (q - 1) + q,
            3 => 2 * q * q,
            4 => 2 * q * q - q,
            5 => q * (q - 1) + 1,
            6 => 2 * q,
            7 => 2 * q - 1,
            _ => unreachable!("char-2 low items stop at 7"),
        },
        (_, Kind::Low(k)) => match k {
            1 => q.pow(4),
            2 => q * q * (q - 1),
            3 => 3 * q * q,
            4 => q * q,
            5 => q,
            6 => q * (q - 1),
            7 => 3 * q,
            8 => q,
            _ => unreachable!("low items stop at 8"),
        },
    };
    Ok(Some(value))
}

/// One catalog item with its orbit representatives and counts.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub family: String,
    #[serde(skip)]
    pub id: FamilyId,
    pub representatives: Vec<FamilyClass>,
    pub computed_count: usize,
    pub closed_form_count: Option<u64>,
}

/// The full catalog over a field.
pub fn catalog(field: &FieldSpec) -> Result<Vec<CatalogEntry>, FamilyError> {
    FamilyId::all(CharCase::of(field))
        .into_iter()
        .map(|id| {
            let orbits = ParamOrbits::compute(id, field)?;
            Ok(CatalogEntry {
                family: id.label(),
                id,
                representatives: orbits.representatives(),
                computed_count: orbits.count(),
                closed_form_count: closed_form_count(id, field)?,
            })
        })
        .collect()
}
