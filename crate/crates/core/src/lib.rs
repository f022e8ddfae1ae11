//! Exact census and classification of two-dimensional algebras over finite
//! fields.

pub mod algebra;
pub mod census;
pub mod cli;
pub mod families;
pub mod field;
pub mod linalg;
pub mod orbitmap;
pub mod poly;

pub use algebra::{act, BasisChange, GlGroup, InvariantFingerprint, StructureMatrix};
pub use families::{CharCase, FamilyClass, FamilyId};
pub use field::{FieldElement, FieldSpec};
