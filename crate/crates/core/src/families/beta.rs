//! The rational normalization map `β′₁(t)` of the A10-type families, its
//! admissibility predicate and the factorization identities behind it.

use serde::Serialize;

use super::{CharCase, FamilyError, FamilyId, Kind};
use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::poly::Poly;

fn check_field(case: CharCase, field: &FieldSpec) -> Result<(), FamilyError> {
    let found = CharCase::of(field);
    if found != case {
        let label = FamilyId::beta_prime_family(case).label();
        return Err(FamilyError::CharMismatch {
            label,
            expected: case,
            found,
        });
    }
    Ok(())
}

/// The special argument with a closed-form value: `−1/2` when the
/// characteristic is not 2 or 3, `1` in characteristic 3.
fn special_point<'f>(case: CharCase, field: &'f FieldSpec) -> Option<FieldElement<'f>> {
    match case {
        CharCase::General => Some(-field.int(2).inv().expect("odd characteristic")),
        CharCase::Three => Some(field.one()),
        CharCase::Two => None,
    }
}

/// `β₁t² + β₁t + 1`
fn p1<'f>(b: FieldElement<'f>, t: FieldElement<'f>) -> FieldElement<'f> {
    b * t.square() + b * t + t.field().one()
}

/// `β₁t³ − 3t − 1`, or `β₁t³ + t + 1` in characteristic 2.
fn p2<'f>(case: CharCase, b: FieldElement<'f>, t: FieldElement<'f>) -> FieldElement<'f> {
    let f = t.field();
    match case {
        CharCase::Two => b * t.cube() + t + f.one(),
        _ => b * t.cube() - f.int(3) * t - f.one(),
    }
}

/// `β₁²t³ + 6β₁t² + 3β₁t + β₁ − 2`
fn p3<'f>(b: FieldElement<'f>, t: FieldElement<'f>) -> FieldElement<'f> {
    let f = t.field();
    b.square() * t.cube() + f.int(6) * b * t.square() + f.int(3) * b * t + b - f.int(2)
}

/// `β′₁(t)` for the given characteristic case.
///
/// At the special point the closed form (`4 − β₁`, or `2β₁ + 1` in
/// characteristic 3) is returned.
pub fn beta_prime<'f>(
    case: CharCase,
    b1: FieldElement<'f>,
    t: FieldElement<'f>,
) -> Result<FieldElement<'f>, FamilyError> {
    let f = b1.field();
    check_field(case, f)?;
    if t.field() != f {
        return Err(FieldError::MixedFields.into());
    }
    if Some(t) == special_point(case, f) {
        return Ok(match case {
            CharCase::General => f.int(4) - b1,
            _ => f.int(2) * b1 + f.one(),
        });
    }
    let den = p1(b1, t);
    let den_inv = den
        .inv()
        .map_err(|_| FamilyError::VanishingDenominator { t: t.index() })?;
    let num = match case {
        CharCase::Two => b1 * p2(case, b1, t),
        _ => p3(b1, t),
    };
    Ok(num.square() * den_inv.cube())
}

/// Whether the scalar `a` may be used in the `β₁ ↦ β′₁(a)` move of `id`.
pub fn admissible<'f>(
    id: FamilyId,
    b1: FieldElement<'f>,
    a: FieldElement<'f>,
) -> Result<bool, FamilyError> {
    if id.kind() != Kind::BetaPrime {
        return Err(FamilyError::WrongFamily {
            label: id.label(),
            what: "b1' move",
        });
    }
    let f = b1.field();
    check_field(id.case, f)?;
    if Some(a) == special_point(id.case, f) {
        return Ok(true);
    }
    let product = match id.case {
        CharCase::Two => p2(id.case, b1, a) * p1(b1, a) * b1,
        _ => p2(id.case, b1, a) * p1(b1, a) * p3(b1, a),
    };
    Ok(!product.is_zero())
}

/// `g⁻¹` entries `(ξ₁, η₁, ξ₂, η₂)` realizing `β₁ ↦ β′₁(ξ₀)`.
pub(super) fn xi0_witness<'f>(
    case: CharCase,
    b1: FieldElement<'f>,
    xi0: FieldElement<'f>,
) -> Option<[FieldElement<'f>; 4]> {
    let f = b1.field();
    let (z, o) = (f.zero(), f.one());
    let den = p1(b1, xi0).inv().ok();
    match case {
        CharCase::Two => {
            let den = den?;
            let eta1 = den;
            let xi2 = b1 * p2(case, b1, xi0) * den.square();
            let eta2 = eta1 * (b1 * xi0.square() + o);
            Some([xi0 * xi2, eta1, xi2, eta2])
        }
        _ => {
            let two_xi_1 = f.int(2) * xi0 + o;
            if two_xi_1.is_zero() {
                return Some([o, z, -f.int(2), -o]);
            }
            let den = den?;
            let eta1 = two_xi_1 * den;
            let xi2 = p3(b1, xi0) * den.square();
            let eta2 = eta1 * (b1 * xi0.square() - o) * two_xi_1.inv().ok()?;
            Some([xi0 * xi2, eta1, xi2, eta2])
        }
    }
}

/// Outcome of one coefficientwise polynomial comparison.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

fn poly<'f>(f: &'f FieldSpec, coeffs: &[FieldElement<'f>]) -> Poly<'f> {
    Poly::from_coeffs(f, coeffs)
}

/// Compares both sides of each factorization used in the fifth-subset
/// normalization, as polynomials in `t` with the given `β₁`.
pub fn identity_checks<'f>(b: FieldElement<'f>) -> Vec<IdentityCheck> {
    let f = b.field();
    let k = |n: i64| f.int(n);
    let z = f.zero();
    let o = f.one();
    let b2 = b.square();
    let b3 = b.cube();
    let mut out = Vec::new();
    if CharCase::of(f) == CharCase::Two {
        // β³t⁶ − βt² − β = β(βt³ + t + 1)²
        let lhs = poly(f, &[-b, z, -b, z, z, z, b3]);
        let inner = poly(f, &[o, o, z, b]);
        let rhs = inner.mul(&inner).scale(b);
        out.push(IdentityCheck {
            name: "P(t) = b1 (b1 t^3 + t + 1)^2",
            holds: lhs == rhs,
        });
        // β²ξ⁵ + β²ξ⁴ − (3 + β)ξ − 1 = (βξ³ − ξ − 1)(βξ² + βξ + 1)
        let lhs = poly(f, &[-o, -(k(3) + b), z, z, b2, b2]);
        let rhs = poly(f, &[-o, -o, z, b]).mul(&poly(f, &[o, b, b]));
        out.push(IdentityCheck {
            name: "alpha2' numerator",
            holds: lhs == rhs,
        });
        // ξ(βξ² − 1) − 1 = βξ³ − ξ − 1
        let lhs = poly(f, &[z, -o, z, b]).sub(&Poly::constant(o));
        let rhs = poly(f, &[-o, -o, z, b]);
        out.push(IdentityCheck {
            name: "Delta factor",
            holds: lhs == rhs,
        });
    } else {
        // β³t⁶ + 6β²t⁵ − 20βt³ − 15βt² + 6(1 − β)t + 2 − β
        //   = (βt³ − 3t − 1)(β²t³ + 6βt² + 3βt + β − 2)
        let lhs = poly(
            f,
            &[
                k(2) - b,
                k(6) * (o - b),
                -k(15) * b,
                -k(20) * b,
                z,
                k(6) * b2,
                b3,
            ],
        );
        let rhs = poly(f, &[-o, -k(3), z, b]).mul(&poly(f, &[b - k(2), k(3) * b, k(6) * b, b2]));
        out.push(IdentityCheck {
            name: "P(t) = (b1 t^3 - 3t - 1)(b1^2 t^3 + 6 b1 t^2 + 3 b1 t + b1 - 2)",
            holds: lhs == rhs,
        });
        // β²ξ⁵ + β²ξ⁴ − 2βξ³ − 4βξ² − (3 + β)ξ − 1 = (βξ³ − 3ξ − 1)(βξ² + βξ + 1)
        let lhs = poly(f, &[-o, -(k(3) + b), -k(4) * b, -k(2) * b, b2, b2]);
        let rhs = poly(f, &[-o, -k(3), z, b]).mul(&poly(f, &[o, b, b]));
        out.push(IdentityCheck {
            name: "alpha2' numerator",
            holds: lhs == rhs,
        });
        // ξ(βξ² − 1) − (2ξ + 1) = βξ³ − 3ξ − 1
        let lhs = poly(f, &[z, -o, z, b]).sub(&poly(f, &[o, k(2)]));
        let rhs = poly(f, &[-o, -k(3), z, b]);
        out.push(IdentityCheck {
            name: "Delta factor",
            holds: lhs == rhs,
        });
    }
    out
}

/// Whether every factorization identity for the field's characteristic holds
/// at `β₁`.
pub fn poly_identities<'f>(field: &'f FieldSpec, b1: FieldElement<'f>) -> bool {
    debug_assert!(b1.field() == field);
    identity_checks(b1).iter().all(|c| c.holds)
}

/// `|{x² + ax : x ∈ F}|` in characteristic 2.
pub fn range_count_x2ax(field: &FieldSpec, a: FieldElement<'_>) -> Result<usize, FamilyError> {
    if field.characteristic() != 2 {
        return Err(FamilyError::WrongCharacteristic {
            required: "characteristic 2",
            found: field.characteristic(),
        });
    }
    let mut seen = vec![false; field.q()];
    for x in field.elements() {
        seen[(x.square() + a * x).index()] = true;
    }
    Ok(seen.iter().filter(|&&s| s).count())
}

/// The side conditions of the uncorrected list (a polynomial in `t` having
/// no root in the field), kept for comparison with the corrected catalog.
pub fn original_condition<'f>(id: FamilyId, b: FieldElement<'f>) -> Result<bool, FamilyError> {
    let f = b.field();
    super::check_case(id, f)?;
    let k = |n: i64| f.int(n);
    let (z, o) = (f.zero(), f.one());
    let p = match (id.case, id.kind()) {
        (CharCase::General, Kind::BetaPrime) => poly(f, &[-o, -k(3), z, b])
            .mul(&poly(f, &[o, b, b]))
            .mul(&poly(f, &[b - k(2), k(3) * b, k(6) * b, b.square()])),
        (CharCase::General, Kind::Cube) => {
            if b.is_zero() {
                return Ok(false);
            }
            poly(f, &[b, z, z, -o])
        }
        (CharCase::Two, Kind::BetaPrime) => poly(f, &[o, o, z, b]).mul(&poly(f, &[o, b, b])),
        (CharCase::Two, Kind::Cube) => poly(f, &[b, z, z, o]),
        (CharCase::Three, Kind::BetaPrime) => poly(f, &[b, z, z, -o])
            .mul(&poly(f, &[o, b, b]))
            .mul(&poly(f, &[b - k(2), z, z, b.square()])),
        (CharCase::Three, Kind::Cube) => poly(f, &[b, z, z, -o]),
        _ => {
            return Err(FamilyError::WrongFamily {
                label: id.label(),
                what: "root condition",
            })
        }
    };
    Ok(p.roots().is_empty())
}
