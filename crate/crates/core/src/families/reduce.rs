//! Normalization of fifth-subset algebras
//! `((α₁, α₂, α₂, α₄), (β₁, −α₁, −α₁, −α₂))` to a catalog representative.

use serde::Serialize;

use super::{CharCase, FamilyClass, FamilyError, FamilyId, Kind, ParamOrbits};
use crate::algebra::{act, BasisChange, GlGroup, StructureMatrix};
use crate::field::FieldElement;

/// Target class of a fifth-subset algebra with a basis change `g` such that
/// `act(g, A)` is the class representative.
#[derive(Debug, Clone, Serialize)]
pub struct Reduction<'f> {
    pub class: FamilyClass,
    pub witness: BasisChange<'f>,
    /// Name of the branch of the decision tree that fired.
    pub branch: &'static str,
}

fn change<'f>(entries: [FieldElement<'f>; 4]) -> BasisChange<'f> {
    let [x1, e1, x2, e2] = entries;
    BasisChange::from_inverse(x1, e1, x2, e2).expect("branch guarantees a nonzero determinant")
}

/// One pass of the decision tree: a basis change to a matrix of one of the
/// fifth-subset target shapes, plus the branch name.
fn normalize<'f>(
    a: &StructureMatrix<'f>,
) -> Result<(FamilyId, BasisChange<'f>, &'static str), FamilyError> {
    let f = a.field();
    let case = CharCase::of(f);
    let [a1, a2, a4, b1] = a.fifth_params()?;
    let (z, o) = (f.zero(), f.one());
    let family = |kind: Kind| FamilyId::with_kind(case, kind);

    if !a4.is_zero() {
        if !a1.is_zero() {
            // ξ₁ = 0, η₂ = −α₂/α₄ removes α₁
            let g0 = change([z, o, o, -a2 * a4.inv()?]);
            let (id, g, branch) = normalize(&act(&g0, a))?;
            return Ok((id, g.compose(&g0), branch));
        }
        if !a2.is_zero() {
            let g = change([a4 * a2.inv()?.square(), z, z, a2.inv()?]);
            return Ok((family(Kind::BetaPrime), g, "a4 != 0, a2 != 0"));
        }
        return Ok((family(Kind::Cube), change([a4, z, z, o]), "a4 != 0, a2 = 0"));
    }

    if case == CharCase::Two {
        return Ok(match (a1.is_zero(), a2.is_zero()) {
            (false, false) => (
                family(Kind::Shift2),
                change([a1.inv()?, z, z, a2.inv()?]),
                "a4 = 0, a1 != 0, a2 != 0",
            ),
            (true, false) => (
                family(Kind::ScaleShift2),
                change([o, z, z, a2.inv()?]),
                "a4 = 0, a1 = 0, a2 != 0",
            ),
            (false, true) => {
                let a1i = a1.inv()?;
                let g0 = change([a1i, z, b1 * a1i.square(), o]);
                let swap = change([z, o, o, z]);
                (
                    family(Kind::ScaleShift2),
                    swap.compose(&g0),
                    "a4 = 0, a1 != 0, a2 = 0",
                )
            }
            (true, true) => (
                family(Kind::Cube),
                change([z, o, b1, z]),
                "a4 = 0, a1 = 0, a2 = 0",
            ),
        });
    }

    if !a2.is_zero() {
        let g = change([o, z, -a1 * (f.int(2) * a2).inv()?, a2.inv()?]);
        return Ok((family(Kind::Square), g, "a4 = 0, a2 != 0"));
    }
    if a1.is_zero() {
        return Ok((
            family(Kind::Cube),
            change([z, o, b1, z]),
            "a4 = 0, a1 = 0, a2 = 0",
        ));
    }
    let a1i = a1.inv()?;
    let swap = change([z, -o, o, z]);
    if case == CharCase::General {
        // ((1,0,0,0),(0,−1,−1,0)) first, then swap to A12(0)
        let g0 = change([a1i, z, b1 * (f.int(3) * a1.square()).inv()?, o]);
        return Ok((
            family(Kind::Square),
            swap.compose(&g0),
            "a4 = 0, a1 != 0, a2 = 0",
        ));
    }
    if b1.is_zero() {
        let g0 = change([a1i, z, z, o]);
        return Ok((
            family(Kind::Square),
            swap.compose(&g0),
            "a4 = 0, a1 != 0, a2 = 0, b1 = 0",
        ));
    }
    // ((1,0,0,0),(1,−1,−1,0)), isomorphic to the β′ family at β₁ = 0
    let g0 = change([a1i, z, z, b1 * a1i.square()]);
    let mid = act(&g0, a);
    let target = family(Kind::BetaPrime).build(f, &[z]);
    let g1 = GlGroup::new(f).find_witness(&mid, &target).ok_or_else(|| {
        FamilyError::ReductionFailed {
            matrix: a.to_string(),
        }
    })?;
    Ok((
        family(Kind::BetaPrime),
        g1.compose(&g0),
        "a4 = 0, a1 != 0, a2 = 0, b1 != 0",
    ))
}

/// Reduces a fifth-subset algebra to its catalog class, returning a verified
/// witness.
pub fn reduce_fifth_family<'f>(a: &StructureMatrix<'f>) -> Result<Reduction<'f>, FamilyError> {
    let f = a.field();
    a.fifth_params()?;
    if a.is_zero() {
        return Err(FamilyError::Trivial);
    }
    let (id, mut g, branch) = normalize(a)?;
    let reached = act(&g, a);
    let params = vec![reached.entry(4)];
    if id.build(f, &params) != reached {
        return Err(FamilyError::ReductionFailed {
            matrix: a.to_string(),
        });
    }
    let orbits = ParamOrbits::compute(id, f)?;
    let key = vec![params[0].index()];
    let path = orbits
        .path_to_canonical(&key)
        .ok_or_else(|| FamilyError::ReductionFailed {
            matrix: a.to_string(),
        })?;
    for (mv, from, s) in path {
        g = mv.witness(id, f, &from, s)?.compose(&g);
    }
    let class = orbits.canonical(&key).expect("key is in the domain");
    if act(&g, a) != id.build(f, &class.elements(f)?) {
        return Err(FamilyError::ReductionFailed {
            matrix: a.to_string(),
        });
    }
    Ok(Reduction {
        class,
        witness: g,
        branch,
    })
}
