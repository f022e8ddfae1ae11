//! The rational map `f(a, t) = (a²t³ + 6at² + 3at + a − 2)² / (at² + at + 1)³`,
//! its composition law `f(f(a, s), t) = f(a, f(s, t))` and the graph of
//! `a → f(a, t)` over a finite field.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{admissible, param_orbits, CharCase, FamilyError, FamilyId};
use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitMapError {
    #[error("the map is only defined in characteristic other than 2 and 3 (found {found})")]
    WrongCharacteristic { found: u32 },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

fn check_field(field: &FieldSpec) -> Result<(), OrbitMapError> {
    match field.characteristic() {
        2 | 3 => Err(OrbitMapError::WrongCharacteristic {
            found: field.characteristic(),
        }),
        _ => Ok(()),
    }
}

/// `f(a, t)` with an explicit definedness flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapEvaluation<'f> {
    pub a: FieldElement<'f>,
    pub t: FieldElement<'f>,
    /// `at² + at + 1 ≠ 0`
    pub defined: bool,
    pub value: Option<FieldElement<'f>>,
}

impl Serialize for MapEvaluation<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MapEvaluation", 4)?;
        st.serialize_field("a", &self.a.index())?;
        st.serialize_field("t", &self.t.index())?;
        st.serialize_field("defined", &self.defined)?;
        st.serialize_field("value", &self.value.map(|v| v.index()))?;
        st.end()
    }
}

fn numerator<'f>(a: FieldElement<'f>, t: FieldElement<'f>) -> FieldElement<'f> {
    let f = a.field();
    a.square() * t.cube() + f.int(6) * a * t.square() + f.int(3) * a * t + a - f.int(2)
}

fn denominator<'f>(a: FieldElement<'f>, t: FieldElement<'f>) -> FieldElement<'f> {
    a * t.square() + a * t + a.field().one()
}

/// Evaluates `f(a, t)`.
pub fn f_eval<'f>(
    a: FieldElement<'f>,
    t: FieldElement<'f>,
) -> Result<MapEvaluation<'f>, OrbitMapError> {
    check_field(a.field())?;
    if a.field() != t.field() {
        return Err(FieldError::MixedFields.into());
    }
    let d = denominator(a, t);
    let value = (!d.is_zero()).then(|| numerator(a, t).square() * d.inv().expect("nonzero").cube());
    Ok(MapEvaluation {
        a,
        t,
        defined: value.is_some(),
        value,
    })
}

fn f_opt<'f>(a: FieldElement<'f>, t: FieldElement<'f>) -> Option<FieldElement<'f>> {
    let d = denominator(a, t);
    (!d.is_zero()).then(|| numerator(a, t).square() * d.inv().expect("nonzero").cube())
}

/// A fully-defined triple on which the composition law fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub a: usize,
    pub s: usize,
    pub t: usize,
    pub lhs: usize,
    pub rhs: usize,
}

/// Pointwise check of the composition law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociativityReport {
    pub q: u64,
    pub triples: u64,
    pub defined_triples: u64,
    /// In lexicographic order of `(a, s, t)`.
    pub violations: Vec<Violation>,
}

/// Checks `f(f(a, s), t) = f(a, f(s, t))` on every triple where all four
/// evaluations are defined.
pub fn f_associativity_check(field: &FieldSpec) -> Result<AssociativityReport, OrbitMapError> {
    check_field(field)?;
    let elems: Vec<FieldElement<'_>> = field.elements().collect();
    let rows: Vec<(u64, Vec<Violation>)> = elems
        .par_iter()
        .map(|&a| {
            let mut defined = 0u64;
            let mut out = Vec::new();
            for &s in &elems {
                let Some(u) = f_opt(a, s) else { continue };
                for &t in &elems {
                    let (Some(lhs), Some(v)) = (f_opt(u, t), f_opt(s, t)) else {
                        continue;
                    };
                    let Some(rhs) = f_opt(a, v) else { continue };
                    defined += 1;
                    if lhs != rhs {
                        out.push(Violation {
                            a: a.index(),
                            s: s.index(),
                            t: t.index(),
                            lhs: lhs.index(),
                            rhs: rhs.index(),
                        });
                    }
                }
            }
            (defined, out)
        })
        .collect();
    Ok(AssociativityReport {
        q: field.q() as u64,
        triples: (field.q() as u64).pow(3),
        defined_triples: rows.iter().map(|r| r.0).sum(),
        violations: rows.into_iter().flat_map(|r| r.1).collect(),
    })
}

/// Comparison of both sides as rational functions of `t` for fixed `(a, s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalCheck {
    pub pairs_checked: u64,
    /// `(a, s)` pairs where the cross-multiplied numerators differ.
    pub failing_pairs: Vec<(usize, usize)>,
}

fn num_poly<'f>(a: FieldElement<'f>) -> Poly<'f> {
    let f = a.field();
    let t = Poly::t(f);
    t.pow(3)
        .scale(a.square())
        .add(&t.pow(2).scale(f.int(6) * a))
        .add(&t.scale(f.int(3) * a))
        .add(&Poly::constant(a - f.int(2)))
}

fn den_poly<'f>(a: FieldElement<'f>) -> Poly<'f> {
    let t = Poly::t(a.field());
    t.pow(2)
        .scale(a)
        .add(&t.scale(a))
        .add(&Poly::constant(a.field().one()))
}

/// For every `(a, s)` with `u = f(a, s)` defined, compares
/// `N(u,t)²·E(t)³` with `M(t)²·D(u,t)³` in `GF(q)[t]`, where
/// `f(a, f(s, t)) = M/E` after clearing denominators.
pub fn f_formal_check(field: &FieldSpec) -> Result<FormalCheck, OrbitMapError> {
    check_field(field)?;
    let mut pairs = 0u64;
    let mut failing = Vec::new();
    for a in field.elements() {
        for s in field.elements() {
            let Some(u) = f_opt(a, s) else { continue };
            pairs += 1;
            let x = num_poly(s).pow(2);
            let y = den_poly(s).pow(3);
            let m = x
                .pow(3)
                .scale(a.square())
                .add(&x.pow(2).mul(&y).scale(field.int(6) * a))
                .add(&x.mul(&y.pow(2)).scale(field.int(3) * a))
                .add(&y.pow(3).mul(&Poly::constant(a - field.int(2))));
            let e = x.pow(2).scale(a).add(&x.mul(&y).scale(a)).add(&y.pow(2));
            let lhs = num_poly(u).pow(2).mul(&e.pow(3));
            let rhs = m.pow(2).mul(&den_poly(u).pow(3));
            if lhs.sub(&rhs).is_zero() {
                continue;
            }
            failing.push((a.index(), s.index()));
        }
    }
    Ok(FormalCheck {
        pairs_checked: pairs,
        failing_pairs: failing,
    })
}

/// Directed edge `a → f(a, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub t: usize,
    pub value: usize,
    /// Whether `t` is an admissible scalar for the β′ move at `a`.
    pub admissible: bool,
}

/// Graph of the map together with its connected components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitGraph {
    pub q: u64,
    pub edges: Vec<Edge>,
    /// Connected components using admissible edges only, each sorted,
    /// ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    /// Connected components using every defined edge.
    pub unrestricted_classes: Vec<Vec<usize>>,
    /// Parameter orbits of the β′ family, by element index.
    pub family_classes: Vec<Vec<usize>>,
    /// Whether every component lies inside one parameter orbit.
    pub refines_family_orbits: bool,
}

impl OrbitGraph {
    pub fn successors(&self, a: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| e.a == a)
            .map(|e| e.value)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// One `a t f(a,t)` line per edge.
    pub fn edge_list(&self) -> String {
        let mut s = String::new();
        for e in &self.edges {
            let _ = writeln!(s, "{} {} {}", e.a, e.t, e.value);
        }
        s
    }
}

fn components(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru.max(rv)] = ru.min(rv);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..n {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(x);
    }
    groups.into_values().collect()
}

/// Edges `a → f(a, t)` for all `a` and defined `t`, with reachability
/// classes compared against the β′ family's parameter orbits.
pub fn orbit_graph(field: &FieldSpec) -> Result<OrbitGraph, OrbitMapError> {
    check_field(field)?;
    let id = FamilyId::beta_prime_family(CharCase::General);
    let mut edges = Vec::new();
    for a in field.elements() {
        for t in field.elements() {
            if let Some(v) = f_opt(a, t) {
                let admissible = admissible(id, a, t)?;
                edges.push(Edge {
                    a: a.index(),
                    t: t.index(),
                    value: v.index(),
                    admissible,
                });
            }
        }
    }
    let q = field.q();
    let classes = components(
        q,
        edges
            .iter()
            .filter(|e| e.admissible)
            .map(|e| (e.a, e.value)),
    );
    let unrestricted_classes = components(q, edges.iter().map(|e| (e.a, e.value)));

    let reps = param_orbits(id, field)?;
    let orbits = crate::families::ParamOrbits::compute(id, field)?;
    let mut family_classes: Vec<Vec<usize>> = reps
        .iter()
        .map(|r| {
            (0..q)
                .filter(|&b| orbits.canonical(&[b]).as_ref() == Some(r))
                .collect()
        })
        .collect();
    family_classes.sort();
    let class_of = |b: usize| family_classes.iter().position(|c| c.contains(&b));
    let refines = classes
        .iter()
        .all(|c| c.iter().all(|&b| class_of(b) == class_of(c[0])));
    Ok(OrbitGraph {
        q: q as u64,
        edges,
        classes,
        unrestricted_classes,
        family_classes,
        refines_family_orbits: refines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_maps_to_four() {
        let f = FieldSpec::prime(5).unwrap();
        for t in f.elements() {
            assert_eq!(f_eval(f.zero(), t).unwrap().value, Some(f.int(4)));
        }
    }

    #[test]
    fn gf5_sample_value() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f_eval(f.one(), f.int(2)).unwrap().value, Some(f.int(3)));
    }

    #[test]
    fn gf7_undefined_points() {
        let f = FieldSpec::prime(7).unwrap();
        let undefined: Vec<usize> = f
            .elements()
            .filter(|&t| !f_eval(f.one(), t).unwrap().defined)
            .map(|t| t.index())
            .collect();
        assert_eq!(undefined, [2, 4]);
    }

    #[test]
    fn rejects_small_characteristic() {
        let f = FieldSpec::prime(2).unwrap();
        assert!(matches!(
            f_associativity_check(&f),
            Err(OrbitMapError::WrongCharacteristic { found: 2 })
        ));
        let f = FieldSpec::prime(3).unwrap();
        assert!(orbit_graph(&f).is_err());
    }

    #[test]
    fn graph_out_degree_at_most_q() {
        let f = FieldSpec::prime(7).unwrap();
        let g = orbit_graph(&f).unwrap();
        for a in 0..7 {
            assert!(g.edges.iter().filter(|e| e.a == a).count() <= 7);
        }
        assert_eq!(g.successors(0), [4]);
    }
}
