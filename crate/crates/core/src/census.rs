//! Exhaustive orbit census of all `q⁸` structure matrices, the Burnside
//! cross-check, classification against the catalog and the comparison of
//! totals with the closed formulas.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{act, BasisChange, GlGroup, StructureMatrix};
use crate::families::{catalog, representative, CatalogEntry, CharCase, FamilyClass, FamilyError};
use crate::field::{FieldDescription, FieldSpec};
use crate::linalg::Matrix;

/// Largest field order for which the full enumeration is attempted.
pub const MAX_ENUMERATION_Q: usize = 9;

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("enumeration of GF({q}) needs {required_bytes} bytes of visited flags and {orbits_estimate} orbit scans; limit is q <= {limit}")]
    Budget {
        q: usize,
        required_bytes: u64,
        orbits_estimate: u64,
        limit: usize,
    },
    #[error("Burnside sum {sum} is not divisible by the group order {order}")]
    NonIntegralBurnside { sum: u128, order: u64 },
    #[error("no catalog class matches {matrix}")]
    NoMatch { matrix: String },
    #[error("{matrix} matches several catalog classes: {}", .matches.join(", "))]
    Overlap {
        matrix: String,
        matches: Vec<String>,
        witnesses: Vec<WitnessRecord>,
    },
}

/// One orbit of GL(2, q) on structure matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    /// Code of the lexicographically smallest member.
    pub representative: u64,
    pub size: u64,
}

/// All orbits in order of their representatives.
#[derive(Debug, Clone)]
pub struct OrbitTable<'f> {
    pub field: &'f FieldSpec,
    pub group_order: u64,
    pub orbits: Vec<OrbitRecord>,
}

impl<'f> OrbitTable<'f> {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn total_size(&self) -> u64 {
        self.orbits.iter().map(|o| o.size).sum()
    }

    pub fn representative(&self, k: usize) -> StructureMatrix<'f> {
        StructureMatrix::from_code(self.field, self.orbits[k].representative)
    }
}

fn budget_check(field: &FieldSpec) -> Result<(), CensusError> {
    let q = field.q();
    if q > MAX_ENUMERATION_Q {
        let q64 = q as u64;
        return Err(CensusError::Budget {
            q,
            required_bytes: q64.pow(8).div_ceil(8),
            orbits_estimate: q64.pow(4) + q64.pow(3) + 4 * q64 * q64 + 4 * q64 + 9,
            limit: MAX_ENUMERATION_Q,
        });
    }
    Ok(())
}

/// Visits every matrix in code order; each unvisited code is the smallest
/// member of a new orbit, whose members are then marked.
pub fn orbit_enumerate(field: &FieldSpec) -> Result<OrbitTable<'_>, CensusError> {
    budget_check(field)?;
    let group = GlGroup::new(field);
    let total = (field.q() as u64).pow(8);
    let mut visited = vec![0u64; total.div_ceil(64) as usize];
    let mut orbits = Vec::new();
    let mut code = 0u64;
    while code < total {
        let word = visited[(code / 64) as usize] >> (code % 64);
        if word & 1 == 1 {
            // skip a run of visited flags
            let run = (!word).trailing_zeros() as u64;
            code += run.max(1);
            continue;
        }
        let a = StructureMatrix::from_code(field, code);
        let members = group.orbit_codes(&a);
        for &m in &members {
            visited[(m / 64) as usize] |= 1 << (m % 64);
        }
        debug_assert_eq!(members[0], code);
        orbits.push(OrbitRecord {
            representative: code,
            size: members.len() as u64,
        });
        code += 1;
    }
    Ok(OrbitTable {
        field,
        group_order: group.order() as u64,
        orbits,
    })
}

/// The 8×8 matrix of the linear map `A ↦ act(g, A)` in the basis of unit
/// structure matrices.
pub fn action_matrix<'f>(g: &BasisChange<'f>) -> Matrix<'f> {
    let f = g.field();
    let images: Vec<StructureMatrix<'f>> = (0..8)
        .map(|k| {
            let mut idx = [0usize; 8];
            idx[k] = 1;
            act(
                g,
                &StructureMatrix::from_indices(f, idx).expect("0 and 1 are elements"),
            )
        })
        .collect();
    Matrix::from_fn(8, 8, |r, c| images[c].entry(r))
}

/// `dim ker(M_g − I)`, so that `|Fix(g)| = q^nullity`.
pub fn fixed_space_dimension(g: &BasisChange<'_>) -> usize {
    let m = action_matrix(g);
    m.sub(&Matrix::identity(g.field(), 8)).nullity()
}

/// Fixed points of `g` by scanning all `q⁸` matrices.
pub fn fixed_points_by_scan(g: &BasisChange<'_>) -> u64 {
    let f = g.field();
    let total = (f.q() as u64).pow(8);
    (0..total)
        .into_par_iter()
        .filter(|&c| {
            let a = StructureMatrix::from_code(f, c);
            act(g, &a) == a
        })
        .count() as u64
}

/// Number of group elements by fixed-space dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointRow {
    pub fixed_dimension: usize,
    pub fixed_points: u64,
    pub group_elements: u64,
}

/// Burnside count `(1/|G|) Σ_g q^{dim Fix(g)}` with its fixed-point table.
pub fn burnside_table(field: &FieldSpec) -> Result<(u64, Vec<FixedPointRow>), CensusError> {
    let group = GlGroup::new(field);
    let dims: Vec<usize> = group
        .elements()
        .par_iter()
        .map(fixed_space_dimension)
        .collect();
    let q = field.q() as u128;
    let mut counts = [0u64; 9];
    for &d in &dims {
        counts[d] += 1;
    }
    let sum: u128 = counts
        .iter()
        .enumerate()
        .map(|(d, &n)| n as u128 * q.pow(d as u32))
        .sum();
    let order = group.order() as u64;
    if !sum.is_multiple_of(order as u128) {
        return Err(CensusError::NonIntegralBurnside { sum, order });
    }
    let table = counts
        .iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(d, &n)| FixedPointRow {
            fixed_dimension: d,
            fixed_points: q.pow(d as u32) as u64,
            group_elements: n,
        })
        .collect();
    Ok(((sum / order as u128) as u64, table))
}

/// Orbit count by Burnside's lemma.
pub fn burnside_count(field: &FieldSpec) -> Result<u64, CensusError> {
    Ok(burnside_table(field)?.0)
}

/// An isomorphism between two catalog representatives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub from: String,
    pub to: String,
    pub xi1: usize,
    pub eta1: usize,
    pub xi2: usize,
    pub eta2: usize,
}

impl WitnessRecord {
    fn new(from: &FamilyClass, to: &FamilyClass, g: &BasisChange<'_>) -> Self {
        let [xi1, eta1, xi2, eta2] = g.inverse_entries().map(|e| e.index());
        WitnessRecord {
            from: from.to_string(),
            to: to.to_string(),
            xi1,
            eta1,
            xi2,
            eta2,
        }
    }
}

/// Result of matching a matrix against the catalog.
#[derive(Debug, Clone)]
pub enum Classification<'f> {
    Trivial,
    Family {
        class: FamilyClass,
        witness: BasisChange<'f>,
    },
}

impl Classification<'_> {
    pub fn label(&self) -> String {
        match self {
            Classification::Trivial => "trivial".to_string(),
            Classification::Family { class, .. } => class.to_string(),
        }
    }
}

/// Catalog representatives indexed by the canonical form of their orbit.
pub struct Classifier<'f> {
    field: &'f FieldSpec,
    group: GlGroup<'f>,
    entries: Vec<CatalogEntry>,
    by_canonical: HashMap<u64, Vec<FamilyClass>>,
    matrices: HashMap<FamilyClass, StructureMatrix<'f>>,
}

impl<'f> Classifier<'f> {
    pub fn new(field: &'f FieldSpec) -> Result<Self, CensusError> {
        let group = GlGroup::new(field);
        let entries = catalog(field)?;
        let mut by_canonical: HashMap<u64, Vec<FamilyClass>> = HashMap::new();
        let mut matrices = HashMap::new();
        let classes: Vec<&FamilyClass> = entries.iter().flat_map(|e| &e.representatives).collect();
        let reps: Vec<StructureMatrix<'f>> = classes
            .iter()
            .map(|c| representative(c, field))
            .collect::<Result<_, _>>()?;
        let canon: Vec<u64> = reps
            .iter()
            .map(|a| group.canonical_form(a).code())
            .collect();
        for ((cls, a), code) in classes.into_iter().zip(reps).zip(canon) {
            by_canonical.entry(code).or_default().push(cls.clone());
            matrices.insert(cls.clone(), a);
        }
        Ok(Classifier {
            field,
            group,
            entries,
            by_canonical,
            matrices,
        })
    }

    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    pub fn group(&self) -> &GlGroup<'f> {
        &self.group
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// Classes whose representative lies in the orbit with the given
    /// canonical code.
    pub fn classes_for_canonical(&self, code: u64) -> &[FamilyClass] {
        self.by_canonical
            .get(&code)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn matrix_of(&self, cls: &FamilyClass) -> Option<&StructureMatrix<'f>> {
        self.matrices.get(cls)
    }

    fn overlap_witnesses(&self, classes: &[FamilyClass]) -> Vec<WitnessRecord> {
        let first = &classes[0];
        let a = self.matrices[first];
        classes[1..]
            .iter()
            .filter_map(|c| {
                let b = self.matrices[c];
                self.group
                    .find_witness(&a, &b)
                    .map(|g| WitnessRecord::new(first, c, &g))
            })
            .collect()
    }

    /// The unique catalog class of `a` with a verified witness `g`,
    /// `act(g, a) = representative(class)`.
    pub fn classify(&self, a: &StructureMatrix<'f>) -> Result<Classification<'f>, CensusError> {
        if a.is_zero() {
            return Ok(Classification::Trivial);
        }
        let code = self.group.canonical_form(a).code();
        match self.classes_for_canonical(code) {
            [] => Err(CensusError::NoMatch {
                matrix: a.to_string(),
            }),
            [cls] => {
                let target = self.matrices[cls];
                let witness = self
                    .group
                    .find_witness(a, &target)
                    .expect("same canonical form implies a witness");
                debug_assert_eq!(act(&witness, a), target);
                Ok(Classification::Family {
                    class: cls.clone(),
                    witness,
                })
            }
            many => Err(CensusError::Overlap {
                matrix: a.to_string(),
                matches: many.iter().map(|c| c.to_string()).collect(),
                witnesses: self.overlap_witnesses(many),
            }),
        }
    }
}

/// Convenience wrapper building a [`Classifier`] for one query.
pub fn classify<'f>(a: &StructureMatrix<'f>) -> Result<Classification<'f>, CensusError> {
    Classifier::new(a.field())?.classify(a)
}

/// One row of the per-family table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub family: String,
    pub computed_count: u64,
    pub closed_form_count: Option<u64>,
    /// `None` when there is no closed form.
    pub matches: Option<bool>,
    /// Distinct isomorphism classes among the family's representatives.
    pub distinct_classes: u64,
}

/// Closed-form orbit totals evaluated at `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaTotals {
    /// One polynomial in `q` per characteristic.
    pub uniform: u64,
    /// Totals split by `q mod 3` or the parity of `n`, without the β′ family.
    pub split: u64,
    /// `split` plus the computed β′-family count.
    pub with_family: u64,
    /// Sum of computed family counts plus the trivial algebra.
    pub catalog: u64,
}

/// Evaluates the closed-form totals, given the computed size of the
/// β′-type family.
pub fn formula_totals(
    field: &FieldSpec,
    beta_family_count: u64,
    catalog_total: u64,
) -> FormulaTotals {
    let q = field.q() as u64;
    let base = q.pow(4) + q.pow(3) + 4 * q * q;
    let (uniform, split) = match CharCase::of(field) {
        CharCase::General => {
            let tail = if (q - 2).is_multiple_of(3) { 7 } else { 9 };
            (base + 4 * q + 7, base + 4 * q + tail)
        }
        CharCase::Two => {
            let tail = if field.n() % 2 == 1 { 6 } else { 7 };
            (base + 3 * q + 6, base + 3 * q + tail)
        }
        CharCase::Three => (base + 4 * q + 6, base + 4 * q + 6),
    };
    FormulaTotals {
        uniform,
        split,
        with_family: split + beta_family_count,
        catalog: catalog_total,
    }
}

/// A formula value that differs from the census ground truth.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub formula: String,
    pub value: u64,
    pub census: u64,
    pub delta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapRecord {
    pub orbit_representative: [usize; 8],
    pub orbit_size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapRecord {
    pub orbit_representative: [usize; 8],
    pub classes: Vec<String>,
    pub witnesses: Vec<WitnessRecord>,
}

/// Whether classification is a bijection between orbits and catalog classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCheck {
    pub bijection: bool,
    pub orbits_matched: u64,
    pub gaps: Vec<GapRecord>,
    pub overlaps: Vec<OverlapRecord>,
}

/// Census results for one field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub schema: u32,
    pub field: FieldDescription,
    pub q: u64,
    pub char_case: CharCase,
    pub group_order: u64,
    /// Orbit count from enumeration, including the trivial algebra; absent
    /// when the field is too large to enumerate.
    pub enumeration_count: Option<u64>,
    pub enumeration_total_size: Option<u64>,
    pub burnside_count: u64,
    pub fixed_point_table: Vec<FixedPointRow>,
    pub oracles_agree: Option<bool>,
    pub orbit_stabilizer_ok: Option<bool>,
    pub families: Vec<FamilyRow>,
    pub totals: FormulaTotals,
    pub warnings: Vec<Discrepancy>,
    pub partition: Option<PartitionCheck>,
}

impl CensusReport {
    /// Internal consistency failures: oracle disagreement, orbit–stabilizer
    /// failure, or a partition that is not a bijection.
    pub fn consistency_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.oracles_agree == Some(false) {
            out.push(format!(
                "enumeration count {} != Burnside count {}",
                self.enumeration_count.unwrap_or_default(),
                self.burnside_count
            ));
        }
        if self.orbit_stabilizer_ok == Some(false) {
            out.push("orbit size x stabilizer order != |GL(2,q)| for some orbit".into());
        }
        if let Some(p) = &self.partition {
            if !p.bijection {
                out.push(format!(
                    "classification is not a bijection: {} gap(s), {} overlap(s)",
                    p.gaps.len(),
                    p.overlaps.len()
                ));
            }
        }
        out
    }

    /// Aligned-column human-readable form.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "census over GF({}) (p = {}, n = {}, modulus {:?})",
            self.q, self.field.p, self.field.n, self.field.modulus
        );
        let _ = writeln!(s, "{:<28}{}", "characteristic case", self.char_case);
        let _ = writeln!(s, "{:<28}{}", "|GL(2,q)|", self.group_order);
        match self.enumeration_count {
            Some(n) => {
                let _ = writeln!(s, "{:<28}{}", "orbits (enumeration)", n);
            }
            None => {
                let _ = writeln!(
                    s,
                    "{:<28}skipped (q > {})",
                    "orbits (enumeration)", MAX_ENUMERATION_Q
                );
            }
        }
        let _ = writeln!(s, "{:<28}{}", "orbits (Burnside)", self.burnside_count);
        if let Some(ok) = self.oracles_agree {
            let _ = writeln!(s, "{:<28}{}", "oracles agree", ok);
        }
        if let Some(ok) = self.orbit_stabilizer_ok {
            let _ = writeln!(s, "{:<28}{}", "orbit-stabilizer", ok);
        }
        let _ = writeln!(s);
        let _ = writeln!(
            s,
            "{:<8}{:>10}{:>13}{:>8}{:>10}",
            "family", "computed", "closed form", "match", "distinct"
        );
        for row in &self.families {
            let cf = row
                .closed_form_count
                .map_or("-".to_string(), |v| v.to_string());
            let m = row.matches.map_or("-".to_string(), |v| v.to_string());
            let _ = writeln!(
                s,
                "{:<8}{:>10}{:>13}{:>8}{:>10}",
                row.family, row.computed_count, cf, m, row.distinct_classes
            );
        }
        let _ = writeln!(s);
        let t = &self.totals;
        let _ = writeln!(s, "{:<28}{}", "uniform formula", t.uniform);
        let _ = writeln!(s, "{:<28}{}", "split formula", t.split);
        let _ = writeln!(s, "{:<28}{}", "split formula + family", t.with_family);
        let _ = writeln!(s, "{:<28}{}", "catalog total", t.catalog);
        for w in &self.warnings {
            let _ = writeln!(
                s,
                "warning: {} = {} but census = {} (delta {:+})",
                w.formula, w.value, w.census, w.delta
            );
        }
        if let Some(p) = &self.partition {
            let _ = writeln!(s);
            let _ = writeln!(s, "{:<28}{}", "partition is a bijection", p.bijection);
            for g in &p.gaps {
                let _ = writeln!(
                    s,
                    "gap: orbit of {:?} (size {}) matches no class",
                    g.orbit_representative, g.orbit_size
                );
            }
            for o in &p.overlaps {
                let _ = writeln!(
                    s,
                    "overlap: orbit of {:?} matches {}",
                    o.orbit_representative,
                    o.classes.join(", ")
                );
                for w in &o.witnesses {
                    let _ = writeln!(
                        s,
                        "  {} -> {} via xi1={} eta1={} xi2={} eta2={}",
                        w.from, w.to, w.xi1, w.eta1, w.xi2, w.eta2
                    );
                }
            }
        }
        for f in self.consistency_failures() {
            let _ = writeln!(s, "CONSISTENCY FAILURE: {f}");
        }
        s
    }

    /// The per-family table as CSV with columns
    /// `family, computed_count, closed_form_count, match`.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["family", "computed_count", "closed_form_count", "match"])?;
        for row in &self.families {
            w.write_record([
                row.family.clone(),
                row.computed_count.to_string(),
                row.closed_form_count
                    .map_or(String::new(), |v| v.to_string()),
                row.matches.map_or(String::new(), |v| v.to_string()),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn indices(field: &FieldSpec, code: u64) -> [usize; 8] {
    StructureMatrix::from_code(field, code).indices()
}

/// Runs every check available for the field and collects the results.
///
/// Enumeration, partition and orbit–stabilizer checks are skipped for
/// `q > MAX_ENUMERATION_Q`; the Burnside count is always computed.
pub fn verify_partition(field: &FieldSpec) -> Result<CensusReport, CensusError> {
    let (burnside, fixed_point_table) = burnside_table(field)?;
    let classifier = Classifier::new(field)?;
    let group = classifier.group();

    let mut families = Vec::new();
    let mut catalog_total = 1u64;
    let mut beta_count = 0u64;
    for entry in classifier.entries() {
        let mut codes: Vec<u64> = entry
            .representatives
            .iter()
            .map(|c| group.canonical_form(&classifier.matrices[c]).code())
            .collect();
        codes.sort_unstable();
        codes.dedup();
        let computed = entry.computed_count as u64;
        catalog_total += computed;
        if entry.closed_form_count.is_none() {
            beta_count = computed;
        }
        families.push(FamilyRow {
            family: entry.family.clone(),
            computed_count: computed,
            closed_form_count: entry.closed_form_count,
            matches: entry.closed_form_count.map(|c| c == computed),
            distinct_classes: codes.len() as u64,
        });
    }
    let totals = formula_totals(field, beta_count, catalog_total);

    let mut report = CensusReport {
        schema: REPORT_SCHEMA,
        field: field.description(),
        q: field.q() as u64,
        char_case: CharCase::of(field),
        group_order: group.order() as u64,
        enumeration_count: None,
        enumeration_total_size: None,
        burnside_count: burnside,
        fixed_point_table,
        oracles_agree: None,
        orbit_stabilizer_ok: None,
        families,
        totals,
        warnings: Vec::new(),
        partition: None,
    };

    let table = match orbit_enumerate(field) {
        Ok(t) => t,
        Err(CensusError::Budget { .. }) => {
            report.warnings = discrepancies(&report.totals, burnside);
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let census_total = table.len() as u64;
    report.enumeration_count = Some(census_total);
    report.enumeration_total_size = Some(table.total_size());
    report.oracles_agree = Some(census_total == burnside);

    let order = table.group_order;
    report.orbit_stabilizer_ok = Some(table.orbits.iter().enumerate().all(|(k, o)| {
        let stab = group.automorphism_order(&table.representative(k)) as u64;
        o.size * stab == order
    }));

    let mut gaps = Vec::new();
    let mut overlaps = Vec::new();
    let mut matched = 0u64;
    for o in &table.orbits {
        if o.representative == 0 {
            continue;
        }
        match classifier.classes_for_canonical(o.representative) {
            [] => gaps.push(GapRecord {
                orbit_representative: indices(field, o.representative),
                orbit_size: o.size,
            }),
            [_] => matched += 1,
            many => overlaps.push(OverlapRecord {
                orbit_representative: indices(field, o.representative),
                classes: many.iter().map(|c| c.to_string()).collect(),
                witnesses: classifier.overlap_witnesses(many),
            }),
        }
    }
    report.partition = Some(PartitionCheck {
        bijection: gaps.is_empty() && overlaps.is_empty(),
        orbits_matched: matched,
        gaps,
        overlaps,
    });
    report.warnings = discrepancies(&report.totals, census_total);
    Ok(report)
}

fn discrepancies(totals: &FormulaTotals, census: u64) -> Vec<Discrepancy> {
    [
        ("uniform formula", totals.uniform),
        ("split formula", totals.split),
        ("split formula + family", totals.with_family),
        ("catalog total", totals.catalog),
    ]
    .into_iter()
    .filter(|&(_, v)| v != census)
    .map(|(name, value)| Discrepancy {
        formula: name.to_string(),
        value,
        census,
        delta: value as i64 - census as i64,
    })
    .collect()
}
