//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria listed in `EXPECTED_RED` are checked as stated and are known to
//! be false; the run fails if any other criterion fails or if one of them
//! starts passing.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twodim::algebra::{act, act_fifth_explicit, act_with_layout, is_isomorphic, TensorLayout};
use twodim::census::{
    burnside_count, orbit_enumerate, verify_partition, Classification, Classifier,
};
use twodim::families::{
    beta_prime, closed_form_count, param_orbits, poly_identities, reduce_fifth_family,
    representative, FamilyError,
};
use twodim::orbitmap::f_associativity_check;
use twodim::{BasisChange, CharCase, FamilyId, FieldSpec, GlGroup, StructureMatrix};

/// Single-threaded wall-clock limit for the GF(5) enumeration.
const GF5_TIME_LIMIT: Duration = Duration::from_secs(300);
/// Random triples for the action laws over GF(5).
const RANDOM_TRIPLES: usize = 10_000;
/// Known-false criteria.
const EXPECTED_RED: [u32; 2] = [3, 8];

type Check = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

fn field(p: u32, n: u32) -> FieldSpec {
    FieldSpec::new(p, n, None).expect("valid field")
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("pool")
        .install(f)
}

fn oracle_agreement() -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let f = field(p, n);
        let start = Instant::now();
        let enumerated = single_threaded(|| orbit_enumerate(&f).map(|t| t.len() as u64));
        let elapsed = start.elapsed();
        let burnside = burnside_count(&f);
        match (enumerated, burnside) {
            (Ok(e), Ok(b)) => {
                pass &= e == b;
                if f.q() == 5 {
                    pass &= elapsed < GF5_TIME_LIMIT;
                }
                detail.push(format!(
                    "q={}: {e}/{b} ({:.2}s)",
                    f.q(),
                    elapsed.as_secs_f64()
                ));
            }
            (e, b) => {
                pass = false;
                detail.push(format!("q={}: {e:?} {b:?}", f.q()));
            }
        }
    }
    Outcome {
        pass,
        detail: detail.join(", "),
    }
}

fn closed_forms() -> Outcome {
    let mut pass = true;
    let mut checked = 0;
    let mut detail = String::new();
    for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        let f = field(p, n);
        for id in FamilyId::all(CharCase::of(&f)) {
            let computed = param_orbits(id, &f).map(|v| v.len() as u64);
            match (computed, closed_form_count(id, &f)) {
                (Ok(c), Ok(Some(e))) => {
                    checked += 1;
                    if c != e {
                        pass = false;
                        detail += &format!(" {id}@{}: {c} != {e}", f.q());
                    }
                }
                (Ok(_), Ok(None)) => {}
                (c, e) => {
                    pass = false;
                    detail += &format!(" {id}@{}: {c:?} {e:?}", f.q());
                }
            }
        }
    }
    let spot: [(u32, u32, &str, u64); 17] = [
        (5, 1, "A1", 625),
        (5, 1, "A2", 100),
        (5, 1, "A3", 75),
        (5, 1, "A4", 25),
        (5, 1, "A5", 5),
        (5, 1, "A6", 20),
        (5, 1, "A7", 15),
        (5, 1, "A8", 5),
        (5, 1, "A9", 1),
        (5, 1, "A11", 2),
        (5, 1, "A12", 3),
        (2, 1, "A4,2", 6),
        (2, 1, "A7,2", 3),
        (2, 1, "A9,2", 2),
        (2, 1, "A10,2", 2),
        (2, 1, "A11,2", 1),
        (2, 2, "A9,2", 4),
    ];
    for (p, n, label, expected) in spot {
        let f = field(p, n);
        let got = FamilyId::parse(label)
            .and_then(|id| param_orbits(id, &f))
            .map(|v| v.len() as u64);
        if got != Ok(expected) {
            pass = false;
            detail += &format!(" {label}@{}: {got:?} != {expected}", f.q());
        }
    }
    Outcome {
        pass,
        detail: format!("{checked} family counts over 7 fields{detail}"),
    }
}

fn partition() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for p in [2, 3] {
        let f = field(p, 1);
        match verify_partition(&f) {
            Ok(r) => {
                let part = r.partition.expect("enumerable");
                pass &= part.bijection;
                let mut line = format!(
                    "GF({p}): {} gaps, {} overlaps",
                    part.gaps.len(),
                    part.overlaps.len()
                );
                for o in &part.overlaps {
                    line += &format!(
                        "; {:?} in {}",
                        o.orbit_representative,
                        o.classes.join(" & ")
                    );
                    for w in &o.witnesses {
                        line += &format!(
                            " [{}->{} xi1={} eta1={} xi2={} eta2={}]",
                            w.from, w.to, w.xi1, w.eta1, w.xi2, w.eta2
                        );
                    }
                }
                for g in &part.gaps {
                    line += &format!("; gap {:?}", g.orbit_representative);
                }
                detail.push(line);
            }
            Err(e) => {
                pass = false;
                detail.push(format!("GF({p}): {e}"));
            }
        }
    }
    Outcome {
        pass,
        detail: detail.join(" | "),
    }
}

fn formula_report() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for (p, expected) in [(5, 877u64), (2, 52)] {
        let f = field(p, 1);
        let Ok(r) = verify_partition(&f) else {
            return Outcome {
                pass: false,
                detail: format!("GF({p}) report failed"),
            };
        };
        let census = r.enumeration_count.unwrap_or(r.burnside_count);
        pass &= r.totals.uniform == expected;
        let text = r.to_text();
        pass &= text.contains(&format!("uniform formula             {expected}"));
        pass &= text.contains("split formula + family");
        for (name, value) in [
            ("uniform formula", r.totals.uniform),
            ("split formula", r.totals.split),
            ("split formula + family", r.totals.with_family),
            ("catalog total", r.totals.catalog),
        ] {
            let warned = r.warnings.iter().find(|w| w.formula == name);
            pass &= match warned {
                None => value == census,
                Some(w) => value != census && w.delta == value as i64 - census as i64,
            };
        }
        let warnings: Vec<String> = r
            .warnings
            .iter()
            .map(|w| format!("{} {:+}", w.formula, w.delta))
            .collect();
        detail.push(format!(
            "GF({p}): uniform {} census {census} split + family {}; warnings [{}]",
            r.totals.uniform,
            r.totals.with_family,
            warnings.join(", ")
        ));
    }
    Outcome {
        pass,
        detail: detail.join(" | "),
    }
}

fn action_correctness() -> Outcome {
    let mut pass = true;
    let mut comparisons = 0u64;
    for p in [2, 3] {
        let f = field(p, 1);
        let group = GlGroup::new(&f);
        for a1 in f.elements() {
            for a2 in f.elements() {
                for a4 in f.elements() {
                    for b1 in f.elements() {
                        let a = StructureMatrix::fifth_shape(a1, a2, a4, b1).expect("same field");
                        for g in group.elements() {
                            let k = act_with_layout(TensorLayout::Standard, g, &a);
                            let explicit = act_fifth_explicit(g, &a);
                            pass &=
                                explicit == Ok([k.entry(0), k.entry(1), k.entry(3), k.entry(4)]);
                            pass &= k.is_fifth_shape();
                            comparisons += 1;
                        }
                    }
                }
            }
        }
    }
    let f2 = field(2, 1);
    let g2 = GlGroup::new(&f2);
    let id = BasisChange::identity(&f2);
    let mut laws = 0u64;
    for code in 0..256 {
        let a = StructureMatrix::from_code(&f2, code);
        pass &= act(&id, &a) == a;
        for x in g2.elements() {
            for y in g2.elements() {
                pass &= act(y, &act(x, &a)) == act(&y.compose(x), &a);
                laws += 1;
            }
        }
    }
    let f5 = field(5, 1);
    let g5 = GlGroup::new(&f5);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..RANDOM_TRIPLES {
        let a = StructureMatrix::from_indices(&f5, std::array::from_fn(|_| rng.gen_range(0..5)))
            .expect("in range");
        let x = g5.elements()[rng.gen_range(0..g5.order())];
        let y = g5.elements()[rng.gen_range(0..g5.order())];
        pass &= act(&y, &act(&x, &a)) == act(&y.compose(&x), &a);
        pass &= act(&BasisChange::identity(&f5), &a) == a;
    }
    Outcome {
        pass,
        detail: format!("{comparisons} explicit/Kronecker pairs, {laws} GF(2) law checks, {RANDOM_TRIPLES} GF(5) triples"),
    }
}

fn polynomial_identities() -> Outcome {
    let mut pass = true;
    let mut checked = 0;
    for (p, n) in [(5, 1), (7, 1), (2, 1), (2, 2)] {
        let f = field(p, n);
        for b in f.elements() {
            pass &= poly_identities(&f, b);
            checked += 1;
        }
    }
    Outcome {
        pass,
        detail: format!("{checked} values of b1 over GF(5), GF(7), GF(2), GF(4)"),
    }
}

fn special_values() -> Outcome {
    let mut pass = true;
    for p in [5, 7] {
        let f = field(p, 1);
        let t = -f.int(2).inv().expect("odd");
        for b in f.elements() {
            pass &= beta_prime(CharCase::General, b, t) == Ok(f.int(4) - b);
        }
    }
    for (p, n) in [(3, 1), (3, 2)] {
        let f = field(p, n);
        for b in f.elements() {
            pass &= beta_prime(CharCase::Three, b, f.one()) == Ok(f.int(2) * b + f.one());
        }
    }
    Outcome {
        pass,
        detail: "GF(5), GF(7) at t = -1/2; GF(3), GF(9) at t = 1".into(),
    }
}

fn composition_law() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for p in [5, 7, 11] {
        let f = field(p, 1);
        match f_associativity_check(&f) {
            Ok(r) => {
                pass &= r.violations.is_empty();
                let first = r
                    .violations
                    .first()
                    .map(|v| {
                        format!(
                            " e.g. (a,s,t)=({},{},{}): {} vs {}",
                            v.a, v.s, v.t, v.lhs, v.rhs
                        )
                    })
                    .unwrap_or_default();
                detail.push(format!(
                    "GF({p}): {} of {} violate{first}",
                    r.violations.len(),
                    r.defined_triples
                ));
            }
            Err(e) => {
                pass = false;
                detail.push(format!("GF({p}): {e}"));
            }
        }
    }
    Outcome {
        pass,
        detail: detail.join(" | "),
    }
}

fn witness_validity() -> Outcome {
    let mut pass = true;
    let mut verified = 0u64;
    let mut returned = 0u64;

    let f3 = field(3, 1);
    let g3 = GlGroup::new(&f3);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..300 {
        let a = StructureMatrix::from_indices(&f3, std::array::from_fn(|_| rng.gen_range(0..3)))
            .expect("in range");
        let g = g3.elements()[rng.gen_range(0..g3.order())];
        let b = if rng.gen_bool(0.8) {
            act(&g, &a)
        } else {
            StructureMatrix::from_indices(&f3, std::array::from_fn(|_| rng.gen_range(0..3)))
                .expect("in range")
        };
        if let Ok(Some(w)) = is_isomorphic(&a, &b) {
            returned += 1;
            verified += u64::from(act(&w, &a) == b);
        }
    }

    for (p, n) in [(2, 1), (3, 1), (5, 1), (2, 2)] {
        let f = field(p, n);
        for x in f.elements() {
            for y in f.elements() {
                for z in f.elements() {
                    for b in f.elements() {
                        let a = StructureMatrix::fifth_shape(x, y, z, b).expect("same field");
                        match reduce_fifth_family(&a) {
                            Ok(r) => {
                                returned += 1;
                                let ok = representative(&r.class, &f)
                                    .map(|rep| act(&r.witness, &a) == rep);
                                verified += u64::from(ok == Ok(true));
                            }
                            Err(FamilyError::Trivial) => pass &= a.is_zero(),
                            Err(_) => pass = false,
                        }
                    }
                }
            }
        }
    }

    for p in [2, 3] {
        let f = field(p, 1);
        let Ok(classifier) = Classifier::new(&f) else {
            return Outcome {
                pass: false,
                detail: "classifier".into(),
            };
        };
        let Ok(table) = orbit_enumerate(&f) else {
            return Outcome {
                pass: false,
                detail: "enumeration".into(),
            };
        };
        let group = GlGroup::new(&f);
        for k in 0..table.len() {
            let a = act(
                &group.elements()[(7 * k) % group.order()],
                &table.representative(k),
            );
            if let Ok(Classification::Family { class, witness }) = classifier.classify(&a) {
                returned += 1;
                let ok = representative(&class, &f).map(|rep| act(&witness, &a) == rep);
                verified += u64::from(ok == Ok(true));
            }
        }
    }
    for m in ["0,0,0,0,1,0,0,0", "0,1,1,1,0,0,0,4", "1,2,3,4,0,1,2,3"] {
        let out = twodim::cli::cmd_classify(&field(5, 1), twodim::cli::Format::Json, m);
        if let Ok(out) = out {
            if let Ok(v) = serde_json::from_str::<serde_json::Value>(&out.body) {
                if v["result"] == "family" {
                    returned += 1;
                    verified += u64::from(v["verified"] == true);
                }
            }
        }
    }
    pass &= returned > 0 && verified == returned;
    Outcome {
        pass,
        detail: format!("{verified}/{returned} witnesses re-verify"),
    }
}

fn orbit_stabilizer() -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for p in [2u64, 3] {
        let f = field(p as u32, 1);
        let group = GlGroup::new(&f);
        let order = (p * p - 1) * (p * p - p);
        let Ok(table) = orbit_enumerate(&f) else {
            return Outcome {
                pass: false,
                detail: "enumeration".into(),
            };
        };
        let ok = (0..table.len()).all(|k| {
            table.orbits[k].size * group.automorphism_order(&table.representative(k)) as u64
                == order
        });
        pass &= ok && group.order() as u64 == order;
        detail.push(format!("GF({p}): {} orbits, |GL| = {order}", table.len()));
    }
    Outcome {
        pass,
        detail: detail.join(", "),
    }
}

fn main() {
    let criteria: [(u32, &str, Check); 10] = [
        (1, "oracle agreement", oracle_agreement),
        (2, "per-family closed forms", closed_forms),
        (3, "partition at desk scale", partition),
        (4, "formula comparison report", formula_report),
        (5, "action correctness", action_correctness),
        (6, "polynomial identities", polynomial_identities),
        (7, "b1' special values", special_values),
        (8, "composition law of f", composition_law),
        (9, "witness validity", witness_validity),
        (10, "orbit-stabilizer", orbit_stabilizer),
    ];
    let mut unexpected = Vec::new();
    for (k, name, check) in criteria {
        let start = Instant::now();
        let out = check();
        let expected_red = EXPECTED_RED.contains(&k);
        let tag = match (out.pass, expected_red) {
            (true, false) => "PASS",
            (false, true) => "FAIL (expected)",
            (false, false) => "FAIL",
            (true, true) => "PASS (unexpected)",
        };
        if out.pass == expected_red {
            unexpected.push(k);
        }
        println!(
            "{tag:<17} #{k:<2} {name} [{:.1}s]: {}",
            start.elapsed().as_secs_f64(),
            out.detail
        );
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria behave as recorded");
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
