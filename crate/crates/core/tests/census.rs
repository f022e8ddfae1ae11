use twodim::algebra::{act, GlGroup};
use twodim::census::{
    burnside_count, burnside_table, fixed_points_by_scan, fixed_space_dimension, formula_totals,
    orbit_enumerate, verify_partition, CensusError, CensusReport, Classification, Classifier,
};
use twodim::families::representative;
use twodim::{FieldSpec, StructureMatrix};

#[test]
fn enumeration_matches_burnside() {
    for (p, n, expected) in [(2, 1, 52), (3, 1, 162), (2, 2, 402)] {
        let f = FieldSpec::new(p, n, None).unwrap();
        let table = orbit_enumerate(&f).unwrap();
        assert_eq!(table.len(), expected);
        assert_eq!(table.total_size(), (f.q() as u64).pow(8));
        assert_eq!(burnside_count(&f).unwrap(), expected as u64);
    }
}

#[test]
fn representatives_are_orbit_minima() {
    let f = FieldSpec::prime(3).unwrap();
    let group = GlGroup::new(&f);
    let table = orbit_enumerate(&f).unwrap();
    for k in (0..table.len()).step_by(7) {
        let a = table.representative(k);
        assert_eq!(group.canonical_form(&a), a);
        assert_eq!(group.orbit_codes(&a).len() as u64, table.orbits[k].size);
    }
}

#[test]
fn fixed_points_rank_formula_matches_scan_gf2() {
    let f = FieldSpec::prime(2).unwrap();
    for g in GlGroup::new(&f).elements() {
        assert_eq!(
            2u64.pow(fixed_space_dimension(g) as u32),
            fixed_points_by_scan(g)
        );
    }
    let (count, table) = burnside_table(&f).unwrap();
    assert_eq!(count, 52);
    assert_eq!(table.iter().map(|r| r.group_elements).sum::<u64>(), 6);
}

#[test]
fn classify_returns_verified_witnesses() {
    let f = FieldSpec::prime(3).unwrap();
    let classifier = Classifier::new(&f).unwrap();
    let table = orbit_enumerate(&f).unwrap();
    let group = GlGroup::new(&f);
    let mut overlaps = 0;
    for k in 0..table.len() {
        let rep = table.representative(k);
        let g = group.elements()[k % group.order()];
        let a = act(&g, &rep);
        match classifier.classify(&a) {
            Ok(Classification::Trivial) => assert!(a.is_zero()),
            Ok(Classification::Family { class, witness }) => {
                assert_eq!(act(&witness, &a), representative(&class, &f).unwrap());
            }
            Err(CensusError::Overlap {
                matches, witnesses, ..
            }) => {
                overlaps += 1;
                assert_eq!(matches.len(), 2);
                assert_eq!(witnesses.len(), 1);
            }
            Err(e) => panic!("{a}: {e}"),
        }
    }
    assert_eq!(overlaps, 2);
}

#[test]
fn gf2_report() {
    let f = FieldSpec::prime(2).unwrap();
    let r = verify_partition(&f).unwrap();
    assert_eq!(r.schema, 1);
    assert_eq!(r.enumeration_count, Some(52));
    assert_eq!(r.oracles_agree, Some(true));
    assert_eq!(r.orbit_stabilizer_ok, Some(true));
    assert_eq!(r.totals.uniform, 52);
    assert_eq!(r.totals.catalog, 54);
    let part = r.partition.as_ref().unwrap();
    assert!(part.gaps.is_empty());
    let pairs: Vec<Vec<String>> = part.overlaps.iter().map(|o| o.classes.clone()).collect();
    assert_eq!(
        pairs,
        [vec!["A9,2(1)", "A10,2(1)"], vec!["A8,2(0)", "A11,2(0)"]]
    );
    assert!(r
        .warnings
        .iter()
        .any(|w| w.formula == "catalog total" && w.delta == 2));
    assert_eq!(r.consistency_failures().len(), 1);
}

#[test]
fn gf3_family_table_and_text() {
    let f = FieldSpec::prime(3).unwrap();
    let r = verify_partition(&f).unwrap();
    let a1 = r.families.iter().find(|row| row.family == "A1,3").unwrap();
    assert_eq!((a1.computed_count, a1.closed_form_count), (81, Some(81)));
    assert!(r.families.iter().all(|row| row.matches != Some(false)));
    let text = r.to_text();
    assert!(text.contains("uniform formula             162"));
    assert!(text.contains("overlap"));
}

#[test]
fn report_json_round_trip() {
    let f = FieldSpec::prime(2).unwrap();
    let r = verify_partition(&f).unwrap();
    let s = serde_json::to_string(&r).unwrap();
    let back: CensusReport = serde_json::from_str(&s).unwrap();
    assert_eq!(back, r);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["field"]["modulus"], serde_json::json!([0, 1]));
}

#[test]
fn burnside_only_beyond_budget() {
    let f = FieldSpec::prime(11).unwrap();
    assert!(matches!(
        orbit_enumerate(&f),
        Err(CensusError::Budget { .. })
    ));
    let b = burnside_count(&f).unwrap();
    assert_eq!(b, formula_totals(&f, 0, 0).uniform);
}

#[test]
fn formula_table() {
    let cases = [
        (2, 1, 52, 52),
        (2, 2, 402, 403),
        (3, 1, 162, 162),
        (5, 1, 877, 877),
        (7, 1, 2975, 2977),
    ];
    for (p, n, uniform, split) in cases {
        let f = FieldSpec::new(p, n, None).unwrap();
        let t = formula_totals(&f, 0, 0);
        assert_eq!((t.uniform, t.split), (uniform, split), "GF({})", f.q());
    }
}

#[test]
fn trivial_matrix_classifies_as_trivial() {
    let f = FieldSpec::prime(2).unwrap();
    let c = Classifier::new(&f).unwrap();
    assert_eq!(
        c.classify(&StructureMatrix::zero(&f)).unwrap().label(),
        "trivial"
    );
}
