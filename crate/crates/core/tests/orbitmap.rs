use twodim::families::beta_prime;
use twodim::orbitmap::{f_associativity_check, f_eval, f_formal_check, orbit_graph, OrbitMapError};
use twodim::{CharCase, FieldSpec};

#[test]
fn agrees_with_beta_prime_where_defined() {
    for p in [5, 7, 11, 13] {
        let f = FieldSpec::prime(p).unwrap();
        for a in f.elements() {
            for t in f.elements() {
                let e = f_eval(a, t).unwrap();
                assert_eq!(e.defined, !(a * t.square() + a * t + f.one()).is_zero());
                if let Some(v) = e.value {
                    assert_eq!(beta_prime(CharCase::General, a, t).unwrap(), v);
                }
            }
        }
    }
}

#[test]
fn special_value_at_minus_half() {
    for p in [5, 7] {
        let f = FieldSpec::prime(p).unwrap();
        let t = -f.int(2).inv().unwrap();
        for b in f.elements() {
            if let Some(v) = f_eval(b, t).unwrap().value {
                assert_eq!(v, f.int(4) - b);
            }
        }
    }
}

#[test]
fn composition_law_scan_is_deterministic() {
    let f = FieldSpec::prime(7).unwrap();
    let r1 = f_associativity_check(&f).unwrap();
    let r2 = f_associativity_check(&f).unwrap();
    assert_eq!(r1, r2);
    assert_eq!(r1.triples, 343);
    let keys: Vec<_> = r1.violations.iter().map(|v| (v.a, v.s, v.t)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn zero_parameter_side() {
    // a = s = 0: f(f(0,0),t) = f(4,t) and f(0, f(0,t)) = f(0,4) = 4
    let f = FieldSpec::prime(5).unwrap();
    let r = f_associativity_check(&f).unwrap();
    for v in r.violations.iter().filter(|v| v.a == 0 && v.s == 0) {
        assert_eq!(v.rhs, 4);
        assert_eq!(
            Some(f.elem(v.lhs).unwrap()),
            f_eval(f.int(4), f.elem(v.t).unwrap()).unwrap().value
        );
    }
}

#[test]
fn formal_check_agrees_with_pointwise_failures() {
    let f = FieldSpec::prime(5).unwrap();
    let pointwise = f_associativity_check(&f).unwrap();
    let formal = f_formal_check(&f).unwrap();
    for v in &pointwise.violations {
        assert!(formal.failing_pairs.contains(&(v.a, v.s)));
    }
}

#[test]
fn admissible_reachability_matches_parameter_orbits() {
    for p in [5, 7, 11, 13] {
        let f = FieldSpec::prime(p).unwrap();
        let g = orbit_graph(&f).unwrap();
        assert!(g.refines_family_orbits, "GF({p})");
        assert_eq!(g.classes, g.family_classes, "GF({p})");
        assert!(g.edges.len() <= (p * p) as usize);
    }
}

#[test]
fn edge_list_format() {
    let f = FieldSpec::prime(5).unwrap();
    let g = orbit_graph(&f).unwrap();
    let text = g.edge_list();
    assert_eq!(text.lines().count(), g.edges.len());
    assert!(text.starts_with("0 0 4\n"));
    assert_eq!(g.successors(0), [4]);
}

#[test]
fn small_characteristic_rejected() {
    for p in [2, 3] {
        let f = FieldSpec::prime(p).unwrap();
        assert_eq!(
            f_eval(f.one(), f.one()).unwrap_err(),
            OrbitMapError::WrongCharacteristic { found: p }
        );
    }
    let f = FieldSpec::new(3, 2, None).unwrap();
    assert!(f_formal_check(&f).is_err());
}
