use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twodim::algebra::{
    act, act_fifth_explicit, act_with_layout, invariants, is_isomorphic, product, AlgebraError,
    TensorLayout,
};
use twodim::families::representative;
use twodim::{BasisChange, FamilyClass, FamilyId, FieldSpec, GlGroup, StructureMatrix};

fn random_matrix<'f>(f: &'f FieldSpec, rng: &mut ChaCha8Rng) -> StructureMatrix<'f> {
    StructureMatrix::from_indices(f, std::array::from_fn(|_| rng.gen_range(0..f.q()))).unwrap()
}

#[test]
fn action_laws_exhaustive_gf2() {
    let f = FieldSpec::prime(2).unwrap();
    let group = GlGroup::new(&f);
    let id = BasisChange::identity(&f);
    for code in 0..256 {
        let a = StructureMatrix::from_code(&f, code);
        assert_eq!(act(&id, &a), a);
        for g1 in group.elements() {
            let once = act(g1, &a);
            for g2 in group.elements() {
                assert_eq!(act(g2, &once), act(&g2.compose(g1), &a));
            }
        }
    }
}

#[test]
fn action_laws_random_gf5() {
    let f = FieldSpec::prime(5).unwrap();
    let group = GlGroup::new(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let a = random_matrix(&f, &mut rng);
        let g1 = group.elements()[rng.gen_range(0..group.order())];
        let g2 = group.elements()[rng.gen_range(0..group.order())];
        assert_eq!(act(&g2, &act(&g1, &a)), act(&g2.compose(&g1), &a));
        assert_eq!(act(&g1.inverse(), &act(&g1, &a)), a);
    }
}

#[test]
fn action_is_transport_of_structure() {
    // act(g, A) is the product of A written in the basis g⁻¹ describes
    let f = FieldSpec::prime(3).unwrap();
    let group = GlGroup::new(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let a = random_matrix(&f, &mut rng);
        let g = group.elements()[rng.gen_range(0..group.order())];
        let b = act(&g, &a);
        let [x1, e1, x2, e2] = g.inverse_entries();
        let f1 = [x1, x2];
        let f2 = [e1, e2];
        let fwd = g.forward_entries();
        for (u, v) in [(f1, f1), (f1, f2), (f2, f1), (f2, f2)] {
            let uv = product(&a, u, v).unwrap();
            let coords = [
                fwd[0] * uv[0] + fwd[1] * uv[1],
                fwd[2] * uv[0] + fwd[3] * uv[1],
            ];
            let cu = [fwd[0] * u[0] + fwd[1] * u[1], fwd[2] * u[0] + fwd[3] * u[1]];
            let cv = [fwd[0] * v[0] + fwd[1] * v[1], fwd[2] * v[0] + fwd[3] * v[1]];
            assert_eq!(product(&b, cu, cv).unwrap(), coords);
        }
    }
}

#[test]
fn explicit_fifth_formulas_match_standard_layout_only() {
    for p in [2, 3] {
        let f = FieldSpec::prime(p).unwrap();
        let group = GlGroup::new(&f);
        let mut transposed_differs = false;
        for a1 in f.elements() {
            for a2 in f.elements() {
                for a4 in f.elements() {
                    for b1 in f.elements() {
                        let a = StructureMatrix::fifth_shape(a1, a2, a4, b1).unwrap();
                        for g in group.elements() {
                            let generic = act_with_layout(TensorLayout::Standard, g, &a);
                            assert_eq!(generic, act(g, &a));
                            let [x, y, z, w] = act_fifth_explicit(g, &a).unwrap();
                            assert_eq!(
                                [
                                    generic.entry(0),
                                    generic.entry(1),
                                    generic.entry(3),
                                    generic.entry(4)
                                ],
                                [x, y, z, w]
                            );
                            assert!(generic.is_fifth_shape());
                            if act_with_layout(TensorLayout::Transposed, g, &a) != generic {
                                transposed_differs = true;
                            }
                        }
                    }
                }
            }
        }
        assert!(transposed_differs, "GF({p})");
    }
}

#[test]
fn explicit_fifth_requires_the_shape() {
    let f = FieldSpec::prime(3).unwrap();
    let a = StructureMatrix::from_indices(&f, [1, 0, 0, 0, 0, 0, 0, 0]).unwrap();
    assert!(matches!(
        act_fifth_explicit(&BasisChange::identity(&f), &a),
        Err(AlgebraError::NotFifthShape)
    ));
}

#[test]
fn invariants_constant_on_orbits() {
    let f = FieldSpec::prime(3).unwrap();
    let group = GlGroup::new(&f);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let a = random_matrix(&f, &mut rng);
        let inv = invariants(&a);
        for g in group.elements().iter().step_by(5) {
            assert_eq!(invariants(&act(g, &a)), inv);
        }
    }
}

#[test]
fn isomorphism_examples() {
    let f = FieldSpec::prime(5).unwrap();
    let a = StructureMatrix::parse_flat(&f, "1,2,3,4,0,1,2,3").unwrap();
    let g = is_isomorphic(&a, &a).unwrap().unwrap();
    assert!(g.is_identity());

    let a3 = FamilyId::parse("A3").unwrap();
    let one = representative(&FamilyClass::new(a3, vec![0, 1, 0]), &f).unwrap();
    for s in f.nonzero() {
        let scaled =
            representative(&FamilyClass::new(a3, vec![0, s.square().index(), 0]), &f).unwrap();
        let g = is_isomorphic(&one, &scaled)
            .unwrap()
            .expect("square rescaling");
        assert_eq!(act(&g, &one), scaled);
    }

    let trivial = StructureMatrix::zero(&f);
    let e = StructureMatrix::parse_flat(&f, "1,0,0,0,0,0,0,0").unwrap();
    assert!(is_isomorphic(&trivial, &e).unwrap().is_none());
}

#[test]
fn matrix_parsing() {
    let f = FieldSpec::prime(5).unwrap();
    let a = StructureMatrix::parse_flat(&f, "0,1,1,1,0,0,0,4").unwrap();
    assert_eq!(StructureMatrix::parse_text(&f, &a.to_string()).unwrap(), a);
    assert_eq!(StructureMatrix::from_code(&f, a.code()), a);
    assert!(StructureMatrix::parse_flat(&f, "1,2,3").is_err());
    assert!(StructureMatrix::parse_flat(&f, "0,0,0,0,0,0,0,5").is_err());
    assert!(StructureMatrix::parse_flat(&f, "a,0,0,0,0,0,0,0").is_err());
}
