use proptest::prelude::*;
use twodim::field::{smallest_irreducible, FieldError};
use twodim::FieldSpec;

fn small_fields() -> Vec<FieldSpec> {
    [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]
        .into_iter()
        .map(|(p, n)| FieldSpec::new(p, n, None).unwrap())
        .collect()
}

#[test]
fn axioms_hold_exhaustively() {
    for f in small_fields() {
        let (zero, one) = (f.zero(), f.one());
        for x in f.elements() {
            assert_eq!(x + zero, x);
            assert_eq!(x * one, x);
            assert_eq!(x + (-x), zero);
            if !x.is_zero() {
                assert_eq!(x * x.inv().unwrap(), one);
            }
            for y in f.elements() {
                assert_eq!(x + y, y + x);
                assert_eq!(x * y, y * x);
                assert_eq!((x + y) - y, x);
                for z in f.elements() {
                    assert_eq!((x + y) + z, x + (y + z));
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }
}

#[test]
fn frobenius_and_order() {
    for f in small_fields() {
        let p = f.p() as u64;
        for x in f.elements() {
            assert_eq!(x.pow(f.q() as u64), x);
            for y in f.elements() {
                assert_eq!((x + y).pow(p), x.pow(p) + y.pow(p));
            }
        }
        let g = f.generator();
        assert_eq!(f.order_of(g).unwrap(), f.q() - 1);
    }
}

#[test]
fn element_index_is_base_p_coefficients() {
    let f = FieldSpec::new(3, 2, None).unwrap();
    for x in f.elements() {
        let c = x.coeffs();
        assert_eq!(x.index(), c[0] as usize + 3 * c[1] as usize);
    }
}

#[test]
fn modulus_choice() {
    assert_eq!(smallest_irreducible(2, 2), [1, 1, 1]);
    assert_eq!(smallest_irreducible(2, 3), [1, 0, 1, 1]);
    assert_eq!(smallest_irreducible(3, 2), [1, 0, 1]);
    let explicit = FieldSpec::new(2, 3, Some(vec![1, 1, 0, 1])).unwrap();
    assert_eq!(explicit.modulus(), [1, 1, 0, 1]);
    assert_eq!(explicit.generator().pow(7), explicit.one());
}

#[test]
fn invalid_parameters() {
    assert_eq!(
        FieldSpec::new(4, 1, None).unwrap_err(),
        FieldError::NotPrime(4)
    );
    assert_eq!(
        FieldSpec::new(3, 0, None).unwrap_err(),
        FieldError::InvalidDegree
    );
    assert!(matches!(
        FieldSpec::new(2, 2, Some(vec![1, 0, 1])),
        Err(FieldError::Reducible(_))
    ));
    assert!(matches!(
        FieldSpec::new(2, 11, None),
        Err(FieldError::TooLarge { .. })
    ));
    let f = FieldSpec::prime(5).unwrap();
    assert_eq!(f.zero().inv().unwrap_err(), FieldError::ZeroInverse);
    assert!(f.elem(5).is_err());
}

#[test]
fn mixed_fields_rejected() {
    let f = FieldSpec::prime(5).unwrap();
    let g = FieldSpec::prime(7).unwrap();
    assert_eq!(
        f.one().try_add(g.one()).unwrap_err(),
        FieldError::MixedFields
    );
}

#[test]
fn power_cosets_partition_nonzero() {
    for f in small_fields() {
        for k in [2, 3] {
            let c = f.power_cosets(k).unwrap();
            let classes = c.nonzero_classes();
            let expected = if (f.q() - 1) % k as usize == 0 {
                k as usize
            } else {
                1
            };
            assert_eq!(classes, expected, "GF({}) k={k}", f.q());
            for x in f.nonzero() {
                let r = f.elem(c.representative(x)).unwrap();
                assert_eq!(c.class_of(r), c.class_of(x));
            }
        }
    }
}

proptest! {
    #[test]
    fn random_prime_field_laws(
        pi in 0usize..6,
        a in 0u64..1000,
        b in 0u64..1000,
        c in 0u64..1000,
    ) {
        let p = [11u32, 13, 17, 19, 23, 31][pi];
        let f = FieldSpec::prime(p).unwrap();
        let (x, y, z) = (f.int(a as i64), f.int(b as i64), f.int(c as i64));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!((x * y).index() as u64, a * b % p as u64);
        if !y.is_zero() {
            prop_assert_eq!(x * y * y.inv().unwrap(), x);
        }
    }

    #[test]
    fn random_extension_field_laws(n in 2u32..6, a in 0usize..32, b in 0usize..32) {
        let f = FieldSpec::new(2, n, None).unwrap();
        let x = f.elem(a % f.q()).unwrap();
        let y = f.elem(b % f.q()).unwrap();
        prop_assert_eq!((x + y).square(), x.square() + y.square());
        prop_assert_eq!(x + x, f.zero());
        if !x.is_zero() {
            prop_assert_eq!(x.pow(f.q() as u64 - 1), f.one());
        }
    }
}
