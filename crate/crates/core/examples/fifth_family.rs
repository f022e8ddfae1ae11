//! Reducing fifth-subset algebras to catalog representatives, and the
//! β′ parameter map.

use twodim::algebra::act;
use twodim::families::{
    beta_prime, identity_checks, param_orbits, reduce_fifth_family, representative, ParamOrbits,
};
use twodim::{CharCase, FamilyId, FieldSpec, StructureMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::prime(7)?;
    for (a1, a2, a4, b1) in [
        (0, 1, 1, 4),
        (3, 2, 5, 1),
        (0, 0, 2, 6),
        (2, 0, 0, 3),
        (0, 0, 0, 1),
    ] {
        let a = StructureMatrix::fifth_shape(f.int(a1), f.int(a2), f.int(a4), f.int(b1))?;
        let r = reduce_fifth_family(&a)?;
        let ok = act(&r.witness, &a) == representative(&r.class, &f)?;
        println!(
            "{a} -> {} via {} [{}] verified {ok}",
            r.class, r.witness, r.branch
        );
    }

    let id = FamilyId::beta_prime_family(CharCase::General);
    let orbits = ParamOrbits::compute(id, &f)?;
    println!("{id}: {} classes", param_orbits(id, &f)?.len());
    for cls in orbits.classes() {
        let labels: Vec<String> = cls.iter().map(|c| c.to_string()).collect();
        println!("  {}", labels.join(" ~ "));
    }
    let b = f.int(3);
    let images: Vec<String> = f
        .elements()
        .map(|t| beta_prime(CharCase::General, b, t).map_or("-".into(), |v| v.to_string()))
        .collect();
    println!("b1' for b1 = 3 and t = 0..6: {}", images.join(" "));
    for check in identity_checks(b) {
        println!("  {}: {}", check.name, check.holds);
    }
    Ok(())
}
