//! Isomorphism tests with witnesses, invariants and canonical forms.

use twodim::algebra::{act, invariants, is_isomorphic};
use twodim::{FieldSpec, GlGroup, StructureMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::prime(5)?;
    let group = GlGroup::new(&f);

    let a = StructureMatrix::parse_flat(&f, "0,0,0,1,0,0,0,0")?;
    let b = StructureMatrix::parse_flat(&f, "0,0,0,4,0,0,0,0")?;
    match is_isomorphic(&a, &b)? {
        Some(g) => println!("{a} ~ {b} via {g}; check {}", act(&g, &a) == b),
        None => println!("{a} and {b} are not isomorphic"),
    }

    // A10(0) and A12(0) share every fingerprint field and are isomorphic
    let a10 = StructureMatrix::parse_flat(&f, "0,1,1,1,0,0,0,4")?;
    let a12 = StructureMatrix::parse_flat(&f, "1,0,0,0,0,4,4,0")?;
    println!("A10(0) fingerprint {:?}", invariants(&a10));
    println!("A12(0) fingerprint {:?}", invariants(&a12));
    println!("A10(0) ~ A12(0): {}", is_isomorphic(&a10, &a12)?.is_some());

    let c = StructureMatrix::parse_flat(&f, "1,0,0,0,0,0,0,0")?;
    let d = StructureMatrix::parse_flat(&f, "0,0,0,0,1,0,0,0")?;
    let (ic, id) = (invariants(&c), invariants(&d));
    println!(
        "{c} vs {d}: first difference {:?}",
        ic.first_difference(&id)
    );

    println!("canonical form of {a10}: {}", group.canonical_form(&a10));
    println!(
        "|Aut| = {}, orbit size = {}",
        group.automorphism_order(&a10),
        group.orbit_codes(&a10).len()
    );
    Ok(())
}
