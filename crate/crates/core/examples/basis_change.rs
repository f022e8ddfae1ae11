//! The action of GL(2, q) on structure matrices.

use twodim::algebra::{act, act_fifth_explicit, product};
use twodim::{BasisChange, FieldSpec, StructureMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::prime(5)?;
    let a = StructureMatrix::parse_flat(&f, "0,1,1,3,2,4,4,4")?;
    println!("A = {a}");

    // g⁻¹ = ((ξ₁, η₁), (ξ₂, η₂)); new basis f₁ = ξ₁e₁ + ξ₂e₂, f₂ = η₁e₁ + η₂e₂
    let g = BasisChange::from_inverse_indices(&f, [1, 2, 0, 3])?;
    let b = act(&g, &a);
    println!("g: {g}, det g⁻¹ = {}", g.delta());
    println!("act(g, A) = {b}");

    let h = BasisChange::from_inverse_indices(&f, [0, 1, 1, 0])?;
    let composed = act(&h, &b) == act(&h.compose(&g), &a);
    println!("act(h, act(g, A)) = act(hg, A): {composed}");

    let e1 = [f.one(), f.zero()];
    println!("e1 e1 = {:?}", product(&a, e1, e1)?);

    let fifth = StructureMatrix::fifth_shape(f.int(1), f.int(2), f.int(3), f.int(4))?;
    println!(
        "fifth-shape {fifth} -> {:?}",
        act_fifth_explicit(&g, &fifth)?
    );
    println!("generic action gives {}", act(&g, &fifth));
    Ok(())
}
