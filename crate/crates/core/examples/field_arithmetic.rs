//! Arithmetic in GF(9) built on the smallest irreducible quadratic over F₃.

use twodim::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::new(3, 2, None)?;
    println!(
        "GF({}) with modulus {:?} (constant term first)",
        f.q(),
        f.modulus()
    );

    let x = f.elem(3)?; // the class of t
    let y = f.from_coeffs(&[2, 1])?; // 2 + t
    println!("x = {:?}, y = {:?}", x.coeffs(), y.coeffs());
    println!("x + y = {:?}", (x + y).coeffs());
    println!("x * y = {:?}", (x * y).coeffs());
    println!("1 / y = {:?}", y.inv()?.coeffs());
    println!("x^9 = x: {}", x.pow(9) == x);

    let g = f.generator();
    println!("generator {} has order {}", g, f.order_of(g)?);

    let squares = f.power_cosets(2)?;
    let cubes = f.power_cosets(3)?;
    println!(
        "square classes {:?}, nonzero squares {:?}",
        squares.reps, squares.kth_powers
    );
    println!("cube classes {:?}", cubes.reps);
    Ok(())
}
