//! Full orbit census with the Burnside cross-check and catalog comparison.

use twodim::census::{burnside_table, orbit_enumerate, verify_partition};
use twodim::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(3);
    let n = std::env::args()
        .nth(2)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(1);
    let f = FieldSpec::new(p, n, None)?;

    let table = orbit_enumerate(&f)?;
    let (burnside, fixed) = burnside_table(&f)?;
    println!(
        "{} orbits by enumeration, {burnside} by Burnside",
        table.len()
    );
    for row in fixed {
        println!(
            "  {:>3} group elements fix q^{} = {} matrices",
            row.group_elements, row.fixed_dimension, row.fixed_points
        );
    }
    let largest = table
        .orbits
        .iter()
        .max_by_key(|o| o.size)
        .expect("nonempty");
    println!("largest orbit has {} members", largest.size);

    print!("{}", verify_partition(&f)?.to_text());
    Ok(())
}
