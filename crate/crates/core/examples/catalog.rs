//! Catalog families over a field: parameter orbits against closed forms.

use twodim::families::{catalog, representative};
use twodim::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(5);
    let f = FieldSpec::prime(p)?;
    let mut total = 1;
    for entry in catalog(&f)? {
        total += entry.computed_count;
        let closed = entry
            .closed_form_count
            .map_or("-".into(), |c| c.to_string());
        println!(
            "{:<7} {:>6} (closed form {closed})",
            entry.family, entry.computed_count
        );
        if entry.computed_count <= 4 {
            for cls in &entry.representatives {
                println!("        {cls:<12} {}", representative(cls, &f)?);
            }
        }
    }
    println!("catalog total including the trivial algebra: {total}");
    Ok(())
}
