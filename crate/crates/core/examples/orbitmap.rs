//! The rational map f(a, t), its composition law and its orbit graph.

use twodim::orbitmap::{f_associativity_check, f_eval, f_formal_check, orbit_graph};
use twodim::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(7);
    let f = FieldSpec::prime(p)?;

    for t in f.elements() {
        let e = f_eval(f.one(), t)?;
        println!(
            "f(1, {t}) = {}",
            e.value.map_or("undefined".into(), |v| v.to_string())
        );
    }

    let check = f_associativity_check(&f)?;
    println!(
        "{} violations among {} fully-defined triples",
        check.violations.len(),
        check.defined_triples
    );
    if let Some(v) = check.violations.first() {
        println!(
            "  first: a={} s={} t={}: {} vs {}",
            v.a, v.s, v.t, v.lhs, v.rhs
        );
    }
    let formal = f_formal_check(&f)?;
    println!(
        "{} of {} (a, s) pairs fail as functions of t",
        formal.failing_pairs.len(),
        formal.pairs_checked
    );

    let graph = orbit_graph(&f)?;
    println!("{} edges", graph.edges.len());
    println!("classes (admissible edges) {:?}", graph.classes);
    println!("classes (all edges) {:?}", graph.unrestricted_classes);
    println!("parameter orbits {:?}", graph.family_classes);
    Ok(())
}
