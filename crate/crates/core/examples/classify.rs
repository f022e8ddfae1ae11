//! Classifying matrices against the catalog, including overlapping classes.

use twodim::census::{CensusError, Classification, Classifier};
use twodim::{FieldSpec, StructureMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldSpec::prime(5)?;
    let classifier = Classifier::new(&f)?;
    for text in [
        "0,0,0,0,0,0,0,0",
        "0,0,0,0,1,0,0,0",
        "1,2,3,4,0,1,2,3",
        "1,0,0,0,0,4,4,0",
    ] {
        let a = StructureMatrix::parse_flat(&f, text)?;
        match classifier.classify(&a) {
            Ok(Classification::Trivial) => println!("{a}: trivial"),
            Ok(Classification::Family { class, witness }) => println!("{a}: {class} via {witness}"),
            Err(CensusError::Overlap {
                matches, witnesses, ..
            }) => {
                println!("{a}: matches {}", matches.join(", "));
                for w in witnesses {
                    println!(
                        "  {} -> {}: xi1={} eta1={} xi2={} eta2={}",
                        w.from, w.to, w.xi1, w.eta1, w.xi2, w.eta2
                    );
                }
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}
