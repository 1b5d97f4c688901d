//! Membership decisions for the built-in filters, the semifilter T, and the
//! principal and prefilter reductions.

use filtersq::homeo::{prefilter_normalize, principal_classify, Normalized};
use filtersq::zoo::{dyadic_chain, frechet, principal, semifilter_t, t_decompose, PrefilterSpec};
use filtersq::EvPeriodicSet;

fn main() -> filtersq::Result<()> {
    let filters = [frechet(), principal("|10".parse()?)?, dyadic_chain()];
    let points = ["|10", "|01", "000|1", "1|1000", "|1110"];
    print!("{:14}", "");
    points.iter().for_each(|p| print!("{p:>8}"));
    println!();
    for f in &filters {
        print!("{:14}", f.name());
        for p in points {
            print!("{:>8}", if f.decide(&p.parse()?) { "in" } else { "out" });
        }
        println!();
    }

    let t = semifilter_t();
    let (a, b): (EvPeriodicSet, EvPeriodicSet) = ("|10".parse()?, "1|10".parse()?);
    let ab = a.intersect(&b);
    println!(
        "{}: {a} {:?}, {b} {:?}, intersection {ab} in T: {}",
        t.name(),
        t_decompose(&a),
        t_decompose(&b),
        t.decide(&ab)
    );

    for f in [frechet(), principal("|10".parse()?)?] {
        println!("{} is {:?}", f.name(), principal_classify(&f)?);
    }
    for g in [
        PrefilterSpec::above(EvPeriodicSet::finite(&[0, 1])),
        PrefilterSpec::with_core(EvPeriodicSet::finite(&[3]), dyadic_chain())?,
    ] {
        match prefilter_normalize(&g)? {
            Normalized::Cantor { core } => println!("{}: Cantor set, core {core}", g.name()),
            Normalized::Filter(f) => println!("{}: the filter {}", g.name(), f.name()),
        }
    }
    Ok(())
}
