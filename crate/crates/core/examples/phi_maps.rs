//! Rank maps: `φ_S` collapses `ω ∖ S` onto ω in order, and the π map
//! transports subsets of Ω into subsets of Ω*.

use filtersq::index_maps::{phi, phi_image, phi_inv, PiMap};
use filtersq::{EvPeriodicSet, GroundSet};

fn main() -> filtersq::Result<()> {
    let s: EvPeriodicSet = "|100".parse()?;
    let rest: Vec<usize> = (0..12).filter(|&m| !s.contains(m)).collect();
    for &m in &rest {
        print!("φ({m}) = {}  ", phi(&s, m)?);
    }
    println!();
    assert_eq!(phi_inv(&s, 3)?, 5);

    let e: EvPeriodicSet = "01|001".parse()?;
    println!("φ[{e}] = {}", phi_image(&s, &e)?);

    let omega = GroundSet::evens();
    let star = GroundSet::new(EvPeriodicSet::residue_class(0, 4))?;
    let pi = PiMap::new(&omega, &star)?;
    for n in 0..8 {
        print!("π({}) = {}  ", 2 * n, pi.point(2 * n));
    }
    println!();
    let x = EvPeriodicSet::residue_class(2, 4);
    let y = pi.image(&x);
    println!("π[{x}] = {y}, back: {}", pi.preimage(&y)?);
    Ok(())
}
