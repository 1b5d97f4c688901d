//! Binary to ternary transcoding with the prefix code 0, 10, 11.

use filtersq::homeo::code::{decode, encode};
use filtersq::{EvPeriodicSet, TernaryStream};

fn main() -> filtersq::Result<()> {
    for s in ["|01011", "1|100", "|1", "|10"] {
        let x: EvPeriodicSet = s.parse()?;
        let t = decode(&x);
        println!("{s:>8} -> {t}");
        assert_eq!(encode(&t), x);
    }
    let t: TernaryStream = "20|1".parse()?;
    println!("{t:>8} <- {}", encode(&t));
    Ok(())
}
