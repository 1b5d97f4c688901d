//! `F³ ≅ F²` for the dyadic filter, built by folding coordinates with the
//! square map.

use filtersq::homeo::{power_homeo, tuple_literals, Value};
use filtersq::zoo::dyadic_chain;

fn main() -> filtersq::Result<()> {
    let f = dyadic_chain();
    let h = power_homeo(&f, 3, 2)?;
    let x: Vec<Value> = ["|10", "|1000", "1|1"]
        .iter()
        .map(|s| s.parse().map(Value::Set))
        .collect::<filtersq::Result<_>>()?;
    let y = h.forward(&x)?;
    for lit in tuple_literals(&y) {
        let len = lit.len();
        println!("{}{}", &lit[..len.min(72)], if len > 72 { "..." } else { "" });
    }
    let members = y.iter().map(|v| f.decide(v.as_set().unwrap())).collect::<Vec<_>>();
    println!("members: {members:?}");
    assert_eq!(h.backward(&y)?, x);
    Ok(())
}
