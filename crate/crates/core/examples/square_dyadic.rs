//! The square map of the dyadic filter: two sets in, one set out, and
//! membership is preserved in both directions.

use filtersq::homeo::{square_homeo, Value};
use filtersq::zoo::dyadic_chain;
use filtersq::EvPeriodicSet;

fn main() -> filtersq::Result<()> {
    let f = dyadic_chain();
    let h = square_homeo(&f)?;
    println!("{}: {} -> {}", h.name(), h.domain(), h.codomain());

    let pairs = [("|10", "|1000"), ("01|1", "|1100"), ("|10", "|01"), ("0|001", "|1")];
    for (a, b) in pairs {
        let x: EvPeriodicSet = a.parse()?;
        let y: EvPeriodicSet = b.parse()?;
        let out = h.forward(&[Value::Set(x.clone()), Value::Set(y.clone())])?;
        let z = out[0].as_set().unwrap();
        println!(
            "({a}, {b}) in F×F: {:5}  ->  {z}  in F: {}",
            f.decide(&x) && f.decide(&y),
            f.decide(z)
        );
        assert_eq!(h.backward(&out)?, vec![Value::Set(x), Value::Set(y)]);
    }
    Ok(())
}
