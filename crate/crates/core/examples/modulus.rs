//! Lazy evaluation of the square map on oracle inputs, and how much of the
//! input each output prefix reads.

use std::rc::Rc;

use filtersq::cantor::OraclePoint;
use filtersq::homeo::{square_homeo, LazyValue, Value};
use filtersq::verify::modulus_probe_at;
use filtersq::zoo::dyadic_chain;

fn main() -> filtersq::Result<()> {
    let h = square_homeo(&dyadic_chain())?;
    let (a, b) = ("|10".parse()?, "01|100".parse()?);

    let oracles = [Rc::new(OraclePoint::from_set(a)), Rc::new(OraclePoint::from_set(b))];
    let inputs: Vec<LazyValue> = oracles
        .iter()
        .map(|o| {
            let o = o.clone();
            LazyValue::Set(Rc::new(move |i| o.query(i)))
        })
        .collect();
    let out = h.forward_lazy(&inputs)?;
    let LazyValue::Set(z) = &out[0] else { unreachable!() };
    let bits: String = (0..32).map(|i| if z(i) { '1' } else { '0' }).collect();
    println!("first 32 output bits: {bits}");
    for (k, o) in oracles.iter().enumerate() {
        println!("input {k}: {} queries, max index {:?}", o.count(), o.max_index());
    }

    let x: Vec<Value> = ["|10", "01|100"].iter().map(|s| s.parse().map(Value::Set)).collect::<filtersq::Result<_>>()?;
    print!("{}", modulus_probe_at(&h, &x, 16)?.render());
    Ok(())
}
