use std::rc::Rc;

use super::code::{self, decode, encode};
use super::lazy::{Decoder, Encoder, Enumeration, LazySet, LazyTrits, LazyValue};
use super::{Coord, DisjointPair, Homeo, Primitive, Shape, Value};
use crate::cantor::{EvPeriodicSet, GroundSet, TernaryStream};
use crate::error::{domain, Result};
use crate::index_maps::{order_iso_image, phi_image, phi_preimage, pullback, pushforward, PiMap};

fn set(v: &Value) -> &EvPeriodicSet {
    v.as_set().expect("shape-checked set coordinate")
}

fn pair(v: &Value) -> &DisjointPair {
    v.as_pair().expect("shape-checked pair coordinate")
}

fn ground(g: &GroundSet) -> Rc<GroundSet> {
    Rc::new(g.clone())
}

/// `2^A × 2^B → 2^(A ∪ B)` for disjoint `A`, `B`: union forward, split backward.
struct Interleave {
    a: GroundSet,
    b: GroundSet,
    union: GroundSet,
}

impl Primitive for Interleave {
    fn domain(&self) -> Shape {
        Shape(vec![Coord::Subsets(self.a.clone()), Coord::Subsets(self.b.clone())])
    }

    fn codomain(&self) -> Shape {
        Shape(vec![Coord::Subsets(self.union.clone())])
    }

    fn forward(&self, x: &[Value]) -> Result<Vec<Value>> {
        Ok(vec![Value::Set(set(&x[0]).union(set(&x[1])))])
    }

    fn backward(&self, y: &[Value]) -> Result<Vec<Value>> {
        let z = set(&y[0]);
        Ok(vec![
            Value::Set(z.intersect(self.a.carrier())),
            Value::Set(z.intersect(self.b.carrier())),
        ])
    }

    fn forward_lazy(&self, x: &[LazyValue]) -> Vec<LazyValue> {
        let (f, g) = (x[0].set(), x[1].set());
        let (a, b) = (ground(&self.a), ground(&self.b));
        vec![LazyValue::Set(Rc::new(move |n| {
            if a.contains(n) {
                f(n)
            } else {
                b.contains(n) && g(n)
            }
        }))]
    }

    fn backward_lazy(&self, y: &[LazyValue]) -> Vec<LazyValue> {
        let z = y[0].set();
        [&self.a, &self.b]
            .into_iter()
            .map(|part| {
                let (part, z) = (ground(part), z.clone());
                LazyValue::Set(Rc::new(move |n| part.contains(n) && z(n)))
            })
            .collect()
    }
}

/// `h(F, X) = F ∪ X : 2^Ω × 2^(ω∖Ω) → 2^ω`, with inverse `Z ↦ (Z ∩ Ω, Z ∖ Ω)`.
pub fn product_homeo(omega: &GroundSet) -> Result<Homeo> {
    let rest = omega
        .complement()
        .or_else(|_| domain(format!("ω ∖ Ω is finite for Ω = {omega}")))?;
    Ok(Homeo::primitive(
        "product",
        Interleave { a: omega.clone(), b: rest, union: GroundSet::omega() },
    ))
}

/// `2^A × 2^B ≅ 2^(A ∪ B)` for disjoint infinite `A`, `B`.
pub fn interleave_homeo(a: &GroundSet, b: &GroundSet) -> Result<Homeo> {
    if !a.carrier().is_disjoint(b.carrier()) {
        return domain(format!("ground sets {a} and {b} overlap"));
    }
    let union = GroundSet::new(a.carrier().union(b.carrier()))?;
    Ok(Homeo::primitive("interleave", Interleave { a: a.clone(), b: b.clone(), union }))
}

/// `2^A ≅ 2^B` through the order isomorphism `A → B`.
struct Reindex {
    a: GroundSet,
    b: GroundSet,
}

impl Reindex {
    fn lazy(from: &GroundSet, to: &GroundSet, x: LazySet) -> LazyValue {
        let (from, to) = (ground(from), ground(to));
        LazyValue::Set(Rc::new(move |n| to.contains(n) && x(from.select(to.rank(n)))))
    }
}

impl Primitive for Reindex {
    fn domain(&self) -> Shape {
        Shape(vec![Coord::Subsets(self.a.clone())])
    }

    fn codomain(&self) -> Shape {
        Shape(vec![Coord::Subsets(self.b.clone())])
    }

    fn forward(&self, x: &[Value]) -> Result<Vec<Value>> {
        Ok(vec![Value::Set(order_iso_image(&self.a, &self.b, set(&x[0]))?)])
    }

    fn backward(&self, y: &[Value]) -> Result<Vec<Value>> {
        Ok(vec![Value::Set(order_iso_image(&self.b, &self.a, set(&y[0]))?)])
    }

    fn forward_lazy(&self, x: &[LazyValue]) -> Vec<LazyValue> {
        vec![Self::lazy(&self.a, &self.b, x[0].set())]
    }

    fn backward_lazy(&self, y: &[LazyValue]) -> Vec<LazyValue> {
        vec![Self::lazy(&self.b, &self.a, y[0].set())]
    }
}

pub fn reindex_homeo(a: &GroundSet, b: &GroundSet) -> Homeo {
    if a == b {
        return Homeo::identity(Shape(vec![Coord::Subsets(a.clone())]));
    }
    Homeo::primitive("reindex", Reindex { a: a.clone(), b: b.clone() })
}

/// `X ↦ π[X] : 2^ω → 2^Ω`.
struct Restriction {
    pi: PiMap,
}

impl Primitive for Restriction {
    fn domain(&self) -> Shape {
        Shape(vec![Coord::subsets_of_omega()])
    }

    fn codomain(&self) -> Shape {
        Shape(vec![Coord::Subsets(self.pi.omega().clone())])
    }

    fn forward(&self, x: &[Value]) -> Result<Vec<Value>> {
        Ok(vec![Value::Set(self.pi.image(set(&x[0])))])
    }

    fn backward(&self, y: &[Value]) -> Result<Vec<Value>> {
        Ok(vec![Value::Set(self.pi.preimage(set(&y[0]))?)])
    }

    fn forward_lazy(&self, x: &[LazyValue]) -> Vec<LazyValue> {
        let x = x[0].set();
        let (omega, star) = (ground(self.pi.omega()), ground(self.pi.omega_star()));
        let (outside, gap) = (ground(self.pi.outside()), ground(self.pi.gap()));
        vec![LazyValue::Set(Rc::new(move |n| {
            if star.contains(n) {
                x(n)
            } else {
                omega.contains(n) && x(outside.select(gap.rank(n)))
            }
        }))]
    }

    fn backward_lazy(&self, y: &[LazyValue]) -> Vec<LazyValue> {
        let y = y[0].set();
        let star = ground(self.pi.omega_star());
        let (outside, gap) = (ground(self.pi.outside()), ground(self.pi.gap()));
        vec![LazyValue::Set(Rc::new(move |n| {
            if star.contains(n) {
                y(n)
            } else {
                y(gap.select(outside.rank(n)))
            }
        }))]
    }
}

/// `π[·] : 2^ω ≅ 2^Ω` where `π` fixes `Ω*` and maps `ω ∖ Ω*` onto `Ω ∖ Ω*` in order.
pub fn restriction_homeo(omega: &GroundSet, omega_star: &GroundSet) -> Result<Homeo> {
    Ok(Homeo::primitive("restriction", Restriction { pi: PiMap::new(omega, omega_star)? }))
}

/// `2^Ω × 2^Ω × D(ω∖Ω) ≅ 2^Ω × D(ω)`:
///
/// `h(F, G, X, Y) = (F ∩ G, φ_{F∩G}[(F ∖ G) ∪ X], φ_{F∩G}[(G ∖ F) ∪ Y])`
///
/// with inverse
///
/// `g(H, Z, W) = (H ∪ (φ_H⁻¹[Z] ∩ Ω), H ∪ (φ_H⁻¹[W] ∩ Ω), φ_H⁻¹[Z] ∖ Ω, φ_H⁻¹[W] ∖ Ω)`.
///
/// `φ_H` is total because `ω ∖ H ⊇ ω ∖ Ω` is infinite.
struct MainPair {
    omega: GroundSet,
    rest: GroundSet,
}

impl Primitive for MainPair {
    fn domain(&self) -> Shape {
        Shape(vec![
            Coord::Subsets(self.omega.clone()),
            Coord::Subsets(self.omega.clone()),
            Coord::Disjoint(self.rest.clone()),
        ])
    }

    fn codomain(&self) -> Shape {
        Shape(vec![Coord::Subsets(self.omega.clone()), Coord::Disjoint(GroundSet::omega())])
    }

    fn forward(&self, x: &[Value]) -> Result<Vec<Value>> {
        let (f, g, p) = (set(&x[0]), set(&x[1]), pair(&x[2]));
        let h = f.intersect(g);
        let z = phi_image(&h, &f.diff(g).union(p.first()))?;
        let w = phi_image(&h, &g.diff(f).union(p.second()))?;
        Ok(vec![Value::Set(h), Value::Pair(DisjointPair::new(z, w)?)])
    }

    fn backward(&self, y: &[Value]) -> Result<Vec<Value>> {
        let (h, p) = (set(&y[0]), pair(&y[1]));
        let om = self.omega.carrier();
        let pz = phi_preimage(h, p.first())?;
        let pw = phi_preimage(h, p.second())?;
        Ok(vec![
            Value::Set(h.union(&pz.intersect(om))),
            Value::Set(h.union(&pw.intersect(om))),
            Value::Pair(DisjointPair::new(pz.diff(om), pw.diff(om))?),
        ])
    }

    fn forward_lazy(&self, x: &[LazyValue]) -> Vec<LazyValue> {
        let (f, g) = (x[0].set(), x[1].set());
        let (px, py) = x[2].pair();
        let omega = ground(&self.omega);
        let h: LazySet = {
            let (f, g, omega) = (f.clone(), g.clone(), omega.clone());
            Rc::new(move |n| omega.contains(n) && f(n) && g(n))
        };
        let outside_h = {
            let h = h.clone();
            Enumeration::new(move |n| !h(n))
        };
        // a point m ∉ H of Ω lies in F ∖ G iff it lies in F
        let side = |own: LazySet, extra: LazySet| -> LazySet {
            let (omega, outside_h) = (omega.clone(), outside_h.clone());
            Rc::new(move |k| {
                let m = outside_h.select(k);
                if omega.contains(m) {
                    own(m)
                } else {
                    extra(m)
                }
            })
        };
        vec![LazyValue::Set(h), LazyValue::Pair(side(f, px), side(g, py))]
    }

    fn backward_lazy(&self, y: &[LazyValue]) -> Vec<LazyValue> {
        let h = y[0].set();
        let (z, w) = y[1].pair();
        let omega = ground(&self.omega);
        let h: LazySet = {
            let omega = omega.clone();
            Rc::new(move |n| omega.contains(n) && h(n))
        };
        let outside_h = {
            let h = h.clone();
            Enumeration::new(move |n| !h(n))
        };
        let inside = |stream: LazySet| -> LazySet {
            let (omega, h, outside_h) = (omega.clone(), h.clone(), outside_h.clone());
            Rc::new(move |n| omega.contains(n) && (h(n) || stream(outside_h.rank(n))))
        };
        let beyond = |stream: LazySet| -> LazySet {
            let (omega, outside_h) = (omega.clone(), outside_h.clone());
            Rc::new(move |n| !omega.contains(n) && stream(outside_h.rank(n)))
        };
        vec![
            LazyValue::Set(inside(z.clone())),
            LazyValue::Set(inside(w.clone())),
            LazyValue::Pair(beyond(z), beyond(w)),
        ]
    }
}

pub fn main_pair_homeo(omega: &GroundSet) -> Result<Homeo> {
    let rest = omega
        .complement()
        .or_else(|_| domain(format!("ω ∖ Ω is finite for Ω = {omega}")))?;
    Ok(Homeo::primitive("main", MainPair { omega: omega.clone(), rest }))
}

/// Binary streams `2^ω` ≅ ternary streams `3^ω`; forward decodes.
struct Code;

impl Primitive for Code {
    fn domain(&self) -> Shape {
        Shape(vec![Coord::subsets_of_omega()])
    }

    fn codomain(&self) -> Shape {
        Shape(vec![Coord::Ternary])
    }

    fn forward(&self, x: &[Value]) -> Result<Vec<Value>> {
        Ok(vec![Value::Ternary(decode(set(&x[0])))])
    }

    fn backward(&self, y: &[Value]) -> Result<Vec<Value>> {
        let t = y[0].as_ternary().expect("shape-checked ternary coordinate");
        Ok(vec![Value::Set(encode(t))])
    }

    fn forward_lazy(&self, x: &[LazyValue]) -> Vec<LazyValue> {
        let dec = Decoder::new(x[0].set());
        vec![LazyValue::Ternary(Rc::new(move |k| dec.get(k)))]
    }

    fn backward_lazy(&self, y: &[LazyValue]) -> Vec<LazyValue> {
        let enc = Encoder::new(y[0].trits());
        vec![LazyValue::Set(Rc::new(move |i| enc.bit(i)))]
    }
}

pub fn code_homeo() -> Homeo {
    Homeo::primitive("code", Code)
}

/// `D(Ω) ≅ 2^Ω`: read a pair as a ternary stream along Ω (absent, first,
/// second ↦ 0, 1, 2), encode it with the prefix code and write the bits
/// back onto Ω.
struct DisjointEncode {
    omega: GroundSet,
}

impl Primitive for DisjointEncode {
    fn domain(&self) -> Shape {
        Shape(vec![Coord::Disjoint(self.omega.clone())])
    }

    fn codomain(&self) -> Shape {
        Shape(vec![Coord::Subsets(self.omega.clone())])
    }

    fn forward(&self, x: &[Value]) -> Result<Vec<Value>> {
        let p = pair(&x[0]);
        let a = pullback(&self.omega, p.first());
        let b = pullback(&self.omega, p.second());
        let trits = a.periodic().zip_with(b.periodic(), |x, y| match (x, y) {
            (true, _) => 1u8,
            (false, true) => 2,
            (false, false) => 0,
        });
        let bits = encode(&TernaryStream::from_periodic(trits));
        Ok(vec![Value::Set(pushforward(&self.omega, &bits))])
    }

    fn backward(&self, y: &[Value]) -> Result<Vec<Value>> {
        let trits = decode(&pullback(&self.omega, set(&y[0])));
        let first = pushforward(&self.omega, &trits.indicator(1));
        let second = pushforward(&self.omega, &trits.indicator(2));
        Ok(vec![Value::Pair(DisjointPair::new(first, second)?)])
    }

    fn forward_lazy(&self, x: &[LazyValue]) -> Vec<LazyValue> {
        let (px, py) = x[0].pair();
        let omega = ground(&self.omega);
        let trits: LazyTrits = {
            let omega = omega.clone();
            Rc::new(move |k| {
                let m = omega.select(k);
                if px(m) {
                    1
                } else if py(m) {
                    2
                } else {
                    0
                }
            })
        };
        let enc = Encoder::new(trits);
        vec![LazyValue::Set(Rc::new(move |n| omega.contains(n) && enc.bit(omega.rank(n))))]
    }

    fn backward_lazy(&self, y: &[LazyValue]) -> Vec<LazyValue> {
        let z = y[0].set();
        let omega = ground(&self.omega);
        let bits: LazySet = {
            let omega = omega.clone();
            Rc::new(move |k| z(omega.select(k)))
        };
        let dec = Decoder::new(bits);
        let component = |sym: code::Trit| -> LazySet {
            let (omega, dec) = (omega.clone(), dec.clone());
            Rc::new(move |n| omega.contains(n) && dec.get(omega.rank(n)) == sym)
        };
        vec![LazyValue::Pair(component(1), component(2))]
    }
}

pub fn disjoint_encode_homeo(omega: &GroundSet) -> Homeo {
    Homeo::primitive("disjoint-encode", DisjointEncode { omega: omega.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(s: &str) -> EvPeriodicSet {
        s.parse().unwrap()
    }

    fn sets(v: &[Value]) -> Vec<String> {
        super::super::tuple_literals(v)
    }

    #[test]
    fn restriction_examples() {
        let h = restriction_homeo(&GroundSet::evens(), &GroundSet::new(lit("|1000")).unwrap()).unwrap();
        let out = h.forward(&[Value::Set(EvPeriodicSet::finite(&[0, 1, 4]))]).unwrap();
        assert_eq!(out, vec![Value::Set(EvPeriodicSet::finite(&[0, 2, 4]))]);
        let out = h.forward(&[Value::Set(EvPeriodicSet::omega())]).unwrap();
        assert_eq!(out, vec![Value::Set(EvPeriodicSet::evens())]);
        assert!(h.backward(&[Value::Set(EvPeriodicSet::finite(&[1]))]).is_err());
    }

    #[test]
    fn product_examples() {
        let h = product_homeo(&GroundSet::evens()).unwrap();
        let out = h
            .forward(&[Value::Set(EvPeriodicSet::finite(&[0, 2])), Value::Set(EvPeriodicSet::finite(&[1]))])
            .unwrap();
        assert_eq!(out, vec![Value::Set(EvPeriodicSet::finite(&[0, 1, 2]))]);
        let back = h.backward(&[Value::Set(EvPeriodicSet::finite(&[0, 1, 2, 3]))]).unwrap();
        assert_eq!(
            back,
            vec![Value::Set(EvPeriodicSet::finite(&[0, 2])), Value::Set(EvPeriodicSet::finite(&[1, 3]))]
        );
        assert!(product_homeo(&GroundSet::omega()).is_err());
        assert!(h.forward(&[Value::Set(lit("|1")), Value::Set(lit("|0"))]).is_err());
    }

    #[test]
    fn main_pair_example() {
        let h = main_pair_homeo(&GroundSet::evens()).unwrap();
        let x = vec![
            Value::Set(lit("|1000")),
            Value::Set(EvPeriodicSet::evens()),
            Value::Pair(DisjointPair::new(EvPeriodicSet::finite(&[1]), EvPeriodicSet::finite(&[3])).unwrap()),
        ];
        let out = h.forward(&x).unwrap();
        // ranks in ω ∖ mult4 = {1, 2, 3, 5, 6, 7, 9, ...}: 1 ↦ 0, 3 ↦ 2, 2 + 4i ↦ 1 + 3i
        let w: Vec<usize> = out[1].as_pair().unwrap().second().members_below(16).collect();
        assert_eq!(w, vec![1, 2, 4, 7, 10, 13]);
        assert_eq!(out[0], Value::Set(lit("|1000")));
        assert_eq!(*out[1].as_pair().unwrap().first(), EvPeriodicSet::finite(&[0]));
        assert_eq!(h.backward(&out).unwrap(), x);
    }

    #[test]
    fn main_pair_trivial_and_errors() {
        let h = main_pair_homeo(&GroundSet::evens()).unwrap();
        let evens = Value::Set(EvPeriodicSet::evens());
        let x = vec![evens.clone(), evens.clone(), Value::Pair(DisjointPair::empty())];
        let out = h.forward(&x).unwrap();
        assert_eq!(out, vec![evens.clone(), Value::Pair(DisjointPair::empty())]);
        // X must live in ω ∖ Ω
        let bad = vec![
            evens.clone(),
            evens,
            Value::Pair(DisjointPair::new(EvPeriodicSet::finite(&[2]), EvPeriodicSet::empty()).unwrap()),
        ];
        assert!(h.forward(&bad).is_err());
        assert!(DisjointPair::new(EvPeriodicSet::finite(&[1]), EvPeriodicSet::finite(&[1, 3])).is_err());
    }

    #[test]
    fn code_examples() {
        let h = code_homeo();
        let out = h.forward(&[Value::Set(lit("|01011"))]).unwrap();
        assert_eq!(sets(&out), vec!["|012"]);
        let out = h.forward(&[Value::Set(EvPeriodicSet::omega())]).unwrap();
        assert_eq!(out, vec![Value::Ternary(TernaryStream::constant(2))]);
    }

    #[test]
    fn disjoint_encode_examples() {
        let h = disjoint_encode_homeo(&GroundSet::omega());
        let out = h.forward(&[Value::Pair(DisjointPair::empty())]).unwrap();
        assert_eq!(out, vec![Value::Set(EvPeriodicSet::empty())]);
        let all_first = DisjointPair::new(EvPeriodicSet::omega(), EvPeriodicSet::empty()).unwrap();
        let out = h.forward(&[Value::Pair(all_first.clone())]).unwrap();
        assert_eq!(out, vec![Value::Set(EvPeriodicSet::evens())]);
        assert_eq!(h.backward(&out).unwrap(), vec![Value::Pair(all_first)]);

        let odds = GroundSet::odds();
        let h = disjoint_encode_homeo(&odds);
        let p = DisjointPair::new(odds.carrier().clone(), EvPeriodicSet::empty()).unwrap();
        // (10)^ω written on the odd coordinates
        let out = h.forward(&[Value::Pair(p)]).unwrap();
        assert_eq!(out, vec![Value::Set(lit("|0100"))]);
    }

    #[test]
    fn reindex_and_interleave_examples() {
        let h = reindex_homeo(&GroundSet::evens(), &GroundSet::omega());
        let mult4 = lit("|1000");
        assert_eq!(h.forward(&[Value::Set(mult4)]).unwrap(), vec![Value::Set(EvPeriodicSet::evens())]);
        let i = interleave_homeo(&GroundSet::evens(), &GroundSet::odds()).unwrap();
        let out = i
            .forward(&[Value::Set(EvPeriodicSet::finite(&[0])), Value::Set(EvPeriodicSet::finite(&[1]))])
            .unwrap();
        assert_eq!(out, vec![Value::Set(EvPeriodicSet::finite(&[0, 1]))]);
        assert!(interleave_homeo(&GroundSet::evens(), &GroundSet::omega()).is_err());
        assert!(reindex_homeo(&GroundSet::odds(), &GroundSet::odds()).is_identity());
    }

    #[test]
    fn lazy_agrees_with_exact_on_main_pair() {
        let h = main_pair_homeo(&GroundSet::evens()).unwrap();
        let px = lit("01|000001");
        let py = EvPeriodicSet::odds().diff(&px).diff(&lit("|000101"));
        let x = vec![
            Value::Set(lit("1010|1000")),
            Value::Set(lit("|101000")),
            Value::Pair(DisjointPair::new(px, py).unwrap()),
        ];
        let exact = h.forward(&x).unwrap();
        let lazy: Vec<LazyValue> = x.iter().map(LazyValue::from_value).collect();
        let out = h.forward_lazy(&lazy).unwrap();
        assert!(out.iter().zip(&exact).all(|(l, e)| l.agrees_with(e, 300)));
        let back = h.backward_lazy(&exact.iter().map(LazyValue::from_value).collect::<Vec<_>>()).unwrap();
        assert!(back.iter().zip(&x).all(|(l, e)| l.agrees_with(e, 300)));
    }
}
