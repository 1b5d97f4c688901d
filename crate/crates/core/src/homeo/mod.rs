//! Homeomorphisms between products of Cantor-type spaces, realized as pairs
//! of mutually inverse point transformers.
//!
//! A [`Homeo`] carries a domain and a codomain [`Shape`]: a list of
//! coordinates, each one `2^A` for a ground set `A`, the disjoint-pair space
//! `D(A)`, or the ternary stream space. Every map can be evaluated two ways:
//! exactly on eventually periodic values, or lazily on query functions
//! (see [`LazyValue`]). The two paths must agree bit for bit.

mod chain;
pub mod code;
mod lazy;
mod prims;

use std::fmt;
use std::sync::Arc;

use crate::cantor::{EvPeriodicSet, GroundSet, TernaryStream};
use crate::error::{domain, Error, Result};

pub use chain::{
    power_homeo, prefilter_normalize, principal_classify, principal_decompose, square_homeo,
    Classification, Normalized,
};
pub use lazy::{LazySet, LazyTrits, LazyValue};
pub use prims::{
    code_homeo, disjoint_encode_homeo, interleave_homeo, main_pair_homeo, product_homeo,
    reindex_homeo, restriction_homeo,
};

/// A pair `(X, Y)` with `X ∩ Y = ∅`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DisjointPair {
    first: EvPeriodicSet,
    second: EvPeriodicSet,
}

/// Where a coordinate goes in a partial assignment to `D(Ω)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Absent,
    First,
    Second,
}

impl DisjointPair {
    pub fn new(first: EvPeriodicSet, second: EvPeriodicSet) -> Result<Self> {
        if !first.is_disjoint(&second) {
            return domain(format!(
                "pair is not disjoint: {first} and {second} share {}",
                first.intersect(&second)
            ));
        }
        Ok(DisjointPair { first, second })
    }

    pub fn empty() -> Self {
        DisjointPair { first: EvPeriodicSet::empty(), second: EvPeriodicSet::empty() }
    }

    pub fn first(&self) -> &EvPeriodicSet {
        &self.first
    }

    pub fn second(&self) -> &EvPeriodicSet {
        &self.second
    }

    pub fn into_parts(self) -> (EvPeriodicSet, EvPeriodicSet) {
        (self.first, self.second)
    }

    /// Two distinct members of `D(Ω)` extending a finite partial assignment.
    ///
    /// The first leaves every unassigned coordinate absent, the second also
    /// puts the least unassigned element of Ω into the first component.
    pub fn extensions(omega: &GroundSet, assignment: &[(usize, Slot)]) -> Result<[Self; 2]> {
        let mut first = Vec::new();
        let mut second = Vec::new();
        for &(n, slot) in assignment {
            if !omega.contains(n) {
                return domain(format!("coordinate {n} is not in {omega}"));
            }
            match slot {
                Slot::Absent => {}
                Slot::First => first.push(n),
                Slot::Second => second.push(n),
            }
        }
        let taken = |n: usize| assignment.iter().any(|&(m, _)| m == n);
        let free = (0..).map(|k| omega.select(k)).find(|&n| !taken(n)).unwrap();
        let base = Self::new(EvPeriodicSet::finite(&first), EvPeriodicSet::finite(&second))?;
        first.push(free);
        let other = Self::new(EvPeriodicSet::finite(&first), EvPeriodicSet::finite(&second))?;
        Ok([base, other])
    }
}

/// One coordinate of a product space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coord {
    /// `2^A`: subsets of the ground set.
    Subsets(GroundSet),
    /// `D(A)`: disjoint pairs of subsets of the ground set.
    Disjoint(GroundSet),
    /// `3^ω`.
    Ternary,
}

impl Coord {
    pub fn subsets_of_omega() -> Self {
        Coord::Subsets(GroundSet::omega())
    }

    /// Number of point literals this coordinate takes in a flat tuple.
    pub fn arity(&self) -> usize {
        match self {
            Coord::Disjoint(_) => 2,
            _ => 1,
        }
    }

    pub fn check(&self, v: &Value) -> Result<()> {
        match (self, v) {
            (Coord::Subsets(a), Value::Set(x)) => {
                if !x.is_subset(a.carrier()) {
                    return domain(format!("{x} is not a subset of {a}"));
                }
            }
            (Coord::Disjoint(a), Value::Pair(p)) => {
                for x in [p.first(), p.second()] {
                    if !x.is_subset(a.carrier()) {
                        return domain(format!("{x} is not a subset of {a}"));
                    }
                }
            }
            (Coord::Ternary, Value::Ternary(_)) => {}
            _ => {
                return Err(Error::Shape { expected: self.to_string(), found: v.kind().into() });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Subsets(a) => write!(f, "2^({a})"),
            Coord::Disjoint(a) => write!(f, "D({a})"),
            Coord::Ternary => write!(f, "3^w"),
        }
    }
}

/// A tuple signature.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Shape(pub Vec<Coord>);

impl Shape {
    pub fn new(coords: Vec<Coord>) -> Self {
        Shape(coords)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Coord] {
        &self.0
    }

    pub fn check(&self, values: &[Value]) -> Result<()> {
        if values.len() != self.len() {
            return Err(Error::Shape {
                expected: self.to_string(),
                found: format!("{} coordinates", values.len()),
            });
        }
        self.0.iter().zip(values).try_for_each(|(c, v)| c.check(v))
    }

    fn concat(shapes: impl IntoIterator<Item = Shape>) -> Shape {
        Shape(shapes.into_iter().flat_map(|s| s.0).collect())
    }

    /// Parses a flat list of point literals, two per disjoint-pair coordinate.
    pub fn parse_tuple(&self, literals: &[&str]) -> Result<Vec<Value>> {
        let want: usize = self.0.iter().map(Coord::arity).sum();
        if literals.len() != want {
            return Err(Error::Shape {
                expected: format!("{want} literals for {self}"),
                found: format!("{} literals", literals.len()),
            });
        }
        let mut it = literals.iter();
        let values = self
            .0
            .iter()
            .map(|c| match c {
                Coord::Subsets(_) => Ok(Value::Set(it.next().unwrap().parse()?)),
                Coord::Disjoint(_) => {
                    let x = it.next().unwrap().parse()?;
                    let y = it.next().unwrap().parse()?;
                    Ok(Value::Pair(DisjointPair::new(x, y)?))
                }
                Coord::Ternary => Ok(Value::Ternary(it.next().unwrap().parse()?)),
            })
            .collect::<Result<Vec<_>>>()?;
        self.check(&values)?;
        Ok(values)
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(" x "))
    }
}

/// One coordinate of an exact point.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Value {
    Set(EvPeriodicSet),
    Pair(DisjointPair),
    Ternary(TernaryStream),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Set(_) => "set",
            Value::Pair(_) => "disjoint pair",
            Value::Ternary(_) => "ternary stream",
        }
    }

    pub fn as_set(&self) -> Option<&EvPeriodicSet> {
        match self {
            Value::Set(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<&DisjointPair> {
        match self {
            Value::Pair(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_ternary(&self) -> Option<&TernaryStream> {
        match self {
            Value::Ternary(t) => Some(t),
            _ => None,
        }
    }

    /// Point literals for this coordinate (two for a disjoint pair).
    pub fn literals(&self) -> Vec<String> {
        match self {
            Value::Set(x) => vec![x.to_string()],
            Value::Pair(p) => vec![p.first.to_string(), p.second.to_string()],
            Value::Ternary(t) => vec![t.to_string()],
        }
    }
}

/// Flattens a tuple into point literals.
pub fn tuple_literals(values: &[Value]) -> Vec<String> {
    values.iter().flat_map(Value::literals).collect()
}

/// A building block with hand-written exact and lazy maps in both directions.
///
/// Implementations may assume their inputs already satisfy the declared shape.
pub(crate) trait Primitive: Send + Sync {
    fn domain(&self) -> Shape;
    fn codomain(&self) -> Shape;
    fn forward(&self, x: &[Value]) -> Result<Vec<Value>>;
    fn backward(&self, y: &[Value]) -> Result<Vec<Value>>;
    fn forward_lazy(&self, x: &[LazyValue]) -> Vec<LazyValue>;
    fn backward_lazy(&self, y: &[LazyValue]) -> Vec<LazyValue>;
}

enum Node {
    Prim(Box<dyn Primitive>),
    Identity,
    Seq(Vec<Homeo>),
    Par(Vec<Homeo>),
    // output i is input perm[i]
    Reorder(Vec<usize>),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    Forward,
    Backward,
}

impl Dir {
    fn flip(self, inverted: bool) -> Self {
        match (self, inverted) {
            (d, false) => d,
            (Dir::Forward, true) => Dir::Backward,
            (Dir::Backward, true) => Dir::Forward,
        }
    }
}

/// A homeomorphism with an explicit inverse.
#[derive(Clone)]
pub struct Homeo {
    name: String,
    domain: Shape,
    codomain: Shape,
    node: Arc<Node>,
    inverted: bool,
}

impl fmt::Debug for Homeo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Homeo({}: {} -> {})", self.name, self.domain, self.codomain)
    }
}

impl Homeo {
    pub(crate) fn primitive(name: impl Into<String>, prim: impl Primitive + 'static) -> Self {
        Homeo {
            name: name.into(),
            domain: prim.domain(),
            codomain: prim.codomain(),
            node: Arc::new(Node::Prim(Box::new(prim))),
            inverted: false,
        }
    }

    pub fn identity(shape: Shape) -> Self {
        Homeo {
            name: "id".into(),
            domain: shape.clone(),
            codomain: shape,
            node: Arc::new(Node::Identity),
            inverted: false,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn domain(&self) -> &Shape {
        &self.domain
    }

    pub fn codomain(&self) -> &Shape {
        &self.codomain
    }

    pub fn is_identity(&self) -> bool {
        matches!(*self.node, Node::Identity)
    }

    pub fn forward(&self, x: &[Value]) -> Result<Vec<Value>> {
        self.domain.check(x)?;
        self.run(Dir::Forward, x)
    }

    pub fn backward(&self, y: &[Value]) -> Result<Vec<Value>> {
        self.codomain.check(y)?;
        self.run(Dir::Backward, y)
    }

    pub fn forward_lazy(&self, x: &[LazyValue]) -> Result<Vec<LazyValue>> {
        self.run_lazy(Dir::Forward, x)
    }

    pub fn backward_lazy(&self, y: &[LazyValue]) -> Result<Vec<LazyValue>> {
        self.run_lazy(Dir::Backward, y)
    }

    fn source(&self, dir: Dir) -> &Shape {
        match dir {
            Dir::Forward => &self.domain,
            Dir::Backward => &self.codomain,
        }
    }

    fn run(&self, dir: Dir, input: &[Value]) -> Result<Vec<Value>> {
        let inner = dir.flip(self.inverted);
        match &*self.node {
            Node::Prim(p) => {
                let (src, dst) = match inner {
                    Dir::Forward => (p.domain(), p.codomain()),
                    Dir::Backward => (p.codomain(), p.domain()),
                };
                src.check(input)?;
                let out = match inner {
                    Dir::Forward => p.forward(input)?,
                    Dir::Backward => p.backward(input)?,
                };
                debug_assert!(dst.check(&out).is_ok(), "{} produced an ill-shaped tuple", self.name);
                Ok(out)
            }
            Node::Identity => Ok(input.to_vec()),
            Node::Seq(steps) => {
                let mut cur = input.to_vec();
                let mut visit = |h: &Homeo| -> Result<()> {
                    cur = h.run(inner, &cur)?;
                    Ok(())
                };
                match inner {
                    Dir::Forward => steps.iter().try_for_each(&mut visit)?,
                    Dir::Backward => steps.iter().rev().try_for_each(&mut visit)?,
                }
                Ok(cur)
            }
            Node::Par(parts) => {
                let mut out = Vec::new();
                let mut rest = input;
                for h in parts {
                    let (head, tail) = rest.split_at(h.source(inner).len());
                    out.extend(h.run(inner, head)?);
                    rest = tail;
                }
                Ok(out)
            }
            Node::Reorder(perm) => Ok(permute(perm, inner, input)),
        }
    }

    fn run_lazy(&self, dir: Dir, input: &[LazyValue]) -> Result<Vec<LazyValue>> {
        let inner = dir.flip(self.inverted);
        let expected = self.source(dir).len();
        if input.len() != expected {
            return Err(Error::Shape {
                expected: self.source(dir).to_string(),
                found: format!("{} lazy coordinates", input.len()),
            });
        }
        Ok(match &*self.node {
            Node::Prim(p) => match inner {
                Dir::Forward => p.forward_lazy(input),
                Dir::Backward => p.backward_lazy(input),
            },
            Node::Identity => input.to_vec(),
            Node::Seq(steps) => {
                let mut cur = input.to_vec();
                match inner {
                    Dir::Forward => {
                        for h in steps {
                            cur = h.run_lazy(inner, &cur)?;
                        }
                    }
                    Dir::Backward => {
                        for h in steps.iter().rev() {
                            cur = h.run_lazy(inner, &cur)?;
                        }
                    }
                }
                cur
            }
            Node::Par(parts) => {
                let mut out = Vec::new();
                let mut rest = input;
                for h in parts {
                    let (head, tail) = rest.split_at(h.source(inner).len());
                    out.extend(h.run_lazy(inner, head)?);
                    rest = tail;
                }
                out
            }
            Node::Reorder(perm) => permute(perm, inner, input),
        })
    }
}

fn permute<T: Clone>(perm: &[usize], dir: Dir, input: &[T]) -> Vec<T> {
    match dir {
        Dir::Forward => perm.iter().map(|&i| input[i].clone()).collect(),
        Dir::Backward => {
            let mut out = input.to_vec();
            for (i, &j) in perm.iter().enumerate() {
                out[j] = input[i].clone();
            }
            out
        }
    }
}

/// `h2 ∘ h1`: apply `h1`, then `h2`.
pub fn compose(h1: &Homeo, h2: &Homeo) -> Result<Homeo> {
    compose_all(&[h1.clone(), h2.clone()])
}

/// Left-to-right composition of a chain. Identities are dropped.
pub fn compose_all(steps: &[Homeo]) -> Result<Homeo> {
    let first = steps.first().ok_or_else(|| Error::Domain("empty composition".into()))?;
    for pair in steps.windows(2) {
        if pair[0].codomain != pair[1].domain {
            return Err(Error::Shape {
                expected: format!("{} (domain of {})", pair[1].domain, pair[1].name),
                found: format!("{} (codomain of {})", pair[0].codomain, pair[0].name),
            });
        }
    }
    let kept: Vec<Homeo> = steps.iter().filter(|h| !h.is_identity()).cloned().collect();
    let name = steps.iter().map(|h| h.name.as_str()).collect::<Vec<_>>().join(" ; ");
    match kept.len() {
        0 => Ok(Homeo::identity(first.domain.clone())),
        1 => Ok(kept.into_iter().next().unwrap()),
        _ => Ok(Homeo {
            name,
            domain: first.domain.clone(),
            codomain: steps.last().unwrap().codomain.clone(),
            node: Arc::new(Node::Seq(kept)),
            inverted: false,
        }),
    }
}

/// Swaps forward and backward.
pub fn invert(h: &Homeo) -> Homeo {
    Homeo {
        name: format!("inv({})", h.name),
        domain: h.codomain.clone(),
        codomain: h.domain.clone(),
        node: h.node.clone(),
        inverted: !h.inverted,
    }
}

/// Product of homeomorphisms acting on consecutive blocks of coordinates.
pub fn parallel(parts: &[Homeo]) -> Homeo {
    if parts.iter().all(Homeo::is_identity) {
        return Homeo::identity(Shape::concat(parts.iter().map(|h| h.domain.clone())));
    }
    if parts.len() == 1 {
        return parts[0].clone();
    }
    Homeo {
        name: format!("({})", parts.iter().map(|h| h.name.as_str()).collect::<Vec<_>>().join(" x ")),
        domain: Shape::concat(parts.iter().map(|h| h.domain.clone())),
        codomain: Shape::concat(parts.iter().map(|h| h.codomain.clone())),
        node: Arc::new(Node::Par(parts.to_vec())),
        inverted: false,
    }
}

/// Coordinate permutation: output coordinate `i` is input coordinate `perm[i]`.
pub fn reorder(domain: Shape, perm: &[usize]) -> Result<Homeo> {
    let mut seen = vec![false; domain.len()];
    for &i in perm {
        if i >= domain.len() || std::mem::replace(&mut seen[i], true) {
            return domain_err_perm(perm, &domain);
        }
    }
    if perm.len() != domain.len() {
        return domain_err_perm(perm, &domain);
    }
    let codomain = Shape(perm.iter().map(|&i| domain.0[i].clone()).collect());
    Ok(Homeo {
        name: format!("reorder{perm:?}"),
        domain,
        codomain,
        node: Arc::new(Node::Reorder(perm.to_vec())),
        inverted: false,
    })
}

fn domain_err_perm(perm: &[usize], shape: &Shape) -> Result<Homeo> {
    domain(format!("{perm:?} is not a permutation of the coordinates of {shape}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(s: &str) -> Value {
        Value::Set(s.parse().unwrap())
    }

    fn two_sets() -> Shape {
        Shape(vec![Coord::subsets_of_omega(), Coord::subsets_of_omega()])
    }

    #[test]
    fn reorder_twice_is_identity() {
        let swap = reorder(two_sets(), &[1, 0]).unwrap();
        let x = vec![set("1|0"), set("|10")];
        let once = swap.forward(&x).unwrap();
        assert_eq!(once, vec![set("|10"), set("1|0")]);
        assert_eq!(swap.forward(&once).unwrap(), x);
        assert_eq!(swap.backward(&once).unwrap(), x);
        assert!(reorder(two_sets(), &[0, 0]).is_err());
        assert!(reorder(two_sets(), &[0]).is_err());
    }

    #[test]
    fn parallel_identities_collapse() {
        let id = Homeo::identity(Shape(vec![Coord::subsets_of_omega()]));
        let p = parallel(&[id.clone(), id]);
        assert!(p.is_identity());
        let x = vec![set("01|1"), set("|100")];
        assert_eq!(p.forward(&x).unwrap(), x);
    }

    #[test]
    fn compose_checks_shapes() {
        let a = product_homeo(&GroundSet::evens()).unwrap();
        let err = compose(&a, &a).unwrap_err();
        match err {
            Error::Shape { expected, found } => {
                assert!(expected.contains("product"));
                assert!(found.contains("product"));
            }
            other => panic!("unexpected {other:?}"),
        }
        let round = compose(&a, &invert(&a)).unwrap();
        let x = vec![set("|1000"), set("01|0")];
        assert_eq!(round.forward(&x).unwrap(), x);
    }

    #[test]
    fn forward_rejects_ill_shaped_input() {
        let a = product_homeo(&GroundSet::evens()).unwrap();
        assert!(matches!(a.forward(&[set("|1"), set("|0")]), Err(Error::Domain(_))));
        assert!(matches!(a.forward(&[set("|10")]), Err(Error::Shape { .. })));
    }

    #[test]
    fn crowdedness_extensions_are_distinct_members() {
        let omega = GroundSet::odds();
        let assignment = [(1, Slot::First), (3, Slot::Second), (5, Slot::Absent)];
        let [a, b] = DisjointPair::extensions(&omega, &assignment).unwrap();
        assert_ne!(a, b);
        for p in [&a, &b] {
            assert!(p.first().contains(1) && p.second().contains(3));
            assert!(!p.first().contains(5) && !p.second().contains(5));
            assert!(p.first().is_subset(omega.carrier()));
        }
        assert!(b.first().contains(7));
        assert!(DisjointPair::extensions(&omega, &[(2, Slot::First)]).is_err());
    }

    #[test]
    fn parse_tuple_flattens_pairs() {
        let shape = Shape(vec![Coord::Disjoint(GroundSet::omega()), Coord::Ternary]);
        let v = shape.parse_tuple(&["1|0", "01|0", "2|10"]).unwrap();
        assert_eq!(tuple_literals(&v), vec!["1|0", "01|0", "2|10"]);
        assert!(shape.parse_tuple(&["1|0", "1|0", "2|10"]).is_err());
        assert!(shape.parse_tuple(&["1|0"]).is_err());
    }
}
