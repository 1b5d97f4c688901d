use std::fmt;
use std::str::FromStr;

use super::periodic::Periodic;
use crate::error::{Error, Result};

/// An eventually periodic subset of ω, stored by its characteristic sequence.
///
/// Character `i` of a literal is the bit of position `i`: `0111|10` is
/// `{1, 2, 3} ∪ {4, 6, 8, ...}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EvPeriodicSet(Periodic<bool>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolOp {
    Union,
    Intersect,
    Diff,
    Complement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finiteness {
    Finite,
    Cofinite,
    BiInfinite,
}

impl EvPeriodicSet {
    pub fn new(prefix: Vec<bool>, block: Vec<bool>) -> Result<Self> {
        Periodic::new(prefix, block).map(EvPeriodicSet)
    }

    pub(crate) fn from_periodic(p: Periodic<bool>) -> Self {
        EvPeriodicSet(p)
    }

    pub(crate) fn from_parts(prefix: Vec<bool>, block: Vec<bool>) -> Self {
        EvPeriodicSet(Periodic::canonical(prefix, block))
    }

    pub fn empty() -> Self {
        EvPeriodicSet(Periodic::constant(false))
    }

    pub fn omega() -> Self {
        EvPeriodicSet(Periodic::constant(true))
    }

    /// `{ n : n ≡ residue (mod modulus) }`.
    pub fn residue_class(residue: usize, modulus: usize) -> Self {
        assert!(modulus > 0 && residue < modulus);
        let block = (0..modulus).map(|i| i == residue).collect();
        Self::from_parts(Vec::new(), block)
    }

    pub fn evens() -> Self {
        Self::residue_class(0, 2)
    }

    pub fn odds() -> Self {
        Self::residue_class(1, 2)
    }

    pub fn finite(elements: &[usize]) -> Self {
        let len = elements.iter().max().map_or(0, |m| m + 1);
        let mut prefix = vec![false; len];
        for &e in elements {
            prefix[e] = true;
        }
        Self::from_parts(prefix, vec![false])
    }

    /// The set `[from, ∞)`.
    pub fn tail(from: usize) -> Self {
        Self::from_parts(vec![false; from], vec![true])
    }

    pub fn contains(&self, n: usize) -> bool {
        self.0.at(n)
    }

    pub fn prefix(&self) -> &[bool] {
        self.0.prefix()
    }

    pub fn block(&self) -> &[bool] {
        self.0.block()
    }

    pub(crate) fn periodic(&self) -> &Periodic<bool> {
        &self.0
    }

    /// Returns the canonical form. Values are canonical on construction, so
    /// this only rebuilds from the raw parts.
    pub fn canonicalize(&self) -> Self {
        Self::from_parts(self.prefix().to_vec(), self.block().to_vec())
    }

    pub fn union(&self, other: &Self) -> Self {
        EvPeriodicSet(self.0.zip_with(&other.0, |a, b| a | b))
    }

    pub fn intersect(&self, other: &Self) -> Self {
        EvPeriodicSet(self.0.zip_with(&other.0, |a, b| a & b))
    }

    pub fn diff(&self, other: &Self) -> Self {
        EvPeriodicSet(self.0.zip_with(&other.0, |a, b| a & !b))
    }

    /// The bit flip `n ↦ 1 - X(n)`.
    pub fn complement(&self) -> Self {
        EvPeriodicSet(self.0.map(|a| !a))
    }

    pub fn boolean(op: BoolOp, x: &Self, y: Option<&Self>) -> Result<Self> {
        let need = || y.ok_or_else(|| Error::Malformed(format!("{op:?} needs two operands")));
        Ok(match op {
            BoolOp::Union => x.union(need()?),
            BoolOp::Intersect => x.intersect(need()?),
            BoolOp::Diff => x.diff(need()?),
            BoolOp::Complement => x.complement(),
        })
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.diff(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersect(other).is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.prefix().is_empty() && self.block() == [false]
    }

    /// `X ⊆* Y`: the difference `X ∖ Y` is finite.
    pub fn almost_subset(&self, other: &Self) -> bool {
        self.diff(other).is_finite()
    }

    /// `X =* Y`.
    pub fn almost_equal(&self, other: &Self) -> bool {
        self.almost_subset(other) && other.almost_subset(self)
    }

    pub fn finiteness(&self) -> Finiteness {
        if self.block().iter().all(|&b| !b) {
            Finiteness::Finite
        } else if self.block().iter().all(|&b| b) {
            Finiteness::Cofinite
        } else {
            Finiteness::BiInfinite
        }
    }

    pub fn is_finite(&self) -> bool {
        self.finiteness() == Finiteness::Finite
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    pub fn is_cofinite(&self) -> bool {
        self.finiteness() == Finiteness::Cofinite
    }

    /// Members below `bound`, in increasing order.
    pub fn members_below(&self, bound: usize) -> impl Iterator<Item = usize> + '_ {
        (0..bound).filter(move |&n| self.contains(n))
    }
}

impl fmt::Display for EvPeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = |s: &[bool]| s.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        write!(f, "{}|{}", bits(self.prefix()), bits(self.block()))
    }
}

impl fmt::Debug for EvPeriodicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EvPeriodicSet({self})")
    }
}

/// Splits `PREFIX|BLOCK` and maps every character through `symbol`.
pub(crate) fn parse_literal<T>(
    s: &str,
    symbol: impl Fn(char) -> Option<T>,
) -> Result<(Vec<T>, Vec<T>)> {
    let s = s.trim();
    let (prefix, block) = s
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("missing '|' in literal {s:?}")))?;
    let conv = |part: &str| -> Result<Vec<T>> {
        part.chars()
            .map(|c| symbol(c).ok_or_else(|| Error::Parse(format!("bad character {c:?} in {s:?}"))))
            .collect()
    };
    let (prefix, block) = (conv(prefix)?, conv(block)?);
    if block.is_empty() {
        return Err(Error::Parse(format!("empty block in literal {s:?}")));
    }
    Ok((prefix, block))
}

impl FromStr for EvPeriodicSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (prefix, block) = parse_literal(s, |c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })?;
        Ok(Self::from_parts(prefix, block))
    }
}
