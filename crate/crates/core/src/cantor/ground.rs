use std::fmt;

use super::set::EvPeriodicSet;
use crate::error::{domain, Result};

/// An infinite eventually periodic `Ω ⊆ ω`, used as a coordinate set for `2^Ω`.
///
/// Coordinates are ordered by the order induced from ω: `select(k)` is the
/// `k`-th element of Ω counting from zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    carrier: EvPeriodicSet,
    // positions of ones in the prefix and in the block
    prefix_ones: Vec<usize>,
    block_ones: Vec<usize>,
}

impl GroundSet {
    pub fn new(carrier: EvPeriodicSet) -> Result<Self> {
        if carrier.is_finite() {
            return domain(format!("ground set {carrier} is finite"));
        }
        let ones = |s: &[bool]| s.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
        Ok(GroundSet {
            prefix_ones: ones(carrier.prefix()),
            block_ones: ones(carrier.block()),
            carrier,
        })
    }

    pub fn omega() -> Self {
        Self::new(EvPeriodicSet::omega()).unwrap()
    }

    pub fn evens() -> Self {
        Self::new(EvPeriodicSet::evens()).unwrap()
    }

    pub fn odds() -> Self {
        Self::new(EvPeriodicSet::odds()).unwrap()
    }

    /// `ω ∖ Ω`, which must again be infinite.
    pub fn complement(&self) -> Result<Self> {
        Self::new(self.carrier.complement())
    }

    pub fn carrier(&self) -> &EvPeriodicSet {
        &self.carrier
    }

    pub fn contains(&self, n: usize) -> bool {
        self.carrier.contains(n)
    }

    pub fn prefix_len(&self) -> usize {
        self.carrier.prefix().len()
    }

    pub fn block_len(&self) -> usize {
        self.carrier.block().len()
    }

    /// Number of members in one repeating block.
    pub fn ones_per_block(&self) -> usize {
        self.block_ones.len()
    }

    /// Number of members inside the prefix.
    pub fn prefix_count(&self) -> usize {
        self.prefix_ones.len()
    }

    /// `|Ω ∩ [0, n)|`.
    pub fn rank(&self, n: usize) -> usize {
        let p = self.prefix_len();
        if n <= p {
            return self.prefix_ones.partition_point(|&i| i < n);
        }
        let off = n - p;
        let (full, rest) = (off / self.block_len(), off % self.block_len());
        self.prefix_count()
            + full * self.ones_per_block()
            + self.block_ones.partition_point(|&i| i < rest)
    }

    /// The `k`-th smallest element of Ω (zero based).
    pub fn select(&self, k: usize) -> usize {
        if let Some(&i) = self.prefix_ones.get(k) {
            return i;
        }
        let k = k - self.prefix_count();
        let (q, r) = (k / self.ones_per_block(), k % self.ones_per_block());
        self.prefix_len() + q * self.block_len() + self.block_ones[r]
    }
}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.carrier.fmt(f)
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroundSet({})", self.carrier)
    }
}
