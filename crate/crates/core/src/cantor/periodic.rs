//! Eventually periodic sequences over a small alphabet.
//!
//! A sequence is stored as a finite `prefix` followed by a `block` that repeats
//! forever. Values are always kept in canonical form: the block is primitive
//! (not a power of a shorter word) and the prefix is as short as possible. Two
//! canonical values denote the same sequence iff they are structurally equal.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Periodic<T> {
    prefix: Vec<T>,
    block: Vec<T>,
}

impl<T: Copy + Eq> Periodic<T> {
    /// Builds the canonical form of `prefix · block^ω`.
    pub fn new(prefix: Vec<T>, block: Vec<T>) -> Result<Self> {
        if block.is_empty() {
            return Err(Error::Malformed("repeating block must be nonempty".into()));
        }
        Ok(Self::canonical(prefix, block))
    }

    /// Like [`Periodic::new`] for callers that already know the block is nonempty.
    pub(crate) fn canonical(mut prefix: Vec<T>, mut block: Vec<T>) -> Self {
        debug_assert!(!block.is_empty());
        let period = primitive_period(&block);
        block.truncate(period);
        // pull the prefix tail into the block, rotating right each time
        while let (Some(&p), Some(&b)) = (prefix.last(), block.last()) {
            if p != b {
                break;
            }
            prefix.pop();
            block.rotate_right(1);
        }
        Periodic { prefix, block }
    }

    pub fn constant(value: T) -> Self {
        Periodic { prefix: Vec::new(), block: vec![value] }
    }

    pub fn prefix(&self) -> &[T] {
        &self.prefix
    }

    pub fn block(&self) -> &[T] {
        &self.block
    }

    pub fn at(&self, i: usize) -> T {
        match self.prefix.get(i) {
            Some(&v) => v,
            None => self.block[(i - self.prefix.len()) % self.block.len()],
        }
    }

    /// Rewrites the sequence with the given prefix length and block length.
    ///
    /// `prefix_len` must be at least the current prefix length and `block_len`
    /// a multiple of the current block length. The result is not canonical.
    pub(crate) fn aligned(&self, prefix_len: usize, block_len: usize) -> (Vec<T>, Vec<T>) {
        debug_assert!(prefix_len >= self.prefix.len());
        debug_assert_eq!(block_len % self.block.len(), 0);
        let prefix = (0..prefix_len).map(|i| self.at(i)).collect();
        let block = (prefix_len..prefix_len + block_len).map(|i| self.at(i)).collect();
        (prefix, block)
    }

    /// Pointwise combination of two sequences.
    pub(crate) fn zip_with<U: Copy + Eq, V: Copy + Eq>(
        &self,
        other: &Periodic<U>,
        f: impl Fn(T, U) -> V,
    ) -> Periodic<V> {
        let p = self.prefix.len().max(other.prefix.len());
        let l = lcm(self.block.len(), other.block.len());
        let (pa, ba) = self.aligned(p, l);
        let (pb, bb) = other.aligned(p, l);
        let prefix = pa.into_iter().zip(pb).map(|(a, b)| f(a, b)).collect();
        let block = ba.into_iter().zip(bb).map(|(a, b)| f(a, b)).collect();
        Periodic::canonical(prefix, block)
    }

    pub(crate) fn map<V: Copy + Eq>(&self, f: impl Fn(T) -> V) -> Periodic<V> {
        Periodic::canonical(
            self.prefix.iter().map(|&x| f(x)).collect(),
            self.block.iter().map(|&x| f(x)).collect(),
        )
    }
}

/// Length of the shortest word whose repetition gives `block`.
fn primitive_period<T: Eq>(block: &[T]) -> usize {
    let n = block.len();
    (1..=n)
        .filter(|&d| n.is_multiple_of(d))
        .find(|&d| (d..n).all(|i| block[i] == block[i - d]))
        .unwrap_or(n)
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}
