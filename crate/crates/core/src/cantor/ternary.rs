use std::fmt;
use std::str::FromStr;

use super::periodic::Periodic;
use super::set::{parse_literal, EvPeriodicSet};
use crate::error::{Error, Result};

/// An eventually periodic stream over `{0, 1, 2}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TernaryStream(Periodic<u8>);

impl TernaryStream {
    pub fn new(prefix: Vec<u8>, block: Vec<u8>) -> Result<Self> {
        if let Some(t) = prefix.iter().chain(&block).find(|&&t| t > 2) {
            return Err(Error::Malformed(format!("ternary symbol out of range: {t}")));
        }
        Periodic::new(prefix, block).map(TernaryStream)
    }

    pub(crate) fn from_parts(prefix: Vec<u8>, block: Vec<u8>) -> Self {
        TernaryStream(Periodic::canonical(prefix, block))
    }

    pub(crate) fn from_periodic(p: Periodic<u8>) -> Self {
        TernaryStream(p)
    }

    /// `{ k : self(k) = symbol }`.
    pub fn indicator(&self, symbol: u8) -> EvPeriodicSet {
        EvPeriodicSet::from_periodic(self.0.map(|t| t == symbol))
    }

    pub fn constant(t: u8) -> Self {
        assert!(t <= 2);
        TernaryStream(Periodic::constant(t))
    }

    pub fn at(&self, i: usize) -> u8 {
        self.0.at(i)
    }

    pub fn prefix(&self) -> &[u8] {
        self.0.prefix()
    }

    pub fn block(&self) -> &[u8] {
        self.0.block()
    }
}

impl fmt::Display for TernaryStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |v: &[u8]| v.iter().map(|&t| char::from(b'0' + t)).collect::<String>();
        write!(f, "{}|{}", s(self.prefix()), s(self.block()))
    }
}

impl fmt::Debug for TernaryStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryStream({self})")
    }
}

impl FromStr for TernaryStream {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (prefix, block) = parse_literal(s, |c| match c {
            '0'..='2' => Some(c as u8 - b'0'),
            _ => None,
        })?;
        Ok(Self::from_parts(prefix, block))
    }
}
