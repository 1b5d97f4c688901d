//! Transcoding between binary and ternary streams with the complete prefix
//! code `0 ↦ 0`, `1 ↦ 10`, `2 ↦ 11`.
//!
//! Every infinite binary stream parses uniquely, so `decode` and `encode` are
//! mutually inverse homeomorphisms `2^ω ≅ 3^ω`. On eventually periodic input
//! the parser only has `|block|` possible states at codeword boundaries inside
//! the periodic part, so the output is eventually periodic as well.

use std::collections::HashMap;

use crate::cantor::{EvPeriodicSet, TernaryStream};

pub type Trit = u8;

const CODE: [&[bool]; 3] = [&[false], &[true, false], &[true, true]];

pub fn codeword(t: Trit) -> &'static [bool] {
    CODE[t as usize]
}

pub fn decode(bits: &EvPeriodicSet) -> TernaryStream {
    let (p, l) = (bits.prefix().len(), bits.block().len());
    let mut out: Vec<Trit> = Vec::new();
    // block offset at a codeword boundary -> index of the next symbol
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut pos = 0;
    loop {
        if pos >= p {
            let state = (pos - p) % l;
            if let Some(&start) = seen.get(&state) {
                let block = out.split_off(start);
                return TernaryStream::from_parts(out, block);
            }
            seen.insert(state, out.len());
        }
        let (t, len) = match (bits.contains(pos), bits.contains(pos + 1)) {
            (false, _) => (0, 1),
            (true, false) => (1, 2),
            (true, true) => (2, 2),
        };
        out.push(t);
        pos += len;
    }
}

pub fn encode(trits: &TernaryStream) -> EvPeriodicSet {
    let cat = |ts: &[Trit]| ts.iter().flat_map(|&t| codeword(t).iter().copied()).collect::<Vec<_>>();
    EvPeriodicSet::from_parts(cat(trits.prefix()), cat(trits.block()))
}
