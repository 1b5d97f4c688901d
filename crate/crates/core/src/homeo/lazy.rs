//! Lazily evaluated points and the memo tables the lazy maps share.
//!
//! A lazy set is just a membership function. The sequential pieces of the
//! constructions (prefix-code parsing, enumeration of a complement) are
//! memoized so that evaluating the first `n` bits of an output costs time
//! roughly linear in the number of input positions it depends on.

use std::cell::RefCell;
use std::fmt;
use std::rc::Rc;

use super::code::{codeword, Trit};
use super::Value;

pub type LazySet = Rc<dyn Fn(usize) -> bool>;
pub type LazyTrits = Rc<dyn Fn(usize) -> Trit>;

#[derive(Clone)]
pub enum LazyValue {
    Set(LazySet),
    Pair(LazySet, LazySet),
    Ternary(LazyTrits),
}

impl fmt::Debug for LazyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LazyValue::Set(_) => f.write_str("LazyValue::Set"),
            LazyValue::Pair(..) => f.write_str("LazyValue::Pair"),
            LazyValue::Ternary(_) => f.write_str("LazyValue::Ternary"),
        }
    }
}

impl LazyValue {
    /// Wraps an exact value without any instrumentation.
    pub fn from_value(v: &Value) -> Self {
        match v.clone() {
            Value::Set(x) => LazyValue::Set(Rc::new(move |i| x.contains(i))),
            Value::Pair(p) => {
                let (x, y) = p.into_parts();
                LazyValue::Pair(Rc::new(move |i| x.contains(i)), Rc::new(move |i| y.contains(i)))
            }
            Value::Ternary(t) => LazyValue::Ternary(Rc::new(move |i| t.at(i))),
        }
    }

    pub(crate) fn set(&self) -> LazySet {
        match self {
            LazyValue::Set(f) => f.clone(),
            other => panic!("expected a lazy set, found {other:?}"),
        }
    }

    pub(crate) fn pair(&self) -> (LazySet, LazySet) {
        match self {
            LazyValue::Pair(f, g) => (f.clone(), g.clone()),
            other => panic!("expected a lazy pair, found {other:?}"),
        }
    }

    pub(crate) fn trits(&self) -> LazyTrits {
        match self {
            LazyValue::Ternary(f) => f.clone(),
            other => panic!("expected a lazy ternary stream, found {other:?}"),
        }
    }

    /// Compares the first `depth` positions against an exact value.
    pub fn agrees_with(&self, v: &Value, depth: usize) -> bool {
        match (self, v) {
            (LazyValue::Set(f), Value::Set(x)) => (0..depth).all(|i| f(i) == x.contains(i)),
            (LazyValue::Pair(f, g), Value::Pair(p)) => (0..depth)
                .all(|i| f(i) == p.first().contains(i) && g(i) == p.second().contains(i)),
            (LazyValue::Ternary(f), Value::Ternary(t)) => (0..depth).all(|i| f(i) == t.at(i)),
            _ => false,
        }
    }
}

/// Incremental enumeration of `{ n : pred(n) }`, giving lazy rank and select.
pub(crate) struct Enumeration {
    pred: Box<dyn Fn(usize) -> bool>,
    state: RefCell<EnumState>,
}

#[derive(Default)]
struct EnumState {
    // members found so far, and how many positions have been examined
    found: Vec<usize>,
    scanned: usize,
}

impl Enumeration {
    pub(crate) fn new(pred: impl Fn(usize) -> bool + 'static) -> Rc<Self> {
        Rc::new(Enumeration { pred: Box::new(pred), state: RefCell::new(EnumState::default()) })
    }

    fn step(&self) {
        let n = self.state.borrow().scanned;
        let hit = (self.pred)(n);
        let mut st = self.state.borrow_mut();
        if hit {
            st.found.push(n);
        }
        st.scanned = n + 1;
    }

    /// The `k`-th member. Does not terminate if there are at most `k` members.
    pub(crate) fn select(&self, k: usize) -> usize {
        while self.state.borrow().found.len() <= k {
            self.step();
        }
        self.state.borrow().found[k]
    }

    /// Number of members below `n`.
    pub(crate) fn rank(&self, n: usize) -> usize {
        while self.state.borrow().scanned < n {
            self.step();
        }
        self.state.borrow().found.partition_point(|&m| m < n)
    }
}

/// Streaming parser for the prefix code `{0, 10, 11}`.
pub(crate) struct Decoder {
    bits: LazySet,
    state: RefCell<(Vec<Trit>, usize)>,
}

impl Decoder {
    pub(crate) fn new(bits: LazySet) -> Rc<Self> {
        Rc::new(Decoder { bits, state: RefCell::new((Vec::new(), 0)) })
    }

    pub(crate) fn get(&self, k: usize) -> Trit {
        loop {
            let pos = {
                let st = self.state.borrow();
                if let Some(&t) = st.0.get(k) {
                    return t;
                }
                st.1
            };
            let (t, len) = if !(self.bits)(pos) {
                (0, 1)
            } else if !(self.bits)(pos + 1) {
                (1, 2)
            } else {
                (2, 2)
            };
            let mut st = self.state.borrow_mut();
            st.0.push(t);
            st.1 = pos + len;
        }
    }
}

/// Streaming encoder for the prefix code `{0, 10, 11}`.
pub(crate) struct Encoder {
    trits: LazyTrits,
    // start offset of each emitted codeword, plus the offset after the last
    starts: RefCell<Vec<usize>>,
}

impl Encoder {
    pub(crate) fn new(trits: LazyTrits) -> Rc<Self> {
        Rc::new(Encoder { trits, starts: RefCell::new(vec![0]) })
    }

    pub(crate) fn bit(&self, i: usize) -> bool {
        loop {
            let (n, end) = {
                let s = self.starts.borrow();
                (s.len() - 1, *s.last().unwrap())
            };
            if end > i {
                break;
            }
            let len = codeword((self.trits)(n)).len();
            self.starts.borrow_mut().push(end + len);
        }
        let s = self.starts.borrow();
        // codeword j covers [s[j], s[j + 1])
        let j = s.partition_point(|&start| start <= i) - 1;
        let offset = i - s[j];
        drop(s);
        codeword((self.trits)(j))[offset]
    }
}
