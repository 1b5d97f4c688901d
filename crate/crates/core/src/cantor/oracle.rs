use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;

use super::set::EvPeriodicSet;

/// Anything that answers membership queries on ω.
pub trait Point {
    fn bit(&self, i: usize) -> bool;
}

impl Point for EvPeriodicSet {
    fn bit(&self, i: usize) -> bool {
        self.contains(i)
    }
}

impl<P: Point + ?Sized> Point for &P {
    fn bit(&self, i: usize) -> bool {
        (**self).bit(i)
    }
}

/// True iff the two points agree on every position below `n`.
pub fn prefix_agree(x: &impl Point, y: &impl Point, n: usize) -> bool {
    (0..n).all(|i| x.bit(i) == y.bit(i))
}

/// A lazily given sequence with query instrumentation.
///
/// Each distinct position asked for is recorded together with the first
/// answer. Asking again compares against that answer, so an impure query
/// function is detected the second time a position is visited.
///
/// Not `Sync`: one instance per thread.
pub struct Oracle<T> {
    query: Box<dyn Fn(usize) -> T>,
    seen: RefCell<BTreeMap<usize, T>>,
    impure: RefCell<bool>,
}

pub type OraclePoint = Oracle<bool>;

impl<T: Copy + Eq + 'static> Oracle<T> {
    pub fn new(query: impl Fn(usize) -> T + 'static) -> Self {
        Oracle { query: Box::new(query), seen: RefCell::new(BTreeMap::new()), impure: RefCell::new(false) }
    }

    pub fn query(&self, i: usize) -> T {
        let v = (self.query)(i);
        let mut seen = self.seen.borrow_mut();
        match seen.get(&i) {
            Some(&first) if first != v => *self.impure.borrow_mut() = true,
            Some(_) => {}
            None => {
                seen.insert(i, v);
            }
        }
        v
    }

    /// Number of distinct positions queried so far.
    pub fn count(&self) -> usize {
        self.seen.borrow().len()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.seen.borrow().keys().next_back().copied()
    }

    /// False once some position has returned two different answers.
    pub fn is_pure(&self) -> bool {
        !*self.impure.borrow()
    }

    /// Re-queries every position seen so far.
    pub fn recheck(&self) -> bool {
        let positions: Vec<usize> = self.seen.borrow().keys().copied().collect();
        for i in positions {
            self.query(i);
        }
        self.is_pure()
    }

    pub fn reset(&self) {
        self.seen.borrow_mut().clear();
        *self.impure.borrow_mut() = false;
    }
}

impl OraclePoint {
    pub fn from_set(x: EvPeriodicSet) -> Self {
        Oracle::new(move |i| x.contains(i))
    }
}

impl Point for OraclePoint {
    fn bit(&self, i: usize) -> bool {
        self.query(i)
    }
}

impl<T> fmt::Debug for Oracle<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Oracle").field("queried", &self.seen.borrow().len()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cell::Cell;
    use std::rc::Rc;

    #[test]
    fn prefix_agree_examples() {
        let evens = EvPeriodicSet::evens();
        let oracle = OraclePoint::from_set(evens.clone());
        assert!(prefix_agree(&oracle, &evens, 512));
        assert_eq!(oracle.count(), 512);
        assert!(!prefix_agree(&evens, &EvPeriodicSet::odds(), 1));
        let x: EvPeriodicSet = "1|10".parse().unwrap();
        assert!(!prefix_agree(&x, &evens, 64));
        assert!(prefix_agree(&x, &evens, 1));
        assert!(!prefix_agree(&x, &evens, 2));
    }

    #[test]
    fn counter_counts_distinct_positions() {
        let o = OraclePoint::new(|i| i % 3 == 0);
        o.query(5);
        o.query(5);
        o.query(2);
        assert_eq!(o.count(), 2);
        assert_eq!(o.max_index(), Some(5));
        assert!(o.recheck());
    }

    #[test]
    fn impure_oracle_detected() {
        let flips = Rc::new(Cell::new(false));
        let f = flips.clone();
        let o = OraclePoint::new(move |_| {
            f.set(!f.get());
            f.get()
        });
        o.query(0);
        assert!(!o.recheck());
    }
}
