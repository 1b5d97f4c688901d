//! Index bijections between subsets of ω, computed exactly on eventually
//! periodic sets.
//!
//! Everything here reduces to two primitives over a [`GroundSet`] `A`:
//!
//! * [`pullback`]: `{ k : select(A, k) ∈ X }`, reading `X` in the coordinates of `A`;
//! * [`pushforward`]: `{ select(A, k) : k ∈ Y }`, writing `Y` onto the coordinates of `A`.
//!
//! `φ_S` is rank inside `ω ∖ S`, so `φ_S[E]` is the pullback of `E` along
//! `ω ∖ S` and `φ_S⁻¹[Z]` is the pushforward of `Z` onto `ω ∖ S`.

use crate::cantor::{gcd, EvPeriodicSet, GroundSet};
use crate::error::{domain, Result};

/// Reads `x` in the coordinates of `a`: bit `k` of the result is `x(select(a, k))`.
///
/// Points of `x` outside `a` are ignored.
pub fn pullback(a: &GroundSet, x: &EvPeriodicSet) -> EvPeriodicSet {
    // Past k0 every select lands in the periodic part of both a and x.
    // Advancing k by ones_per_block(a) moves select by block_len(a), so
    // advancing by ones_per_block(a) * lx / gcd(la, lx) moves it by
    // lcm(la, lx), a multiple of x's period.
    let (la, lx) = (a.block_len(), x.block().len());
    let k0 = a.prefix_count().max(a.rank(x.prefix().len()));
    let period = a.ones_per_block() * (lx / gcd(la, lx));
    let bit = |k: usize| x.contains(a.select(k));
    let out = EvPeriodicSet::from_parts(
        (0..k0).map(bit).collect(),
        (k0..k0 + period).map(bit).collect(),
    );
    debug_assert!((k0..k0 + 2 * period).all(|k| out.contains(k) == bit(k)));
    out
}

/// Writes `y` onto the coordinates of `a`: the result is `{ select(a, k) : k ∈ y }`.
pub fn pushforward(a: &GroundSet, y: &EvPeriodicSet) -> EvPeriodicSet {
    // Past n0 both a and rank(a, ·) are in their periodic regime and
    // rank(a, n) has passed y's prefix. Advancing n by block_len(a) adds
    // ones_per_block(a) to the rank, so a window of
    // block_len(a) * ly / gcd(ones_per_block(a), ly) shifts the rank by a
    // multiple of ly.
    let (oa, ly) = (a.ones_per_block(), y.block().len());
    let py = y.prefix().len();
    let past_prefix = if py == 0 { 0 } else { a.select(py - 1) + 1 };
    let n0 = a.prefix_len().max(past_prefix);
    let period = a.block_len() * (ly / gcd(oa, ly));
    let bit = |n: usize| a.contains(n) && y.contains(a.rank(n));
    let out = EvPeriodicSet::from_parts(
        (0..n0).map(bit).collect(),
        (n0..n0 + period).map(bit).collect(),
    );
    debug_assert!((n0..n0 + 2 * period).all(|n| out.contains(n) == bit(n)));
    out
}

fn complement_ground(s: &EvPeriodicSet) -> Result<GroundSet> {
    GroundSet::new(s.complement()).or_else(|_| domain(format!("complement of {s} is finite")))
}

/// `φ_S(m)`: the rank of `m` inside `ω ∖ S`.
pub fn phi(s: &EvPeriodicSet, m: usize) -> Result<usize> {
    let c = complement_ground(s)?;
    if s.contains(m) {
        return domain(format!("{m} is a member of {s}"));
    }
    Ok(c.rank(m))
}

/// `φ_S⁻¹(k)`: the `k`-th element of `ω ∖ S`.
pub fn phi_inv(s: &EvPeriodicSet, k: usize) -> Result<usize> {
    Ok(complement_ground(s)?.select(k))
}

/// `φ_S[E]` for `E ∩ S = ∅`.
pub fn phi_image(s: &EvPeriodicSet, e: &EvPeriodicSet) -> Result<EvPeriodicSet> {
    let c = complement_ground(s)?;
    if !e.is_disjoint(s) {
        return domain(format!("{e} meets {s}"));
    }
    Ok(pullback(&c, e))
}

/// `φ_S⁻¹[Z]`, a subset of `ω ∖ S`.
pub fn phi_preimage(s: &EvPeriodicSet, z: &EvPeriodicSet) -> Result<EvPeriodicSet> {
    Ok(pushforward(&complement_ground(s)?, z))
}

/// Image of `x ⊆ a` under the order isomorphism `a → b`.
pub fn order_iso_image(a: &GroundSet, b: &GroundSet, x: &EvPeriodicSet) -> Result<EvPeriodicSet> {
    if !x.is_subset(a.carrier()) {
        return domain(format!("{x} is not a subset of {a}"));
    }
    Ok(pushforward(b, &pullback(a, x)))
}

/// The bijection `π = σ ∪ τ : ω → Ω` with `τ` the identity on `Ω*` and `σ`
/// the order isomorphism `ω ∖ Ω* → Ω ∖ Ω*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiMap {
    omega: GroundSet,
    omega_star: GroundSet,
    // ω ∖ Ω* and Ω ∖ Ω*
    outside: GroundSet,
    gap: GroundSet,
}

impl PiMap {
    pub fn new(omega: &GroundSet, omega_star: &GroundSet) -> Result<Self> {
        if !omega_star.carrier().is_subset(omega.carrier()) {
            return domain(format!("Ω* = {omega_star} is not contained in Ω = {omega}"));
        }
        let gap = GroundSet::new(omega.carrier().diff(omega_star.carrier()))
            .or_else(|_| domain(format!("Ω ∖ Ω* is finite for Ω = {omega}, Ω* = {omega_star}")))?;
        let outside = omega_star
            .complement()
            .or_else(|_| domain(format!("ω ∖ Ω* is finite for Ω* = {omega_star}")))?;
        Ok(PiMap { omega: omega.clone(), omega_star: omega_star.clone(), outside, gap })
    }

    pub fn omega(&self) -> &GroundSet {
        &self.omega
    }

    pub fn omega_star(&self) -> &GroundSet {
        &self.omega_star
    }

    pub(crate) fn outside(&self) -> &GroundSet {
        &self.outside
    }

    pub(crate) fn gap(&self) -> &GroundSet {
        &self.gap
    }

    /// `π(n)` for a single coordinate.
    pub fn point(&self, n: usize) -> usize {
        if self.omega_star.contains(n) {
            n
        } else {
            self.gap.select(self.outside.rank(n))
        }
    }

    /// `π[X]`.
    pub fn image(&self, x: &EvPeriodicSet) -> EvPeriodicSet {
        let star = self.omega_star.carrier();
        let moved = pushforward(&self.gap, &pullback(&self.outside, &x.diff(star)));
        x.intersect(star).union(&moved)
    }

    /// `π⁻¹[Y]` for `Y ⊆ Ω`.
    pub fn preimage(&self, y: &EvPeriodicSet) -> Result<EvPeriodicSet> {
        if !y.is_subset(self.omega.carrier()) {
            return domain(format!("{y} is not a subset of Ω = {}", self.omega));
        }
        let star = self.omega_star.carrier();
        let moved = pushforward(&self.outside, &pullback(&self.gap, &y.diff(star)));
        Ok(y.intersect(star).union(&moved))
    }
}

/// `π[X]` for the bijection described on [`PiMap`].
pub fn pi_map(omega: &GroundSet, omega_star: &GroundSet, x: &EvPeriodicSet) -> Result<EvPeriodicSet> {
    Ok(PiMap::new(omega, omega_star)?.image(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(s: &str) -> EvPeriodicSet {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        let evens = EvPeriodicSet::evens();
        // odds enumerated: 1, 3, 5, ... carry ranks 0, 1, 2, ...
        assert_eq!(phi(&evens, 1).unwrap(), 0);
        assert_eq!(phi(&evens, 3).unwrap(), 1);
        assert_eq!(phi_inv(&evens, 2).unwrap(), 5);
        for m in 0..=10 {
            assert_eq!(phi(&EvPeriodicSet::empty(), m).unwrap(), m);
        }
    }

    #[test]
    fn phi_domain_errors() {
        let evens = EvPeriodicSet::evens();
        assert!(phi(&evens, 2).is_err());
        assert!(phi(&EvPeriodicSet::tail(4), 1).is_err());
        assert!(phi_inv(&EvPeriodicSet::tail(4), 1).is_err());
        assert!(phi_image(&evens, &lit("11|0")).is_err());
    }

    #[test]
    fn phi_image_examples() {
        let evens = EvPeriodicSet::evens();
        let e = lit("01000100|0");
        assert_eq!(phi_image(&evens, &e).unwrap(), EvPeriodicSet::finite(&[0, 2]));
        let x = lit("0110|100");
        assert_eq!(phi_image(&EvPeriodicSet::empty(), &x).unwrap(), x);
        assert_eq!(phi_preimage(&evens, &EvPeriodicSet::omega()).unwrap(), EvPeriodicSet::odds());
    }

    #[test]
    fn order_iso_examples() {
        let (evens, odds) = (GroundSet::evens(), GroundSet::odds());
        let x = EvPeriodicSet::finite(&[0, 4]);
        let y = order_iso_image(&evens, &odds, &x).unwrap();
        assert_eq!(y, EvPeriodicSet::finite(&[1, 5]));
        assert_eq!(order_iso_image(&odds, &evens, &y).unwrap(), x);
        assert_eq!(order_iso_image(&evens, &evens, &x).unwrap(), x);
        assert!(order_iso_image(&evens, &odds, &EvPeriodicSet::finite(&[1])).is_err());
    }

    #[test]
    fn pi_map_examples() {
        let (omega, star) = (GroundSet::evens(), GroundSet::new(lit("|1000")).unwrap());
        let x = EvPeriodicSet::finite(&[0, 1, 4]);
        assert_eq!(pi_map(&omega, &star, &x).unwrap(), EvPeriodicSet::finite(&[0, 2, 4]));
        assert_eq!(pi_map(&omega, &star, star.carrier()).unwrap(), *star.carrier());
        assert_eq!(pi_map(&omega, &star, &EvPeriodicSet::empty()).unwrap(), EvPeriodicSet::empty());
        assert_eq!(pi_map(&omega, &star, &EvPeriodicSet::omega()).unwrap(), EvPeriodicSet::evens());
    }

    #[test]
    fn pi_map_pointwise() {
        let pi = PiMap::new(&GroundSet::evens(), &GroundSet::new(lit("|1000")).unwrap()).unwrap();
        let x = lit("1101|011");
        let image = pi.image(&x);
        // σ(n) ≥ n since Ω ∖ Ω* ⊆ ω ∖ Ω*, so members below 400 only come from below 400
        let mut expected: Vec<usize> =
            x.members_below(400).map(|n| pi.point(n)).filter(|&n| n < 400).collect();
        expected.sort();
        let got: Vec<usize> = image.members_below(400).collect();
        assert_eq!(got, expected);
        assert_eq!(pi.preimage(&image).unwrap(), x);
    }

    #[test]
    fn pi_map_witness_errors() {
        let evens = GroundSet::evens();
        assert!(PiMap::new(&evens, &GroundSet::odds()).is_err());
        assert!(PiMap::new(&evens, &evens).is_err());
        let cof = GroundSet::new(EvPeriodicSet::tail(2)).unwrap();
        assert!(PiMap::new(&GroundSet::omega(), &cof).is_err());
    }
}
