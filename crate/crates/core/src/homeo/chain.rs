//! The assembled constructions: `F² ≅ F` for non-principal filters, its
//! iterates `F^m ≅ F^n`, and the principal and prefilter cases.

use super::prims::{
    disjoint_encode_homeo, interleave_homeo, main_pair_homeo, product_homeo, reindex_homeo,
};
use super::{compose_all, invert, parallel, reorder, Coord, Homeo, Shape};
use crate::cantor::{EvPeriodicSet, GroundSet};
use crate::error::{domain, Error, Result};
use crate::index_maps::pushforward;
use crate::zoo::{FilterSpec, PrefilterSpec};

fn subsets(g: &GroundSet) -> Coord {
    Coord::Subsets(g.clone())
}

/// `2^(ω∖Ω) × 2^(ω∖Ω) ≅ D(ω∖Ω)`: merge the two streams (first factor on
/// the even positions), parse the result as a ternary stream and split it
/// into a disjoint pair on `ω ∖ Ω`.
fn pack_pair(rest: &GroundSet) -> Result<Homeo> {
    let (evens, odds, omega) = (GroundSet::evens(), GroundSet::odds(), GroundSet::omega());
    compose_all(&[
        parallel(&[reindex_homeo(rest, &evens), reindex_homeo(rest, &odds)]),
        interleave_homeo(&evens, &odds)?,
        reindex_homeo(&omega, rest),
        invert(&disjoint_encode_homeo(rest)),
    ])
}

/// The homeomorphism `2^ω × 2^ω → 2^ω` carrying `F × F` onto `F`.
///
/// Chain, with `Ω` the filter's witness and `R = ω ∖ Ω`:
///
/// 1. split each factor: `2^ω ≅ 2^Ω × 2^R`;
/// 2. reorder to `2^Ω × 2^Ω × 2^R × 2^R`;
/// 3. pack the two `2^R` factors into `D(R)`;
/// 4. the main pair map onto `2^Ω × D(ω)`;
/// 5. encode `D(ω)` as a single stream and move it onto `R`;
/// 6. union: `2^Ω × 2^R ≅ 2^ω`.
pub fn square_homeo(f: &FilterSpec) -> Result<Homeo> {
    let (omega, _) = f.validated_witnesses()?;
    let rest = omega.complement()?;
    let split = invert(&product_homeo(omega)?);
    let split_both = parallel(&[split.clone(), split]);
    let grouped = reorder(split_both.codomain().clone(), &[0, 2, 1, 3])?;
    let id_omega = Homeo::identity(Shape(vec![subsets(omega)]));
    let packed = parallel(&[id_omega.clone(), id_omega.clone(), pack_pair(&rest)?]);
    let main = main_pair_homeo(omega)?;
    let unpacked = parallel(&[
        id_omega,
        compose_all(&[
            disjoint_encode_homeo(&GroundSet::omega()),
            reindex_homeo(&GroundSet::omega(), &rest),
        ])?,
    ]);
    let join = product_homeo(omega)?;
    Ok(compose_all(&[split_both, grouped, packed, main, unpacked, join])?
        .with_name(format!("square[{}]", f.name())))
}

/// `F^m → F`, by folding the first two coordinates with [`square_homeo`].
fn collapse(square: &Homeo, m: usize) -> Result<Homeo> {
    let mut steps = vec![Homeo::identity(Shape(vec![Coord::subsets_of_omega(); m]))];
    for k in (2..=m).rev() {
        // k coordinates left
        let rest = Homeo::identity(Shape(vec![Coord::subsets_of_omega(); k - 2]));
        steps.push(if k == 2 { square.clone() } else { parallel(&[square.clone(), rest]) });
    }
    compose_all(&steps)
}

/// `F^m ≅ F^n` for `m, n ≥ 1`.
pub fn power_homeo(f: &FilterSpec, m: usize, n: usize) -> Result<Homeo> {
    if m == 0 || n == 0 {
        return domain(format!("powers must be at least 1, got m = {m}, n = {n}"));
    }
    if m == n {
        return Ok(Homeo::identity(Shape(vec![Coord::subsets_of_omega(); m])));
    }
    let square = square_homeo(f)?;
    let h = compose_all(&[collapse(&square, m)?, invert(&collapse(&square, n)?)])?;
    Ok(if m == 2 && n == 1 { h } else { h.with_name(format!("power[{}]({m},{n})", f.name())) })
}

/// Topological type of a principal filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Homeomorphic to the rationals (generator cofinite, so `F = Cof(ω)`).
    Rationals,
    /// Homeomorphic to `Q × 2^ω`.
    RationalsTimesCantor,
}

pub fn principal_classify(f: &FilterSpec) -> Result<Classification> {
    let generator = f
        .generator()
        .ok_or_else(|| Error::Domain(format!("{} is not principal", f.name())))?;
    Ok(if generator.is_cofinite() {
        Classification::Rationals
    } else {
        Classification::RationalsTimesCantor
    })
}

/// For a principal filter with co-infinite generator `Ω`, the explicit map
/// `F ≅ (F↾Ω) × 2^(ω∖Ω)`.
pub fn principal_decompose(f: &FilterSpec) -> Result<Homeo> {
    if principal_classify(f)? == Classification::Rationals {
        return domain(format!("{} has a cofinite generator", f.name()));
    }
    let generator = GroundSet::new(f.generator().unwrap().clone())?;
    Ok(invert(&product_homeo(&generator)?).with_name(format!("decompose[{}]", f.name())))
}

/// Result of [`prefilter_normalize`].
#[derive(Clone, Debug)]
pub enum Normalized {
    /// `G = { X : core ⊆ X } ≅ 2^ω`.
    Cantor { core: EvPeriodicSet },
    /// `G ≅ G↾Ω`, a filter on `Ω = ω ∖ ⋂G`, moved to ω.
    Filter(Box<FilterSpec>),
}

/// Reduces an infinite prefilter to either the Cantor set or a filter.
pub fn prefilter_normalize(g: &PrefilterSpec) -> Result<Normalized> {
    let core = g.core().clone();
    let omega = GroundSet::new(core.complement())
        .or_else(|_| domain(format!("prefilter {} is finite", g.name())))?;
    // ∅ ∈ G↾Ω iff ⋂G ∈ G
    if g.decide(&core) {
        return Ok(Normalized::Cantor { core });
    }
    let inner = g.inner().ok_or_else(|| {
        Error::Unsupported(format!("prefilter {} has no filter description", g.name()))
    })?;
    if core.is_empty() {
        return Ok(Normalized::Filter(Box::new(inner.clone())));
    }
    let g = g.clone();
    let restricted = FilterSpec::new(
        format!("{}|restricted", g.name()),
        move |x| g.decide(&pushforward(&omega, x).union(&core)),
        inner.kind().clone(),
        inner.basis().to_vec(),
    );
    Ok(Normalized::Filter(Box::new(restricted)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homeo::Value;
    use crate::zoo::{dyadic_chain, frechet, principal};

    fn lit(s: &str) -> EvPeriodicSet {
        s.parse().unwrap()
    }

    #[test]
    fn square_shapes() {
        let h = square_homeo(&dyadic_chain()).unwrap();
        assert_eq!(h.domain().len(), 2);
        assert_eq!(h.codomain().len(), 1);
    }

    #[test]
    fn square_membership_examples() {
        let f = dyadic_chain();
        let h = square_homeo(&f).unwrap();
        let evens = Value::Set(EvPeriodicSet::evens());
        let odds = Value::Set(EvPeriodicSet::odds());
        let out = h.forward(&[evens.clone(), evens.clone()]).unwrap();
        assert!(f.decide(out[0].as_set().unwrap()));
        assert_eq!(h.backward(&out).unwrap(), vec![evens.clone(), evens.clone()]);
        let out = h.forward(&[odds.clone(), evens.clone()]).unwrap();
        assert!(!f.decide(out[0].as_set().unwrap()));
        assert_eq!(h.backward(&out).unwrap(), vec![odds, evens]);
    }

    #[test]
    fn square_rejects_principal() {
        assert!(matches!(square_homeo(&frechet()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn power_degenerate_cases() {
        let f = dyadic_chain();
        assert!(power_homeo(&f, 1, 1).unwrap().is_identity());
        assert!(power_homeo(&f, 0, 1).is_err());
        let sq = power_homeo(&f, 2, 1).unwrap();
        let x = vec![Value::Set(lit("1|10")), Value::Set(lit("|1000"))];
        assert_eq!(sq.forward(&x).unwrap(), square_homeo(&f).unwrap().forward(&x).unwrap());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(principal_classify(&frechet()).unwrap(), Classification::Rationals);
        let p = principal(EvPeriodicSet::evens()).unwrap();
        assert_eq!(principal_classify(&p).unwrap(), Classification::RationalsTimesCantor);
        let cof = principal(EvPeriodicSet::tail(2)).unwrap();
        assert_eq!(principal_classify(&cof).unwrap(), Classification::Rationals);
        assert!(principal_classify(&dyadic_chain()).is_err());
    }

    #[test]
    fn principal_decompose_splits_members() {
        let p = principal(EvPeriodicSet::evens()).unwrap();
        let h = principal_decompose(&p).unwrap();
        let x = lit("0110|10");
        let out = h.forward(&[Value::Set(x.clone())]).unwrap();
        assert_eq!(out[0], Value::Set(x.intersect(&EvPeriodicSet::evens())));
        assert!(principal_decompose(&frechet()).is_err());
    }

    #[test]
    fn normalize_examples() {
        let g = PrefilterSpec::above(EvPeriodicSet::finite(&[0, 1]));
        assert!(matches!(prefilter_normalize(&g).unwrap(),
            Normalized::Cantor { core } if core == EvPeriodicSet::finite(&[0, 1])));
        let g = PrefilterSpec::above(EvPeriodicSet::evens());
        assert!(matches!(prefilter_normalize(&g).unwrap(),
            Normalized::Cantor { core } if core == EvPeriodicSet::evens()));
        let g = PrefilterSpec::from_filter(frechet());
        match prefilter_normalize(&g).unwrap() {
            Normalized::Filter(f) => assert_eq!(f.name(), "frechet"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(prefilter_normalize(&PrefilterSpec::above(EvPeriodicSet::tail(3))).is_err());
    }

    #[test]
    fn normalize_with_core_recovers_inner_filter() {
        let g = PrefilterSpec::with_core(EvPeriodicSet::finite(&[0, 3]), dyadic_chain()).unwrap();
        let Normalized::Filter(f) = prefilter_normalize(&g).unwrap() else {
            panic!("expected a filter");
        };
        let d = dyadic_chain();
        for s in ["|10", "|01", "1|1000", "011|0001", "|1"] {
            assert_eq!(f.decide(&lit(s)), d.decide(&lit(s)), "{s}");
        }
    }
}
