//! Concrete filters on ω with exact membership tests on eventually periodic
//! sets, the semifilter `T`, and prefilter descriptions.

use std::fmt;
use std::sync::Arc;

use crate::cantor::{EvPeriodicSet, GroundSet};
use crate::error::{domain, Error, Result};
use crate::index_maps::pullback;

pub type Decide = Arc<dyn Fn(&EvPeriodicSet) -> bool + Send + Sync>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterKind {
    /// `{ X : generator ⊆* X }`.
    Principal { generator: EvPeriodicSet },
    /// A non-principal filter with the witnesses the constructions need:
    /// `Ω ∈ F ∖ Cof(ω)` and `Ω* ⊆ Ω` with `Ω* ∈ F` and `Ω ∖ Ω*` infinite.
    NonPrincipal { omega: GroundSet, omega_star: GroundSet },
}

/// A named filter with a decision procedure.
#[derive(Clone)]
pub struct FilterSpec {
    name: String,
    decide: Decide,
    kind: FilterKind,
    // known members, used to seed constrained sampling
    basis: Vec<EvPeriodicSet>,
}

impl fmt::Debug for FilterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FilterSpec").field("name", &self.name).field("kind", &self.kind).finish()
    }
}

impl FilterSpec {
    pub fn new(
        name: impl Into<String>,
        decide: impl Fn(&EvPeriodicSet) -> bool + Send + Sync + 'static,
        kind: FilterKind,
        basis: Vec<EvPeriodicSet>,
    ) -> Self {
        FilterSpec { name: name.into(), decide: Arc::new(decide), kind, basis }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn decide(&self, x: &EvPeriodicSet) -> bool {
        (self.decide)(x)
    }

    pub fn kind(&self) -> &FilterKind {
        &self.kind
    }

    pub fn basis(&self) -> &[EvPeriodicSet] {
        &self.basis
    }

    pub fn is_principal(&self) -> bool {
        matches!(self.kind, FilterKind::Principal { .. })
    }

    pub fn generator(&self) -> Option<&EvPeriodicSet> {
        match &self.kind {
            FilterKind::Principal { generator } => Some(generator),
            _ => None,
        }
    }

    pub fn omega_witness(&self) -> Option<&GroundSet> {
        match &self.kind {
            FilterKind::NonPrincipal { omega, .. } => Some(omega),
            _ => None,
        }
    }

    pub fn omega_star_witness(&self) -> Option<&GroundSet> {
        match &self.kind {
            FilterKind::NonPrincipal { omega_star, .. } => Some(omega_star),
            _ => None,
        }
    }

    /// Checks the witnesses against the decision procedure and their side
    /// conditions. Returns `(Ω, Ω*)`.
    pub fn validated_witnesses(&self) -> Result<(&GroundSet, &GroundSet)> {
        let (omega, star) = match &self.kind {
            FilterKind::NonPrincipal { omega, omega_star } => (omega, omega_star),
            FilterKind::Principal { .. } => {
                return Err(Error::Unsupported(format!(
                    "{} is principal; use principal_classify instead",
                    self.name
                )))
            }
        };
        let fail = |msg: String| Err(Error::Witness(format!("{}: {msg}", self.name)));
        if !self.decide(omega.carrier()) {
            return fail(format!("Ω = {omega} is not a member"));
        }
        if omega.carrier().is_cofinite() {
            return fail(format!("Ω = {omega} is cofinite"));
        }
        if !star.carrier().is_subset(omega.carrier()) {
            return fail(format!("Ω* = {star} is not contained in Ω = {omega}"));
        }
        if !self.decide(star.carrier()) {
            return fail(format!("Ω* = {star} is not a member"));
        }
        if omega.carrier().diff(star.carrier()).is_finite() {
            return fail(format!("Ω ∖ Ω* is finite for Ω = {omega}, Ω* = {star}"));
        }
        Ok((omega, star))
    }
}

/// The Fréchet filter `Cof(ω)`, i.e. the principal filter generated by ω.
pub fn frechet() -> FilterSpec {
    let mut f = principal(EvPeriodicSet::omega()).expect("ω is infinite");
    f.name = "frechet".into();
    f
}

/// `{ X ⊆ ω : A ⊆* X }` for infinite `A`.
pub fn principal(a: EvPeriodicSet) -> Result<FilterSpec> {
    if a.is_finite() {
        return domain(format!("generator {a} of a principal filter must be infinite"));
    }
    let g = a.clone();
    Ok(FilterSpec::new(
        format!("principal:{a}"),
        move |x| g.almost_subset(x),
        FilterKind::Principal { generator: a.clone() },
        vec![a],
    ))
}

/// Does `X` almost contain all multiples of `2^n` for some `n`?
///
/// Write the period of `X` as `2^a · q` with `q` odd. For `n ≥ a` the
/// multiples of `2^n` meet exactly the block residues hit by multiples of
/// `2^a`, and for `n < a` they hit a superset of those. So it suffices to
/// test `n = a` over one period past the prefix.
pub fn dyadic_contains_tail(x: &EvPeriodicSet) -> bool {
    let (p, l) = (x.prefix().len(), x.block().len());
    let step = 1usize << l.trailing_zeros();
    let start = p.next_multiple_of(step);
    (start..start + l).step_by(step).all(|t| x.contains(t))
}

/// `{ X : ∃n, 2^n·ω ⊆* X }`, the filter generated by the descending chain
/// of multiples of powers of two.
pub fn dyadic_chain() -> FilterSpec {
    let mult = |k: usize| EvPeriodicSet::residue_class(0, 1 << k);
    FilterSpec::new(
        "dyadic",
        dyadic_contains_tail,
        FilterKind::NonPrincipal {
            omega: GroundSet::new(mult(1)).unwrap(),
            omega_star: GroundSet::new(mult(2)).unwrap(),
        },
        (0..=4).map(mult).collect(),
    )
}

/// Looks a filter up by its CLI name: `frechet`, `dyadic`, or `principal:<literal>`.
pub fn filter_by_name(name: &str) -> Result<FilterSpec> {
    match name {
        "frechet" => Ok(frechet()),
        "dyadic" => Ok(dyadic_chain()),
        _ => match name.strip_prefix("principal:") {
            Some(lit) => principal(lit.parse()?),
            None => Err(Error::UnknownName(format!("filter {name:?}"))),
        },
    }
}

/// The first filter axiom a pair of samples violates, if any.
///
/// Checks `∅ ∉ F`, `ω ∈ F`, that the finite modifications `x ∖ {first member}`
/// and `x ∪ {first non-member}` have the same membership as `x`, and, when
/// `x` is a member, closure under the superset `x ∪ y` and (optionally) under
/// intersection with `y`.
pub fn axiom_violation(
    decide: impl Fn(&EvPeriodicSet) -> bool,
    x: &EvPeriodicSet,
    y: &EvPeriodicSet,
    intersections: bool,
) -> Option<String> {
    if decide(&EvPeriodicSet::empty()) {
        return Some("empty set is a member".into());
    }
    if !decide(&EvPeriodicSet::omega()) {
        return Some("ω is not a member".into());
    }
    let window = x.prefix().len() + x.block().len();
    let mut mods = Vec::new();
    if let Some(n) = (0..window).find(|&n| x.contains(n)) {
        mods.push(x.diff(&EvPeriodicSet::finite(&[n])));
    }
    if let Some(n) = (0..window).find(|&n| !x.contains(n)) {
        mods.push(x.union(&EvPeriodicSet::finite(&[n])));
    }
    let member = decide(x);
    if let Some(m) = mods.iter().find(|m| decide(m) != member) {
        return Some(format!("finite modification {m} of {x} changes membership"));
    }
    if !member {
        return None;
    }
    if !decide(&x.union(y)) {
        return Some(format!("superset {} of member {x} rejected", x.union(y)));
    }
    if intersections && decide(y) && !decide(&x.intersect(y)) {
        return Some(format!("intersection of members {x} and {y} rejected"));
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TPart {
    /// `X ∩ Ω₁` infinite.
    Complete,
    /// `X ∩ Ω₁` finite and `X ∩ Ω₂` cofinite in `Ω₂`.
    Countable,
    NonMember,
}

/// A semifilter: closed under finite modification and supersets, not
/// necessarily under intersection.
#[derive(Clone)]
pub struct SemifilterSpec {
    name: String,
    decide: Decide,
    omega1: GroundSet,
    omega2: GroundSet,
}

impl fmt::Debug for SemifilterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SemifilterSpec").field("name", &self.name).finish()
    }
}

impl SemifilterSpec {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn decide(&self, x: &EvPeriodicSet) -> bool {
        (self.decide)(x)
    }

    pub fn omega1(&self) -> &GroundSet {
        &self.omega1
    }

    pub fn omega2(&self) -> &GroundSet {
        &self.omega2
    }
}

/// `T = { X₁ ∪ X₂ : X₁ ⊆ Ω₁, X₂ ⊆ Ω₂, X₁ ∉ Fin(Ω₁) or X₂ ∈ Cof(Ω₂) }`
/// with `Ω₁` the evens and `Ω₂` the odds.
pub fn semifilter_t() -> SemifilterSpec {
    SemifilterSpec {
        name: "semifilter-T".into(),
        decide: Arc::new(|x| t_decompose(x) != TPart::NonMember),
        omega1: GroundSet::evens(),
        omega2: GroundSet::odds(),
    }
}

pub fn t_decompose(x: &EvPeriodicSet) -> TPart {
    let (o1, o2) = (EvPeriodicSet::evens(), EvPeriodicSet::odds());
    if x.intersect(&o1).is_infinite() {
        TPart::Complete
    } else if o2.diff(x).is_finite() {
        TPart::Countable
    } else {
        TPart::NonMember
    }
}

/// Outcome of [`closed_subspace_checks`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceReport {
    pub cof_checked: usize,
    pub cof_in_t: usize,
    pub superset_checked: usize,
    pub superset_in_t: usize,
    /// Members of `T` agreeing with a subspace member on a long prefix but
    /// lying outside that subspace, paired with their decomposition.
    pub exits: Vec<(EvPeriodicSet, TPart)>,
}

impl SubspaceReport {
    pub fn all_in_t(&self) -> bool {
        self.cof_in_t == self.cof_checked && self.superset_in_t == self.superset_checked
    }
}

/// Membership-level checks for the two subspaces `Cof(Ω₂)` and
/// `{ X : Ω₁ ⊆ X }` of `T`. The samples are projected into each subspace
/// before testing.
pub fn closed_subspace_checks(samples: &[EvPeriodicSet]) -> SubspaceReport {
    let t = semifilter_t();
    let (o1, o2) = (t.omega1.carrier().clone(), t.omega2.carrier().clone());
    let mut report = SubspaceReport {
        cof_checked: 0,
        cof_in_t: 0,
        superset_checked: 0,
        superset_in_t: 0,
        exits: Vec::new(),
    };
    for s in samples {
        // a cofinite subset of Ω₂: drop finitely many odds
        let finite_part: Vec<usize> = s.members_below(16).filter(|&n| o2.contains(n)).collect();
        let cof = o2.diff(&EvPeriodicSet::finite(&finite_part));
        report.cof_checked += 1;
        report.cof_in_t += t.decide(&cof) as usize;

        let sup = o1.union(s);
        report.superset_checked += 1;
        report.superset_in_t += t.decide(&sup) as usize;
    }
    // Cof(Ω₂) members truncated far out leave the subspace; so do supersets
    // of Ω₁ missing one even coordinate far out.
    for cut in [64, 256, 1024] {
        let leaves_cof = o2.intersect(&EvPeriodicSet::finite(&(0..cut).collect::<Vec<_>>()));
        report.exits.push((leaves_cof.clone(), t_decompose(&leaves_cof)));
        let leaves_sup = o1.diff(&EvPeriodicSet::finite(&[cut]));
        report.exits.push((leaves_sup.clone(), t_decompose(&leaves_sup)));
    }
    report
}

/// A prefilter `G` (closed under supersets and intersections) together with
/// its kernel `⋂G`.
#[derive(Clone)]
pub struct PrefilterSpec {
    name: String,
    decide: Decide,
    core: EvPeriodicSet,
    inner: Option<FilterSpec>,
}

impl fmt::Debug for PrefilterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrefilterSpec").field("name", &self.name).field("core", &self.core).finish()
    }
}

impl PrefilterSpec {
    /// `{ X : core ⊆ X }`.
    pub fn above(core: EvPeriodicSet) -> Self {
        let c = core.clone();
        PrefilterSpec {
            name: format!("above:{core}"),
            decide: Arc::new(move |x| c.is_subset(x)),
            core,
            inner: None,
        }
    }

    /// A filter on ω, seen as a prefilter. Its kernel is empty.
    pub fn from_filter(f: FilterSpec) -> Self {
        let g = f.clone();
        PrefilterSpec {
            name: f.name.clone(),
            decide: Arc::new(move |x| g.decide(x)),
            core: EvPeriodicSet::empty(),
            inner: Some(f),
        }
    }

    /// `{ X : core ⊆ X and X ∖ core, read along ω ∖ core, is in f }`.
    pub fn with_core(core: EvPeriodicSet, f: FilterSpec) -> Result<Self> {
        let rest = GroundSet::new(core.complement())
            .or_else(|_| domain(format!("complement of core {core} is finite")))?;
        let (c, g) = (core.clone(), f.clone());
        Ok(PrefilterSpec {
            name: format!("{}+{core}", f.name),
            decide: Arc::new(move |x| c.is_subset(x) && g.decide(&pullback(&rest, x))),
            core,
            inner: Some(f),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn decide(&self, x: &EvPeriodicSet) -> bool {
        (self.decide)(x)
    }

    /// `⋂G`.
    pub fn core(&self) -> &EvPeriodicSet {
        &self.core
    }

    pub(crate) fn inner(&self) -> Option<&FilterSpec> {
        self.inner.as_ref()
    }

    /// Spot check of superset and intersection closure on two samples.
    pub fn axiom_violation(&self, x: &EvPeriodicSet, y: &EvPeriodicSet) -> Option<String> {
        if self.decide(x) && !self.decide(&x.union(y)) {
            return Some(format!("superset of {x} rejected"));
        }
        if self.decide(x) && self.decide(y) && !self.decide(&x.intersect(y)) {
            return Some(format!("intersection of {x} and {y} rejected"));
        }
        None
    }
}
