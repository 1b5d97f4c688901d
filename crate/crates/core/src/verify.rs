//! Seeded randomized verification: generators for eventually periodic
//! points, round-trip / preservation / agreement suites, modulus probes and
//! TSV reports.
//!
//! Each trial draws from its own ChaCha stream (`seed`, stream = trial
//! index), so reports do not depend on the order trials run in.

use std::fmt::{self, Write as _};
use std::rc::Rc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cantor::{EvPeriodicSet, GroundSet, Oracle, OraclePoint, TernaryStream};
use crate::error::{Error, Result};
use crate::homeo::{
    main_pair_homeo, square_homeo, tuple_literals, Coord, DisjointPair, Homeo, LazyValue, Shape,
    Value,
};
use crate::zoo::FilterSpec;

/// Rejection rounds per constrained draw.
pub const MAX_REJECTIONS: usize = 1000;

pub const DEFAULT_MAX_PREFIX: usize = 5;
pub const DEFAULT_MAX_BLOCK: usize = 6;

#[derive(Clone, Debug)]
pub enum Constraint {
    None,
    SubsetOf(GroundSet),
    MemberOf(FilterSpec),
    NonMemberOf(FilterSpec),
    DisjointFrom(EvPeriodicSet),
}

pub struct Sampler {
    rng: ChaCha8Rng,
    max_prefix: usize,
    max_block: usize,
}

impl Sampler {
    pub fn new(seed: u64, max_prefix: usize, max_block: usize) -> Result<Self> {
        if max_block == 0 {
            return Err(Error::Generation("max_block must be at least 1".into()));
        }
        Ok(Sampler { rng: ChaCha8Rng::seed_from_u64(seed), max_prefix, max_block })
    }

    /// The sampler for trial `trial` of a run seeded with `seed`.
    pub fn for_trial(seed: u64, trial: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        Sampler { rng, max_prefix: DEFAULT_MAX_PREFIX, max_block: DEFAULT_MAX_BLOCK }
    }

    fn bits(&mut self, len: usize) -> Vec<bool> {
        (0..len).map(|_| self.rng.gen_bool(0.5)).collect()
    }

    /// An unconstrained eventually periodic set.
    pub fn set(&mut self) -> EvPeriodicSet {
        let p = self.rng.gen_range(0..=self.max_prefix);
        let b = self.rng.gen_range(1..=self.max_block);
        let (prefix, block) = (self.bits(p), self.bits(b));
        EvPeriodicSet::new(prefix, block).expect("nonempty block")
    }

    pub fn ternary(&mut self) -> TernaryStream {
        let p = self.rng.gen_range(0..=self.max_prefix);
        let b = self.rng.gen_range(1..=self.max_block);
        let mut trits = |n: usize| (0..n).map(|_| self.rng.gen_range(0..3u8)).collect::<Vec<_>>();
        let (prefix, block) = (trits(p), trits(b));
        TernaryStream::new(prefix, block).expect("nonempty block")
    }

    fn finite_noise(&mut self) -> EvPeriodicSet {
        let len = self.rng.gen_range(0..8);
        EvPeriodicSet::new(self.bits(len), vec![false]).unwrap()
    }

    fn propose(&mut self, c: &Constraint) -> EvPeriodicSet {
        match c {
            Constraint::None => self.set(),
            Constraint::SubsetOf(g) => self.set().intersect(g.carrier()),
            Constraint::DisjointFrom(y) => self.set().diff(y),
            Constraint::MemberOf(f) => {
                let basis = f.basis();
                let base = if basis.is_empty() {
                    EvPeriodicSet::omega()
                } else {
                    basis[self.rng.gen_range(0..basis.len())].clone()
                };
                let extra = self.set().intersect(&self.set());
                base.diff(&self.finite_noise()).union(&extra)
            }
            Constraint::NonMemberOf(f) => {
                let x = self.set();
                // a filter never holds a set and its complement
                if f.decide(&x) {
                    x.complement()
                } else {
                    x
                }
            }
        }
    }

    fn accepts(c: &Constraint, x: &EvPeriodicSet) -> bool {
        match c {
            Constraint::None => true,
            Constraint::SubsetOf(g) => x.is_subset(g.carrier()),
            Constraint::DisjointFrom(y) => x.is_disjoint(y),
            Constraint::MemberOf(f) => f.decide(x),
            Constraint::NonMemberOf(f) => !f.decide(x),
        }
    }

    /// A set satisfying `c`, by construction followed by a check.
    pub fn draw(&mut self, c: &Constraint) -> Result<EvPeriodicSet> {
        for _ in 0..MAX_REJECTIONS {
            let x = self.propose(c);
            if Self::accepts(c, &x) {
                return Ok(x);
            }
        }
        Err(Error::Generation(format!("no sample satisfying {c:?} in {MAX_REJECTIONS} rounds")))
    }

    pub fn value(&mut self, coord: &Coord) -> Value {
        match coord {
            Coord::Subsets(g) => Value::Set(self.set().intersect(g.carrier())),
            Coord::Disjoint(g) => {
                let x = self.set().intersect(g.carrier());
                let y = self.set().intersect(g.carrier()).diff(&x);
                Value::Pair(DisjointPair::new(x, y).unwrap())
            }
            Coord::Ternary => Value::Ternary(self.ternary()),
        }
    }

    /// A random point of the given shape.
    pub fn tuple(&mut self, shape: &Shape) -> Vec<Value> {
        shape.coords().iter().map(|c| self.value(c)).collect()
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }
}

/// Deterministic stream of constrained samples.
pub fn gen_evp(
    seed: u64,
    max_prefix: usize,
    max_block: usize,
    constraint: Constraint,
) -> Result<impl Iterator<Item = Result<EvPeriodicSet>>> {
    let mut s = Sampler::new(seed, max_prefix, max_block)?;
    Ok(std::iter::from_fn(move || Some(s.draw(&constraint))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub trial: usize,
    pub verdict: Verdict,
    pub detail: String,
}

impl Row {
    fn from_failures(trial: usize, failures: Vec<String>, ok: String) -> Self {
        if failures.is_empty() {
            Row { trial, verdict: Verdict::Pass, detail: ok }
        } else {
            Row { trial, verdict: Verdict::Fail, detail: failures.join("; ") }
        }
    }
}

/// A suite run: header plus one row per trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub rows: Vec<Row>,
}

impl Report {
    fn run(suite: &str, seed: u64, trials: usize, trial: impl Fn(usize) -> Row + Sync + Send) -> Self {
        let rows = (0..trials).into_par_iter().map(trial).collect();
        Report { suite: suite.into(), seed, rows }
    }

    pub fn trials(&self) -> usize {
        self.rows.len()
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.verdict == Verdict::Fail).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// `0` when every trial passed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("# suite={} seed={} trials={}\n", self.suite, self.seed, self.trials());
        for r in &self.rows {
            let detail = r.detail.replace(['\t', '\n'], " ");
            writeln!(out, "{}\t{}\t{}\t{}", self.suite, r.trial, r.verdict, detail).unwrap();
        }
        out
    }
}

fn literals(v: &[Value]) -> String {
    tuple_literals(v).join(" ; ")
}

/// `backward(forward(x)) = x` and `forward(backward(y)) = y` on random
/// points of the domain and codomain.
pub fn roundtrip_suite(h: &Homeo, trials: usize, seed: u64) -> Report {
    Report::run("roundtrip", seed, trials, |trial| {
        let mut s = Sampler::for_trial(seed, trial);
        let x = s.tuple(h.domain());
        let y = s.tuple(h.codomain());
        let mut failures = Vec::new();
        match h.forward(&x).and_then(|fx| h.backward(&fx)) {
            Ok(back) if back == x => {}
            Ok(back) => failures.push(format!("g(h(x)) = {} for x = {}", literals(&back), literals(&x))),
            Err(e) => failures.push(format!("{e} for x = {}", literals(&x))),
        }
        match h.backward(&y).and_then(|gy| h.forward(&gy)) {
            Ok(fwd) if fwd == y => {}
            Ok(fwd) => failures.push(format!("h(g(y)) = {} for y = {}", literals(&fwd), literals(&y))),
            Err(e) => failures.push(format!("{e} for y = {}", literals(&y))),
        }
        Row::from_failures(trial, failures, format!("x = {}", literals(&x)))
    })
}

fn member_tuple(f: &FilterSpec, tuple: &[Value]) -> bool {
    tuple.iter().all(|v| v.as_set().is_some_and(|x| f.decide(x)))
}

/// Membership preservation of the square map of `f`, both directions and
/// on non-members, plus the same for the main pair map on `F↾Ω`.
pub fn preservation_suite(f: &FilterSpec, trials: usize, seed: u64) -> Result<Report> {
    let square = square_homeo(f)?;
    let (omega, _) = f.validated_witnesses()?;
    let main = main_pair_homeo(omega)?;
    let member = Constraint::MemberOf(f.clone());
    let non_member = Constraint::NonMemberOf(f.clone());
    Ok(Report::run("preservation", seed, trials, |trial| {
        let mut s = Sampler::for_trial(seed, trial);
        let mut failures = Vec::new();
        let mut check = |name: &str, input: &[Value], ok: Result<bool>| match ok {
            Ok(true) => {}
            Ok(false) => failures.push(format!("{name}: {}", literals(input))),
            Err(e) => failures.push(format!("{name}: {e} at {}", literals(input))),
        };
        let draw = |s: &mut Sampler, c: &Constraint| Value::Set(s.draw(c).expect("sampler"));

        // F × F → F
        let pair = vec![draw(&mut s, &member), draw(&mut s, &member)];
        check("square forward member", &pair, square.forward(&pair).map(|y| member_tuple(f, &y)));

        // F → F × F
        let z = vec![draw(&mut s, &member)];
        check("square backward member", &z, square.backward(&z).map(|x| member_tuple(f, &x)));

        // at least one coordinate outside F
        let mut bad = vec![draw(&mut s, &non_member), draw(&mut s, &member)];
        if s.coin() {
            bad.swap(0, 1);
        }
        if s.coin() {
            bad[0] = draw(&mut s, &non_member);
            bad[1] = draw(&mut s, &non_member);
        }
        check("square forward non-member", &bad, square.forward(&bad).map(|y| !member_tuple(f, &y)));

        // outside F → outside F × F
        let nz = vec![draw(&mut s, &non_member)];
        check("square backward non-member", &nz, square.backward(&nz).map(|x| !member_tuple(f, &x)));

        // h[F↾Ω × F↾Ω × D(ω∖Ω)] ⊆ F↾Ω × D(ω) and g back
        let restrict = |s: &mut Sampler| Value::Set(s.draw(&member).unwrap().intersect(omega.carrier()));
        let mut x = vec![restrict(&mut s), restrict(&mut s)];
        x.push(s.value(&main.domain().coords()[2]));
        check("main forward", &x, main.forward(&x).map(|y| f.decide(y[0].as_set().unwrap())));
        let mut y = vec![restrict(&mut s)];
        y.push(s.value(&main.codomain().coords()[1]));
        check("main backward", &y, main.backward(&y).map(|x| member_tuple(f, &x[..2])));

        Row::from_failures(trial, failures, format!("pair = {}", literals(&pair)))
    }))
}

enum Handle {
    Bits(Rc<OraclePoint>),
    Trits(Rc<Oracle<u8>>),
}

impl Handle {
    fn count(&self) -> usize {
        match self {
            Handle::Bits(o) => o.count(),
            Handle::Trits(o) => o.count(),
        }
    }

    fn max_index(&self) -> Option<usize> {
        match self {
            Handle::Bits(o) => o.max_index(),
            Handle::Trits(o) => o.max_index(),
        }
    }
}

fn bit_oracle(x: EvPeriodicSet, handles: &mut Vec<Handle>) -> crate::homeo::LazySet {
    let o = Rc::new(OraclePoint::from_set(x));
    handles.push(Handle::Bits(o.clone()));
    Rc::new(move |i| o.query(i))
}

/// Wraps exact values as instrumented oracles.
fn oracle_inputs(values: &[Value]) -> (Vec<LazyValue>, Vec<Handle>) {
    let mut handles = Vec::new();
    let lazy = values
        .iter()
        .map(|v| match v.clone() {
            Value::Set(x) => LazyValue::Set(bit_oracle(x, &mut handles)),
            Value::Pair(p) => {
                let (x, y) = p.into_parts();
                LazyValue::Pair(bit_oracle(x, &mut handles), bit_oracle(y, &mut handles))
            }
            Value::Ternary(t) => {
                let o = Rc::new(Oracle::new(move |i| t.at(i)));
                handles.push(Handle::Trits(o.clone()));
                LazyValue::Ternary(Rc::new(move |i| o.query(i)))
            }
        })
        .collect();
    (lazy, handles)
}

/// Lazy evaluation through oracles against the exact pipeline, on the
/// first `depth` positions of every output coordinate, both directions.
pub fn agreement_suite(h: &Homeo, trials: usize, depth: usize, seed: u64) -> Report {
    Report::run("agreement", seed, trials, |trial| {
        let mut s = Sampler::for_trial(seed, trial);
        let mut failures = Vec::new();
        for (dir, input) in [("forward", s.tuple(h.domain())), ("backward", s.tuple(h.codomain()))] {
            let exact = if dir == "forward" { h.forward(&input) } else { h.backward(&input) };
            let (lazy_in, _handles) = oracle_inputs(&input);
            let lazy = if dir == "forward" { h.forward_lazy(&lazy_in) } else { h.backward_lazy(&lazy_in) };
            match (exact, lazy) {
                (Ok(e), Ok(l)) => {
                    if !l.iter().zip(&e).all(|(l, e)| l.agrees_with(e, depth)) {
                        failures.push(format!("{dir} disagrees below {depth} at {}", literals(&input)));
                    }
                }
                (Err(e), _) | (_, Err(e)) => failures.push(format!("{dir}: {e} at {}", literals(&input))),
            }
        }
        Row::from_failures(trial, failures, format!("depth {depth}"))
    })
}

/// One line of a modulus table: evaluating output positions `0..=k` of
/// every output coordinate read `queried` distinct input positions, the
/// largest being `max_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModulusRow {
    pub k: usize,
    pub queried: usize,
    pub max_index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulusTable {
    pub homeo: String,
    pub input: Vec<String>,
    pub rows: Vec<ModulusRow>,
}

impl ModulusTable {
    pub fn max_index_nondecreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].max_index <= w[1].max_index)
    }

    pub fn render(&self) -> String {
        let mut out = format!("# modulus homeo={} input={}\nk\tqueried\tmax_index\n", self.homeo, self.input.join(" ; "));
        for r in &self.rows {
            let m = r.max_index.map_or("-".to_string(), |m| m.to_string());
            writeln!(out, "{}\t{}\t{}", r.k, r.queried, m).unwrap();
        }
        out
    }
}

fn touch(v: &LazyValue, k: usize) {
    match v {
        LazyValue::Set(f) => {
            f(k);
        }
        LazyValue::Pair(f, g) => {
            f(k);
            g(k);
        }
        LazyValue::Ternary(f) => {
            f(k);
        }
    }
}

/// Modulus of continuity of `h`'s forward map at `input`, for output
/// prefixes of length `1..=k_max`. Each row uses fresh oracles.
pub fn modulus_probe_at(h: &Homeo, input: &[Value], k_max: usize) -> Result<ModulusTable> {
    h.domain().check(input)?;
    let mut rows = Vec::with_capacity(k_max);
    for k in 0..k_max {
        let (lazy_in, handles) = oracle_inputs(input);
        let out = h.forward_lazy(&lazy_in)?;
        for i in 0..=k {
            out.iter().for_each(|v| touch(v, i));
        }
        rows.push(ModulusRow {
            k,
            queried: handles.iter().map(Handle::count).sum(),
            max_index: handles.iter().filter_map(Handle::max_index).max(),
        });
    }
    Ok(ModulusTable { homeo: h.name().into(), input: tuple_literals(input), rows })
}

/// [`modulus_probe_at`] on a random input drawn from `seed`.
pub fn modulus_probe(h: &Homeo, k_max: usize, seed: u64) -> Result<ModulusTable> {
    let input = Sampler::for_trial(seed, 0).tuple(h.domain());
    modulus_probe_at(h, &input, k_max)
}

/// Filter (or semifilter, with `intersections = false`) axioms on random
/// samples, half of them drawn from known members.
pub fn axiom_suite(
    name: &str,
    decide: impl Fn(&EvPeriodicSet) -> bool + Sync + Send,
    basis: &[EvPeriodicSet],
    intersections: bool,
    trials: usize,
    seed: u64,
) -> Report {
    Report::run(&format!("axioms:{name}"), seed, trials, |trial| {
        let mut s = Sampler::for_trial(seed, trial);
        let pick = |s: &mut Sampler| {
            let x = s.set();
            if !basis.is_empty() && s.coin() {
                let b = &basis[trial % basis.len()];
                b.union(&x.intersect(&s.set()))
            } else {
                x
            }
        };
        let (x, y) = (pick(&mut s), pick(&mut s));
        let failures: Vec<String> =
            crate::zoo::axiom_violation(&decide, &x, &y, intersections).into_iter().collect();
        Row::from_failures(trial, failures, format!("x = {x} y = {y}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homeo::product_homeo;
    use crate::zoo::dyadic_chain;

    #[test]
    fn generator_is_deterministic() {
        let a: Vec<_> = gen_evp(1, 4, 4, Constraint::None).unwrap().take(20).collect();
        let b: Vec<_> = gen_evp(1, 4, 4, Constraint::None).unwrap().take(20).collect();
        assert_eq!(a, b);
        assert!(gen_evp(1, 4, 0, Constraint::None).is_err());
    }

    #[test]
    fn constrained_draws() {
        let evens = GroundSet::evens();
        for x in gen_evp(3, 5, 5, Constraint::SubsetOf(evens.clone())).unwrap().take(50) {
            assert!(x.unwrap().is_subset(evens.carrier()));
        }
        let d = dyadic_chain();
        for x in gen_evp(3, 5, 5, Constraint::MemberOf(d.clone())).unwrap().take(100) {
            assert!(d.decide(&x.unwrap()));
        }
        for x in gen_evp(3, 5, 5, Constraint::NonMemberOf(d.clone())).unwrap().take(100) {
            assert!(!d.decide(&x.unwrap()));
        }
        let y = EvPeriodicSet::odds();
        for x in gen_evp(3, 5, 5, Constraint::DisjointFrom(y.clone())).unwrap().take(50) {
            assert!(x.unwrap().is_disjoint(&y));
        }
    }

    #[test]
    fn unsatisfiable_constraint_errors() {
        let mut s = Sampler::new(0, 2, 2).unwrap();
        let c = Constraint::SubsetOf(GroundSet::evens());
        assert!(s.draw(&c).is_ok());
        // no nonempty subset of evens is disjoint from the evens, but ∅ is
        let d = Constraint::DisjointFrom(EvPeriodicSet::omega());
        assert_eq!(s.draw(&d).unwrap(), EvPeriodicSet::empty());
    }

    #[test]
    fn report_format() {
        let h = product_homeo(&GroundSet::evens()).unwrap();
        let r = roundtrip_suite(&h, 5, 9);
        let text = r.render();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("# suite=roundtrip seed=9 trials=5"));
        let row: Vec<&str> = lines.next().unwrap().split('\t').collect();
        assert_eq!(row[..3], ["roundtrip", "0", "pass"]);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(roundtrip_suite(&h, 5, 9), r);
    }

    #[test]
    fn failing_rows_carry_literals() {
        let rows = vec![Row::from_failures(3, vec!["x = |10".into()], String::new())];
        let r = Report { suite: "demo".into(), seed: 1, rows };
        assert_eq!(r.exit_code(), 1);
        assert!(r.render().contains("demo\t3\tfail\tx = |10"));
    }
}
