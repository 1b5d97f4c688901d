use filtersq::cantor::{BoolOp, EvPeriodicSet, GroundSet, TernaryStream};
use filtersq::homeo::code::{decode, encode};
use filtersq::index_maps::{order_iso_image, phi, phi_image, phi_inv, phi_preimage, pullback, pushforward};
use proptest::prelude::*;

fn evp() -> impl Strategy<Value = EvPeriodicSet> {
    (prop::collection::vec(any::<bool>(), 0..8), prop::collection::vec(any::<bool>(), 1..8))
        .prop_map(|(p, b)| EvPeriodicSet::new(p, b).unwrap())
}

fn infinite() -> impl Strategy<Value = EvPeriodicSet> {
    evp().prop_filter("infinite", EvPeriodicSet::is_infinite)
}

fn coinfinite() -> impl Strategy<Value = EvPeriodicSet> {
    evp().prop_filter("co-infinite", |s| !s.is_cofinite())
}

fn ternary() -> impl Strategy<Value = TernaryStream> {
    (prop::collection::vec(0..3u8, 0..6), prop::collection::vec(0..3u8, 1..6))
        .prop_map(|(p, b)| TernaryStream::new(p, b).unwrap())
}

fn bits(x: &EvPeriodicSet, n: usize) -> Vec<bool> {
    (0..n).map(|i| x.contains(i)).collect()
}

/// Enough positions to cover two full periods past both prefixes.
fn horizon(xs: &[&EvPeriodicSet]) -> usize {
    let p: usize = xs.iter().map(|x| x.prefix().len()).max().unwrap();
    let l: usize = xs.iter().map(|x| x.block().len()).product();
    p + 2 * l + 4
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent_and_extensional(x in evp()) {
        let c = x.canonicalize();
        prop_assert_eq!(&c, &x);
        prop_assert_eq!(c.to_string().parse::<EvPeriodicSet>().unwrap(), x.clone());
        let n = horizon(&[&x]);
        // same set written with a longer prefix
        let rotated: Vec<bool> = (n..n + x.block().len()).map(|i| x.contains(i)).collect();
        let long = EvPeriodicSet::new(bits(&x, n), rotated).unwrap();
        prop_assert_eq!(&long, &x);
    }

    #[test]
    fn boolean_ops_match_pointwise(x in evp(), y in evp()) {
        let n = horizon(&[&x, &y]);
        for i in 0..n {
            let (a, b) = (x.contains(i), y.contains(i));
            prop_assert_eq!(x.union(&y).contains(i), a || b);
            prop_assert_eq!(x.intersect(&y).contains(i), a && b);
            prop_assert_eq!(x.diff(&y).contains(i), a && !b);
            prop_assert_eq!(x.complement().contains(i), !a);
        }
        prop_assert_eq!(EvPeriodicSet::boolean(BoolOp::Union, &x, Some(&y)).unwrap(), x.union(&y));
    }

    #[test]
    fn de_morgan(x in evp(), y in evp()) {
        prop_assert_eq!(x.union(&y).complement(), x.complement().intersect(&y.complement()));
        prop_assert_eq!(x.intersect(&y).complement(), x.complement().union(&y.complement()));
        prop_assert_eq!(x.complement().complement(), x.clone());
    }

    #[test]
    fn almost_subset_by_expansion(x in evp(), y in evp()) {
        // X ∖ Y is finite iff it has no member in two periods past the prefixes
        let n = horizon(&[&x, &y]);
        let p = x.prefix().len().max(y.prefix().len());
        let tail_clear = (p..n).all(|i| !x.contains(i) || y.contains(i));
        prop_assert_eq!(x.almost_subset(&y), tail_clear);
        prop_assert_eq!(x.is_subset(&y), (0..n).all(|i| !x.contains(i) || y.contains(i)));
    }

    #[test]
    fn rank_and_select_are_inverse(x in infinite(), k in 0usize..200) {
        let g = GroundSet::new(x.clone()).unwrap();
        let s = g.select(k);
        prop_assert!(x.contains(s));
        prop_assert_eq!(g.rank(s), k);
        prop_assert_eq!((0..s).filter(|&i| x.contains(i)).count(), k);
    }

    #[test]
    fn pullback_pushforward(a in infinite(), x in evp()) {
        let g = GroundSet::new(a.clone()).unwrap();
        let pulled = pullback(&g, &x);
        for k in 0..64 {
            prop_assert_eq!(pulled.contains(k), x.contains(g.select(k)));
        }
        let pushed = pushforward(&g, &x);
        prop_assert!(pushed.is_subset(&a));
        prop_assert_eq!(pullback(&g, &pushed), x.clone());
        prop_assert_eq!(pushforward(&g, &pullback(&g, &x)), x.intersect(&a));
    }

    #[test]
    fn phi_is_monotone_bijection(s in coinfinite()) {
        let rest: Vec<usize> = (0..300).filter(|&m| !s.contains(m)).collect();
        for (k, &m) in rest.iter().enumerate() {
            prop_assert_eq!(phi(&s, m).unwrap(), k);
            prop_assert_eq!(phi_inv(&s, k).unwrap(), m);
        }
        if let Some(m) = (0..300).find(|&m| s.contains(m)) {
            prop_assert!(phi(&s, m).is_err());
        }
    }

    #[test]
    fn phi_image_brute_force(s in coinfinite(), e in evp()) {
        let e = e.diff(&s);
        let img = phi_image(&s, &e).unwrap();
        let rest: Vec<usize> = (0..400).filter(|&m| !s.contains(m)).collect();
        for (k, &m) in rest.iter().enumerate() {
            prop_assert_eq!(img.contains(k), e.contains(m));
        }
        prop_assert_eq!(phi_preimage(&s, &img).unwrap(), e);
    }

    #[test]
    fn order_iso_preserves_order(a in infinite(), b in infinite(), x in evp()) {
        let (ga, gb) = (GroundSet::new(a.clone()).unwrap(), GroundSet::new(b.clone()).unwrap());
        let x = x.intersect(&a);
        let y = order_iso_image(&ga, &gb, &x).unwrap();
        prop_assert!(y.is_subset(&b));
        for k in 0..64 {
            prop_assert_eq!(y.contains(gb.select(k)), x.contains(ga.select(k)));
        }
        prop_assert_eq!(order_iso_image(&gb, &ga, &y).unwrap(), x);
    }

    #[test]
    fn prefix_code_round_trips(x in evp(), t in ternary()) {
        prop_assert_eq!(encode(&decode(&x)), x);
        prop_assert_eq!(decode(&encode(&t)), t);
    }
}
