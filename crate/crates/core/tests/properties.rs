use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stripcolor::curves::build;
use stripcolor::engine::{play, FirstFit};
use stripcolor::generate::{generate, GeneratorKind};
use stripcolor::geometry::{intersects, left_of, segment_type, BaseSegment, Order, Point, StripObject};
use stripcolor::graph::SimpleGraph;
use stripcolor::instance::{parse_poset, poset_to_text, Instance};
use stripcolor::oracle::{chromatic_number, clique_number, is_proper};
use stripcolor::poset::{cocomparability_graph, from_family, linear_extensions, Poset};
use stripcolor::rational::{frac, parse, simplest_between, Rational};
use stripcolor::{Caps, StripColor};

fn strip_objects(kind: GeneratorKind, n: usize, seed: u64, cap: usize) -> Vec<StripObject> {
    match generate(kind, n, seed, cap, &Caps::default()).unwrap() {
        Instance::Strip(o) => o,
        Instance::Attached(_) => unreachable!(),
    }
}

fn kinds() -> impl Strategy<Value = GeneratorKind> {
    prop_oneof![
        Just(GeneratorKind::Segments),
        Just(GeneratorKind::Convex),
        Just(GeneratorKind::QuasiConvex),
    ]
}

fn rational() -> impl Strategy<Value = Rational> {
    (-500i64..500, 1i64..40).prop_map(|(p, q)| frac(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn intersection_is_symmetric(kind in kinds(), seed in any::<u64>(), n in 2usize..12) {
        let objs = strip_objects(kind, n, seed, 4);
        for a in &objs {
            prop_assert!(intersects(a, a));
            for b in &objs {
                prop_assert_eq!(intersects(a, b), intersects(b, a));
            }
        }
    }

    #[test]
    fn left_of_is_a_strict_partial_order(kind in kinds(), seed in any::<u64>(), n in 2usize..12) {
        let objs = strip_objects(kind, n, seed, 4);
        let rel = |i: usize, j: usize| left_of(&objs[i], &objs[j]) == Order::Left;
        for i in 0..n {
            prop_assert!(!rel(i, i));
            for j in 0..n {
                if i != j && !intersects(&objs[i], &objs[j]) {
                    prop_assert!(rel(i, j) != rel(j, i));
                }
                for k in 0..n {
                    if rel(i, j) && rel(j, k) {
                        prop_assert!(rel(i, k));
                    }
                }
            }
        }
    }

    #[test]
    fn intersection_graph_is_the_cocomparability_graph(kind in kinds(), seed in any::<u64>(), n in 1usize..14) {
        let objs = strip_objects(kind, n, seed, 5);
        let p = from_family(&objs).unwrap();
        let g = SimpleGraph::from_fn(n, |i, j| intersects(&objs[i], &objs[j]));
        prop_assert_eq!(cocomparability_graph(&p), g);
    }

    #[test]
    fn intersection_graphs_are_perfect_on_samples(kind in kinds(), seed in any::<u64>(), n in 1usize..11) {
        let objs = strip_objects(kind, n, seed, 4);
        let g = SimpleGraph::from_fn(n, |i, j| intersects(&objs[i], &objs[j]));
        let caps = Caps::default();
        prop_assert_eq!(chromatic_number(&g, &caps).unwrap(), clique_number(&g, &caps).unwrap());
    }

    #[test]
    fn strip_coloring_is_proper_and_indices_bounded(kind in kinds(), seed in any::<u64>(), n in 1usize..30) {
        let objs = strip_objects(kind, n, seed, 5);
        let caps = Caps::default();
        let t = play(objs.clone(), StripColor::new(), &caps).unwrap();
        let g = SimpleGraph::from_fn(n, |i, j| intersects(&objs[i], &objs[j]));
        prop_assert!(is_proper(&g, &t.colors));
        for (c, w) in t.colors.iter().zip(&t.omega_running) {
            prop_assert!(c.alpha + c.beta <= w + 1);
            prop_assert!(c.alpha >= 1 && c.beta >= 1 && c.gamma >= 1);
        }
        let ff = play(objs, FirstFit::new(), &caps).unwrap();
        prop_assert!(ff.proper);
    }

    #[test]
    fn instances_round_trip(kind in prop_oneof![kinds(), Just(GeneratorKind::Attached)], seed in any::<u64>(), n in 0usize..15) {
        let inst = generate(kind, n, seed, 4, &Caps::default()).unwrap();
        let text = inst.to_text();
        let back = Instance::parse(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(back.to_text(), text);
    }

    #[test]
    fn posets_round_trip_and_extensions_respect_order(seed in any::<u64>(), n in 0usize..7, p in 0.0f64..0.7) {
        let poset = Poset::random(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(parse_poset(&poset_to_text(&poset)).unwrap(), poset.clone());
        let exts = linear_extensions(&poset, &Caps::default()).unwrap();
        prop_assert!(!exts.is_empty());
        for e in &exts {
            prop_assert!(e.respects(&poset));
        }
        let distinct: std::collections::BTreeSet<_> = exts.iter().collect();
        prop_assert_eq!(distinct.len(), exts.len());
    }

    #[test]
    fn curve_systems_represent_random_posets(seed in any::<u64>(), n in 1usize..6, p in 0.0f64..0.7) {
        let poset = Poset::random(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let order: Vec<usize> = (0..n).collect();
        let sys = build(&poset, &order).unwrap();
        prop_assert!(sys.represents_poset());
        prop_assert!(sys.verify_star(&Caps::default()).unwrap());
        prop_assert!(sys.lines_realize_extensions(&Caps::default()).unwrap());
    }

    #[test]
    fn simplest_between_is_strictly_inside(a in rational(), b in rational()) {
        prop_assume!(a != b);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let s = simplest_between(&lo, &hi);
        prop_assert!(lo < s && s < hi);
        // The mediant has denominator at most the sum, so the simplest one does too.
        prop_assert!(s.denom() <= &(lo.denom() + hi.denom()));
    }

    #[test]
    fn rationals_round_trip_as_text(a in rational()) {
        prop_assert_eq!(parse(&stripcolor::rational::format(&a)).unwrap(), a);
    }

    #[test]
    fn middle_singleton_and_complement_never_both_occur(
        xs in proptest::array::uniform3(-30i64..30),
        top in -400i64..400,
        bottom in -400i64..400,
        top2 in -400i64..400,
        bottom2 in -400i64..400,
    ) {
        let pts = [
            Point::new(frac(xs[0], 4), frac(1, 4)),
            Point::new(frac(xs[1], 4), frac(1, 2)),
            Point::new(frac(xs[2], 4), frac(3, 4)),
        ];
        let s1 = BaseSegment::new(frac(top, 7), frac(bottom, 11));
        let s2 = BaseSegment::new(frac(top2, 7), frac(bottom2, 11));
        if let (Ok(a), Ok(b)) = (segment_type(&s1, &pts), segment_type(&s2, &pts)) {
            let middle = stripcolor::geometry::TypeSet::singleton(1);
            prop_assert!(!(a == middle && b == middle.complement()));
            prop_assert!(!(b == middle && a == middle.complement()));
        }
    }
}
