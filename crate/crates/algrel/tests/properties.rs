//! Property-based invariants over randomized ideals and systems.

use proptest::prelude::*;

use algrel::combinatorics::{
    binomial, restricted_compositions, sum_threshold_betti, sum_threshold_generator_count,
    sum_threshold_ordered_generators, CompositionQuery,
};
use algrel::oracle::inclusion_exclusion_numerator;
use algrel::{
    betti_bounds, build_mvt, hilbert_numerator, Monomial, MonomialIdeal, MvtOptions,
    SystemSpec, DEFAULT_BUDGET,
};

fn arb_monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

fn arb_ideal(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(arb_monomial(n, max_exp), 1..=max_gens)
        .prop_map(move |gens| MonomialIdeal::minimalize(n, gens).unwrap())
}

fn arb_generalized(max_n: usize) -> impl Strategy<Value = SystemSpec> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(1..=3u32, n),
            prop::collection::vec(1..=n, 1..=3),
        )
            .prop_map(move |(caps, thresholds)| SystemSpec::GeneralizedKn {
                thresholds,
                component_max_levels: caps,
            })
    })
}

fn arb_simple(max_n: usize) -> impl Strategy<Value = SystemSpec> {
    (1..=max_n).prop_flat_map(|n| {
        (prop::collection::vec(1..=3u32, n), 1..=n).prop_map(move |(caps, k)| {
            let mut sorted = caps.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            SystemSpec::SimpleKn {
                k,
                component_max_levels: caps,
                system_max_level: sorted[k - 1],
            }
        })
    })
}

fn arb_spec(max_n: usize) -> impl Strategy<Value = SystemSpec> {
    prop_oneof![arb_simple(max_n), arb_generalized(max_n)]
}

/// All states of the component lattice of `spec`.
fn lattice(spec: &SystemSpec) -> Vec<Vec<u32>> {
    let caps = spec.component_max_levels();
    let mut states = vec![Vec::new()];
    for &cap in &caps {
        states = states
            .into_iter()
            .flat_map(|s| {
                (0..=cap).map(move |v| {
                    let mut t = s.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    states
}

proptest! {
    #[test]
    fn minimalize_is_idempotent_and_order_independent(
        gens in prop::collection::vec(arb_monomial(4, 3), 1..8)
    ) {
        let forward = MonomialIdeal::minimalize(4, gens.clone()).unwrap();
        let reversed = MonomialIdeal::minimalize(4, gens.iter().rev().cloned()).unwrap();
        prop_assert_eq!(forward.generators(), reversed.generators());
        let again =
            MonomialIdeal::minimalize(4, forward.generators().iter().cloned()).unwrap();
        prop_assert_eq!(forward.generators(), again.generators());
    }

    #[test]
    fn sum_membership_is_union(
        a in arb_ideal(3, 3, 5),
        b in arb_ideal(3, 3, 5),
        m in arb_monomial(3, 4)
    ) {
        let sum = a.sum(&b).unwrap();
        prop_assert_eq!(
            sum.contains(&m).unwrap(),
            a.contains(&m).unwrap() || b.contains(&m).unwrap()
        );
    }

    #[test]
    fn intersect_principal_membership(
        i in arb_ideal(3, 3, 5),
        g in arb_monomial(3, 3),
        m in arb_monomial(3, 5)
    ) {
        let inter = i.intersect_principal(&g).unwrap();
        prop_assert_eq!(
            inter.contains(&m).unwrap(),
            i.contains(&m).unwrap() && g.divides(&m).unwrap()
        );
    }

    #[test]
    fn structure_function_is_coherent(spec in arb_spec(5), seed in any::<u64>()) {
        let caps = spec.component_max_levels();
        let mut s = seed | 1;
        let mut next = || {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            s
        };
        let y: Vec<u32> = caps.iter().map(|&c| (next() % (c as u64 + 1)) as u32).collect();
        let x: Vec<u32> = y.iter().map(|&v| (next() % (v as u64 + 1)) as u32).collect();
        prop_assert!(
            spec.structure_function(&x).unwrap() <= spec.structure_function(&y).unwrap()
        );
    }

    #[test]
    fn ideal_membership_matches_structure_function(spec in arb_spec(4)) {
        for j in 1..=spec.max_level() {
            let ideal = spec.reliability_ideal(j).unwrap();
            for x in lattice(&spec) {
                let works = spec.structure_function(&x).unwrap() >= j;
                prop_assert_eq!(
                    ideal.contains(&Monomial::new(x.clone())).unwrap(),
                    works,
                    "state {:?} at level {}", x, j
                );
            }
        }
    }

    #[test]
    fn homogeneous_simple_kn_boundary_counts(
        n in 2..=5usize,
        k in 1..=3usize,
        m in 1..=3u32
    ) {
        let k = k.min(n);
        let spec = SystemSpec::SimpleKn {
            k,
            component_max_levels: vec![m; n],
            system_max_level: m,
        };
        // lower points pick the k working components; upper points pick
        // the k - 1 components held at their maximum
        let lower_count = binomial(n as u64, k as u64);
        let upper_count = binomial(n as u64, k as u64 - 1);
        for j in 1..=m {
            let lower = spec.lower_boundary_points(j).unwrap();
            prop_assert_eq!(num_bigint::BigUint::from(lower.len()), lower_count.clone());
            let upper = spec.upper_boundary_points(j - 1, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(num_bigint::BigUint::from(upper.len()), upper_count.clone());
        }
    }

    #[test]
    fn standard_pairs_match_upper_boundary_points(spec in arb_spec(4)) {
        for j in 1..=spec.max_level() {
            let pairs = spec.maximal_standard_pairs(j, DEFAULT_BUDGET).unwrap();
            let upper = spec.upper_boundary_points(j - 1, DEFAULT_BUDGET).unwrap();
            prop_assert_eq!(pairs.len(), upper.len());
        }
    }

    #[test]
    fn reliability_ideals_are_nested(spec in arb_spec(4)) {
        for j in 1..spec.max_level() {
            let outer = spec.reliability_ideal(j).unwrap();
            let inner = spec.reliability_ideal(j + 1).unwrap();
            for g in inner.generators() {
                prop_assert!(outer.contains(g).unwrap(), "level {} generator {:?}", j + 1, g);
            }
        }
    }

    #[test]
    fn cut_fast_path_agrees_with_lattice_scan(
        n in 2..=6usize,
        m in 1..=3usize,
        seed in any::<u64>()
    ) {
        // homogeneous generalized system: caps m, one threshold per level
        let mut s = seed | 1;
        let thresholds: Vec<usize> = (0..m)
            .map(|_| {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                1 + (s % n as u64) as usize
            })
            .collect();
        let spec = SystemSpec::GeneralizedKn {
            thresholds,
            component_max_levels: vec![m as u32; n],
        };
        for j in 1..=spec.max_level() {
            let mut scanned = spec.minimal_cuts(j, DEFAULT_BUDGET).unwrap();
            let mut combinatorial = spec.minimal_cuts(j, 1).unwrap();
            scanned.sort();
            combinatorial.sort();
            prop_assert_eq!(&scanned, &combinatorial, "level {}", j);
        }
    }

    #[test]
    fn numerator_matches_inclusion_exclusion(i in arb_ideal(4, 3, 8)) {
        prop_assume!(!i.is_zero());
        let tree = build_mvt(&i, &MvtOptions::default()).unwrap();
        prop_assert_eq!(
            hilbert_numerator(&tree).coefficient_map(),
            inclusion_exclusion_numerator(&i).unwrap()
        );
    }

    #[test]
    fn tree_dimension_within_syzygy_bound(i in arb_ideal(4, 3, 10)) {
        prop_assume!(!i.is_zero());
        let tree = build_mvt(&i, &MvtOptions::default()).unwrap();
        prop_assert!(tree.max_dimension() as usize <= i.num_vars());
    }

    #[test]
    fn numerator_normalizes_to_one(i in arb_ideal(4, 3, 10)) {
        prop_assume!(!i.is_zero());
        let tree = build_mvt(&i, &MvtOptions::default()).unwrap();
        let total: i64 = hilbert_numerator(&tree).coefficient_map().values().sum();
        prop_assert_eq!(total, 1);
    }

    #[test]
    fn betti_lower_bounds_stay_below_upper(i in arb_ideal(4, 3, 10)) {
        prop_assume!(!i.is_zero());
        let opts = MvtOptions { compatibility_check: true, ..MvtOptions::default() };
        let tree = build_mvt(&i, &opts).unwrap();
        let summary = betti_bounds(&tree, &opts);
        for (key, lo) in summary.lower() {
            prop_assert!(lo <= &summary.upper()[key]);
        }
    }

    #[test]
    fn restricted_compositions_match_enumeration(
        total in 0..=12u32,
        parts in 1..=4u32,
        min in 0..=2u32,
        span in 0..=4u32
    ) {
        let max = min + span;
        let q = CompositionQuery { total, parts, min, max };
        let mut count = 0u64;
        let mut tuple = vec![min; parts as usize];
        loop {
            if tuple.iter().sum::<u32>() == total {
                count += 1;
            }
            let mut idx = 0;
            loop {
                if idx == tuple.len() {
                    break;
                }
                if tuple[idx] < max {
                    tuple[idx] += 1;
                    break;
                }
                tuple[idx] = min;
                idx += 1;
            }
            if idx == tuple.len() {
                break;
            }
        }
        prop_assert_eq!(restricted_compositions(q), count.into());
    }

    #[test]
    fn sum_threshold_counts_and_normalization(
        m in 1..=3u32,
        n in 1..=5usize,
        k_off in 0..=14u32
    ) {
        let k = 1 + k_off % (m * n as u32);
        let gens = sum_threshold_ordered_generators(m, n, k);
        prop_assert_eq!(
            sum_threshold_generator_count(m, n, k),
            gens.len().into()
        );
        // the alternating Betti sum telescopes to one
        let betti = sum_threshold_betti(m, n, k);
        let mut total = 0i64;
        for (d, b) in betti.iter().enumerate() {
            let b: u64 = b.try_into().unwrap();
            total += if d % 2 == 0 { b as i64 } else { -(b as i64) };
        }
        prop_assert_eq!(total, 1);
    }
}
