use proptest::prelude::*;

use loopcomm::commutator::{
    associator_subloop, classify, derived_subloop, series, tc_refute, upper_central_chain,
    CommutatorConfig, CommutatorEngine, SeriesKind,
};
use loopcomm::loopcore::{quotient, subloop_generated};
use loopcomm::normal::{all_normal_subloops, is_normal, is_normal_cosets, is_normal_total};
use loopcomm::permgrp::{groups_equal, DEFAULT_CAP};
use loopcomm::words::{inn, inn_bruteforce, totinn, totinn_bruteforce};
use loopcomm::Loop;

/// Fills a normalized Latin square cell by cell, trying symbols in the order
/// given by `weights`, with backtracking.
fn latin_loop(n: usize, weights: &[u32]) -> Loop {
    let mut t = vec![usize::MAX; n * n];
    for i in 0..n {
        t[i] = i;
        t[i * n] = i;
    }
    let cells: Vec<usize> = (n + 1..n * n).filter(|c| c % n != 0).collect();
    fn fill(n: usize, t: &mut [usize], cells: &[usize], k: usize, w: &[u32]) -> bool {
        let Some(&c) = cells.get(k) else { return true };
        let (r, col) = (c / n, c % n);
        let mut syms: Vec<usize> = (0..n).collect();
        syms.sort_by_key(|&s| w[(c * n + s) % w.len()]);
        for s in syms {
            let clash = (0..n).any(|j| t[r * n + j] == s || t[j * n + col] == s);
            if !clash {
                t[c] = s;
                if fill(n, t, cells, k + 1, w) {
                    return true;
                }
                t[c] = usize::MAX;
            }
        }
        false
    }
    assert!(fill(n, &mut t, &cells, 0, weights));
    Loop::from_table(n, t).expect("normalized Latin square")
}

fn arb_loop() -> impl Strategy<Value = Loop> {
    (
        2usize..=6,
        prop::collection::vec(any::<u32>(), 216),
        any::<bool>(),
    )
        .prop_map(|(n, w, wide)| {
            let q = latin_loop(n, &w);
            if wide {
                Loop::direct_product(&q, &Loop::cyclic(2))
            } else {
                q
            }
        })
}

fn engine(q: &Loop) -> CommutatorEngine<'_> {
    CommutatorEngine::new(q, &CommutatorConfig::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn commutator_lattice_laws(q in arb_loop()) {
        let e = engine(&q);
        let ns = all_normal_subloops(&q);
        for a in &ns {
            for b in &ns {
                let c = e.commutator(a, b).unwrap();
                prop_assert_eq!(&c, &e.commutator(b, a).unwrap());
                prop_assert!(c.is_subset(&a.intersection(b)));
                prop_assert!(is_normal(&q, &c));
                for a2 in ns.iter().filter(|a2| a.is_subset(a2)) {
                    prop_assert!(c.is_subset(&e.commutator(a2, b).unwrap()));
                }
            }
        }
    }

    #[test]
    fn word_sets_agree(q in arb_loop()) {
        let reference = engine(&q);
        let mut others = Vec::new();
        for finite in [true, false] {
            for pruned in [true, false] {
                others.push(CommutatorConfig { pruned, ..CommutatorConfig::auto(finite) });
            }
        }
        others.push(CommutatorConfig { pruned: false, ..Default::default() });
        others.push(CommutatorConfig { early_exit: true, ..Default::default() });
        let ns = all_normal_subloops(&q);
        for cfg in &others {
            let e = CommutatorEngine::new(&q, cfg).unwrap();
            for a in &ns {
                for b in &ns {
                    prop_assert_eq!(e.commutator(a, b).unwrap(), reference.commutator(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn normality_tests_agree(q in arb_loop(), gens in prop::collection::vec(0usize..12, 0..3)) {
        let s = subloop_generated(&q, gens.into_iter().map(|g| g % q.order()));
        let n = is_normal(&q, &s);
        prop_assert_eq!(n, is_normal_total(&q, &s));
        prop_assert_eq!(n, is_normal_cosets(&q, &s));
    }

    #[test]
    fn inner_groups_match_stabilizers(q in arb_loop()) {
        prop_assert!(groups_equal(&inn(&q, DEFAULT_CAP).unwrap(), &inn_bruteforce(&q, DEFAULT_CAP).unwrap()));
        prop_assert!(groups_equal(&totinn(&q, DEFAULT_CAP).unwrap(), &totinn_bruteforce(&q, DEFAULT_CAP).unwrap()));
    }

    #[test]
    fn derived_and_associator_quotients(q in arb_loop()) {
        let d = derived_subloop(&q);
        prop_assert!(quotient(&q, &d).unwrap().quotient.is_abelian_group());
        let a = associator_subloop(&q);
        prop_assert!(quotient(&q, &a).unwrap().quotient.is_group());
        for n in all_normal_subloops(&q) {
            let f = quotient(&q, &n).unwrap().quotient;
            prop_assert_eq!(d.is_subset(&n), f.is_abelian_group());
            prop_assert_eq!(a.is_subset(&n), f.is_group());
        }
    }

    #[test]
    fn commutator_satisfies_term_condition(q in arb_loop()) {
        let e = engine(&q);
        let ns = all_normal_subloops(&q);
        for a in &ns {
            for b in &ns {
                let c = e.commutator(a, b).unwrap();
                prop_assert!(tc_refute(&q, a, b, &c, 3).is_none());
            }
        }
    }

    #[test]
    fn central_series_agree(q in arb_loop()) {
        let e = engine(&q);
        let lower = series(&e, SeriesKind::LowerCentral).unwrap();
        let upper = upper_central_chain(&q).unwrap();
        prop_assert_eq!(lower.terminated, upper.last().unwrap().is_whole());
        if lower.terminated {
            prop_assert_eq!(lower.length, upper.len() - 1);
        }
        let c = classify(&e).unwrap();
        // nilpotent implies congruence solvable implies Bruck solvable
        if c.centrally_nilpotent.is_some() {
            prop_assert!(c.congruence_solvable.is_some());
        }
        if c.congruence_solvable.is_some() {
            prop_assert!(c.bruck_solvable.is_some());
        }
    }

    #[test]
    fn text_round_trip(q in arb_loop()) {
        prop_assert_eq!(Loop::parse(&q.to_text()).unwrap(), q);
    }
}
