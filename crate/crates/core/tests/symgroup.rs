use std::collections::{HashMap, VecDeque};

use ajpackets::symgroup::*;
use proptest::prelude::*;

fn perm_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn pair_strategy(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max_n).prop_flat_map(|n| {
        let base: Vec<usize> = (1..=n).collect();
        (Just(base.clone()).prop_shuffle(), Just(base).prop_shuffle())
            .prop_map(|(a, b)| (Permutation::new(a).unwrap(), Permutation::new(b).unwrap()))
    })
}

/// Rank-matrix form of the Bruhat order.
fn tableau_leq(v: &Permutation, w: &Permutation) -> bool {
    let n = v.n();
    (1..=n).all(|i| {
        (1..=n).all(|k| {
            let cv = (1..=i).filter(|&j| v.at(j) >= k).count();
            let cw = (1..=i).filter(|&j| w.at(j) >= k).count();
            cv <= cw
        })
    })
}

/// θ-length as distance from the identity under the twisted action
/// `w ↦ s w s` (non-commuting) or `w ↦ w s` (commuting), going up.
fn theta_bfs(n: usize) -> HashMap<Permutation, usize> {
    let mut dist = HashMap::new();
    let id = Permutation::identity(n);
    dist.insert(id.clone(), 0);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for k in 1..n {
            let s = Permutation::simple(n, k);
            let ws = w.compose(&s).unwrap();
            let sw = s.compose(&w).unwrap();
            let next = if ws == sw { ws } else { sw.compose(&s).unwrap() };
            if next.length() > w.length() && !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    dist
}

#[test]
fn bruhat_matches_tableau_criterion() {
    for n in 1..=5 {
        let all: Vec<_> = Permutation::all(n).collect();
        for w in &all {
            let ideal = BruhatIdeal::new(w);
            for v in &all {
                assert_eq!(ideal.contains(v).unwrap(), tableau_leq(v, w), "{v} <= {w}");
            }
        }
    }
}

#[test]
fn theta_length_matches_twisted_distance() {
    for n in 1..=7 {
        let dist = theta_bfs(n);
        let invs = involutions(n);
        assert_eq!(dist.len(), invs.len(), "n = {n}");
        for w in invs {
            assert_eq!(dist[w.perm()], w.theta_length(), "{w}");
        }
    }
}

#[test]
fn involution_counts() {
    let telephone = [1usize, 1, 2, 4, 10, 26, 76, 232, 764];
    for (n, &t) in telephone.iter().enumerate().skip(1) {
        let invs = involutions(n);
        assert_eq!(invs.len(), t);
        let mut sorted = invs.clone();
        sorted.sort();
        assert_eq!(sorted, invs, "lexicographic order");
    }
}

#[test]
fn longest_theta_length() {
    for n in 1..=12 {
        assert_eq!(Involution::longest(n).theta_length(), (n / 2) * (n - n / 2));
    }
}

#[test]
fn witness_checks() {
    for n in 2..=6 {
        for wit in verify_lemma_6_5(n).unwrap() {
            let target = &wit.witnesses[0];
            assert!(target.is_involution());
            let tl = Involution::new(wit.w.clone()).unwrap().theta_length();
            assert_eq!(Involution::new(target.clone()).unwrap().theta_length() + 1, tl);
            assert!(tableau_leq(target, &wit.w));
            let gap = wit.w.length() - target.length();
            match wit.case {
                WitnessCase::Single => assert_eq!(gap, 1),
                WitnessCase::Double => assert_eq!(gap, 2),
            }
        }
        for wit in verify_corollary_6_6(n).unwrap() {
            let target = &wit.witnesses[0];
            assert!(tableau_leq(&wit.w, target));
            let tl = Involution::new(wit.w.clone()).unwrap().theta_length();
            assert_eq!(Involution::new(target.clone()).unwrap().theta_length(), tl + 1);
        }
    }
    assert!(verify_lemma_6_5(1).is_err());
}

#[test]
fn sigma_decomposition_brute_force() {
    for n in 1..=6 {
        for w in involutions(n) {
            let d = sigma_decomposition(&w);
            assert_eq!(&d.recompose(), w.perm());
            assert_eq!(w.length(), 2 * d.tau.length() + d.x.len());
            assert!(d.x.windows(2).all(|p| p[1] > p[0] + 1));
            // nothing shorter exists
            let best = Permutation::all(n)
                .filter(|t| t.length() < d.tau.length())
                .any(|t| {
                    let tw = t.compose(w.perm()).unwrap().compose(&t.inverse()).unwrap();
                    (1..=n).all(|i| tw.at(i) == i || tw.at(i).abs_diff(i) == 1)
                        && w.length() == 2 * t.length() + tw.length()
                });
            assert!(!best, "{w}");
        }
    }
}

proptest! {
    #[test]
    fn reduced_word_has_length(w in perm_strategy(7)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        let n = w.n();
        let rebuilt = word.iter().fold(Permutation::identity(n), |acc, &i| acc.compose(&Permutation::simple(n, i)).unwrap());
        prop_assert_eq!(rebuilt, w);
    }

    #[test]
    fn inverse_and_length((v, w) in pair_strategy(7)) {
        prop_assert!(v.compose(&v.inverse()).unwrap().is_identity());
        prop_assert_eq!(v.inverse().length(), v.length());
        let vw = v.compose(&w).unwrap();
        prop_assert!(vw.length() <= v.length() + w.length());
        prop_assert_eq!(vw.length() % 2, (v.length() + w.length()) % 2);
    }

    #[test]
    fn bruhat_oracle((v, w) in pair_strategy(7)) {
        prop_assert_eq!(bruhat_leq(&v, &w).unwrap(), tableau_leq(&v, &w));
    }

    #[test]
    fn display_roundtrip(w in perm_strategy(9)) {
        let back: Permutation = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn theta_length_formula(w in perm_strategy(8)) {
        let inv = w.compose(&w).unwrap();
        // every square root of the identity is an involution; others are rejected
        match theta_length(&w) {
            Ok(t) => {
                prop_assert!(inv.is_identity());
                prop_assert_eq!(2 * t, w.length() + w.exceedances());
            }
            Err(_) => prop_assert!(!inv.is_identity()),
        }
    }
}
