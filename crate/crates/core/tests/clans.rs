use std::collections::BTreeSet;

use ajpackets::clans::*;
use itertools::Itertools;
use proptest::prelude::*;

/// All normalized clan strings of signature `(p, q)`, built by brute force
/// over words in `+`, `-` and digits.
fn brute_clans(p: usize, q: usize) -> BTreeSet<String> {
    let n = p + q;
    let alphabet: Vec<char> = "+-123456789".chars().take(2 + n / 2).collect();
    let mut out = BTreeSet::new();
    for word in (0..n).map(|_| alphabet.iter().copied()).multi_cartesian_product() {
        let plus = word.iter().filter(|&&c| c == '+').count();
        let minus = word.iter().filter(|&&c| c == '-').count();
        let digits: Vec<char> = word.iter().copied().filter(char::is_ascii_digit).collect();
        let pairs = digits.len() / 2;
        if digits.len() % 2 == 1 || plus + pairs != p || minus + pairs != q {
            continue;
        }
        let counts_ok = digits.iter().counts().values().all(|&c| c == 2);
        let firsts: Vec<char> = digits.iter().copied().unique().collect();
        let ordered = firsts.iter().enumerate().all(|(i, &c)| c == char::from(b'1' + i as u8));
        if counts_ok && ordered {
            out.insert(word.into_iter().collect());
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=6 {
        for p in 0..=n {
            let q = n - p;
            let ours: BTreeSet<String> = enumerate_clans(p, q).iter().map(|c| c.to_string()).collect();
            assert_eq!(ours, brute_clans(p, q), "({p},{q})");
            assert_eq!(clan_count(p, q), ours.len() as u128);
        }
    }
}

#[test]
fn small_counts() {
    assert_eq!(clan_count(1, 1), 3);
    assert_eq!(clan_count(2, 1), 6);
    assert_eq!(clan_count(2, 2), 21);
    assert_eq!(clan_count(0, 4), 1);
}

#[test]
fn length_relation_and_grading() {
    for n in 1..=6 {
        for p in 0..=n {
            assert!(verify_length_relation(p, n - p).unwrap());
            for (hi, lo) in hasse_edges(p, n - p) {
                assert_eq!(clan_length(&hi), clan_length(&lo) + 1);
            }
        }
    }
}

#[test]
fn closed_orbits_are_sign_strings() {
    for (p, q) in [(2, 1), (2, 2), (3, 1)] {
        let min: Vec<Clan> = enumerate_clans(p, q)
            .into_iter()
            .filter(|c| clan_length(c) == (p * p.saturating_sub(1) + q * q.saturating_sub(1)) / 2)
            .collect();
        let binom = (1..=q).fold(1usize, |acc, i| acc * (p + i) / i);
        assert_eq!(min.len(), binom);
        assert!(min.iter().all(|c| c.eta().two_cycles().is_empty()));
    }
}

#[test]
fn packets_group_by_involution() {
    let ps = packets(2, 2);
    let total: usize = ps.iter().map(Vec::len).sum();
    assert_eq!(total, 21);
    for g in &ps {
        assert!(g.iter().map(|c| c.eta().clone()).all_equal());
    }
}

fn clan_strategy() -> impl Strategy<Value = Clan> {
    (1..=7usize)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, p)| {
            let all = enumerate_clans(p, n - p);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
}

proptest! {
    #[test]
    fn parse_roundtrip(c in clan_strategy()) {
        let back = parse_clan(&c.to_string()).unwrap();
        prop_assert_eq!(&back, &c);
        let wrapped = parse_clan(&format!("({c})")).unwrap();
        prop_assert_eq!(wrapped, c);
    }

    #[test]
    fn signature_is_consistent(c in clan_strategy()) {
        let (p, q) = c.signature();
        prop_assert_eq!(p + q, c.n());
        let pairs = c.eta().two_cycles().len();
        prop_assert!(pairs <= p.min(q));
    }
}
