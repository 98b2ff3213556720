#![allow(dead_code)]

use proptest::prelude::*;

use yd_core::profile::Ballot;
use yd_core::reductions::{Graph, SetFamily};
use yd_core::{CandidateId, PreferenceOrder, Profile};

/// Profiles with 2..=max_m candidates and at most `max_n` voters, spread
/// over ballot lines of multiplicity 1..=2.
pub fn profiles(max_m: usize, max_n: usize) -> impl Strategy<Value = Profile> {
    (2..=max_m).prop_flat_map(move |m| {
        let order = Just((0..m).collect::<Vec<_>>()).prop_shuffle();
        proptest::collection::vec((order, 1..=2usize), 1..=max_n)
            .prop_filter("voter cap", move |v| v.iter().map(|(_, k)| k).sum::<usize>() <= max_n)
            .prop_map(move |voters| {
                let names = (0..m).map(|i| CandidateId::new(format!("c{i}")).unwrap()).collect();
                let ballots = voters
                    .into_iter()
                    .map(|(r, multiplicity)| Ballot {
                        order: PreferenceOrder::new(r).unwrap(),
                        multiplicity,
                    })
                    .collect();
                Profile::new(names, ballots).unwrap()
            })
    })
}

pub fn names(p: &Profile) -> Vec<String> {
    p.candidates().iter().map(|c| c.to_string()).collect()
}

/// Graphs on 2..=max_v vertices; isolated vertices are joined to their
/// successor so none remain.
pub fn graphs(max_v: usize) -> impl Strategy<Value = Graph> {
    (2..=max_v).prop_flat_map(|v| {
        proptest::collection::vec(any::<bool>(), v * (v - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 0..v {
                for b in a + 1..v {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            for a in 0..v {
                if !edges.iter().any(|&(x, y)| x == a || y == a) {
                    let b = (a + 1) % v;
                    edges.push((a.min(b), a.max(b)));
                }
            }
            Graph::new((0..v).map(|i| format!("v{i}")).collect(), edges).unwrap()
        })
    })
}

/// Families of `sets` members of size 1..=3 over a ground set of `base`.
pub fn families(prefix: &'static str, base: usize, sets: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SetFamily> {
    let member = proptest::sample::subsequence((0..base).collect::<Vec<_>>(), 1..=3);
    proptest::collection::vec(member, sets).prop_map(move |members| {
        SetFamily::new((0..base).map(|i| format!("{prefix}{i}")).collect(), members).unwrap()
    })
}

/// Largest number of pairwise disjoint members, by subset enumeration.
pub fn packing_oracle(f: &SetFamily) -> usize {
    let sets = f.sets();
    (0u32..1 << sets.len())
        .filter(|mask| {
            let mut used = vec![false; f.base().len()];
            (0..sets.len())
                .filter(|i| mask & (1 << i) != 0)
                .all(|i| sets[i].iter().all(|&e| !std::mem::replace(&mut used[e], true)))
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}
