//! Exhaustive reference implementations of the two score definitions. They
//! share nothing with the integer programs beyond [`Profile`].

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::profile::Profile;

/// Size limits for the exhaustive oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub dodgson_max_voters: usize,
    pub dodgson_max_candidates: usize,
    pub young_max_voters: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            dodgson_max_voters: 5,
            dodgson_max_candidates: 5,
            young_max_voters: 22,
        }
    }
}

/// Hard limit of the bitmask representation.
const MAX_MASK_VOTERS: usize = 63;

type State = Vec<Vec<u8>>;

fn is_condorcet_winner(state: &State, c: u8, m: usize) -> bool {
    let n = state.len();
    (0..m as u8).filter(|&d| d != c).all(|d| {
        let wins = state
            .iter()
            .filter(|order| {
                let pc = order.iter().position(|&x| x == c).unwrap();
                let pd = order.iter().position(|&x| x == d).unwrap();
                pc < pd
            })
            .count();
        2 * wins > n
    })
}

/// Breadth-first search over electorates reachable by single adjacent swaps;
/// the depth of the first electorate where `c` is the Condorcet winner.
/// Electorates are multisets, so states are kept as sorted order lists.
pub fn dodgson_score_bruteforce(p: &Profile, c: &str, caps: &OracleCaps) -> Result<usize> {
    let ci = p.candidate_index(c)? as u8;
    let n = p.voter_count();
    let m = p.candidate_count();
    if n > caps.dodgson_max_voters {
        return Err(Error::CapExceeded {
            what: "voter count",
            size: n,
            cap: caps.dodgson_max_voters,
        });
    }
    if m > caps.dodgson_max_candidates {
        return Err(Error::CapExceeded {
            what: "candidate count",
            size: m,
            cap: caps.dodgson_max_candidates,
        });
    }
    if n == 0 {
        return Err(Error::Precondition("Dodgson score of an empty electorate".into()));
    }
    let mut start: State = p
        .expanded()
        .map(|o| o.ranking().iter().map(|&x| x as u8).collect())
        .collect();
    start.sort();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((state, dist)) = queue.pop_front() {
        if is_condorcet_winner(&state, ci, m) {
            return Ok(dist);
        }
        for v in 0..state.len() {
            if v > 0 && state[v] == state[v - 1] {
                continue;
            }
            for pos in 0..m - 1 {
                let mut next = state.clone();
                next[v].swap(pos, pos + 1);
                next.sort();
                if seen.insert(next.clone()) {
                    queue.push_back((next, dist + 1));
                }
            }
        }
    }
    unreachable!("lifting c to the top of every order always produces a Condorcet winner")
}

/// Largest subset size, enumerating subsets from the full electorate down and
/// stopping at the first size where some subset makes `c` the Condorcet
/// winner. Returns 0 when none does.
pub fn young_score_bruteforce(p: &Profile, c: &str, caps: &OracleCaps) -> Result<usize> {
    young_bruteforce_witness(p, c, caps).map(|w| w.map_or(0, |kept| kept.len()))
}

/// As [`young_score_bruteforce`], returning the first optimal subset found.
pub fn young_bruteforce_witness(p: &Profile, c: &str, caps: &OracleCaps) -> Result<Option<Vec<usize>>> {
    let ci = p.candidate_index(c)?;
    let n = p.voter_count();
    let cap = caps.young_max_voters.min(MAX_MASK_VOTERS);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "voter count",
            size: n,
            cap,
        });
    }
    // support[k]: voters ranking c above rival k
    let orders: Vec<_> = p.expanded().collect();
    let support: Vec<u64> = (0..p.candidate_count())
        .filter(|&k| k != ci)
        .map(|k| {
            orders
                .iter()
                .enumerate()
                .filter(|(_, o)| o.prefers(ci, k))
                .fold(0u64, |mask, (i, _)| mask | (1 << i))
        })
        .collect();
    for size in (1..=n).rev() {
        let limit = 1u64 << n;
        let mut subset: u64 = (1u64 << size) - 1;
        while subset < limit {
            if support
                .iter()
                .all(|&s| 2 * (s & subset).count_ones() as usize > size)
            {
                return Ok(Some((0..n).filter(|&i| subset >> i & 1 == 1).collect()));
            }
            // next subset of the same cardinality
            let low = subset & subset.wrapping_neg();
            let ripple = subset + low;
            subset = (((ripple ^ subset) >> 2) / low) | ripple;
        }
    }
    Ok(None)
}
