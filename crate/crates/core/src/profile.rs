//! Preference profiles, the line-oriented profile file format, and the
//! pairwise-majority primitives everything else is built on.
//!
//! A profile keeps identical voters compressed as `(order, multiplicity)`
//! entries in file order. Every per-voter API uses *expanded* voter indices
//! `0..n`, which walk the entries in order and repeat each one
//! `multiplicity` times.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A candidate name: a non-empty token without whitespace or `>`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CandidateId(String);

impl CandidateId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || name.contains('>') || name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidName(name));
        }
        Ok(CandidateId(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CandidateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::ops::Deref for CandidateId {
    type Target = str;
    fn deref(&self) -> &str {
        &self.0
    }
}

/// A strict total order over candidate indices, most preferred first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PreferenceOrder {
    ranking: Vec<usize>,
    positions: Vec<usize>,
}

impl PreferenceOrder {
    /// Builds an order from a ranking of candidate indices. The ranking must
    /// be a permutation of `0..ranking.len()`.
    pub fn new(ranking: Vec<usize>) -> Result<Self> {
        let m = ranking.len();
        let mut positions = vec![usize::MAX; m];
        for (pos, &c) in ranking.iter().enumerate() {
            if c >= m {
                return Err(Error::InvalidProfile(format!(
                    "candidate index {c} out of range in order of length {m}"
                )));
            }
            if positions[c] != usize::MAX {
                return Err(Error::InvalidProfile(format!(
                    "candidate index {c} repeated in order"
                )));
            }
            positions[c] = pos;
        }
        Ok(PreferenceOrder { ranking, positions })
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    /// 0-based position of `candidate`; 0 is the top.
    pub fn position(&self, candidate: usize) -> usize {
        self.positions[candidate]
    }

    pub fn prefers(&self, u: usize, v: usize) -> bool {
        self.positions[u] < self.positions[v]
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    /// The order obtained by moving `candidate` up by `steps` adjacent swaps.
    pub fn lifted(&self, candidate: usize, steps: usize) -> PreferenceOrder {
        let pos = self.positions[candidate];
        assert!(steps <= pos, "cannot lift past the top");
        let mut ranking = self.ranking.clone();
        ranking[pos - steps..=pos].rotate_right(1);
        PreferenceOrder::new(ranking).expect("rotation preserves permutation")
    }

    /// The order with the adjacent pair at `pos`, `pos + 1` swapped.
    pub fn swapped(&self, pos: usize) -> PreferenceOrder {
        let mut ranking = self.ranking.clone();
        ranking.swap(pos, pos + 1);
        PreferenceOrder::new(ranking).expect("swap preserves permutation")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ballot {
    pub order: PreferenceOrder,
    pub multiplicity: usize,
}

/// Head-to-head counts: `count(u, v)` voters rank `u` above `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairwiseTally {
    size: usize,
    counts: Vec<usize>,
    total: usize,
}

impl PairwiseTally {
    pub fn count(&self, u: usize, v: usize) -> usize {
        self.counts[u * self.size + v]
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn candidate_count(&self) -> usize {
        self.size
    }

    /// Strict majority of the electorate prefers `u` to `v`.
    pub fn beats(&self, u: usize, v: usize) -> bool {
        2 * self.count(u, v) > self.total
    }

    pub fn scaled(&self, q: usize) -> PairwiseTally {
        PairwiseTally {
            size: self.size,
            counts: self.counts.iter().map(|&c| c * q).collect(),
            total: self.total * q,
        }
    }
}

/// A candidate set and a multiset of strict preference orders over it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    candidates: Vec<CandidateId>,
    ballots: Vec<Ballot>,
}

impl Profile {
    /// Validates and builds a profile. An empty ballot list is allowed: it is
    /// only produced as an intermediate value by [`Profile::restrict`].
    pub fn new(candidates: Vec<CandidateId>, ballots: Vec<Ballot>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, c) in candidates.iter().enumerate() {
            if seen.insert(c.as_str(), i).is_some() {
                return Err(Error::InvalidProfile(format!("duplicate candidate `{c}`")));
            }
        }
        for b in &ballots {
            if b.order.len() != candidates.len() {
                return Err(Error::InvalidProfile(format!(
                    "order ranks {} of {} candidates",
                    b.order.len(),
                    candidates.len()
                )));
            }
            if b.multiplicity == 0 {
                return Err(Error::InvalidProfile("zero multiplicity".into()));
            }
        }
        Ok(Profile { candidates, ballots })
    }

    /// Convenience constructor from names: `voters` holds
    /// `(ranking, multiplicity)` pairs.
    pub fn from_rankings(candidates: &[&str], voters: &[(&[&str], usize)]) -> Result<Self> {
        let ids = candidates
            .iter()
            .map(|&c| CandidateId::new(c))
            .collect::<Result<Vec<_>>>()?;
        let index: HashMap<&str, usize> = candidates.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut ballots = Vec::with_capacity(voters.len());
        for &(ranking, multiplicity) in voters {
            let ranking = ranking
                .iter()
                .map(|&name| index.get(name).copied().ok_or_else(|| Error::UnknownCandidate(name.into())))
                .collect::<Result<Vec<_>>>()?;
            ballots.push(Ballot {
                order: PreferenceOrder::new(ranking)?,
                multiplicity,
            });
        }
        Profile::new(ids, ballots)
    }

    pub fn candidates(&self) -> &[CandidateId] {
        &self.candidates
    }

    pub fn candidate_count(&self) -> usize {
        self.candidates.len()
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    /// Total number of voters `n`, counting multiplicities.
    pub fn voter_count(&self) -> usize {
        self.ballots.iter().map(|b| b.multiplicity).sum()
    }

    pub fn candidate_index(&self, name: &str) -> Result<usize> {
        self.candidates
            .iter()
            .position(|c| c.as_str() == name)
            .ok_or_else(|| Error::UnknownCandidate(name.to_string()))
    }

    pub fn candidate(&self, index: usize) -> &CandidateId {
        &self.candidates[index]
    }

    /// Preference orders of the expanded voters `0..n`.
    pub fn expanded(&self) -> impl Iterator<Item = &PreferenceOrder> + '_ {
        self.ballots
            .iter()
            .flat_map(|b| std::iter::repeat_n(&b.order, b.multiplicity))
    }

    /// Order of expanded voter `index`.
    pub fn voter(&self, index: usize) -> Result<&PreferenceOrder> {
        self.expanded().nth(index).ok_or(Error::VoterIndex {
            index,
            voters: self.voter_count(),
        })
    }

    pub fn tally(&self) -> PairwiseTally {
        let m = self.candidates.len();
        let mut counts = vec![0; m * m];
        for b in &self.ballots {
            let r = b.order.ranking();
            for (i, &u) in r.iter().enumerate() {
                for &v in &r[i + 1..] {
                    counts[u * m + v] += b.multiplicity;
                }
            }
        }
        PairwiseTally {
            size: m,
            counts,
            total: self.voter_count(),
        }
    }

    /// Index of the candidate beating every other one by a strict majority.
    /// An empty electorate has no Condorcet winner.
    pub fn condorcet_winner_index(&self) -> Option<usize> {
        if self.voter_count() == 0 {
            return None;
        }
        let t = self.tally();
        (0..self.candidates.len()).find(|&c| (0..self.candidates.len()).all(|d| d == c || t.beats(c, d)))
    }

    pub fn condorcet_winner(&self) -> Option<&CandidateId> {
        self.condorcet_winner_index().map(|i| &self.candidates[i])
    }

    /// Every voter repeated `q` times.
    pub fn replicate(&self, q: usize) -> Result<Profile> {
        if q == 0 {
            return Err(Error::ZeroReplication);
        }
        Ok(Profile {
            candidates: self.candidates.clone(),
            ballots: self
                .ballots
                .iter()
                .map(|b| Ballot {
                    order: b.order.clone(),
                    multiplicity: b.multiplicity * q,
                })
                .collect(),
        })
    }

    /// The sub-electorate made of the expanded voters listed in `keep`
    /// (0-based, duplicates ignored), in expanded order. Consecutive kept
    /// voters with the same order are re-compressed.
    pub fn restrict(&self, keep: &[usize]) -> Result<Profile> {
        let n = self.voter_count();
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&i| i >= n) {
            return Err(Error::VoterIndex { index: bad, voters: n });
        }
        let orders: Vec<&PreferenceOrder> = self.expanded().collect();
        let mut ballots: Vec<Ballot> = Vec::new();
        for i in keep {
            match ballots.last_mut() {
                Some(last) if &last.order == orders[i] => last.multiplicity += 1,
                _ => ballots.push(Ballot {
                    order: orders[i].clone(),
                    multiplicity: 1,
                }),
            }
        }
        Ok(Profile {
            candidates: self.candidates.clone(),
            ballots,
        })
    }

    /// The same electorate with one entry per expanded voter.
    pub fn with_orders(&self, orders: Vec<PreferenceOrder>) -> Result<Profile> {
        Profile::new(
            self.candidates.clone(),
            orders
                .into_iter()
                .map(|order| Ballot { order, multiplicity: 1 })
                .collect(),
        )
    }

    /// Same candidate list and the same multiset of orders, ignoring how
    /// voters are grouped into entries.
    pub fn is_equivalent(&self, other: &Profile) -> bool {
        fn multiset(p: &Profile) -> BTreeMap<Vec<&str>, usize> {
            let mut m = BTreeMap::new();
            for b in &p.ballots {
                let key = b.order.ranking().iter().map(|&c| p.candidates[c].as_str()).collect();
                *m.entry(key).or_insert(0) += b.multiplicity;
            }
            m
        }
        self.candidates == other.candidates && multiset(self) == multiset(other)
    }

    pub fn parse(text: &str) -> Result<Profile> {
        let mut candidates: Option<(Vec<CandidateId>, HashMap<String, usize>)> = None;
        let mut ballots = Vec::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((head, body)) = line.split_once(':') else {
                return Err(Error::parse(line_no, "expected `key: value`"));
            };
            let head = head.trim();
            match &candidates {
                None => {
                    if head != "candidates" {
                        return Err(Error::parse(line_no, "first entry must be `candidates:`"));
                    }
                    let mut ids = Vec::new();
                    let mut index = HashMap::new();
                    for name in body.split_whitespace() {
                        let id = CandidateId::new(name).map_err(|e| Error::parse(line_no, e.to_string()))?;
                        if index.insert(name.to_string(), ids.len()).is_some() {
                            return Err(Error::parse(line_no, format!("duplicate candidate `{name}`")));
                        }
                        ids.push(id);
                    }
                    if ids.is_empty() {
                        return Err(Error::parse(line_no, "empty candidate list"));
                    }
                    candidates = Some((ids, index));
                }
                Some((ids, index)) => {
                    let multiplicity = parse_voter_head(head, line_no)?;
                    let mut ranking = Vec::with_capacity(ids.len());
                    let mut seen = vec![false; ids.len()];
                    for name in body.split('>').map(str::trim) {
                        let &c = index
                            .get(name)
                            .ok_or_else(|| Error::parse(line_no, format!("unknown candidate `{name}`")))?;
                        if seen[c] {
                            return Err(Error::parse(line_no, format!("duplicate candidate `{name}` in order")));
                        }
                        seen[c] = true;
                        ranking.push(c);
                    }
                    if let Some(missing) = seen.iter().position(|&s| !s) {
                        return Err(Error::parse(
                            line_no,
                            format!("order omits candidate `{}`", ids[missing]),
                        ));
                    }
                    ballots.push(Ballot {
                        order: PreferenceOrder::new(ranking)?,
                        multiplicity,
                    });
                }
            }
        }
        let Some((ids, _)) = candidates else {
            return Err(Error::parse(last_line.max(1), "missing `candidates:` line"));
        };
        if ballots.is_empty() {
            return Err(Error::parse(last_line.max(1), "profile has no voters"));
        }
        Profile::new(ids, ballots)
    }

    /// Serializes to the profile file format; [`Profile::parse`] reads it back.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn parse_voter_head(head: &str, line_no: usize) -> Result<usize> {
    let mut parts = head.split_whitespace();
    if parts.next() != Some("voter") {
        return Err(Error::parse(line_no, format!("expected `voter`, found `{head}`")));
    }
    let multiplicity = match parts.next() {
        None => 1,
        Some(m) => {
            let m: i64 = m
                .parse()
                .map_err(|_| Error::parse(line_no, format!("invalid multiplicity `{m}`")))?;
            if m <= 0 {
                return Err(Error::parse(line_no, format!("multiplicity must be positive, got {m}")));
            }
            m as usize
        }
    };
    if parts.next().is_some() {
        return Err(Error::parse(line_no, "trailing tokens before `:`"));
    }
    Ok(multiplicity)
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "candidates:")?;
        for c in &self.candidates {
            write!(f, " {c}")?;
        }
        writeln!(f)?;
        for b in &self.ballots {
            if b.multiplicity == 1 {
                write!(f, "voter:")?;
            } else {
                write!(f, "voter {}:", b.multiplicity)?;
            }
            for (i, &c) in b.order.ranking().iter().enumerate() {
                if i > 0 {
                    write!(f, " >")?;
                }
                write!(f, " {}", self.candidates[c])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Profile::parse(s)
    }
}
