use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::profile::{Ballot, CandidateId, PreferenceOrder, Profile};

/// Replaces every candidate other than `c` and `d` by `n` copies `g^0 ..
/// g^{n-1}` (n = voter count). Expanded voter `i` (0-based) ranks the block
/// of `g` where `g` stood, starting at `g^{i mod n}` and rotating. Each copy
/// is then beaten inside its block by a majority, so no replaced candidate
/// keeps a Young score above 1, while the scores of `c` and `d` are
/// unchanged.
///
/// With a single voter the blocks are trivial; that case needs
/// `allow_single_voter`.
pub fn amplify_for_winner(p: &Profile, c: &str, d: &str, allow_single_voter: bool) -> Result<Profile> {
    let ci = p.candidate_index(c)?;
    let di = p.candidate_index(d)?;
    if ci == di {
        return Err(Error::Precondition("designated candidates must differ".into()));
    }
    if p.candidate_count() == 2 {
        return Ok(p.clone());
    }
    let n = p.voter_count();
    if n == 0 || (n == 1 && !allow_single_voter) {
        return Err(Error::Precondition(format!(
            "amplification needs at least 2 voters, profile has {n}"
        )));
    }

    // new index of each original candidate's first copy
    let mut first_copy = Vec::with_capacity(p.candidate_count());
    let mut names = Vec::new();
    for (g, id) in p.candidates().iter().enumerate() {
        first_copy.push(names.len());
        if g == ci || g == di {
            names.push(id.to_string());
        } else {
            names.extend((0..n).map(|i| format!("{id}^{i}")));
        }
    }
    let mut unique = HashSet::new();
    if let Some(clash) = names.iter().find(|x| !unique.insert(x.as_str())) {
        return Err(Error::Precondition(format!("amplified name `{clash}` collides")));
    }
    let candidates = names.into_iter().map(CandidateId::new).collect::<Result<Vec<_>>>()?;

    let ballots = p
        .expanded()
        .enumerate()
        .map(|(i, order)| {
            let mut ranking = Vec::with_capacity(candidates.len());
            for &g in order.ranking() {
                if g == ci || g == di {
                    ranking.push(first_copy[g]);
                } else {
                    ranking.extend((0..n).map(|t| first_copy[g] + (i + t) % n));
                }
            }
            Ok(Ballot {
                order: PreferenceOrder::new(ranking)?,
                multiplicity: 1,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Profile::new(candidates, ballots)
}
