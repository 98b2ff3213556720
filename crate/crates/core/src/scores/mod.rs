//! Exact Dodgson and Young scores and the winner/ranking deciders built on
//! them.
//!
//! Scores come from integer programs solved by [`crate::lp`]; the
//! [`oracle`] module holds exhaustive implementations of the definitions for
//! cross-checking small instances.

mod dodgson;
mod encoding;
pub mod oracle;
mod young;

use rayon::prelude::*;

pub use dodgson::{dodgson_program, dodgson_score, dodgson_score_with_witness, DodgsonProgram, DodgsonWitness, Lift};
pub use encoding::{gain_matrix, DodgsonMoveEncoding, VoterGains};
pub use oracle::{dodgson_score_bruteforce, young_bruteforce_witness, young_score_bruteforce, OracleCaps};
pub use young::{
    young_program, young_score, young_score_upper_bound, young_score_with_witness, YoungProgram, YoungWitness,
};

pub(crate) use dodgson::dodgson_by_index;
pub(crate) use encoding::encode as encoding_for;
pub(crate) use young::young_by_index;

use crate::error::Result;
use crate::profile::Profile;

/// Expanded voters grouped by identical order, in order of first appearance:
/// `(member voter indices, index of the first entry with that order)`.
pub(crate) fn group_orders(p: &Profile) -> Vec<(Vec<usize>, usize)> {
    let mut groups: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut voter = 0;
    for (entry, b) in p.ballots().iter().enumerate() {
        let members = voter..voter + b.multiplicity;
        voter += b.multiplicity;
        match groups
            .iter_mut()
            .find(|(_, e)| p.ballots()[*e].order == b.order)
        {
            Some((m, _)) => m.extend(members),
            None => groups.push((members.collect(), entry)),
        }
    }
    groups
}

/// Dodgson score of every candidate, in candidate order.
pub fn dodgson_scores(p: &Profile) -> Result<Vec<usize>> {
    (0..p.candidate_count())
        .into_par_iter()
        .map(|c| dodgson_by_index(p, c).map(|(s, _)| s))
        .collect()
}

/// Young score of every candidate, in candidate order.
pub fn young_scores(p: &Profile) -> Result<Vec<usize>> {
    (0..p.candidate_count())
        .into_par_iter()
        .map(|c| young_by_index(p, c).map(|(s, _)| s))
        .collect()
}

/// `c` has the minimum Dodgson score.
pub fn dodgson_winner(p: &Profile, c: &str) -> Result<bool> {
    let c = p.candidate_index(c)?;
    let scores = dodgson_scores(p)?;
    Ok(scores.iter().all(|&s| scores[c] <= s))
}

/// `c` ties or defeats `d` under Dodgson: `score(c) <= score(d)`.
pub fn dodgson_ranking(p: &Profile, c: &str, d: &str) -> Result<bool> {
    Ok(dodgson_score(p, c)? <= dodgson_score(p, d)?)
}

/// `c` has the maximum Young score.
pub fn young_winner(p: &Profile, c: &str) -> Result<bool> {
    let c = p.candidate_index(c)?;
    let scores = young_scores(p)?;
    Ok(scores.iter().all(|&s| scores[c] >= s))
}

/// `c` ties or defeats `d` under Young: `score(c) >= score(d)`.
pub fn young_ranking(p: &Profile, c: &str, d: &str) -> Result<bool> {
    Ok(young_score(p, c)? >= young_score(p, d)?)
}
