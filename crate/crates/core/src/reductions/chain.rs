use std::fmt::{self, Write as _};

use super::amplify::amplify_for_winner;
use super::graph::{alpha, Graph, DEFAULT_ALPHA_CAP};
use super::sets::{inc_to_mspc, kappa, DEFAULT_KAPPA_CAP};
use super::young::mspc_to_young_ranking;
use crate::error::Result;
use crate::profile::Profile;
use crate::scores::{young_by_index, young_score_bruteforce, young_score_upper_bound, OracleCaps};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainCaps {
    pub alpha: usize,
    pub kappa: usize,
    pub oracle: OracleCaps,
    /// The amplified winner check is skipped above this many candidates.
    pub max_amplified_candidates: usize,
}

impl Default for ChainCaps {
    fn default() -> Self {
        ChainCaps {
            alpha: DEFAULT_ALPHA_CAP,
            kappa: DEFAULT_KAPPA_CAP,
            oracle: OracleCaps::default(),
            max_amplified_candidates: 400,
        }
    }
}

/// Answers to the same comparison at every stage of the chain
/// graphs -> set families -> Young ranking -> Young winner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub alpha: [usize; 2],
    pub kappa: [usize; 2],
    /// Young scores of `c` and `d` in the generated profile.
    pub young: [usize; 2],
    /// The same scores by subset enumeration, when within the oracle cap.
    pub young_oracle: Option<[usize; 2]>,
    pub alpha_compare: bool,
    pub kappa_compare: bool,
    pub young_ranking: bool,
    /// Whether `c` wins the amplified election; `None` when skipped.
    pub amplified_winner: Option<bool>,
    pub voters: usize,
    pub amplified_candidates: usize,
    pub notes: Vec<String>,
}

impl ChainReport {
    /// Every computed answer agrees, and both Young scores equal
    /// `2 kappa + 1`.
    pub fn consistent(&self) -> bool {
        let answers_agree = self.alpha_compare == self.kappa_compare
            && self.kappa_compare == self.young_ranking
            && self.amplified_winner.is_none_or(|w| w == self.young_ranking);
        let scores_match = (0..2).all(|i| self.young[i] == 2 * self.kappa[i] + 1 && self.alpha[i] == self.kappa[i]);
        let oracle_agrees = self.young_oracle.is_none_or(|o| o == self.young);
        answers_agree && scores_match && oracle_agrees
    }
}

impl fmt::Display for ChainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        writeln!(s, "alpha: {} {}", self.alpha[0], self.alpha[1])?;
        writeln!(s, "kappa: {} {}", self.kappa[0], self.kappa[1])?;
        writeln!(s, "young: {} {} ({} voters)", self.young[0], self.young[1], self.voters)?;
        match self.young_oracle {
            Some([a, b]) => writeln!(s, "young (enumeration): {a} {b}")?,
            None => writeln!(s, "young (enumeration): skipped")?,
        }
        writeln!(s, "alpha-compare: {}", self.alpha_compare)?;
        writeln!(s, "kappa-compare: {}", self.kappa_compare)?;
        writeln!(s, "young-ranking: {}", self.young_ranking)?;
        match self.amplified_winner {
            Some(w) => writeln!(s, "young-winner: {w} ({} candidates)", self.amplified_candidates)?,
            None => writeln!(s, "young-winner: skipped ({} candidates)", self.amplified_candidates)?,
        }
        for note in &self.notes {
            writeln!(s, "note: {note}")?;
        }
        writeln!(s, "consistent: {}", self.consistent())?;
        f.write_str(&s)
    }
}

/// Whether `c` has a maximal Young score in `p`. Exact: a rival is only
/// scored when its cheap upper bound could exceed the score of `c`.
fn young_winner_bounded(p: &Profile, c: usize) -> Result<bool> {
    let (target, _) = young_by_index(p, c)?;
    for h in (0..p.candidate_count()).filter(|&h| h != c) {
        if young_score_upper_bound(p, h) > target && young_by_index(p, h)?.0 > target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs both graphs through every reduction and reports the comparison
/// answer at each stage.
pub fn verify_reduction_chain(g1: &Graph, g2: &Graph, caps: &ChainCaps) -> Result<ChainReport> {
    let alpha = [alpha(g1, caps.alpha)?, alpha(g2, caps.alpha)?];
    let inst = inc_to_mspc(g1, g2)?;
    let kappa = [kappa(&inst.first, caps.kappa)?, kappa(&inst.second, caps.kappa)?];
    let out = mspc_to_young_ranking(&inst, caps.kappa)?;
    let p = &out.profile;
    let (ci, di) = (p.candidate_index(&out.c)?, p.candidate_index(&out.d)?);
    let young = [young_by_index(p, ci)?.0, young_by_index(p, di)?.0];
    let mut notes = Vec::new();
    let young_oracle = if p.voter_count() <= caps.oracle.young_max_voters {
        Some([
            young_score_bruteforce(p, &out.c, &caps.oracle)?,
            young_score_bruteforce(p, &out.d, &caps.oracle)?,
        ])
    } else {
        notes.push(format!(
            "subset enumeration skipped: {} voters exceed cap {}",
            p.voter_count(),
            caps.oracle.young_max_voters
        ));
        None
    };
    let amplified = amplify_for_winner(p, &out.c, &out.d, false)?;
    let amplified_winner = if amplified.candidate_count() <= caps.max_amplified_candidates {
        Some(young_winner_bounded(&amplified, amplified.candidate_index(&out.c)?)?)
    } else {
        notes.push(format!(
            "amplified winner check skipped: {} candidates exceed cap {}",
            amplified.candidate_count(),
            caps.max_amplified_candidates
        ));
        None
    };
    Ok(ChainReport {
        alpha,
        kappa,
        young,
        young_oracle,
        alpha_compare: alpha[0] >= alpha[1],
        kappa_compare: kappa[0] >= kappa[1],
        young_ranking: young[0] >= young[1],
        amplified_winner,
        voters: p.voter_count(),
        amplified_candidates: amplified.candidate_count(),
        notes,
    })
}
