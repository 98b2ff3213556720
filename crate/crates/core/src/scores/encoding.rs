use crate::error::Result;
use crate::profile::Profile;

/// Lift data for one ballot entry (all voters of the entry share it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoterGains {
    pub entry: usize,
    pub multiplicity: usize,
    /// Position of the candidate in this order; lifts range over `1..=position`.
    pub position: usize,
    /// `passes[j - 1][r]`: lifting by `j` passes the `r`-th rival.
    passes: Vec<Vec<bool>>,
}

impl VoterGains {
    pub fn gains(&self, lift: usize, rival_slot: usize) -> bool {
        lift >= 1 && lift <= self.position && self.passes[lift - 1][rival_slot]
    }
}

/// The gain coefficients of the Dodgson integer program for one candidate:
/// which rivals the candidate overtakes when lifted `j` places in a voter's
/// order, plus the head-to-head votes it already has against each rival.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DodgsonMoveEncoding {
    candidate: usize,
    voters: usize,
    rivals: Vec<usize>,
    baseline: Vec<usize>,
    entries: Vec<VoterGains>,
}

impl DodgsonMoveEncoding {
    pub fn candidate(&self) -> usize {
        self.candidate
    }

    pub fn voter_count(&self) -> usize {
        self.voters
    }

    /// Rival candidate indices in candidate order; "slots" index this list.
    pub fn rivals(&self) -> &[usize] {
        &self.rivals
    }

    /// Voters already preferring the candidate to each rival slot.
    pub fn baseline(&self) -> &[usize] {
        &self.baseline
    }

    pub fn entries(&self) -> &[VoterGains] {
        &self.entries
    }

    fn entry_of(&self, voter: usize) -> Option<&VoterGains> {
        let mut seen = 0;
        self.entries.iter().find(|e| {
            seen += e.multiplicity;
            voter < seen
        })
    }

    /// Largest lift available for expanded voter `voter`.
    pub fn max_lift(&self, voter: usize) -> usize {
        self.entry_of(voter).map_or(0, |e| e.position)
    }

    /// Whether lifting the candidate `lift` places in expanded voter
    /// `voter`'s order makes it overtake candidate `rival`.
    pub fn gain(&self, voter: usize, lift: usize, rival: usize) -> bool {
        let Some(slot) = self.rivals.iter().position(|&r| r == rival) else {
            return false;
        };
        self.entry_of(voter).is_some_and(|e| e.gains(lift, slot))
    }
}

/// Builds the lift/gain table for candidate `c`.
pub fn gain_matrix(p: &Profile, c: &str) -> Result<DodgsonMoveEncoding> {
    let c = p.candidate_index(c)?;
    Ok(encode(p, c))
}

pub(crate) fn encode(p: &Profile, c: usize) -> DodgsonMoveEncoding {
    let rivals: Vec<usize> = (0..p.candidate_count()).filter(|&k| k != c).collect();
    let tally = p.tally();
    let baseline = rivals.iter().map(|&k| tally.count(c, k)).collect();
    let entries = p
        .ballots()
        .iter()
        .enumerate()
        .map(|(entry, b)| {
            let position = b.order.position(c);
            let ranking = b.order.ranking();
            let passes = (1..=position)
                .map(|j| {
                    let above = &ranking[position - j..position];
                    rivals.iter().map(|k| above.contains(k)).collect()
                })
                .collect();
            VoterGains {
                entry,
                multiplicity: b.multiplicity,
                position,
                passes,
            }
        })
        .collect();
    DodgsonMoveEncoding {
        candidate: c,
        voters: p.voter_count(),
        rivals,
        baseline,
        entries,
    }
}
