use std::collections::HashSet;

use num_traits::ToPrimitive;

use super::group_orders;
use crate::error::{Error, Result};
use crate::lp::{int, solve_ilp, Direction, IntegerProgram, LinearProgram, Relation, Status, VarId};
use crate::profile::Profile;

/// Expanded indices of a largest sub-electorate where the candidate wins.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YoungWitness {
    pub kept: Vec<usize>,
}

impl YoungWitness {
    pub fn validates(&self, p: &Profile, c: usize) -> bool {
        p.restrict(&self.kept)
            .map(|q| q.condorcet_winner_index() == Some(c))
            .unwrap_or(false)
    }
}

/// Integer program for the Young score with identical orders aggregated:
/// `k_g` voters of group `g` are kept. The strict majority against each rival
/// over a kept set of size `T` is `2 * votes >= T + 1`, i.e. the signed margin
/// `sum_g (+-1) k_g >= 1`. Identical margin rows are emitted once.
pub struct YoungProgram {
    pub program: IntegerProgram,
    layout: Vec<(Vec<usize>, VarId)>,
}

pub fn young_program(p: &Profile, c: usize) -> YoungProgram {
    let groups = group_orders(p);
    let mut lp = LinearProgram::new(Direction::Maximize);
    let mut layout = Vec::new();
    for (g, (members, _)) in groups.iter().enumerate() {
        let v = lp.add_variable(format!("k_{g}"), Some(int(0)), Some(int(members.len() as i64)));
        lp.set_objective(v, int(1));
        layout.push((members.clone(), v));
    }
    let mut seen = HashSet::new();
    for k in (0..p.candidate_count()).filter(|&k| k != c) {
        let signs: Vec<bool> = groups
            .iter()
            .map(|&(_, entry)| p.ballots()[entry].order.prefers(c, k))
            .collect();
        if !seen.insert(signs.clone()) {
            continue;
        }
        let terms = layout
            .iter()
            .zip(&signs)
            .map(|((_, v), &s)| (*v, int(if s { 1 } else { -1 })))
            .collect();
        lp.add_constraint(terms, Relation::Ge, int(1));
    }
    let integral: Vec<VarId> = layout.iter().map(|(_, v)| *v).collect();
    YoungProgram {
        program: IntegerProgram::new(lp, integral).expect("keep counts are bounded"),
        layout,
    }
}

/// Size of a largest set of voters for which `c` is the Condorcet winner, or
/// 0 when no non-empty set works.
pub fn young_score(p: &Profile, c: &str) -> Result<usize> {
    young_score_with_witness(p, c).map(|(s, _)| s)
}

pub fn young_score_with_witness(p: &Profile, c: &str) -> Result<(usize, YoungWitness)> {
    let c = p.candidate_index(c)?;
    young_by_index(p, c)
}

pub(crate) fn young_by_index(p: &Profile, c: usize) -> Result<(usize, YoungWitness)> {
    if p.condorcet_winner_index() == Some(c) {
        return Ok((
            p.voter_count(),
            YoungWitness {
                kept: (0..p.voter_count()).collect(),
            },
        ));
    }
    let YoungProgram { program, layout } = young_program(p, c);
    let sol = solve_ilp(&program)?;
    match sol.status {
        Status::Infeasible => return Ok((0, YoungWitness::default())),
        Status::Unbounded => return Err(Error::Solver("Young program unbounded".into())),
        Status::Optimal => {}
    }
    let mut kept = Vec::new();
    for (members, v) in layout {
        let count = sol.value(v).to_integer().to_usize().expect("bounded count");
        kept.extend(members.into_iter().take(count));
    }
    kept.sort_unstable();
    let score = kept.len();
    debug_assert!(witness_ok(p, c, &kept));
    Ok((score, YoungWitness { kept }))
}

fn witness_ok(p: &Profile, c: usize, kept: &[usize]) -> bool {
    kept.is_empty()
        || YoungWitness {
            kept: kept.to_vec(),
        }
        .validates(p, c)
}

/// `min(n, 2 * min_k support(c, k) - 1)` (or 0): any set where `c` wins a strict
/// majority against `k` has fewer than twice the voters preferring `c` to `k`.
pub fn young_score_upper_bound(p: &Profile, c: usize) -> usize {
    let t = p.tally();
    let weakest = (0..p.candidate_count())
        .filter(|&k| k != c)
        .map(|k| t.count(c, k))
        .min()
        .unwrap_or(p.voter_count());
    (2 * weakest).saturating_sub(1).min(p.voter_count())
}
