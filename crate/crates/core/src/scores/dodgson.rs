use num_traits::ToPrimitive;

use super::encoding::{encode, DodgsonMoveEncoding};
use super::group_orders;
use crate::error::{Error, Result};
use crate::lp::{int, solve_ilp, Direction, IntegerProgram, LinearProgram, Relation, VarId};
use crate::profile::Profile;

/// Lift the candidate `steps` places in expanded voter `voter`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lift {
    pub voter: usize,
    pub steps: usize,
}

/// A set of lifts realizing a Dodgson score.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DodgsonWitness {
    pub lifts: Vec<Lift>,
}

impl DodgsonWitness {
    /// Total adjacent swaps.
    pub fn cost(&self) -> usize {
        self.lifts.iter().map(|l| l.steps).sum()
    }

    /// The profile after performing every lift, one entry per voter.
    pub fn apply(&self, p: &Profile, c: usize) -> Result<Profile> {
        let mut orders: Vec<_> = p.expanded().cloned().collect();
        for l in &self.lifts {
            let n = orders.len();
            let order = orders.get_mut(l.voter).ok_or(Error::VoterIndex {
                index: l.voter,
                voters: n,
            })?;
            if l.steps > order.position(c) {
                return Err(Error::Precondition(format!(
                    "voter {} cannot lift by {}",
                    l.voter, l.steps
                )));
            }
            *order = order.lifted(c, l.steps);
        }
        p.with_orders(orders)
    }

    /// True when applying the lifts makes `c` the Condorcet winner.
    pub fn validates(&self, p: &Profile, c: usize) -> bool {
        self.apply(p, c)
            .map(|q| q.condorcet_winner_index() == Some(c))
            .unwrap_or(false)
    }
}

/// Votes needed for a strict majority of `n`.
pub(crate) fn majority(n: usize) -> usize {
    n / 2 + 1
}

/// The Dodgson integer program for one candidate, with identical orders
/// aggregated: `x_{g,j}` counts how many voters of group `g` lift the
/// candidate by `j` places (`j = 0` stays put).
pub struct DodgsonProgram {
    pub program: IntegerProgram,
    /// `(group members, [(lift, variable)])` per group with a non-top candidate.
    layout: Vec<(Vec<usize>, Vec<(usize, VarId)>)>,
}

pub fn dodgson_program(p: &Profile, c: usize) -> DodgsonProgram {
    let enc = encode(p, c);
    build_program(p, &enc)
}

fn build_program(p: &Profile, enc: &DodgsonMoveEncoding) -> DodgsonProgram {
    let mut lp = LinearProgram::new(Direction::Minimize);
    let mut layout = Vec::new();
    let mut integral = Vec::new();
    let mut gain_terms: Vec<Vec<(VarId, crate::Rational)>> = vec![Vec::new(); enc.rivals().len()];
    for (g, (members, entry)) in group_orders(p).into_iter().enumerate() {
        let gains = &enc.entries()[entry];
        if gains.position == 0 {
            continue;
        }
        let size = members.len() as i64;
        let mut vars = Vec::new();
        for j in 0..=gains.position {
            let v = lp.add_variable(format!("x_{g}_{j}"), Some(int(0)), Some(int(size)));
            lp.set_objective(v, int(j as i64));
            integral.push(v);
            vars.push((j, v));
            for (slot, terms) in gain_terms.iter_mut().enumerate() {
                if gains.gains(j, slot) {
                    terms.push((v, int(1)));
                }
            }
        }
        lp.add_constraint(vars.iter().map(|&(_, v)| (v, int(1))).collect(), Relation::Eq, int(size));
        layout.push((members, vars));
    }
    let need = majority(enc.voter_count()) as i64;
    for (terms, &w) in gain_terms.into_iter().zip(enc.baseline()) {
        lp.add_constraint(terms, Relation::Ge, int(need - w as i64));
    }
    DodgsonProgram {
        program: IntegerProgram::new(lp, integral).expect("all lift variables are bounded"),
        layout,
    }
}

/// Minimum number of adjacent swaps making `c` the Condorcet winner.
pub fn dodgson_score(p: &Profile, c: &str) -> Result<usize> {
    dodgson_score_with_witness(p, c).map(|(s, _)| s)
}

pub fn dodgson_score_with_witness(p: &Profile, c: &str) -> Result<(usize, DodgsonWitness)> {
    let c = p.candidate_index(c)?;
    dodgson_by_index(p, c)
}

pub(crate) fn dodgson_by_index(p: &Profile, c: usize) -> Result<(usize, DodgsonWitness)> {
    if p.voter_count() == 0 {
        return Err(Error::Precondition("Dodgson score of an empty electorate".into()));
    }
    if p.condorcet_winner_index() == Some(c) {
        return Ok((0, DodgsonWitness::default()));
    }
    let DodgsonProgram { program, layout } = dodgson_program(p, c);
    let sol = solve_ilp(&program)?;
    if !sol.is_optimal() {
        return Err(Error::Solver(format!("Dodgson program ended {:?}", sol.status)));
    }
    let mut lifts = Vec::new();
    for (members, vars) in layout {
        let mut next = members.into_iter();
        for (j, v) in vars {
            let count = sol.value(v).to_integer().to_usize().expect("bounded count");
            for voter in next.by_ref().take(count) {
                if j > 0 {
                    lifts.push(Lift { voter, steps: j });
                }
            }
        }
    }
    lifts.sort_by_key(|l| l.voter);
    let witness = DodgsonWitness { lifts };
    let score = sol.objective.to_integer().to_usize().expect("non-negative integer objective");
    debug_assert_eq!(witness.cost(), score);
    debug_assert!(witness.validates(p, c));
    Ok((score, witness))
}
