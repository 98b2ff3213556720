//! Homogeneous (limit) variants of the Dodgson and Young scores,
//! `lim_{q -> inf} score(qV) / q`, computed as linear programs.
//!
//! The Dodgson* program has one variable `x_{i,j}` per voter `i` and lift
//! `j >= 0`, the fraction of voter `i`'s replicas in which the candidate
//! moves up `j` places. Each voter's fractions sum to one, and against every
//! rival `k` the candidate must collect `sum e_{i,j,k} x_{i,j} + w_k >= n/2`
//! votes. The strict majority of the finite problem closes to `>=` here: the
//! half-vote excess it requires shrinks to nothing per replica as `q` grows.
//!
//! The Young* program keeps a weight `y_v` in `[0, 1]` per voter, maximizes
//! the total weight, and asks for a non-negative weighted margin against every
//! rival.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lp::{int, rational, solve_lp, Direction, LinearProgram, Rational, Relation, VarId};
use crate::profile::Profile;
use crate::report::Scheme;
use crate::scores::encoding_for;

pub struct DodgsonStarProgram {
    pub program: LinearProgram,
    /// `vars[i][j]` is `x_{i,j}` for expanded voter `i`.
    pub vars: Vec<Vec<VarId>>,
}

pub fn dodgson_star_program(p: &Profile, c: &str) -> Result<DodgsonStarProgram> {
    let c = p.candidate_index(c)?;
    Ok(build_dodgson_star(p, c))
}

fn build_dodgson_star(p: &Profile, c: usize) -> DodgsonStarProgram {
    let enc = encoding_for(p, c);
    let mut lp = LinearProgram::new(Direction::Minimize);
    let mut vars = Vec::with_capacity(p.voter_count());
    let mut gain_terms: Vec<Vec<(VarId, Rational)>> = vec![Vec::new(); enc.rivals().len()];
    let mut voter = 0;
    for gains in enc.entries() {
        for _ in 0..gains.multiplicity {
            let row: Vec<VarId> = (0..=gains.position)
                .map(|j| {
                    let v = lp.add_variable(format!("x_{voter}_{j}"), Some(int(0)), Some(int(1)));
                    lp.set_objective(v, int(j as i64));
                    for (slot, terms) in gain_terms.iter_mut().enumerate() {
                        if gains.gains(j, slot) {
                            terms.push((v, int(1)));
                        }
                    }
                    v
                })
                .collect();
            lp.add_constraint(row.iter().map(|&v| (v, int(1))).collect(), Relation::Eq, int(1));
            vars.push(row);
            voter += 1;
        }
    }
    let half = rational(enc.voter_count() as i64, 2);
    for (terms, &w) in gain_terms.into_iter().zip(enc.baseline()) {
        lp.add_constraint(terms, Relation::Ge, &half - int(w as i64));
    }
    DodgsonStarProgram { program: lp, vars }
}

pub struct YoungStarProgram {
    pub program: LinearProgram,
    /// `vars[v]` is `y_v` for expanded voter `v`.
    pub vars: Vec<VarId>,
}

pub fn young_star_program(p: &Profile, c: &str) -> Result<YoungStarProgram> {
    let c = p.candidate_index(c)?;
    Ok(build_young_star(p, c))
}

fn build_young_star(p: &Profile, c: usize) -> YoungStarProgram {
    let mut lp = LinearProgram::new(Direction::Maximize);
    let vars: Vec<VarId> = (0..p.voter_count())
        .map(|v| {
            let y = lp.add_variable(format!("y_{v}"), Some(int(0)), Some(int(1)));
            lp.set_objective(y, int(1));
            y
        })
        .collect();
    let orders: Vec<_> = p.expanded().collect();
    for k in (0..p.candidate_count()).filter(|&k| k != c) {
        let terms = vars
            .iter()
            .zip(&orders)
            .map(|(&y, o)| (y, int(if o.prefers(c, k) { 1 } else { -1 })))
            .collect();
        lp.add_constraint(terms, Relation::Ge, int(0));
    }
    YoungStarProgram { program: lp, vars }
}

fn optimum(lp: &LinearProgram) -> Result<Rational> {
    let sol = solve_lp(lp)?;
    if !sol.is_optimal() {
        return Err(Error::Solver(format!("limit program ended {:?}", sol.status)));
    }
    Ok(sol.objective)
}

pub fn dodgson_star_score(p: &Profile, c: &str) -> Result<Rational> {
    optimum(&dodgson_star_program(p, c)?.program)
}

pub fn young_star_score(p: &Profile, c: &str) -> Result<Rational> {
    optimum(&young_star_program(p, c)?.program)
}

pub fn dodgson_star_scores(p: &Profile) -> Result<Vec<Rational>> {
    (0..p.candidate_count())
        .into_par_iter()
        .map(|c| optimum(&build_dodgson_star(p, c).program))
        .collect()
}

pub fn young_star_scores(p: &Profile) -> Result<Vec<Rational>> {
    (0..p.candidate_count())
        .into_par_iter()
        .map(|c| optimum(&build_young_star(p, c).program))
        .collect()
}

pub fn dodgson_star_winner(p: &Profile, c: &str) -> Result<bool> {
    let c = p.candidate_index(c)?;
    let scores = dodgson_star_scores(p)?;
    Ok(scores.iter().all(|s| &scores[c] <= s))
}

pub fn dodgson_star_ranking(p: &Profile, c: &str, d: &str) -> Result<bool> {
    Ok(dodgson_star_score(p, c)? <= dodgson_star_score(p, d)?)
}

pub fn young_star_winner(p: &Profile, c: &str) -> Result<bool> {
    let c = p.candidate_index(c)?;
    let scores = young_star_scores(p)?;
    Ok(scores.iter().all(|s| &scores[c] >= s))
}

pub fn young_star_ranking(p: &Profile, c: &str, d: &str) -> Result<bool> {
    Ok(young_star_score(p, c)? >= young_star_score(p, d)?)
}

/// Largest replicated electorate the exact schemes are evaluated on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomogeneityCaps {
    pub max_exact_voters: usize,
}

impl Default for HomogeneityCaps {
    fn default() -> Self {
        HomogeneityCaps { max_exact_voters: 200 }
    }
}

/// Whether `scheme` elects the same winner set on `p` and on `p` replicated
/// `q` times.
pub fn homogeneity_check(scheme: Scheme, p: &Profile, q: usize, caps: &HomogeneityCaps) -> Result<bool> {
    let replicated = p.replicate(q)?;
    if !scheme.is_homogeneous_variant() && replicated.voter_count() > caps.max_exact_voters {
        return Err(Error::CapExceeded {
            what: "replicated voter count",
            size: replicated.voter_count(),
            cap: caps.max_exact_voters,
        });
    }
    Ok(scheme.winners(p)? == scheme.winners(&replicated)?)
}
