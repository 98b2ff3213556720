//! Maximum Set Packing Compare to Young Ranking.
//!
//! Candidates are `c`, `d`, one `x<i>` per element of the first ground set,
//! one `y<i>` per element of the second, and two auxiliaries `a`, `b`.
//! Writing `X` for `x1 > ... > xm`, `Y` for `y1 > ... > yn` and `E`, `~E` for
//! a member set and its complement (ascending ground order), the voters are:
//!
//! | form | count          | order                          |
//! |------|----------------|--------------------------------|
//! | 1    | one per E      | `E > a > c > ~E > Y > b > d`   |
//! | 2    | 2              | `c > X > a > Y > b > d`        |
//! | 3    | \|S1\| - 1     | `X > c > a > Y > b > d`        |
//! | 4    | one per F      | `F > b > d > ~F > X > a > c`   |
//! | 5    | 2              | `d > Y > b > X > a > c`        |
//! | 6    | \|S2\| - 1     | `Y > d > b > X > a > c`        |
//!
//! with `~F` taken inside the second ground set. When both packing numbers
//! exceed 2 the Young scores of `c` and `d` are `2 kappa + 1`.

use super::sets::{kappa, MspcInstance, SetFamily};
use crate::error::{Error, Result};
use crate::profile::{Ballot, CandidateId, PreferenceOrder, Profile};

/// Which of the six voter shapes an expanded voter has; the set voters carry
/// the index of the member set they represent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VoterForm {
    FirstSet(usize),
    FirstPivot,
    FirstFiller,
    SecondSet(usize),
    SecondPivot,
    SecondFiller,
}

impl VoterForm {
    pub fn number(self) -> u8 {
        match self {
            VoterForm::FirstSet(_) => 1,
            VoterForm::FirstPivot => 2,
            VoterForm::FirstFiller => 3,
            VoterForm::SecondSet(_) => 4,
            VoterForm::SecondPivot => 5,
            VoterForm::SecondFiller => 6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungReductionOutput {
    pub profile: Profile,
    pub c: CandidateId,
    pub d: CandidateId,
    pub a: CandidateId,
    pub b: CandidateId,
    /// Form of every expanded voter.
    pub forms: Vec<VoterForm>,
    pub instance: MspcInstance,
}

impl YoungReductionOutput {
    pub fn designated(&self, side: Side) -> &CandidateId {
        match side {
            Side::First => &self.c,
            Side::Second => &self.d,
        }
    }

    /// Checks that a kept voter set for the designated candidate of `side`
    /// has the optimal shape: `l` pivot/filler voters of that side, `l - 1`
    /// set voters of that side representing pairwise disjoint sets, and no
    /// voter of the other side.
    pub fn check_witness_shape(&self, kept: &[usize], side: Side) -> std::result::Result<(), String> {
        let (family, mine): (&SetFamily, fn(VoterForm) -> Option<Option<usize>>) = match side {
            Side::First => (&self.instance.first, |f| match f {
                VoterForm::FirstSet(i) => Some(Some(i)),
                VoterForm::FirstPivot | VoterForm::FirstFiller => Some(None),
                _ => None,
            }),
            Side::Second => (&self.instance.second, |f| match f {
                VoterForm::SecondSet(i) => Some(Some(i)),
                VoterForm::SecondPivot | VoterForm::SecondFiller => Some(None),
                _ => None,
            }),
        };
        let mut pivots = 0;
        let mut sets = Vec::new();
        for &v in kept {
            let form = *self.forms.get(v).ok_or_else(|| format!("voter {v} out of range"))?;
            match mine(form) {
                Some(Some(i)) => sets.push(i),
                Some(None) => pivots += 1,
                None => return Err(format!("voter {v} has form {} of the other side", form.number())),
            }
        }
        if sets.len() + 1 != pivots {
            return Err(format!("{pivots} pivot/filler voters but {} set voters", sets.len()));
        }
        for (i, &s) in sets.iter().enumerate() {
            for &t in &sets[i + 1..] {
                if family.sets()[s].iter().any(|x| family.sets()[t].contains(x)) {
                    return Err(format!("member sets {s} and {t} intersect"));
                }
            }
        }
        Ok(())
    }
}

/// Builds the Young Ranking profile for `inst`. Both packing numbers must
/// exceed 2 (checked with [`kappa`] under `kappa_cap`).
pub fn mspc_to_young_ranking(inst: &MspcInstance, kappa_cap: usize) -> Result<YoungReductionOutput> {
    for (name, fam) in [("first", &inst.first), ("second", &inst.second)] {
        if fam.is_empty() {
            return Err(Error::Precondition(format!("{name} family is empty")));
        }
        let k = kappa(fam, kappa_cap)?;
        if k <= 2 {
            return Err(Error::Precondition(format!(
                "{name} family has packing number {k}; the construction needs more than 2"
            )));
        }
    }
    let m = inst.first.base().len();
    let n = inst.second.base().len();
    // candidate indices
    let (c, d) = (0, 1);
    let x = |i: usize| 2 + i;
    let y = |i: usize| 2 + m + i;
    let (a, b) = (2 + m + n, 3 + m + n);

    let mut names = vec!["c".to_string(), "d".to_string()];
    names.extend((1..=m).map(|i| format!("x{i}")));
    names.extend((1..=n).map(|i| format!("y{i}")));
    names.extend(["a".to_string(), "b".to_string()]);
    let candidates = names
        .into_iter()
        .map(CandidateId::new)
        .collect::<Result<Vec<_>>>()?;

    let all_x: Vec<usize> = (0..m).map(x).collect();
    let all_y: Vec<usize> = (0..n).map(y).collect();
    let mut ballots = Vec::new();
    let mut forms = Vec::new();
    let mut push = |ranking: Vec<usize>, multiplicity: usize, form: VoterForm| -> Result<()> {
        if multiplicity > 0 {
            ballots.push(Ballot {
                order: PreferenceOrder::new(ranking)?,
                multiplicity,
            });
            forms.extend(std::iter::repeat_n(form, multiplicity));
        }
        Ok(())
    };
    let split = |set: &[usize], size: usize, to_cand: &dyn Fn(usize) -> usize| {
        let inside: Vec<usize> = set.iter().map(|&e| to_cand(e)).collect();
        let outside: Vec<usize> = (0..size).filter(|e| !set.contains(e)).map(to_cand).collect();
        (inside, outside)
    };

    for (i, set) in inst.first.sets().iter().enumerate() {
        let (inside, outside) = split(set, m, &x);
        let r = [inside, vec![a, c], outside, all_y.clone(), vec![b, d]].concat();
        push(r, 1, VoterForm::FirstSet(i))?;
    }
    push([vec![c], all_x.clone(), vec![a], all_y.clone(), vec![b, d]].concat(), 2, VoterForm::FirstPivot)?;
    push(
        [all_x.clone(), vec![c, a], all_y.clone(), vec![b, d]].concat(),
        inst.first.len() - 1,
        VoterForm::FirstFiller,
    )?;
    for (i, set) in inst.second.sets().iter().enumerate() {
        let (inside, outside) = split(set, n, &y);
        let r = [inside, vec![b, d], outside, all_x.clone(), vec![a, c]].concat();
        push(r, 1, VoterForm::SecondSet(i))?;
    }
    push([vec![d], all_y.clone(), vec![b], all_x.clone(), vec![a, c]].concat(), 2, VoterForm::SecondPivot)?;
    push(
        [all_y.clone(), vec![d, b], all_x.clone(), vec![a, c]].concat(),
        inst.second.len() - 1,
        VoterForm::SecondFiller,
    )?;

    let profile = Profile::new(candidates, ballots)?;
    let id = |i: usize| profile.candidate(i).clone();
    Ok(YoungReductionOutput {
        c: id(c),
        d: id(d),
        a: id(a),
        b: id(b),
        forms,
        instance: inst.clone(),
        profile,
    })
}
