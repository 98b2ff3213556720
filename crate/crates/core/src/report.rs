//! Scoring schemes and score reports in text and JSON form.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::homogeneous::{dodgson_star_scores, young_star_scores};
use crate::lp::{fraction_string, int, parse_fraction, Rational};
use crate::profile::{CandidateId, Profile};
use crate::scores::{dodgson_by_index, dodgson_scores, young_by_index, young_scores, DodgsonWitness, YoungWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    Dodgson,
    Young,
    DodgsonStar,
    YoungStar,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [Scheme::Dodgson, Scheme::Young, Scheme::DodgsonStar, Scheme::YoungStar];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Dodgson => "dodgson",
            Scheme::Young => "young",
            Scheme::DodgsonStar => "dodgson-star",
            Scheme::YoungStar => "young-star",
        }
    }

    /// The limit variants, whose scores are rationals.
    pub fn is_homogeneous_variant(self) -> bool {
        matches!(self, Scheme::DodgsonStar | Scheme::YoungStar)
    }

    /// Dodgson-type schemes elect the minimum score, Young-type the maximum.
    pub fn lower_is_better(self) -> bool {
        matches!(self, Scheme::Dodgson | Scheme::DodgsonStar)
    }

    pub fn scores(self, p: &Profile) -> Result<Vec<Rational>> {
        let ints = |v: Vec<usize>| v.into_iter().map(|s| int(s as i64)).collect();
        Ok(match self {
            Scheme::Dodgson => ints(dodgson_scores(p)?),
            Scheme::Young => ints(young_scores(p)?),
            Scheme::DodgsonStar => dodgson_star_scores(p)?,
            Scheme::YoungStar => young_star_scores(p)?,
        })
    }

    /// Does score `a` tie or beat score `b`?
    pub fn at_least_as_good(self, a: &Rational, b: &Rational) -> bool {
        if self.lower_is_better() {
            a <= b
        } else {
            a >= b
        }
    }

    /// Indices of the winning candidates, ascending.
    pub fn winners(self, p: &Profile) -> Result<Vec<usize>> {
        let scores = self.scores(p)?;
        Ok(winners_of(self, &scores))
    }

    pub fn winner(self, p: &Profile, c: &str) -> Result<bool> {
        let c = p.candidate_index(c)?;
        Ok(self.winners(p)?.contains(&c))
    }

    pub fn ranking(self, p: &Profile, c: &str, d: &str) -> Result<bool> {
        let (c, d) = (p.candidate_index(c)?, p.candidate_index(d)?);
        let scores = self.scores(p)?;
        Ok(self.at_least_as_good(&scores[c], &scores[d]))
    }
}

fn winners_of(scheme: Scheme, scores: &[Rational]) -> Vec<usize> {
    (0..scores.len())
        .filter(|&c| scores.iter().all(|s| scheme.at_least_as_good(&scores[c], s)))
        .collect()
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown scheme `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Lifts(DodgsonWitness),
    Kept(YoungWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoreEntry {
    pub candidate: CandidateId,
    pub score: Rational,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoreReport {
    pub scheme: Scheme,
    pub entries: Vec<ScoreEntry>,
    /// Winner set (lexicographic), present when every candidate is scored.
    pub winners: Option<Vec<CandidateId>>,
}

impl ScoreReport {
    /// Scores `only` (all candidates when empty) under `scheme`. Witnesses are
    /// attached for the exact schemes when `witnesses` is set.
    pub fn build(p: &Profile, scheme: Scheme, only: &[&str], witnesses: bool) -> Result<Self> {
        let selected: Vec<usize> = if only.is_empty() {
            (0..p.candidate_count()).collect()
        } else {
            only.iter().map(|c| p.candidate_index(c)).collect::<Result<_>>()?
        };
        let scores = scheme.scores(p)?;
        let mut entries = Vec::with_capacity(selected.len());
        for &c in &selected {
            let witness = match (witnesses, scheme) {
                (true, Scheme::Dodgson) => Some(Witness::Lifts(dodgson_by_index(p, c)?.1)),
                (true, Scheme::Young) => Some(Witness::Kept(young_by_index(p, c)?.1)),
                _ => None,
            };
            entries.push(ScoreEntry {
                candidate: p.candidate(c).clone(),
                score: scores[c].clone(),
                witness,
            });
        }
        let winners = only.is_empty().then(|| {
            let mut w: Vec<CandidateId> = winners_of(scheme, &scores)
                .into_iter()
                .map(|c| p.candidate(c).clone())
                .collect();
            w.sort();
            w
        });
        Ok(ScoreReport {
            scheme,
            entries,
            winners,
        })
    }

    fn render_score(&self, r: &Rational) -> String {
        if self.scheme.is_homogeneous_variant() {
            fraction_string(r)
        } else {
            r.to_string()
        }
    }

    /// Replays every witness: it must produce a Condorcet winner and cost (or
    /// keep) exactly the reported score.
    pub fn witnesses_valid(&self, p: &Profile) -> bool {
        self.entries.iter().all(|e| {
            let Ok(c) = p.candidate_index(&e.candidate) else {
                return false;
            };
            match &e.witness {
                None => true,
                Some(Witness::Lifts(w)) => int(w.cost() as i64) == e.score && w.validates(p, c),
                Some(Witness::Kept(w)) => {
                    int(w.kept.len() as i64) == e.score && (w.kept.is_empty() || w.validates(p, c))
                }
            }
        })
    }

    /// Aligned two-column table followed by the winner line and witnesses.
    pub fn to_text(&self) -> String {
        let width = self
            .entries
            .iter()
            .map(|e| e.candidate.len())
            .chain(["candidate".len()])
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        writeln!(out, "scheme: {}", self.scheme).unwrap();
        writeln!(out, "{:<width$}  score", "candidate").unwrap();
        for e in &self.entries {
            writeln!(out, "{:<width$}  {}", e.candidate.as_str(), self.render_score(&e.score)).unwrap();
        }
        if let Some(w) = &self.winners {
            let names: Vec<&str> = w.iter().map(|c| c.as_str()).collect();
            writeln!(out, "winners: {}", names.join(" ")).unwrap();
        }
        for e in &self.entries {
            match &e.witness {
                Some(Witness::Lifts(w)) => {
                    let moves: Vec<String> = w
                        .lifts
                        .iter()
                        .map(|l| format!("voter {} up {}", l.voter, l.steps))
                        .collect();
                    writeln!(out, "witness {}: {}", e.candidate, if moves.is_empty() { "none".into() } else { moves.join(", ") })
                        .unwrap();
                }
                Some(Witness::Kept(w)) => {
                    let kept: Vec<String> = w.kept.iter().map(usize::to_string).collect();
                    writeln!(out, "witness {}: keep {}", e.candidate, if kept.is_empty() { "none".into() } else { kept.join(" ") })
                        .unwrap();
                }
                None => {}
            }
        }
        out
    }

    /// A flat object `{"candidate": score}` in candidate order. Starred
    /// scores are `"p/q"` strings, exact scores are integers.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{");
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&Value::String(e.candidate.to_string()).to_string());
            out.push(':');
            let v = if self.scheme.is_homogeneous_variant() {
                Value::String(fraction_string(&e.score)).to_string()
            } else {
                e.score.to_string()
            };
            out.push_str(&v);
        }
        out.push('}');
        out
    }

    /// Candidate/score pairs of this report.
    pub fn values(&self) -> Vec<(String, Rational)> {
        self.entries
            .iter()
            .map(|e| (e.candidate.to_string(), e.score.clone()))
            .collect()
    }
}

/// Reads the candidate/score pairs back from [`ScoreReport::to_text`].
pub fn parse_report_text(text: &str) -> Result<Vec<(String, Rational)>> {
    let mut lines = text.lines().enumerate().skip_while(|(_, l)| !l.starts_with("candidate"));
    lines.next().ok_or_else(|| Error::parse(1, "missing table header"))?;
    let mut out = Vec::new();
    for (i, line) in lines {
        if line.starts_with("winners:") || line.starts_with("witness ") || line.trim().is_empty() {
            break;
        }
        let mut parts = line.split_whitespace();
        let (Some(name), Some(score), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::parse(i + 1, "expected `candidate score`"));
        };
        let score = parse_fraction(score).ok_or_else(|| Error::parse(i + 1, format!("bad score `{score}`")))?;
        out.push((name.to_string(), score));
    }
    Ok(out)
}

/// Reads the candidate/score pairs back from [`ScoreReport::to_json`].
pub fn parse_report_json(text: &str) -> Result<Vec<(String, Rational)>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    let Value::Object(map) = value else {
        return Err(Error::parse(1, "expected a JSON object"));
    };
    let mut out: Vec<(String, Rational)> = Vec::new();
    for (name, v) in map {
        let score = match &v {
            Value::String(s) => parse_fraction(s),
            Value::Number(n) => n.as_i64().map(int),
            _ => None,
        }
        .ok_or_else(|| Error::parse(1, format!("bad score for `{name}`")))?;
        out.push((name, score));
    }
    Ok(out)
}
