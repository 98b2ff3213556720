use std::collections::{HashMap, HashSet};
use std::fmt;

use super::graph::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_KAPPA_CAP: usize = 16;

/// Ground-set size limit of the bitmask packing search.
const MAX_BASE: usize = 128;

/// A family of non-empty subsets of an ordered ground set. Member sets are
/// stored as ascending ground indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    base: Vec<String>,
    sets: Vec<Vec<usize>>,
}

impl SetFamily {
    pub fn new(base: Vec<String>, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut names = HashSet::new();
        for x in &base {
            if x.is_empty() || x.chars().any(char::is_whitespace) || x.contains('>') {
                return Err(Error::InvalidName(x.clone()));
            }
            if !names.insert(x.as_str()) {
                return Err(Error::Precondition(format!("duplicate ground element `{x}`")));
            }
        }
        let mut normalized = Vec::with_capacity(sets.len());
        for (i, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(Error::Precondition(format!("member set {i} is empty")));
            }
            if let Some(&x) = s.iter().find(|&&x| x >= base.len()) {
                return Err(Error::Precondition(format!("member set {i} has element {x} outside the base")));
            }
            normalized.push(s);
        }
        Ok(SetFamily { base, sets: normalized })
    }

    pub fn from_names(base: &[&str], sets: &[&[&str]]) -> Result<Self> {
        let index: HashMap<&str, usize> = base.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let sets = sets
            .iter()
            .map(|s| {
                s.iter()
                    .map(|x| {
                        index
                            .get(x)
                            .copied()
                            .ok_or_else(|| Error::Precondition(format!("unknown element `{x}`")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SetFamily::new(base.iter().map(|x| x.to_string()).collect(), sets)
    }

    pub fn base(&self) -> &[String] {
        &self.base
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Line format: `base: x1 x2 ...` then one `set: ...` line per member.
    pub fn parse(text: &str) -> Result<Self> {
        let mut base: Option<Vec<String>> = None;
        let mut sets = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, body) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, "expected `key: value`"))?;
            match (key.trim(), &base) {
                ("base", None) => base = Some(body.split_whitespace().map(String::from).collect()),
                ("set", Some(b)) => {
                    let members = body
                        .split_whitespace()
                        .map(|x| {
                            b.iter()
                                .position(|y| y == x)
                                .ok_or_else(|| Error::parse(line_no, format!("unknown element `{x}`")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    if members.is_empty() {
                        return Err(Error::parse(line_no, "empty member set"));
                    }
                    sets.push(members);
                }
                (k, _) => return Err(Error::parse(line_no, format!("unexpected `{k}:`"))),
            }
        }
        let base = base.ok_or_else(|| Error::parse(1, "missing `base:` line"))?;
        SetFamily::new(base, sets)
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "base: {}", self.base.join(" "))?;
        for s in &self.sets {
            let names: Vec<&str> = s.iter().map(|&x| self.base[x].as_str()).collect();
            writeln!(f, "set: {}", names.join(" "))?;
        }
        Ok(())
    }
}

/// A Maximum Set Packing Compare instance: is `kappa(first) >= kappa(second)`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MspcInstance {
    pub first: SetFamily,
    pub second: SetFamily,
}

/// Maximum number of pairwise disjoint member sets.
pub fn kappa(s: &SetFamily, cap: usize) -> Result<usize> {
    if s.len() > cap {
        return Err(Error::CapExceeded {
            what: "family size",
            size: s.len(),
            cap,
        });
    }
    if s.base.len() > MAX_BASE {
        return Err(Error::CapExceeded {
            what: "ground set size",
            size: s.base.len(),
            cap: MAX_BASE,
        });
    }
    let masks: Vec<u128> = s
        .sets
        .iter()
        .map(|set| set.iter().fold(0u128, |m, &x| m | (1 << x)))
        .collect();
    fn best(i: usize, used: u128, masks: &[u128]) -> usize {
        if i == masks.len() {
            return 0;
        }
        let skip = best(i + 1, used, masks);
        if masks[i] & used == 0 {
            skip.max(1 + best(i + 1, used | masks[i], masks))
        } else {
            skip
        }
    }
    Ok(best(0, 0, &masks))
}

/// The edge-incidence family of `g`: ground set = edges, one member set per
/// vertex holding its incident edges. Its packing number is `alpha(g)`.
/// Edges are named `u-v` unless that is ambiguous, then `e0, e1, ...`.
pub fn incidence_family(g: &Graph) -> Result<SetFamily> {
    let isolated = g.isolated_vertices();
    if !isolated.is_empty() {
        let names: Vec<&str> = isolated.iter().map(|&v| g.vertices()[v].as_str()).collect();
        return Err(Error::Precondition(format!(
            "isolated vertices would give empty sets: {}",
            names.join(" ")
        )));
    }
    let v = g.vertices();
    let mut base: Vec<String> = g.edges().iter().map(|&(a, b)| format!("{}-{}", v[a], v[b])).collect();
    if base.iter().collect::<HashSet<_>>().len() != base.len() || base.iter().any(|x| x.contains('>')) {
        base = (0..g.edges().len()).map(|i| format!("e{i}")).collect();
    }
    let sets = (0..g.vertex_count())
        .map(|x| {
            g.edges()
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == x || b == x)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    SetFamily::new(base, sets)
}

/// Independence Number Compare to Maximum Set Packing Compare.
pub fn inc_to_mspc(g1: &Graph, g2: &Graph) -> Result<MspcInstance> {
    Ok(MspcInstance {
        first: incidence_family(g1)?,
        second: incidence_family(g2)?,
    })
}
