use num_traits::Zero;

use super::{solve_lp, Direction, LinearProgram, LpSolution, Rational, Status, VarId};
use crate::error::{Error, Result};

/// A linear program with some variables restricted to integers. Every
/// integral variable must have finite bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerProgram {
    base: LinearProgram,
    integral: Vec<bool>,
}

impl IntegerProgram {
    pub fn new(base: LinearProgram, integral: impl IntoIterator<Item = VarId>) -> Result<Self> {
        let mut flags = vec![false; base.variables().len()];
        for v in integral {
            let var = base
                .variables()
                .get(v.0)
                .ok_or_else(|| Error::Program(format!("integral variable {} does not exist", v.0)))?;
            if var.lower.is_none() || var.upper.is_none() {
                return Err(Error::Program(format!(
                    "integral variable `{}` needs finite bounds",
                    var.name
                )));
            }
            flags[v.0] = true;
        }
        Ok(IntegerProgram { base, integral: flags })
    }

    pub fn base(&self) -> &LinearProgram {
        &self.base
    }

    pub fn is_integral(&self, var: VarId) -> bool {
        self.integral[var.0]
    }

    /// The objective can only take integer values at integer points, so LP
    /// bounds may be rounded before pruning.
    fn integer_objective(&self) -> bool {
        self.base
            .objective()
            .iter()
            .zip(&self.integral)
            .all(|(c, &int)| c.is_zero() || (int && c.is_integer()))
    }
}

/// Depth-first branch-and-bound over [`solve_lp`]. Branches on the fractional
/// integral variable with the largest denominator (lowest index on ties),
/// exploring the rounded-down side first, and prunes any node whose
/// relaxation cannot strictly beat the incumbent.
///
/// An unbounded root relaxation is reported as [`Status::Unbounded`].
pub fn solve_ilp(ip: &IntegerProgram) -> Result<LpSolution> {
    let base = &ip.base;
    let minimize = base.direction() == Direction::Minimize;
    let better = |a: &Rational, b: &Rational| if minimize { a < b } else { a > b };
    let round_bound = |r: &Rational| if minimize { r.ceil() } else { r.floor() };
    let integer_objective = ip.integer_objective();

    let mut root = base.clone();
    for (i, &int) in ip.integral.iter().enumerate() {
        if int {
            let v = &base.variables()[i];
            root.set_bounds(
                VarId(i),
                v.lower.as_ref().map(Rational::ceil),
                v.upper.as_ref().map(Rational::floor),
            );
        }
    }

    let mut incumbent: Option<LpSolution> = None;
    let mut stack = vec![root];
    let mut is_root = true;
    while let Some(node) = stack.pop() {
        let relaxed = solve_lp(&node)?;
        match relaxed.status {
            Status::Infeasible => {
                is_root = false;
                continue;
            }
            Status::Unbounded if is_root => return Ok(LpSolution::without_point(Status::Unbounded)),
            Status::Unbounded => return Err(Error::Solver("unbounded subproblem under a bounded root".into())),
            Status::Optimal => {}
        }
        is_root = false;
        if let Some(inc) = &incumbent {
            let bound = if integer_objective {
                round_bound(&relaxed.objective)
            } else {
                relaxed.objective.clone()
            };
            if !better(&bound, &inc.objective) {
                continue;
            }
        }
        let branch = relaxed
            .values
            .iter()
            .enumerate()
            .filter(|&(i, x)| ip.integral[i] && !x.is_integer())
            .max_by(|(i, a), (j, b)| a.denom().cmp(b.denom()).then(j.cmp(i)))
            .map(|(i, x)| (i, x.clone()));
        match branch {
            None => incumbent = Some(relaxed),
            Some((i, x)) => {
                let var = &node.variables()[i];
                let mut up = node.clone();
                up.set_bounds(VarId(i), Some(x.ceil()), var.upper.clone());
                let mut down = node;
                let lower = down.variables()[i].lower.clone();
                down.set_bounds(VarId(i), lower, Some(x.floor()));
                stack.push(up);
                stack.push(down);
            }
        }
    }
    Ok(incumbent.unwrap_or_else(|| LpSolution::without_point(Status::Infeasible)))
}
