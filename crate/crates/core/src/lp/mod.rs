//! Exact rational linear and integer programming.
//!
//! [`solve_lp`] runs a two-phase tableau simplex with Bland's rule over
//! [`Rational`]s, so it always terminates and never needs a tolerance.
//! [`solve_ilp`] wraps it in a depth-first branch-and-bound.
//!
//! Only weak relations (`<=`, `=`, `>=`) exist. Callers that need a strict
//! inequality must close it themselves, e.g. `2x > n` over the integers
//! becomes `2x >= n + 1`.

mod branch;
mod simplex;

use std::fmt;

use num_traits::{Signed, Zero};

pub use branch::{solve_ilp, IntegerProgram};
pub use simplex::solve_lp;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(value.into())
}

/// Renders `p/q` (always with a denominator, `2/1` for integers).
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a plain integer.
pub fn parse_fraction(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(pub usize);

/// A decision variable; `None` bounds are infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub terms: Vec<(VarId, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    fn lhs(&self, values: &[Rational]) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (v, a)| acc + a * &values[v.0])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    direction: Direction,
    variables: Vec<Variable>,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(direction: Direction) -> Self {
        LinearProgram {
            direction,
            variables: Vec::new(),
            objective: Vec::new(),
            constraints: Vec::new(),
        }
    }

    pub fn add_variable(
        &mut self,
        name: impl Into<String>,
        lower: Option<Rational>,
        upper: Option<Rational>,
    ) -> VarId {
        self.variables.push(Variable {
            name: name.into(),
            lower,
            upper,
        });
        self.objective.push(Rational::zero());
        VarId(self.variables.len() - 1)
    }

    pub fn set_objective(&mut self, var: VarId, coefficient: Rational) {
        self.objective[var.0] = coefficient;
    }

    pub fn add_constraint(&mut self, terms: Vec<(VarId, Rational)>, relation: Relation, rhs: Rational) {
        self.constraints.push(Constraint { terms, relation, rhs });
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn var(&self, name: &str) -> Option<VarId> {
        self.variables.iter().position(|v| v.name == name).map(VarId)
    }

    pub(crate) fn set_bounds(&mut self, var: VarId, lower: Option<Rational>, upper: Option<Rational>) {
        self.variables[var.0].lower = lower;
        self.variables[var.0].upper = upper;
    }

    pub fn objective_value(&self, values: &[Rational]) -> Rational {
        self.objective
            .iter()
            .zip(values)
            .fold(Rational::zero(), |acc, (c, x)| acc + c * x)
    }

    /// Exact feasibility check by substitution. Returns a description of the
    /// first violated bound or constraint.
    pub fn check_feasible(&self, values: &[Rational]) -> std::result::Result<(), String> {
        if values.len() != self.variables.len() {
            return Err(format!(
                "assignment has {} values for {} variables",
                values.len(),
                self.variables.len()
            ));
        }
        for (v, x) in self.variables.iter().zip(values) {
            if v.lower.as_ref().is_some_and(|l| x < l) || v.upper.as_ref().is_some_and(|u| x > u) {
                return Err(format!("{} = {x} violates its bounds", v.name));
            }
        }
        for (i, c) in self.constraints.iter().enumerate() {
            let lhs = c.lhs(values);
            if !c.relation.holds(&lhs, &c.rhs) {
                return Err(format!("constraint {i}: {lhs} {} {} fails", c.relation.symbol(), c.rhs));
            }
        }
        Ok(())
    }

    pub(crate) fn validate(&self) -> Result<()> {
        let n = self.variables.len();
        for (i, c) in self.constraints.iter().enumerate() {
            if let Some((v, _)) = c.terms.iter().find(|(v, _)| v.0 >= n) {
                return Err(Error::Program(format!(
                    "constraint {i} references variable {} of {n}",
                    v.0
                )));
            }
        }
        Ok(())
    }
}

/// Human-readable dump, one constraint per line.
impl fmt::Display for LinearProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let write_terms = |f: &mut fmt::Formatter<'_>, terms: &mut dyn Iterator<Item = (usize, &Rational)>| {
            let mut first = true;
            for (v, a) in terms {
                if a.is_zero() {
                    continue;
                }
                let sign = if a.is_negative() { "-" } else { "+" };
                if first {
                    write!(f, "{}{} {}", if a.is_negative() { "-" } else { "" }, a.abs(), self.variables[v].name)?;
                } else {
                    write!(f, " {sign} {} {}", a.abs(), self.variables[v].name)?;
                }
                first = false;
            }
            if first {
                write!(f, "0")?;
            }
            Ok(())
        };
        let dir = match self.direction {
            Direction::Minimize => "minimize",
            Direction::Maximize => "maximize",
        };
        write!(f, "{dir} ")?;
        write_terms(f, &mut self.objective.iter().enumerate())?;
        writeln!(f)?;
        writeln!(f, "subject to")?;
        for c in &self.constraints {
            write!(f, "  ")?;
            write_terms(f, &mut c.terms.iter().map(|(v, a)| (v.0, a)))?;
            writeln!(f, " {} {}", c.relation.symbol(), c.rhs)?;
        }
        writeln!(f, "bounds")?;
        for v in &self.variables {
            let lo = v.lower.as_ref().map_or("-inf".to_string(), |l| l.to_string());
            let hi = v.upper.as_ref().map_or("+inf".to_string(), |u| u.to_string());
            writeln!(f, "  {lo} <= {} <= {hi}", v.name)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Result of a solve. `values` and `objective` are meaningful only when
/// `status` is [`Status::Optimal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub status: Status,
    pub values: Vec<Rational>,
    pub objective: Rational,
}

impl LpSolution {
    pub(crate) fn without_point(status: Status) -> Self {
        LpSolution {
            status,
            values: Vec::new(),
            objective: Rational::zero(),
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }

    pub fn value(&self, var: VarId) -> &Rational {
        &self.values[var.0]
    }

    /// Variable name to value pairs, in variable order.
    pub fn assignment<'a>(&'a self, lp: &'a LinearProgram) -> impl Iterator<Item = (&'a str, &'a Rational)> {
        lp.variables.iter().map(|v| v.name.as_str()).zip(&self.values)
    }
}
