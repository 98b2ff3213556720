use num_traits::{One, Signed, Zero};

use super::{Direction, LinearProgram, LpSolution, Rational, Relation, Status};
use crate::error::Result;

/// How an original variable maps onto non-negative tableau columns.
enum Mapping {
    /// x = lower + col
    Shifted { col: usize, lower: Rational },
    /// x = upper - col
    Reflected { col: usize, upper: Rational },
    /// x = pos - neg
    Free { pos: usize, neg: usize },
}

struct Row {
    coeffs: Vec<Rational>,
    relation: Relation,
    rhs: Rational,
}

enum Outcome {
    Optimal,
    Unbounded,
}

/// Dense tableau. `rows[i]` holds the coefficients followed by the rhs in the
/// last slot; `cost` is the reduced-cost row, with minus the objective value
/// in its last slot.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cost: Vec<Rational>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let inv = self.rows[r][e].recip();
        for a in self.rows[r].iter_mut() {
            if !a.is_zero() {
                *a *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let eliminate = |row: &mut Vec<Rational>| {
            let factor = row[e].clone();
            if factor.is_zero() {
                return;
            }
            for (a, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *a -= &factor * p;
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.rows[r] = pivot_row;
        self.basis[r] = e;
    }

    /// Installs `costs` (one per column) and prices out the current basis.
    fn set_costs(&mut self, costs: &[Rational]) {
        let mut cost: Vec<Rational> = costs.to_vec();
        cost.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (z, a) in cost.iter_mut().zip(&self.rows[i]) {
                if !a.is_zero() {
                    *z -= cb * a;
                }
            }
        }
        self.cost = cost;
    }

    /// Minimizes the installed cost row with Bland's rule: lowest-index
    /// improving column enters, ratio ties leave by lowest basic index.
    fn run(&mut self, allowed: &[bool]) -> Outcome {
        loop {
            let Some(e) = (0..self.width).find(|&j| allowed[j] && self.cost[j].is_negative()) else {
                return Outcome::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, e),
                None => return Outcome::Unbounded,
            }
        }
    }
}

/// Solves `lp` exactly. The only error is a malformed program; infeasible and
/// unbounded programs are reported through [`Status`].
pub fn solve_lp(lp: &LinearProgram) -> Result<LpSolution> {
    lp.validate()?;

    // Map variables to non-negative columns; finite upper bounds of shifted
    // variables become extra rows.
    let mut mappings = Vec::with_capacity(lp.variables.len());
    let mut structural = 0usize;
    let mut bound_rows: Vec<(usize, Rational)> = Vec::new();
    for v in &lp.variables {
        let mapping = match (&v.lower, &v.upper) {
            (Some(l), Some(u)) if l > u => return Ok(LpSolution::without_point(Status::Infeasible)),
            (Some(l), upper) => {
                let col = structural;
                structural += 1;
                if let Some(u) = upper {
                    bound_rows.push((col, u - l));
                }
                Mapping::Shifted { col, lower: l.clone() }
            }
            (None, Some(u)) => {
                let col = structural;
                structural += 1;
                Mapping::Reflected { col, upper: u.clone() }
            }
            (None, None) => {
                structural += 2;
                Mapping::Free {
                    pos: structural - 2,
                    neg: structural - 1,
                }
            }
        };
        mappings.push(mapping);
    }

    let mut rows: Vec<Row> = Vec::with_capacity(lp.constraints.len() + bound_rows.len());
    for c in &lp.constraints {
        let mut coeffs = vec![Rational::zero(); structural];
        let mut rhs = c.rhs.clone();
        for (v, a) in &c.terms {
            match &mappings[v.0] {
                Mapping::Shifted { col, lower } => {
                    coeffs[*col] += a;
                    rhs -= a * lower;
                }
                Mapping::Reflected { col, upper } => {
                    coeffs[*col] -= a;
                    rhs -= a * upper;
                }
                Mapping::Free { pos, neg } => {
                    coeffs[*pos] += a;
                    coeffs[*neg] -= a;
                }
            }
        }
        rows.push(Row {
            coeffs,
            relation: c.relation,
            rhs,
        });
    }
    for (col, span) in bound_rows {
        let mut coeffs = vec![Rational::zero(); structural];
        coeffs[col] = Rational::one();
        rows.push(Row {
            coeffs,
            relation: Relation::Le,
            rhs: span,
        });
    }

    // Non-negative right-hand sides.
    for row in &mut rows {
        if row.rhs.is_negative() {
            row.rhs = -row.rhs.clone();
            for a in &mut row.coeffs {
                *a = -a.clone();
            }
            row.relation = match row.relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    // Column layout: structural | slack/surplus | artificial.
    let slacks = rows.iter().filter(|r| r.relation != Relation::Eq).count();
    let artificials = rows.iter().filter(|r| r.relation != Relation::Le).count();
    let width = structural + slacks + artificials;
    let mut tableau = Tableau {
        rows: Vec::with_capacity(rows.len()),
        basis: Vec::with_capacity(rows.len()),
        cost: Vec::new(),
        width,
    };
    let mut next_slack = structural;
    let mut next_art = structural + slacks;
    for row in rows {
        let mut t = row.coeffs;
        t.resize(width + 1, Rational::zero());
        t[width] = row.rhs;
        match row.relation {
            Relation::Le => {
                t[next_slack] = Rational::one();
                tableau.basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                t[next_slack] = -Rational::one();
                next_slack += 1;
                t[next_art] = Rational::one();
                tableau.basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                t[next_art] = Rational::one();
                tableau.basis.push(next_art);
                next_art += 1;
            }
        }
        tableau.rows.push(t);
    }
    let first_art = structural + slacks;
    let is_art = |j: usize| j >= first_art;

    if artificials > 0 {
        let phase1: Vec<Rational> = (0..width)
            .map(|j| if is_art(j) { Rational::one() } else { Rational::zero() })
            .collect();
        tableau.set_costs(&phase1);
        let all = vec![true; width];
        // Phase one is bounded below by zero.
        tableau.run(&all);
        if !tableau.cost[width].is_zero() {
            return Ok(LpSolution::without_point(Status::Infeasible));
        }
        // Drive zero-valued artificials out of the basis; rows where that is
        // impossible are redundant.
        let mut i = 0;
        while i < tableau.rows.len() {
            if is_art(tableau.basis[i]) {
                match (0..first_art).find(|&j| !tableau.rows[i][j].is_zero()) {
                    Some(j) => tableau.pivot(i, j),
                    None => {
                        tableau.rows.remove(i);
                        tableau.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut phase2 = vec![Rational::zero(); width];
    for (v, mapping) in mappings.iter().enumerate() {
        let c = match lp.direction {
            Direction::Minimize => lp.objective[v].clone(),
            Direction::Maximize => -lp.objective[v].clone(),
        };
        match mapping {
            Mapping::Shifted { col, .. } => phase2[*col] += &c,
            Mapping::Reflected { col, .. } => phase2[*col] -= &c,
            Mapping::Free { pos, neg } => {
                phase2[*pos] += &c;
                phase2[*neg] -= &c;
            }
        }
    }
    tableau.set_costs(&phase2);
    let allowed: Vec<bool> = (0..width).map(|j| !is_art(j)).collect();
    if let Outcome::Unbounded = tableau.run(&allowed) {
        return Ok(LpSolution::without_point(Status::Unbounded));
    }

    let mut columns = vec![Rational::zero(); width];
    for (i, &b) in tableau.basis.iter().enumerate() {
        columns[b] = tableau.rhs(i).clone();
    }
    let values: Vec<Rational> = mappings
        .iter()
        .map(|m| match m {
            Mapping::Shifted { col, lower } => lower + &columns[*col],
            Mapping::Reflected { col, upper } => upper - &columns[*col],
            Mapping::Free { pos, neg } => &columns[*pos] - &columns[*neg],
        })
        .collect();
    debug_assert_eq!(lp.check_feasible(&values), Ok(()));
    let objective = lp.objective_value(&values);
    Ok(LpSolution {
        status: Status::Optimal,
        values,
        objective,
    })
}
