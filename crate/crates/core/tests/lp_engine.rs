use proptest::prelude::*;

use yd_core::lp::{int, rational, solve_ilp, solve_lp, Direction, IntegerProgram, LinearProgram, Relation, VarId};
use yd_core::{Rational, Status};

/// A classic instance on which the textbook largest-coefficient rule cycles.
fn cycling_instance() -> (LinearProgram, Vec<VarId>) {
    let mut lp = LinearProgram::new(Direction::Minimize);
    let x: Vec<VarId> = (4..=7).map(|i| lp.add_variable(format!("x{i}"), Some(int(0)), None)).collect();
    for (v, c) in x.iter().zip([rational(-3, 4), int(20), rational(-1, 2), int(6)]) {
        lp.set_objective(*v, c);
    }
    let row = |cs: [Rational; 4]| x.iter().copied().zip(cs).collect::<Vec<_>>();
    lp.add_constraint(row([rational(1, 4), int(-8), int(-1), int(9)]), Relation::Le, int(0));
    lp.add_constraint(row([rational(1, 2), int(-12), rational(-1, 2), int(3)]), Relation::Le, int(0));
    lp.add_constraint(vec![(x[2], int(1))], Relation::Le, int(1));
    (lp, x)
}

#[test]
fn cycling_instance_terminates_at_a_feasible_optimum() {
    let (lp, x) = cycling_instance();
    let s = solve_lp(&lp).unwrap();
    assert_eq!(s.status, Status::Optimal);
    lp.check_feasible(&s.values).unwrap();
    // x4 = x6 = 1 is feasible with objective -5/4; the optimum is no worse.
    let point = [int(1), int(0), int(1), int(0)];
    lp.check_feasible(&point).unwrap();
    assert!(s.objective <= lp.objective_value(&point));
    assert_eq!(s.value(x[1]), &int(0));
}

fn boxed_program() -> impl Strategy<Value = (LinearProgram, bool)> {
    let var = (-3i64..=3, 0i64..=4, -4i64..=4);
    let row = (proptest::collection::vec(-4i64..=4, 4), 0..3u8, -6i64..=6);
    (
        proptest::collection::vec(var, 1..=4),
        proptest::collection::vec(row, 0..=3),
        any::<bool>(),
    )
        .prop_map(|(vars, rows, maximize)| {
            let mut lp = LinearProgram::new(if maximize { Direction::Maximize } else { Direction::Minimize });
            let ids: Vec<VarId> = vars
                .iter()
                .enumerate()
                .map(|(i, &(lo, width, c))| {
                    let v = lp.add_variable(format!("x{i}"), Some(int(lo)), Some(int(lo + width)));
                    lp.set_objective(v, int(c));
                    v
                })
                .collect();
            for (coeffs, rel, rhs) in rows {
                let terms = ids.iter().zip(coeffs).map(|(v, a)| (*v, rational(a, 2))).collect();
                let relation = [Relation::Le, Relation::Ge, Relation::Eq][rel as usize];
                lp.add_constraint(terms, relation, int(rhs));
            }
            (lp, maximize)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lp_optimum_is_feasible_and_bounds_the_ilp((lp, maximize) in boxed_program()) {
        let relaxed = solve_lp(&lp).unwrap();
        prop_assert_ne!(relaxed.status, Status::Unbounded);
        let vars: Vec<VarId> = (0..lp.variables().len()).map(VarId).collect();
        let ip = IntegerProgram::new(lp.clone(), vars).unwrap();
        let integral = solve_ilp(&ip).unwrap();
        if relaxed.status == Status::Optimal {
            prop_assert!(lp.check_feasible(&relaxed.values).is_ok());
            prop_assert_eq!(lp.objective_value(&relaxed.values), relaxed.objective.clone());
        } else {
            prop_assert_eq!(integral.status, Status::Infeasible);
        }
        if integral.status == Status::Optimal {
            prop_assert!(lp.check_feasible(&integral.values).is_ok());
            prop_assert!(integral.values.iter().all(|v| v.is_integer()));
            if maximize {
                prop_assert!(integral.objective <= relaxed.objective);
            } else {
                prop_assert!(integral.objective >= relaxed.objective);
            }
        }
    }

    #[test]
    fn negating_the_objective_flips_the_direction((lp, maximize) in boxed_program()) {
        let mut flipped = LinearProgram::new(if maximize { Direction::Minimize } else { Direction::Maximize });
        for v in lp.variables() {
            flipped.add_variable(v.name.clone(), v.lower.clone(), v.upper.clone());
        }
        for (i, c) in lp.objective().iter().enumerate() {
            flipped.set_objective(VarId(i), -c.clone());
        }
        for con in lp.constraints() {
            flipped.add_constraint(con.terms.clone(), con.relation, con.rhs.clone());
        }
        let a = solve_lp(&lp).unwrap();
        let b = solve_lp(&flipped).unwrap();
        prop_assert_eq!(a.status, b.status);
        if a.status == Status::Optimal {
            prop_assert_eq!(a.objective, -b.objective);
        }
    }
}
