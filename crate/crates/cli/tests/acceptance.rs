//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the test
//! harness so the lines always reach the output; exits non-zero if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use yd_core::homogeneous::{dodgson_star_score, dodgson_star_scores, young_star_score, young_star_scores};
use yd_core::lp::{int, rational, solve_ilp, solve_lp, Direction, IntegerProgram, LinearProgram, Relation, VarId};
use yd_core::reductions::{
    alpha, amplify_for_winner, inc_to_mspc, incidence_family, kappa, mspc_to_young_ranking, MspcInstance, Side,
    DEFAULT_ALPHA_CAP, DEFAULT_KAPPA_CAP,
};
use yd_core::scores::{
    dodgson_score, dodgson_score_bruteforce, young_ranking, young_score, young_score_bruteforce,
    young_score_with_witness, OracleCaps,
};
use yd_core::{Profile, Rational, Scheme, Status};

use common::{independence_oracle, packing_oracle, random_family, random_graph, random_profile};

const SEED: u64 = 0x5eed_0001;

// Pinned tolerances and sample sizes.
const DODGSON_PROFILES: usize = 200;
const DODGSON_TIME_LIMIT_SECS: f64 = 60.0;
const YOUNG_PROFILES: usize = 200;
const MSPC_INSTANCES: usize = 30;
const GRAPHS: usize = 50;
const AMPLIFIED_PROFILES: usize = 20;
const CONVERGENCE_QS: [usize; 5] = [1, 2, 4, 8, 16];
/// Largest allowed `limit - score(16 V)/16` distance, both schemes.
const CONVERGENCE_GAP_AT_16: (i64, i64) = (1, 2);
const SCALE_QS: [usize; 2] = [2, 3];
const RANDOM_ILPS: usize = 100;
const RANDOM_LPS: usize = 100;
/// Grid points enumerated per random ILP at most.
const GRID_LIMIT: usize = 400_000;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn names(p: &Profile) -> Vec<String> {
    p.candidates().iter().map(|c| c.to_string()).collect()
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let caps = OracleCaps::default();
    let start = Instant::now();
    let mut checks = 0;
    for _ in 0..DODGSON_PROFILES {
        let m = rng.gen_range(2..=4);
        let n = rng.gen_range(1..=5);
        let p = random_profile(&mut rng, m, n);
        for c in names(&p) {
            let ilp = dodgson_score(&p, &c).map_err(|e| e.to_string())?;
            let bfs = dodgson_score_bruteforce(&p, &c, &caps).map_err(|e| e.to_string())?;
            ensure(ilp == bfs, || format!("{c}: ILP {ilp} vs BFS {bfs} on\n{p}"))?;
            checks += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < DODGSON_TIME_LIMIT_SECS, || format!("took {secs:.1}s"))?;
    Ok(format!("{DODGSON_PROFILES} profiles, {checks} scores, {secs:.2}s"))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let caps = OracleCaps::default();
    let mut checks = 0;
    for _ in 0..YOUNG_PROFILES {
        let m = rng.gen_range(2..=5);
        let n = rng.gen_range(1..=12);
        let p = random_profile(&mut rng, m, n);
        for c in names(&p) {
            let ilp = young_score(&p, &c).map_err(|e| e.to_string())?;
            let enumerated = young_score_bruteforce(&p, &c, &caps).map_err(|e| e.to_string())?;
            ensure(ilp == enumerated, || format!("{c}: ILP {ilp} vs enumeration {enumerated} on\n{p}"))?;
            checks += 1;
        }
    }
    Ok(format!("{YOUNG_PROFILES} profiles, {checks} scores"))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let caps = OracleCaps::default();
    let mut instances = 0;
    let mut outcomes = [0usize; 2];
    let family = |rng: &mut ChaCha8Rng, prefix: &str| loop {
        let base = rng.gen_range(6..=8);
        let sets = rng.gen_range(3..=4);
        let f = random_family(rng, prefix, base, sets);
        if (3..=4).contains(&packing_oracle(&f)) {
            return f;
        }
    };
    while instances < MSPC_INSTANCES {
        let inst = MspcInstance {
            first: family(&mut rng, "s"),
            second: family(&mut rng, "t"),
        };
        let k = [packing_oracle(&inst.first), packing_oracle(&inst.second)];
        let computed = [
            kappa(&inst.first, DEFAULT_KAPPA_CAP).map_err(|e| e.to_string())?,
            kappa(&inst.second, DEFAULT_KAPPA_CAP).map_err(|e| e.to_string())?,
        ];
        ensure(computed == k, || format!("kappa {computed:?} vs enumeration {k:?}"))?;
        let out = mspc_to_young_ranking(&inst, DEFAULT_KAPPA_CAP).map_err(|e| e.to_string())?;
        let p = &out.profile;
        ensure(p.voter_count() <= 18, || format!("{} voters", p.voter_count()))?;
        for (i, side) in [Side::First, Side::Second].into_iter().enumerate() {
            let who = out.designated(side).to_string();
            let brute = young_score_bruteforce(p, &who, &caps).map_err(|e| e.to_string())?;
            ensure(brute == 2 * k[i] + 1, || format!("{who}: enumeration {brute}, kappa {}", k[i]))?;
            let (ilp, witness) = young_score_with_witness(p, &who).map_err(|e| e.to_string())?;
            ensure(ilp == brute, || format!("{who}: ILP {ilp} vs enumeration {brute}"))?;
            out.check_witness_shape(&witness.kept, side)
                .map_err(|e| format!("{who}: witness shape: {e}"))?;
        }
        let ranked = young_ranking(p, &out.c, &out.d).map_err(|e| e.to_string())?;
        ensure(ranked == (k[0] >= k[1]), || format!("ranking {ranked} for kappa {k:?}"))?;
        outcomes[usize::from(ranked)] += 1;
        instances += 1;
    }
    Ok(format!(
        "{instances} instances, ranking true {} / false {}",
        outcomes[1], outcomes[0]
    ))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let mut sizes = Vec::new();
    for _ in 0..GRAPHS {
        let v = rng.gen_range(2..=8);
        let density = rng.gen_range(0.15..0.7);
        let g = random_graph(&mut rng, v, density);
        let a = independence_oracle(&g);
        let computed = alpha(&g, DEFAULT_ALPHA_CAP).map_err(|e| e.to_string())?;
        ensure(computed == a, || format!("alpha {computed} vs enumeration {a} on\n{g}"))?;
        let inst = inc_to_mspc(&g, &g).map_err(|e| e.to_string())?;
        let k = kappa(&inst.first, DEFAULT_KAPPA_CAP).map_err(|e| e.to_string())?;
        ensure(k == a, || format!("kappa {k} vs alpha {a} on\n{g}"))?;
        let family = incidence_family(&g).map_err(|e| e.to_string())?;
        ensure(packing_oracle(&family) == a, || format!("packing oracle disagrees on\n{g}"))?;
        sizes.push(a);
    }
    Ok(format!(
        "{GRAPHS} graphs, alpha range {}..={}",
        sizes.iter().min().unwrap(),
        sizes.iter().max().unwrap()
    ))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let caps = OracleCaps::default();
    let mut replaced = 0;
    let mut tested = 0;
    while tested < AMPLIFIED_PROFILES {
        let m = rng.gen_range(3..=4);
        let n = rng.gen_range(2..=3);
        let p = random_profile(&mut rng, m, n);
        let (c, d) = ("c0", "c1");
        let q = amplify_for_winner(&p, c, d, false).map_err(|e| e.to_string())?;
        ensure(q.candidate_count() <= 8, || format!("{} candidates", q.candidate_count()))?;
        for x in [c, d] {
            let before = young_score_bruteforce(&p, x, &caps).map_err(|e| e.to_string())?;
            let after = young_score_bruteforce(&q, x, &caps).map_err(|e| e.to_string())?;
            ensure(before == after, || format!("{x}: {before} became {after} on\n{p}"))?;
        }
        for g in names(&q).into_iter().filter(|g| g != c && g != d) {
            let s = young_score_bruteforce(&q, &g, &caps).map_err(|e| e.to_string())?;
            ensure(s <= 1, || format!("{g} scores {s} in\n{q}"))?;
            replaced += 1;
        }
        tested += 1;
    }
    Ok(format!("{tested} profiles, {replaced} replaced candidates"))
}

fn fixed_suite() -> Vec<Profile> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let mut suite = vec![Profile::parse(include_str!("fixtures/cycle.elect")).unwrap()];
    suite.extend((0..15).map(|_| {
        let m = rng.gen_range(2..=4);
        let n = rng.gen_range(1..=4);
        random_profile(&mut rng, m, n)
    }));
    suite
}

fn criterion_6() -> Outcome {
    let limit_gap = rational(CONVERGENCE_GAP_AT_16.0, CONVERGENCE_GAP_AT_16.1);
    let suite = fixed_suite();
    let cycle = &suite[0];
    for c in names(cycle) {
        let ds = dodgson_star_score(cycle, &c).map_err(|e| e.to_string())?;
        let ys = young_star_score(cycle, &c).map_err(|e| e.to_string())?;
        ensure(ds == rational(1, 2) && ys == int(2), || format!("3-cycle {c}: {ds} and {ys}"))?;
    }
    let mut worst = [int(0), int(0)];
    for p in &suite {
        for c in names(p) {
            let dstar = dodgson_star_score(p, &c).map_err(|e| e.to_string())?;
            let ystar = young_star_score(p, &c).map_err(|e| e.to_string())?;
            for q in CONVERGENCE_QS {
                let rep = p.replicate(q).map_err(|e| e.to_string())?;
                let d = rational(dodgson_score(&rep, &c).map_err(|e| e.to_string())? as i64, q as i64);
                let y = rational(young_score(&rep, &c).map_err(|e| e.to_string())? as i64, q as i64);
                ensure(d >= dstar, || format!("{c}: dodgson({q}V)/{q} = {d} < {dstar} on\n{p}"))?;
                ensure(y <= ystar, || format!("{c}: young({q}V)/{q} = {y} > {ystar} on\n{p}"))?;
                if q == 16 {
                    let gaps = [&d - &dstar, &ystar - &y];
                    for (w, g) in worst.iter_mut().zip(gaps) {
                        ensure(g <= limit_gap, || format!("{c}: gap {g} at q=16 on\n{p}"))?;
                        if g > *w {
                            *w = g;
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} profiles, worst gap at q=16: dodgson {}, young {}",
        suite.len(),
        worst[0],
        worst[1]
    ))
}

fn criterion_7() -> Outcome {
    let suite = fixed_suite();
    for p in &suite {
        let base = [
            dodgson_star_scores(p).map_err(|e| e.to_string())?,
            young_star_scores(p).map_err(|e| e.to_string())?,
        ];
        for q in SCALE_QS {
            let rep = p.replicate(q).map_err(|e| e.to_string())?;
            let scaled = [
                dodgson_star_scores(&rep).map_err(|e| e.to_string())?,
                young_star_scores(&rep).map_err(|e| e.to_string())?,
            ];
            let factor = int(q as i64);
            for (b, s) in base.iter().zip(&scaled) {
                let expected: Vec<Rational> = b.iter().map(|x| x * &factor).collect();
                ensure(*s == expected, || format!("q={q}: {s:?} vs {expected:?} on\n{p}"))?;
            }
            for scheme in [Scheme::DodgsonStar, Scheme::YoungStar] {
                let w = scheme.winners(p).map_err(|e| e.to_string())?;
                let wq = scheme.winners(&rep).map_err(|e| e.to_string())?;
                ensure(w == wq, || format!("{scheme} winners change under q={q} on\n{p}"))?;
            }
        }
    }
    Ok(format!("{} profiles, q in {SCALE_QS:?}", suite.len()))
}

/// Every integer assignment in the box, constraints evaluated in `i64`.
/// Requires integer data, as produced by [`random_ilp`].
fn grid_optimum(lp: &LinearProgram) -> Option<Rational> {
    let whole = |r: &Rational| -> i64 {
        assert!(r.is_integer());
        r.to_integer().try_into().unwrap()
    };
    let n = lp.variables().len();
    let bounds: Vec<(i64, i64)> = lp
        .variables()
        .iter()
        .map(|v| (whole(v.lower.as_ref().unwrap()), whole(v.upper.as_ref().unwrap())))
        .collect();
    let rows: Vec<(Vec<i64>, Relation, i64)> = lp
        .constraints()
        .iter()
        .map(|con| {
            let mut a = vec![0; n];
            for (v, c) in &con.terms {
                a[v.0] += whole(c);
            }
            (a, con.relation, whole(&con.rhs))
        })
        .collect();
    let objective: Vec<i64> = lp.objective().iter().map(whole).collect();
    let dot = |a: &[i64], x: &[i64]| a.iter().zip(x).map(|(p, q)| p * q).sum::<i64>();
    let maximize = lp.direction() == Direction::Maximize;

    let mut point: Vec<i64> = bounds.iter().map(|b| b.0).collect();
    let mut best: Option<i64> = None;
    loop {
        let feasible = rows.iter().all(|(a, rel, b)| {
            let lhs = dot(a, &point);
            match rel {
                Relation::Le => lhs <= *b,
                Relation::Ge => lhs >= *b,
                Relation::Eq => lhs == *b,
            }
        });
        if feasible {
            let z = dot(&objective, &point);
            if best.map_or(true, |b| if maximize { z > b } else { z < b }) {
                best = Some(z);
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return best.map(int);
            }
            if point[i] < bounds[i].1 {
                point[i] += 1;
                break;
            }
            point[i] = bounds[i].0;
            i += 1;
        }
    }
}

fn random_terms(rng: &mut ChaCha8Rng, vars: &[VarId]) -> Vec<(VarId, Rational)> {
    let mut terms = Vec::new();
    for &v in vars {
        if rng.gen_bool(0.7) {
            terms.push((v, int(rng.gen_range(-5..=5))));
        }
    }
    terms
}

fn random_ilp(rng: &mut ChaCha8Rng) -> LinearProgram {
    let n = rng.gen_range(1..=12);
    let direction = if rng.gen_bool(0.5) { Direction::Maximize } else { Direction::Minimize };
    let mut lp = LinearProgram::new(direction);
    let mut grid = 1usize;
    let mut vars = Vec::new();
    for i in 0..n {
        let lo = rng.gen_range(-3..=3);
        let mut range = rng.gen_range(0..=6);
        while range > 0 && grid * (range + 1) * 3usize.pow((n - i - 1) as u32) > GRID_LIMIT {
            range -= 1;
        }
        grid *= range + 1;
        let v = lp.add_variable(format!("x{i}"), Some(int(lo)), Some(int(lo + range as i64)));
        lp.set_objective(v, int(rng.gen_range(-5..=5)));
        vars.push(v);
    }
    for _ in 0..rng.gen_range(1..=4) {
        let terms = random_terms(rng, &vars);
        let relation = match rng.gen_range(0..5) {
            0 => Relation::Eq,
            1 | 2 => Relation::Ge,
            _ => Relation::Le,
        };
        lp.add_constraint(terms, relation, int(rng.gen_range(-8..=8)));
    }
    lp
}

/// Solves the square system exactly; `None` when singular.
fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != int(0))?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r != col && a[r][col] != int(0) {
                let f = &a[r][col] / &a[col][col];
                for k in col..n {
                    let delta = &f * &a[col][k];
                    a[r][k] -= delta;
                }
                let delta = &f * &b[col];
                b[r] -= delta;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Optimum over all basic feasible points, for programs whose feasible
/// region is pointed and whose optimum is attained.
fn vertex_optimum(lp: &LinearProgram) -> Option<Rational> {
    let n = lp.variables().len();
    // rows as a . x <= b
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let dense = |terms: &[(VarId, Rational)], sign: i64| {
        let mut a = vec![int(0); n];
        for (v, c) in terms {
            a[v.0] += c * int(sign);
        }
        a
    };
    for con in lp.constraints() {
        if matches!(con.relation, Relation::Le | Relation::Eq) {
            rows.push((dense(&con.terms, 1), con.rhs.clone()));
        }
        if matches!(con.relation, Relation::Ge | Relation::Eq) {
            rows.push((dense(&con.terms, -1), -con.rhs.clone()));
        }
    }
    for (i, v) in lp.variables().iter().enumerate() {
        let mut unit = vec![int(0); n];
        unit[i] = int(1);
        if let Some(u) = &v.upper {
            rows.push((unit.clone(), u.clone()));
        }
        if let Some(l) = &v.lower {
            rows.push((unit.iter().map(|x| -x).collect(), -l.clone()));
        }
    }
    let mut best: Option<Rational> = None;
    let mut pick: Vec<usize> = (0..n).collect();
    if rows.len() < n {
        return None;
    }
    loop {
        let a = pick.iter().map(|&r| rows[r].0.clone()).collect();
        let b = pick.iter().map(|&r| rows[r].1.clone()).collect();
        if let Some(x) = solve_square(a, b) {
            if lp.check_feasible(&x).is_ok() {
                let z = lp.objective_value(&x);
                let improves = best.as_ref().map_or(true, |b| match lp.direction() {
                    Direction::Maximize => z > *b,
                    Direction::Minimize => z < *b,
                });
                if improves {
                    best = Some(z);
                }
            }
        }
        // next n-combination of rows
        let mut i = n;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if pick[i] < rows.len() - n + i {
                pick[i] += 1;
                for j in i + 1..n {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn beale() -> LinearProgram {
    let mut lp = LinearProgram::new(Direction::Minimize);
    let x: Vec<VarId> = (4..=7).map(|i| lp.add_variable(format!("x{i}"), Some(int(0)), None)).collect();
    for (v, c) in x.iter().zip([rational(-3, 4), int(20), rational(-1, 2), int(6)]) {
        lp.set_objective(*v, c);
    }
    let row = |cs: [Rational; 4]| x.iter().copied().zip(cs).collect::<Vec<_>>();
    lp.add_constraint(row([rational(1, 4), int(-8), int(-1), int(9)]), Relation::Le, int(0));
    lp.add_constraint(row([rational(1, 2), int(-12), rational(-1, 2), int(3)]), Relation::Le, int(0));
    lp.add_constraint(vec![(x[2], int(1))], Relation::Le, int(1));
    lp
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut statuses = [0usize; 2];
    let mut widest = (0, 0);
    for _ in 0..RANDOM_ILPS {
        let lp = random_ilp(&mut rng);
        let vars: Vec<VarId> = (0..lp.variables().len()).map(VarId).collect();
        let range = lp
            .variables()
            .iter()
            .map(|v| (v.upper.as_ref().unwrap() - v.lower.as_ref().unwrap()).to_integer())
            .max()
            .unwrap();
        widest = widest.max((vars.len(), range.try_into().unwrap()));
        let expected = grid_optimum(&lp);
        let got = solve_ilp(&IntegerProgram::new(lp.clone(), vars).unwrap()).map_err(|e| e.to_string())?;
        match expected {
            None => ensure(got.status == Status::Infeasible, || format!("expected infeasible, got {:?}\n{lp}", got.status))?,
            Some(z) => {
                ensure(got.status == Status::Optimal && got.objective == z, || {
                    format!("grid optimum {z}, solver {:?} {}\n{lp}", got.status, got.objective)
                })?;
                ensure(got.values.iter().all(|v| v.is_integer()), || "non-integral point".into())?;
                lp.check_feasible(&got.values)?;
            }
        }
        statuses[usize::from(got.status == Status::Optimal)] += 1;
    }

    for _ in 0..RANDOM_LPS {
        let lp = random_ilp(&mut rng);
        if lp.variables().len() > 5 {
            continue;
        }
        let got = solve_lp(&lp).map_err(|e| e.to_string())?;
        let expected = vertex_optimum(&lp);
        match (got.status, expected) {
            (Status::Optimal, Some(z)) => {
                lp.check_feasible(&got.values).map_err(|e| format!("{e}\n{lp}"))?;
                ensure(lp.objective_value(&got.values) == got.objective, || "objective mismatch".into())?;
                ensure(got.objective == z, || format!("vertex optimum {z}, solver {}\n{lp}", got.objective))?;
            }
            (Status::Infeasible, None) => {}
            (s, e) => return Err(format!("solver {s:?} vs vertex enumeration {e:?}\n{lp}")),
        }
    }

    let lp = beale();
    let got = solve_lp(&lp).map_err(|e| e.to_string())?;
    let expected = vertex_optimum(&lp).ok_or("no vertex")?;
    ensure(got.status == Status::Optimal && got.objective == expected, || {
        format!("cycling instance: {:?} {} vs {expected}", got.status, got.objective)
    })?;
    lp.check_feasible(&got.values)?;
    Ok(format!(
        "{} ILPs ({} optimal, {} infeasible; up to {} vars, range {}), LPs vs vertices, cycling instance {}",
        RANDOM_ILPS, statuses[1], statuses[0], widest.0, widest.1, expected
    ))
}

fn criterion_9() -> Outcome {
    for (name, args) in common::GOLDEN_CASES {
        common::check_golden(name, args)?;
    }
    Ok(format!("{} golden cases, two runs each", common::GOLDEN_CASES.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("dodgson ILP = swap search", criterion_1),
        ("young ILP = subset enumeration", criterion_2),
        ("set packing -> young scores 2k+1", criterion_3),
        ("independence number = packing number", criterion_4),
        ("amplification preserves scores", criterion_5),
        ("replicated scores approach the LP", criterion_6),
        ("starred scores scale with q", criterion_7),
        ("LP/ILP engine", criterion_8),
        ("CLI golden files", criterion_9),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {} [{title}]: PASS ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} [{title}]: FAIL: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
