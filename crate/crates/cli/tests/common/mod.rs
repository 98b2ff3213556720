#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use yd_core::profile::Ballot;
use yd_core::reductions::{Graph, SetFamily};
use yd_core::{CandidateId, PreferenceOrder, Profile};

/// (golden name, argv without the program name). Paths are relative to the
/// crate root, which is the working directory of integration tests.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("score_dodgson_witness", &["score", "--scheme", "dodgson", "--profile", "tests/fixtures/majority.elect", "--witness"]),
    ("score_young_witness", &["score", "--scheme", "young", "--profile", "tests/fixtures/majority.elect", "--witness"]),
    ("score_dodgson_star_json", &["score", "--scheme", "dodgson-star", "--profile", "tests/fixtures/cycle.elect", "--format", "json"]),
    ("score_young_star_json", &["score", "--scheme", "young-star", "--profile", "tests/fixtures/cycle.elect", "--format", "json"]),
    ("score_young_star_text", &["score", "--scheme", "young-star", "--profile", "tests/fixtures/majority.elect"]),
    ("score_reduced_c", &["score", "--scheme", "young", "--profile", "tests/fixtures/reduced.elect", "--candidate", "c"]),
    ("score_filtered_json", &["score", "--scheme", "dodgson", "--profile", "tests/fixtures/majority.elect", "--candidate", "d", "--candidate", "a", "--format", "json"]),
    ("winner_young_true", &["winner", "--scheme", "young", "--profile", "tests/fixtures/majority.elect", "--candidate", "b"]),
    ("winner_dodgson_false", &["winner", "--scheme", "dodgson", "--profile", "tests/fixtures/majority.elect", "--candidate", "a"]),
    ("ranking_reduced", &["ranking", "--scheme", "young", "--profile", "tests/fixtures/reduced.elect", "--candidate", "c", "--rival", "d"]),
    ("ranking_star_tie", &["ranking", "--scheme", "dodgson-star", "--profile", "tests/fixtures/cycle.elect", "--candidate", "A", "--rival", "B"]),
    ("condorcet_none", &["condorcet", "--profile", "tests/fixtures/cycle.elect"]),
    ("condorcet_winner", &["condorcet", "--profile", "tests/fixtures/majority.elect"]),
    ("reduce_sets", &["reduce", "--sets", "tests/fixtures/first.sets", "tests/fixtures/second.sets"]),
    ("reduce_graphs", &["reduce", "--graphs", "tests/fixtures/path5.graph", "tests/fixtures/star4.graph"]),
    ("amplify_cycle", &["amplify", "--profile", "tests/fixtures/cycle.elect", "--c", "A", "--d", "B"]),
    ("verify_graphs", &["verify", "--graph1", "tests/fixtures/path5.graph", "--graph2", "tests/fixtures/star4.graph"]),
    ("convergence_dodgson_star", &["convergence", "--scheme", "dodgson-star", "--profile", "tests/fixtures/cycle.elect", "--candidate", "A", "--q", "1,2,4,8"]),
    ("convergence_young_star_json", &["convergence", "--scheme", "young-star", "--profile", "tests/fixtures/majority.elect", "--candidate", "a", "--format", "json"]),
    ("error_unknown_candidate", &["winner", "--scheme", "young", "--profile", "tests/fixtures/cycle.elect", "--candidate", "Z"]),
    ("error_missing_file", &["condorcet", "--profile", "tests/fixtures/absent.elect"]),
    ("error_malformed_profile", &["score", "--scheme", "young", "--profile", "tests/fixtures/malformed.elect"]),
    ("error_small_packing", &["reduce", "--sets", "tests/fixtures/first.sets", "tests/fixtures/tiny.sets"]),
    ("usage_bad_scheme", &["score", "--scheme", "borda", "--profile", "tests/fixtures/cycle.elect"]),
    ("usage_exact_convergence", &["convergence", "--scheme", "dodgson", "--profile", "tests/fixtures/cycle.elect", "--candidate", "A"]),
    ("usage_reduce_both", &["reduce", "--sets", "tests/fixtures/first.sets", "tests/fixtures/second.sets", "--graphs", "tests/fixtures/path5.graph", "tests/fixtures/star4.graph"]),
];

/// Exit code, stdout and stderr of one in-process invocation, in the golden
/// file layout.
pub fn invoke(args: &[&str]) -> String {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = yd_cli::run(std::iter::once("yd").chain(args.iter().copied()), &mut out, &mut err);
    let mut s = format!("exit: {code}\n");
    s.push_str(&String::from_utf8(out).expect("utf-8 stdout"));
    if !err.is_empty() {
        s.push_str("--- stderr\n");
        s.push_str(&String::from_utf8(err).expect("utf-8 stderr"));
    }
    s
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from("tests/golden").join(format!("{name}.txt"))
}

/// Compares a case against its golden file; with `YD_BLESS=1` the file is
/// rewritten instead.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let first = invoke(args);
    let second = invoke(args);
    if first != second {
        return Err(format!("{name}: two runs differ"));
    }
    let path = golden_path(name);
    if std::env::var_os("YD_BLESS").is_some() {
        fs::write(&path, &first).map_err(|e| format!("{name}: {e}"))?;
        return Ok(());
    }
    let expected = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != first {
        return Err(format!("{name}: output differs from {}\n{first}", path.display()));
    }
    Ok(())
}

pub fn random_profile(rng: &mut ChaCha8Rng, candidates: usize, voters: usize) -> Profile {
    let ids: Vec<CandidateId> = (0..candidates)
        .map(|i| CandidateId::new(format!("c{i}")).unwrap())
        .collect();
    let mut ballots: Vec<Ballot> = Vec::new();
    let mut left = voters;
    while left > 0 {
        let mut ranking: Vec<usize> = (0..candidates).collect();
        ranking.shuffle(rng);
        let multiplicity = rng.gen_range(1..=left.min(2));
        left -= multiplicity;
        ballots.push(Ballot {
            order: PreferenceOrder::new(ranking).unwrap(),
            multiplicity,
        });
    }
    Profile::new(ids, ballots).unwrap()
}

/// Random non-empty member sets of sizes 1..=3 over `base` elements.
pub fn random_family(rng: &mut ChaCha8Rng, prefix: &str, base: usize, sets: usize) -> SetFamily {
    let names: Vec<String> = (0..base).map(|i| format!("{prefix}{i}")).collect();
    let members: Vec<Vec<usize>> = (0..sets)
        .map(|_| {
            let size = rng.gen_range(1..=3.min(base));
            let mut all: Vec<usize> = (0..base).collect();
            all.shuffle(rng);
            all.truncate(size);
            all
        })
        .collect();
    SetFamily::new(names, members).unwrap()
}

/// Random graph on `vertices` vertices; every isolated vertex is then joined
/// to a random other vertex.
pub fn random_graph(rng: &mut ChaCha8Rng, vertices: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..vertices {
        for v in u + 1..vertices {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    for u in 0..vertices {
        if !edges.iter().any(|&(a, b)| a == u || b == u) {
            let mut v = rng.gen_range(0..vertices - 1);
            if v >= u {
                v += 1;
            }
            edges.push((u.min(v), u.max(v)));
        }
    }
    let names = (0..vertices).map(|i| format!("v{i}")).collect();
    Graph::new(names, edges).unwrap()
}

/// Largest number of pairwise disjoint members, by subset enumeration.
pub fn packing_oracle(f: &SetFamily) -> usize {
    let sets = f.sets();
    (0u32..1 << sets.len())
        .filter(|mask| {
            let mut used = vec![false; f.base().len()];
            (0..sets.len()).filter(|i| mask & (1 << i) != 0).all(|i| {
                sets[i].iter().all(|&e| !std::mem::replace(&mut used[e], true))
            })
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// Largest independent vertex set, by subset enumeration.
pub fn independence_oracle(g: &Graph) -> usize {
    (0u32..1 << g.vertex_count())
        .filter(|mask| g.edges().iter().all(|&(u, v)| mask & (1 << u) == 0 || mask & (1 << v) == 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}
