//! Acceptance suite: one test per criterion, each printing a pass line with
//! its runtime (visible under `--nocapture`). A failed assertion is the fail
//! line.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use divsym::construction::{enumerate_constructions, replay_trace};
use divsym::counting::{a006012, count_direct, recurrence_check};
use divsym::eval::{sample_supergraphs, verify_at_points};
use divsym::expansion::{
    direct_expansion_oracle, schur_expansion, to_monomial_basis, Method,
};
use divsym::hook::{
    justifies, two_hook, two_hook_base, ExponentVector, GraphSpec, PairSet, Partition,
};
use divsym::justify::{arc_break_closure, brute_force_justifying, filter_by_graph};

const GOLDEN_WORKED_EXAMPLE: &str = include_str!("golden/worked_example.txt");

fn ev(entries: &[i64]) -> ExponentVector {
    ExponentVector::new(entries.to_vec()).unwrap()
}

fn marks_string(marks: &[usize]) -> String {
    let inner: Vec<String> = marks.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Renders a replay trace in the frozen golden format.
fn render_trace(t: &ExponentVector) -> String {
    let trace = replay_trace(t).expect("target is reachable");
    let mut out = String::new();
    writeln!(out, "target {t}").unwrap();
    writeln!(out, "p0 {} E {:?}", trace.start.partial(), trace.start.pair_set()).unwrap();
    for (i, step) in trace.steps.iter().enumerate() {
        let d = &step.decision;
        let bound_label = if d.marked { "s" } else { "M" };
        writeln!(
            out,
            "step {} place {} at {} {} {}_{}={}",
            i + 1,
            d.value,
            d.index,
            if d.marked { "mark" } else { "unmark" },
            bound_label,
            d.index,
            d.bound
        )
        .unwrap();
        writeln!(out, "p{} {} E {:?}", i + 1, step.state.partial(), step.state.pair_set()).unwrap();
    }
    writeln!(out, "solution {:?}", trace.result.solution).unwrap();
    writeln!(out, "marks {}", marks_string(&trace.result.marks)).unwrap();
    out
}

#[test]
fn acceptance_1_worked_example_replay() {
    let target = ev(&[7, 4, 2, 5, 6, 3, 1]);
    let start = Instant::now();
    let trace = replay_trace(&target).unwrap();
    let elapsed = start.elapsed();

    let expected_solution =
        PairSet::new([(1, 5), (2, 5), (3, 5), (2, 4), (3, 6), (3, 7)]).unwrap();
    assert_eq!(trace.result.solution, expected_solution);
    assert_eq!(trace.result.marks, vec![2, 3]);
    // The two bounds quoted for the first two placements.
    assert_eq!(trace.steps[0].decision.bound, 6);
    assert!(!trace.steps[0].decision.marked);
    assert_eq!(trace.steps[1].decision.bound, 5);
    assert!(!trace.steps[1].decision.marked);

    let rendered = render_trace(&target);
    assert_eq!(rendered, GOLDEN_WORKED_EXAMPLE, "replay trace drifted from the golden file");

    assert!(elapsed < Duration::from_millis(1), "replay took {elapsed:?}, budget 1 ms");
    println!("acceptance 1 worked-example replay: PASS ({elapsed:?})");
}

#[test]
fn acceptance_2_counting() {
    let start = Instant::now();
    assert_eq!(count_direct(3).unwrap() as i64, a006012(0).unwrap());
    // The report rows carry the direct count, the closed form a(n-3) and the
    // branch recurrence; recurrence_check errors unless all three agree.
    let report = recurrence_check(12).unwrap();
    assert_eq!(report.rows.len(), 10);
    for row in &report.rows {
        assert_eq!(row.direct, row.closed_form, "closed form at n={}", row.n);
        assert_eq!(row.direct, row.recurrence, "recurrence at n={}", row.n);
    }
    let pinned = [(3usize, 1i64), (4, 2), (10, 2704)];
    for (n, expected) in pinned {
        let row = report.rows.iter().find(|r| r.n == n).unwrap();
        assert_eq!(row.direct, expected, "count at n={n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "counting took {elapsed:?}, budget 5 s");
    println!("acceptance 2 counting: PASS ({elapsed:?})");
}

#[test]
fn acceptance_3_traversal_never_fails() {
    let start = Instant::now();
    let mut total = 0usize;
    for n in 3..=10 {
        // Any strong-legality violation surfaces as an error here.
        let results = enumerate_constructions(n).unwrap();
        let lam = two_hook(n).unwrap();
        for r in &results {
            assert!(
                justifies(&r.solution, &r.permutation, &lam).unwrap(),
                "solution fails to justify {:?}",
                r.permutation
            );
        }
        total += results.len();
    }
    let elapsed = start.elapsed();
    println!("acceptance 3 traversal never fails: PASS ({total} results, {elapsed:?})");
}

#[test]
fn acceptance_4_completeness_oracle() {
    // Sweep all 2^|E_n| subsets. A subset is a justifying pair set only when
    // it stays inside E_n - E(G) for a graph containing the path, so subsets
    // touching a path edge are not counted as witnesses. (Unrestricted
    // subsets genuinely reach more distinct-entry targets, e.g. (5,2,3,0)
    // from {(2,3)} at n = 4, so the restriction is load-bearing.)
    let start = Instant::now();
    for n in 3..=6 {
        let base = two_hook_base(n).unwrap();
        let all = PairSet::all_pairs(n);
        let m = all.len();
        let path_bits: u32 = all
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| b - a == 1)
            .map(|(i, _)| 1u32 << i)
            .sum();
        let mut reachable: BTreeSet<ExponentVector> = BTreeSet::new();
        for mask in 0u32..(1 << m) {
            if mask & path_bits != 0 {
                continue;
            }
            let subset: PairSet = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, p)| p)
                .collect();
            let t = &base + &subset.delta(n).unwrap();
            if t.has_distinct_entries() {
                reachable.insert(t);
            }
        }
        let mut constructed: BTreeSet<ExponentVector> = enumerate_constructions(n)
            .unwrap()
            .into_iter()
            .map(|r| r.permutation)
            .collect();
        constructed.insert(base);
        assert_eq!(reachable, constructed, "completeness failed at n={n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "completeness took {elapsed:?}, budget 10 s");
    println!("acceptance 4 completeness oracle: PASS ({elapsed:?})");
}

fn acceptance_graphs(n: usize) -> Vec<GraphSpec> {
    let mut graphs = vec![GraphSpec::path(n).unwrap()];
    graphs.extend(sample_supergraphs(n, 20, 42 + n as u64));
    graphs
}

#[test]
fn acceptance_5_pipeline_vs_oracle() {
    let start = Instant::now();
    let mut compared = 0usize;
    for n in 3..=7 {
        for graph in acceptance_graphs(n) {
            let built = schur_expansion(n, &graph, Method::Brute).unwrap();
            let oracle = direct_expansion_oracle(&graph).unwrap();
            assert_eq!(built, oracle, "pipeline mismatch at n={n} graph={graph:?}");
            compared += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "pipeline check took {elapsed:?}, budget 60 s");
    println!("acceptance 5 pipeline vs oracle: PASS ({compared} graphs, {elapsed:?})");
}

#[test]
fn acceptance_6_monomial_cross_check() {
    let start = Instant::now();
    for n in 3..=7 {
        let path = GraphSpec::path(n).unwrap();
        let expansion = schur_expansion(n, &path, Method::Brute).unwrap();
        let monomial = to_monomial_basis(&expansion).unwrap();
        let hook = two_hook(n).unwrap();
        let column = Partition::new(vec![1; n]).unwrap();
        let got: Vec<(&Partition, i64)> = monomial.iter().map(|(p, &c)| (p, c)).collect();
        assert_eq!(
            got,
            vec![(&column, 1), (&hook, 1)],
            "monomial form wrong at n={n}"
        );
        assert_eq!(
            expansion.coefficient_of(&column),
            2 - n as i64,
            "signed column coefficient wrong at n={n}"
        );
    }
    let elapsed = start.elapsed();
    println!("acceptance 6 monomial cross-check: PASS ({elapsed:?})");
}

#[test]
fn acceptance_7_point_evaluation() {
    let start = Instant::now();
    for n in 3..=6 {
        let report = verify_at_points(n, &GraphSpec::path(n).unwrap(), 5, 42).unwrap();
        assert!(report.all_matched());
        assert_eq!(report.checks.len(), 5);
    }
    let through_6 = start.elapsed();
    assert!(through_6 < Duration::from_secs(30), "point checks took {through_6:?}, budget 30 s");

    let report = verify_at_points(7, &GraphSpec::path(7).unwrap(), 5, 42).unwrap();
    assert!(report.all_matched());
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(600), "point checks took {elapsed:?}, budget 10 min");
    println!("acceptance 7 point evaluation: PASS (n<=6 in {through_6:?}, n=7 total {elapsed:?})");
}

#[test]
fn acceptance_8_closure_vs_brute() {
    let start = Instant::now();
    // Filtered agreement for the path and seeded supergraphs, every target.
    for n in 3..=6 {
        let results = enumerate_constructions(n).unwrap();
        for graph in acceptance_graphs(n) {
            for r in &results {
                let closure = arc_break_closure(r);
                let brute = brute_force_justifying(&r.permutation).unwrap();
                assert_eq!(
                    filter_by_graph(&closure, &graph),
                    filter_by_graph(&brute, &graph),
                    "filtered disagreement at n={n} t={:?} graph={graph:?}",
                    r.permutation
                );
            }
        }
    }
    // The raw comparison must reproduce the known n=4 discrepancy instead of
    // hiding it: two closure sets against four brute-force sets.
    let t = ev(&[4, 2, 3, 1]);
    let result = enumerate_constructions(4)
        .unwrap()
        .into_iter()
        .find(|r| r.permutation == t)
        .unwrap();
    let closure = arc_break_closure(&result);
    let brute = brute_force_justifying(&t).unwrap();
    assert_eq!(closure.len(), 2, "closure set count at the documented target");
    assert_eq!(brute.len(), 4, "brute set count at the documented target");
    for set in &closure {
        assert!(brute.contains(set));
    }
    let elapsed = start.elapsed();
    println!("acceptance 8 closure vs brute: PASS ({elapsed:?})");
}
