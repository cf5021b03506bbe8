//! Command-line surface over the divsym library: expansion computation,
//! enumeration dumps, justifying-set inspection, counting, and a full
//! verification sweep.
//!
//! Exit codes: 0 on success, 1 on usage or domain errors, 2 on a
//! verification mismatch.

use std::collections::BTreeMap;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use divsym::construction::{enumerate_constructions, replay_for};
use divsym::counting::{a006012, count_direct, recurrence_check, RecurrenceRow};
use divsym::eval::{sample_supergraphs, verify_at_points};
use divsym::expansion::{
    direct_expansion_oracle_bounded, partitions_of, schur_expansion, to_monomial_basis, Method,
    SchurExpansion, ORACLE_MAX_FACTORS,
};
use divsym::hook::{
    two_hook, ExponentVector, GraphSpec, Pair, PairSet, Partition,
};
use divsym::justify::{arc_break_closure, brute_force_justifying_bounded, filter_by_graph};

/// Default size caps; lifted by `--allow-large`.
const MAX_N_CONSTRUCTION: usize = 12;
const MAX_N_ORACLE: usize = 7;
const MAX_N_POINT_EVAL: usize = 6;

#[derive(Parser)]
#[command(name = "divsym", version, about = "Schur expansions of divided symmetrizations for 2-hook partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExpandMethod {
    /// Construction permutations with exhaustive signed coefficient counts.
    Construction,
    /// Direct sparse-polynomial expansion.
    Oracle,
    /// Run both and require exact agreement.
    Both,
}

impl ExpandMethod {
    fn name(self) -> &'static str {
        match self {
            ExpandMethod::Construction => "construction",
            ExpandMethod::Oracle => "oracle",
            ExpandMethod::Both => "both",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Schur,
    Monomial,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum JustifyMethod {
    Closure,
    Brute,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Schur (or monomial) expansion for the 2-hook on n.
    Expand {
        #[arg(long)]
        n: usize,
        /// Extra edges beyond the path, e.g. "1-3,2-5". Empty means the path.
        #[arg(long, default_value = "")]
        edges: String,
        #[arg(long, value_enum, default_value_t = ExpandMethod::Construction)]
        method: ExpandMethod,
        #[arg(long, value_enum, default_value_t = Basis::Schur)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Also emit zero coefficients, for diffing.
        #[arg(long)]
        include_zeros: bool,
        /// Acknowledge a size beyond the default bounds.
        #[arg(long)]
        allow_large: bool,
    },
    /// List every permutation the construction finds on n.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Include each permutation's placement solution and marks.
        #[arg(long)]
        with_solutions: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        allow_large: bool,
    },
    /// Enumerate the justifying pair sets of one permutation.
    Justify {
        #[arg(long)]
        n: usize,
        /// The target permutation, e.g. "4,2,3,1".
        #[arg(long)]
        t: String,
        #[arg(long, value_enum, default_value_t = JustifyMethod::Both)]
        method: JustifyMethod,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        allow_large: bool,
    },
    /// Tabulate construction counts against the closed form.
    Count {
        #[arg(long)]
        n_max: usize,
        /// Also check the branch-structure recurrence.
        #[arg(long)]
        check_recurrence: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        allow_large: bool,
    },
    /// Run the full verification sweep; any failure exits with code 2.
    Verify {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Evaluation points per size and graph.
        #[arg(long, default_value_t = 5)]
        points: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// "path" or "random:k" for k seeded extra-edge supergraphs per size.
        #[arg(long, default_value = "path")]
        graphs: String,
        #[arg(long)]
        allow_large: bool,
    },
}

enum CliError {
    Usage(String),
    Lib(divsym::Error),
    Mismatch(String),
}

impl From<divsym::Error> for CliError {
    fn from(e: divsym::Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses a comma-separated list of `a-b` extra-edge tokens.
pub fn parse_graph_spec(s: &str, n: usize) -> Result<GraphSpec, String> {
    let mut extra: Vec<Pair> = Vec::new();
    for token in s.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let Some((a, b)) = token.split_once('-') else {
            return Err(format!("malformed edge token '{token}': expected a-b"));
        };
        let a: usize = a.trim().parse().map_err(|_| format!("malformed edge token '{token}'"))?;
        let b: usize = b.trim().parse().map_err(|_| format!("malformed edge token '{token}'"))?;
        if a >= b {
            return Err(format!("invalid edge token '{token}': need a < b"));
        }
        extra.push((a, b));
    }
    GraphSpec::new(n, extra).map_err(|e| e.to_string())
}

fn parse_exponents(s: &str) -> Result<ExponentVector, String> {
    let entries: Result<Vec<i64>, _> = s.split(',').map(|x| x.trim().parse::<i64>()).collect();
    let entries = entries.map_err(|_| format!("malformed exponent list '{s}'"))?;
    ExponentVector::new(entries).map_err(|e| e.to_string())
}

fn brace_list(items: &[usize]) -> String {
    let inner: Vec<String> = items.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn graph_label(graph: &GraphSpec) -> String {
    if graph.is_path() {
        "path".to_string()
    } else {
        format!("path + {:?}", graph.extra_edges())
    }
}

// JSON shapes. Field order is declaration order, and every list is sorted, so
// identical inputs always serialize to identical bytes.

#[derive(Serialize)]
struct GraphJson {
    extra_edges: Vec<[usize; 2]>,
}

impl GraphJson {
    fn of(graph: &GraphSpec) -> Self {
        Self { extra_edges: graph.extra_edges().iter().map(|(a, b)| [a, b]).collect() }
    }
}

#[derive(Serialize)]
struct TermJson {
    partition: Vec<i64>,
    coeff: i64,
}

#[derive(Serialize)]
struct ExpansionJson {
    n: usize,
    graph: GraphJson,
    method: String,
    terms: Vec<TermJson>,
}

#[derive(Serialize)]
struct EnumerationEntryJson {
    t: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    marks: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct EnumerationJson {
    n: usize,
    count: usize,
    results: Vec<EnumerationEntryJson>,
}

#[derive(Serialize)]
struct JustifySetsJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    closure: Option<Vec<Vec<[usize; 2]>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute: Option<Vec<Vec<[usize; 2]>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree_after_filter: Option<bool>,
}

#[derive(Serialize)]
struct JustifyJson {
    n: usize,
    t: Vec<i64>,
    solution: Vec<[usize; 2]>,
    marks: Vec<usize>,
    sets: JustifySetsJson,
}

#[derive(Serialize)]
struct CountRowJson {
    n: usize,
    direct: i64,
    closed_form: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    recurrence: Option<i64>,
}

#[derive(Serialize)]
struct CountJson {
    rows: Vec<CountRowJson>,
}

fn pairs_json(set: &PairSet) -> Vec<[usize; 2]> {
    set.iter().map(|(a, b)| [a, b]).collect()
}

/// Expansion terms sorted by partition, lexicographically descending.
fn sorted_terms(terms: &BTreeMap<Partition, i64>) -> Vec<(Partition, i64)> {
    terms.iter().rev().map(|(p, &c)| (p.clone(), c)).collect()
}

fn schur_term_list(expansion: &SchurExpansion, include_zeros: bool) -> CliResult<Vec<(Partition, i64)>> {
    let mut terms = expansion.terms().clone();
    if include_zeros {
        let n = expansion.n();
        let hook = two_hook(n)?;
        let column = Partition::new(vec![1; n]).map_err(CliError::Lib)?;
        terms.entry(hook).or_insert(0);
        terms.entry(column).or_insert(0);
    }
    Ok(sorted_terms(&terms))
}

fn monomial_term_list(expansion: &SchurExpansion, include_zeros: bool) -> CliResult<Vec<(Partition, i64)>> {
    let mut terms = to_monomial_basis(expansion)?;
    if include_zeros {
        for mu in partitions_of(expansion.n()) {
            terms.entry(mu).or_insert(0);
        }
    }
    Ok(sorted_terms(&terms))
}

fn write_term_table(out: &mut dyn Write, terms: &[(Partition, i64)]) -> std::io::Result<()> {
    let width = terms.iter().map(|(p, _)| p.to_string().len()).max().unwrap_or(9).max(9);
    writeln!(out, "{:<width$}  {:>6}", "partition", "coeff")?;
    for (p, c) in terms {
        writeln!(out, "{:<width$}  {:>6}", p.to_string(), c)?;
    }
    Ok(())
}

struct ExpandArgs<'a> {
    n: usize,
    edges: &'a str,
    method: ExpandMethod,
    basis: Basis,
    format: Format,
    include_zeros: bool,
    allow_large: bool,
}

fn run_expand(out: &mut dyn Write, args: ExpandArgs) -> CliResult<()> {
    let ExpandArgs { n, edges, method, basis, format, include_zeros, allow_large } = args;
    if n < 3 {
        return Err(usage("expand needs --n >= 3"));
    }
    if !allow_large && n > MAX_N_CONSTRUCTION {
        return Err(usage(format!(
            "--n {n} exceeds the default bound {MAX_N_CONSTRUCTION}; pass --allow-large to acknowledge"
        )));
    }
    if !allow_large && method != ExpandMethod::Construction && n > MAX_N_ORACLE {
        return Err(usage(format!(
            "oracle methods are bounded at n = {MAX_N_ORACLE} by default; pass --allow-large to acknowledge"
        )));
    }
    let graph = parse_graph_spec(edges, n).map_err(usage)?;
    let max_factors = if allow_large { usize::MAX } else { ORACLE_MAX_FACTORS };
    let expansion = match method {
        ExpandMethod::Construction => schur_expansion(n, &graph, Method::Brute)?,
        ExpandMethod::Oracle => direct_expansion_oracle_bounded(&graph, max_factors)?,
        ExpandMethod::Both => {
            let built = schur_expansion(n, &graph, Method::Brute)?;
            let oracle = direct_expansion_oracle_bounded(&graph, max_factors)?;
            if built != oracle {
                return Err(CliError::Mismatch(format!(
                    "construction and oracle expansions disagree for n={n}: {:?} vs {:?}",
                    built.terms(),
                    oracle.terms()
                )));
            }
            built
        }
    };
    let terms = match basis {
        Basis::Schur => schur_term_list(&expansion, include_zeros)?,
        Basis::Monomial => monomial_term_list(&expansion, include_zeros)?,
    };
    match format {
        Format::Json => {
            let doc = ExpansionJson {
                n,
                graph: GraphJson::of(&graph),
                method: method.name().to_string(),
                terms: terms
                    .iter()
                    .map(|(p, c)| TermJson { partition: p.parts().to_vec(), coeff: *c })
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable")).ok();
        }
        Format::Text => {
            writeln!(out, "n = {n}  graph = {}  method = {}", graph_label(&graph), method.name()).ok();
            write_term_table(out, &terms).ok();
        }
    }
    Ok(())
}

fn run_enumerate(
    out: &mut dyn Write,
    n: usize,
    with_solutions: bool,
    format: Format,
    allow_large: bool,
) -> CliResult<()> {
    if n < 3 {
        return Err(usage("enumerate needs --n >= 3"));
    }
    if !allow_large && n > MAX_N_CONSTRUCTION {
        return Err(usage(format!(
            "--n {n} exceeds the default bound {MAX_N_CONSTRUCTION}; pass --allow-large to acknowledge"
        )));
    }
    let results = enumerate_constructions(n)?;
    match format {
        Format::Json => {
            let doc = EnumerationJson {
                n,
                count: results.len(),
                results: results
                    .iter()
                    .map(|r| EnumerationEntryJson {
                        t: r.permutation.entries().to_vec(),
                        solution: with_solutions.then(|| pairs_json(&r.solution)),
                        marks: with_solutions.then(|| r.marks.clone()),
                    })
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable")).ok();
        }
        Format::Text => {
            writeln!(out, "n = {n}  permutations = {}", results.len()).ok();
            for r in &results {
                if with_solutions {
                    writeln!(
                        out,
                        "{}  solution = {:?}  marks = {}",
                        r.permutation,
                        r.solution,
                        brace_list(&r.marks)
                    )
                    .ok();
                } else {
                    writeln!(out, "{}", r.permutation).ok();
                }
            }
        }
    }
    Ok(())
}

fn run_justify(
    out: &mut dyn Write,
    n: usize,
    t: &str,
    method: JustifyMethod,
    format: Format,
    allow_large: bool,
) -> CliResult<()> {
    let t = parse_exponents(t).map_err(usage)?;
    if t.len() != n {
        return Err(usage(format!("--t has {} entries but --n is {n}", t.len())));
    }
    if !allow_large && n > MAX_N_CONSTRUCTION {
        return Err(usage(format!(
            "--n {n} exceeds the default bound {MAX_N_CONSTRUCTION}; pass --allow-large to acknowledge"
        )));
    }
    let need_brute = method != JustifyMethod::Closure;
    if need_brute && !allow_large && n > MAX_N_ORACLE {
        return Err(usage(format!(
            "brute-force justification is bounded at n = {MAX_N_ORACLE} by default; pass --allow-large to acknowledge"
        )));
    }
    let result = replay_for(&t)?;
    let closure = (method != JustifyMethod::Brute).then(|| arc_break_closure(&result));
    let brute = if need_brute {
        Some(brute_force_justifying_bounded(&t, if allow_large { n } else { MAX_N_ORACLE })?)
    } else {
        None
    };
    let path = GraphSpec::path(n)?;
    let agree = match (&closure, &brute) {
        (Some(c), Some(b)) => Some(filter_by_graph(c, &path) == filter_by_graph(b, &path)),
        _ => None,
    };
    match format {
        Format::Json => {
            let doc = JustifyJson {
                n,
                t: t.entries().to_vec(),
                solution: pairs_json(&result.solution),
                marks: result.marks.clone(),
                sets: JustifySetsJson {
                    closure: closure.as_ref().map(|c| c.iter().map(pairs_json).collect()),
                    brute: brute.as_ref().map(|b| b.iter().map(pairs_json).collect()),
                    agree_after_filter: agree,
                },
            };
            writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable")).ok();
        }
        Format::Text => {
            writeln!(out, "n = {n}  t = {t}").ok();
            writeln!(out, "solution = {:?}", result.solution).ok();
            writeln!(out, "marks = {}", brace_list(&result.marks)).ok();
            if let Some(c) = &closure {
                writeln!(out, "closure sets ({}):", c.len()).ok();
                for s in c {
                    writeln!(out, "  {s:?}").ok();
                }
            }
            if let Some(b) = &brute {
                writeln!(out, "brute-force sets ({}):", b.len()).ok();
                for s in b {
                    writeln!(out, "  {s:?}").ok();
                }
            }
            if let (Some(c), Some(b)) = (&closure, &brute) {
                let missed: Vec<&PairSet> = b.iter().filter(|s| !c.contains(s)).collect();
                if !missed.is_empty() {
                    writeln!(out, "missing from closure ({}):", missed.len()).ok();
                    for s in missed {
                        writeln!(out, "  {s:?}").ok();
                    }
                }
            }
            if let Some(a) = agree {
                writeln!(out, "agree after path filtering: {a}").ok();
            }
        }
    }
    Ok(())
}

fn run_count(
    out: &mut dyn Write,
    n_max: usize,
    check_recurrence: bool,
    format: Format,
    allow_large: bool,
) -> CliResult<()> {
    if n_max < 3 {
        return Err(usage("count needs --n-max >= 3"));
    }
    if !allow_large && n_max > MAX_N_CONSTRUCTION {
        return Err(usage(format!(
            "--n-max {n_max} exceeds the default bound {MAX_N_CONSTRUCTION}; pass --allow-large to acknowledge"
        )));
    }
    let rows: Vec<CountRowJson> = if check_recurrence {
        recurrence_check(n_max)?
            .rows
            .into_iter()
            .map(|RecurrenceRow { n, direct, closed_form, recurrence }| CountRowJson {
                n,
                direct,
                closed_form,
                recurrence: Some(recurrence),
            })
            .collect()
    } else {
        let mut rows = Vec::new();
        for n in 3..=n_max {
            rows.push(CountRowJson {
                n,
                direct: count_direct(n)? as i64,
                closed_form: a006012(n - 3)?,
                recurrence: None,
            });
        }
        rows
    };
    match format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string(&CountJson { rows }).expect("serializable")).ok();
        }
        Format::Text => {
            if check_recurrence {
                writeln!(out, "{:>3} {:>10} {:>10} {:>10}", "n", "direct", "a(n-3)", "recurrence").ok();
            } else {
                writeln!(out, "{:>3} {:>10} {:>10}", "n", "direct", "a(n-3)").ok();
            }
            for r in &rows {
                match r.recurrence {
                    Some(rec) => {
                        writeln!(out, "{:>3} {:>10} {:>10} {:>10}", r.n, r.direct, r.closed_form, rec).ok();
                    }
                    None => {
                        writeln!(out, "{:>3} {:>10} {:>10}", r.n, r.direct, r.closed_form).ok();
                    }
                }
            }
        }
    }
    Ok(())
}

fn graphs_for_verify(arg: &str, n: usize, seed: u64) -> Result<Vec<GraphSpec>, String> {
    if arg == "path" {
        return Ok(vec![GraphSpec::path(n).map_err(|e| e.to_string())?]);
    }
    if let Some(k) = arg.strip_prefix("random:") {
        let k: usize = k.parse().map_err(|_| format!("malformed --graphs value '{arg}'"))?;
        let mut graphs = vec![GraphSpec::path(n).map_err(|e| e.to_string())?];
        graphs.extend(sample_supergraphs(n, k, seed.wrapping_add(n as u64)));
        return Ok(graphs);
    }
    Err(format!("--graphs must be 'path' or 'random:k', got '{arg}'"))
}

fn run_verify(
    out: &mut dyn Write,
    n_max: usize,
    points: usize,
    seed: u64,
    graphs: &str,
    allow_large: bool,
) -> CliResult<()> {
    if n_max < 3 {
        return Err(usage("verify needs --n-max >= 3"));
    }
    let oracle_cap = if allow_large { n_max } else { MAX_N_ORACLE.min(n_max) };
    let brute_cap = if allow_large { n_max } else { MAX_N_ORACLE.min(n_max) };
    let point_cap = if allow_large { n_max.min(8) } else { MAX_N_POINT_EVAL.min(n_max) };
    let count_cap = if allow_large { n_max } else { MAX_N_CONSTRUCTION.min(n_max) };
    let mut failures = 0usize;
    let mut check = |out: &mut dyn Write, label: String, outcome: Result<String, String>| {
        match outcome {
            Ok(detail) => {
                writeln!(out, "PASS {label}: {detail}").ok();
            }
            Err(detail) => {
                writeln!(out, "FAIL {label}: {detail}").ok();
                failures += 1;
            }
        }
    };

    for n in 3..=n_max {
        let graph_list = graphs_for_verify(graphs, n, seed).map_err(usage)?;
        for graph in &graph_list {
            let label_graph = graph_label(graph);
            if n <= oracle_cap {
                let outcome = (|| {
                    let built = schur_expansion(n, graph, Method::Brute).map_err(|e| e.to_string())?;
                    let oracle = direct_expansion_oracle_bounded(
                        graph,
                        if allow_large { usize::MAX } else { ORACLE_MAX_FACTORS },
                    )
                    .map_err(|e| e.to_string())?;
                    if built == oracle {
                        Ok(format!("{} terms agree", built.terms().len()))
                    } else {
                        Err(format!("{:?} vs {:?}", built.terms(), oracle.terms()))
                    }
                })();
                check(out, format!("expansion n={n} graph={label_graph}"), outcome);
            }
            if n <= brute_cap {
                let outcome = (|| {
                    let results = enumerate_constructions(n).map_err(|e| e.to_string())?;
                    for r in &results {
                        let closure = arc_break_closure(r);
                        let brute = brute_force_justifying_bounded(&r.permutation, brute_cap)
                            .map_err(|e| e.to_string())?;
                        if filter_by_graph(&closure, graph) != filter_by_graph(&brute, graph) {
                            return Err(format!("filtered sets differ at {}", r.permutation));
                        }
                    }
                    Ok(format!("filtered closure == brute for all {} permutations", results.len()))
                })();
                check(out, format!("justify-sets n={n} graph={label_graph}"), outcome);
            }
            if n <= point_cap {
                let outcome = match verify_at_points(n, graph, points, seed) {
                    Ok(report) => Ok(format!("{}/{} points match", report.checks.len(), points)),
                    Err(e) => Err(e.to_string()),
                };
                check(out, format!("points n={n} graph={label_graph}"), outcome);
            }
        }
    }
    let outcome = match recurrence_check(count_cap) {
        Ok(report) => Ok(format!("all three counts agree through n={}", report.rows.len() + 2)),
        Err(e) => Err(e.to_string()),
    };
    check(out, format!("counting n<={count_cap}"), outcome);

    if failures > 0 {
        Err(CliError::Mismatch(format!("{failures} verification check(s) failed")))
    } else {
        Ok(())
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Expand { n, edges, method, basis, format, include_zeros, allow_large } => {
            run_expand(
                out,
                ExpandArgs { n, edges: &edges, method, basis, format, include_zeros, allow_large },
            )
        }
        Command::Enumerate { n, with_solutions, format, allow_large } => {
            run_enumerate(out, n, with_solutions, format, allow_large)
        }
        Command::Justify { n, t, method, format, allow_large } => {
            run_justify(out, n, &t, method, format, allow_large)
        }
        Command::Count { n_max, check_recurrence, format, allow_large } => {
            run_count(out, n_max, check_recurrence, format, allow_large)
        }
        Command::Verify { n_max, points, seed, graphs, allow_large } => {
            run_verify(out, n_max, points, seed, &graphs, allow_large)
        }
    }
}

/// Entry point shared by the binary and the tests. Returns the process exit
/// code.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    write!(stdout, "{e}").ok();
                    0
                }
                _ => {
                    write!(stderr, "{e}").ok();
                    1
                }
            };
        }
    };
    match dispatch(cli, stdout) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            writeln!(stderr, "error: {msg}").ok();
            1
        }
        Err(CliError::Lib(e)) => {
            writeln!(stderr, "error: {e}").ok();
            exit_code_for(&e)
        }
        Err(CliError::Mismatch(msg)) => {
            writeln!(stderr, "verification failed: {msg}").ok();
            2
        }
    }
}

/// Verification mismatches exit with 2, everything else with 1.
fn exit_code_for(e: &divsym::Error) -> i32 {
    match e {
        divsym::Error::Verification { .. } | divsym::Error::CountMismatch { .. } => 2,
        _ => 1,
    }
}
