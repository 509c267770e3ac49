//! Report builders behind the `polyfree` binary.
//!
//! Every command produces a serializable report. `--json` prints it as is;
//! the plain rendering is a projection of the same value.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dbcp::{self, DbcpCertificate, EulerReport, Length2Splitting, Length2Verdict};
use crate::error::{Error, Result};
use crate::graph::{Graph, Limits, Shape, VertexSet};
use crate::semidirect::Mutated;
use crate::tower::{self, DeadSplit, PflBounds, TowerDescription};
use crate::words::{brute_force_equal, normalize, parse_word, Letter};

/// Graphs above this size skip the subset-by-subset oracle comparison.
const ORACLE_VERTICES: usize = 12;
const WORD_PAIRS: usize = 60;

#[derive(Debug, Parser)]
#[command(name = "polyfree", version, about = "Poly-free structure of right-angled Artin groups")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Override every graph-size cap of the exact searches.
    #[arg(long, global = true, value_name = "N")]
    pub max_vertices: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Clique and chromatic numbers, DBCP, poly-free length bounds.
    Analyze { file: PathBuf },
    /// Shortlex normal form of a word such as "a b^-1 c".
    Normalize { file: PathBuf, word: String },
    /// The tower obtained by killing one color class at a time.
    Tower {
        file: PathBuf,
        /// Use this many colors instead of the chromatic number.
        #[arg(long)]
        colors: Option<usize>,
    },
    /// Action table of the length-2 splitting.
    Table {
        file: PathBuf,
        /// Dead set as a comma separated list; defaults to the least one.
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<String>>,
        #[arg(long, default_value_t = tower::DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Run every consistency check on one graph.
    Verify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<String>>,
        #[arg(long, default_value_t = tower::DEFAULT_DEPTH)]
        depth: usize,
        /// Corrupt one action table entry first; the checks must then fail.
        #[arg(long)]
        mutate: bool,
    },
}

impl Cli {
    pub fn limits(&self) -> Limits {
        self.max_vertices
            .map(Limits::with_max_vertices)
            .unwrap_or_default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report<T> {
    pub command: String,
    pub file: String,
    pub graph: GraphSummary,
    pub result: T,
    pub warnings: Vec<String>,
}

impl<T: fmt::Display> fmt::Display for Report<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.command, self.file)?;
        writeln!(
            f,
            "graph: {} vertices, {} edges",
            self.graph.vertices, self.graph.edges
        )?;
        write!(f, "{}", self.result)?;
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    /// False when a verification check failed.
    pub success: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            2
        }
    }
}

pub fn load_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    Graph::parse(&text)
}

fn names(graph: &Graph, s: &VertexSet) -> Vec<String> {
    s.names(graph)
}

fn braces(items: &[String]) -> String {
    if items.is_empty() {
        return "∅".to_string();
    }
    format!("{{{}}}", items.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DbcpSummary {
    /// `None` when the search was skipped by its cap.
    pub holds: Option<bool>,
    pub dead: Option<Vec<String>>,
    pub representatives: Option<Vec<String>>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeResult {
    pub clique_number: usize,
    pub chromatic_number: usize,
    pub coloring: BTreeMap<String, usize>,
    pub shape: Shape,
    pub dbcp: DbcpSummary,
    pub pfl: PflBounds,
    pub length2: Length2Verdict,
    pub euler: EulerReport,
}

impl fmt::Display for AnalyzeResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "clique number: {}", self.clique_number)?;
        let coloring: Vec<String> = self
            .coloring
            .iter()
            .map(|(v, c)| format!("{v}:{c}"))
            .collect();
        writeln!(
            f,
            "chromatic number: {} (witness {})",
            self.chromatic_number,
            coloring.join(" ")
        )?;
        match (&self.dbcp.holds, &self.dbcp.dead) {
            (Some(true), Some(d)) => writeln!(f, "DBCP: yes, D = {}", braces(d))?,
            (Some(false), _) => writeln!(f, "DBCP: no ({})", self.dbcp.reason)?,
            _ => writeln!(f, "DBCP: unknown ({})", self.dbcp.reason)?,
        }
        writeln!(f, "pfl: {}", self.pfl)?;
        for j in &self.pfl.justification {
            writeln!(f, "  {j}")?;
        }
        writeln!(f, "poly-fg-free: {}", self.length2.summary)?;
        for n in &self.length2.neighbor_images {
            writeln!(
                f,
                "  [F(C) : <{}>] = {} for {}",
                n.image.join(", "),
                n.index,
                n.dead
            )?;
        }
        let e = &self.euler;
        let mut parts = Vec::new();
        if let Some(v) = e.chi_ve {
            parts.push(format!("chi_ve = {v}"));
        }
        if let Some(v) = e.chi_cd {
            parts.push(format!("chi_cd = {v}"));
        }
        if let Some(v) = e.chi_kq {
            parts.push(format!("chi_kq = {v}"));
        }
        if parts.is_empty() {
            writeln!(f, "euler: not applicable (graph has a triangle)")?;
        } else if e.agreements.is_empty() {
            writeln!(f, "euler: {}", parts[0])?;
        } else {
            let agree = if e.all_agree() { "agree" } else { "DISAGREE" };
            writeln!(f, "euler: {} ({agree})", parts.join(", "))?;
        }
        Ok(())
    }
}

pub fn analyze(graph: &Graph, limits: &Limits) -> Result<(AnalyzeResult, Vec<String>)> {
    let mut warnings = Vec::new();
    let clique_number = graph.clique_number(limits)?;
    let (chromatic_number, coloring) = graph.chromatic_number(limits)?;
    let (dbcp, certificate) = match dbcp::find_d(graph, limits) {
        Ok(Some(cert)) => (
            DbcpSummary {
                holds: Some(true),
                dead: Some(names(graph, &cert.dead)),
                representatives: Some(
                    cert.representatives
                        .iter()
                        .map(|&c| graph.name(c).to_string())
                        .collect(),
                ),
                reason: "least doubly breakable set".to_string(),
            },
            Some(cert),
        ),
        Ok(None) => (
            DbcpSummary {
                holds: Some(false),
                dead: None,
                representatives: None,
                reason: if graph.edge_count() == 0 {
                    dbcp::Refusal::NoEdges.to_string()
                } else {
                    "exhaustive search found no doubly breakable set".to_string()
                },
            },
            None,
        ),
        Err(e @ Error::Resource { .. }) => {
            warnings.push(e.to_string());
            (
                DbcpSummary {
                    holds: None,
                    dead: None,
                    representatives: None,
                    reason: "search skipped".to_string(),
                },
                None,
            )
        }
        Err(e) => return Err(e),
    };
    let result = AnalyzeResult {
        clique_number,
        chromatic_number,
        coloring: (0..graph.vertex_count())
            .map(|v| (graph.name(v).to_string(), coloring.color(v)))
            .collect(),
        shape: graph.classify_shape(),
        dbcp,
        pfl: tower::pfl_bounds(graph, limits)?,
        length2: dbcp::classify_length2(graph, limits)?,
        euler: dbcp::euler(graph, certificate.as_ref(), graph.is_complete_bipartite()),
    };
    Ok((result, warnings))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizeResult {
    pub input: String,
    pub normal_form: String,
    pub length: usize,
    pub initial_letters: Vec<String>,
}

impl fmt::Display for NormalizeResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "normal form: {}", self.normal_form)?;
        writeln!(f, "length: {}", self.length)?;
        writeln!(f, "initial letters: {}", braces(&self.initial_letters))
    }
}

pub fn normalize_word(graph: Graph, word: &str) -> Result<NormalizeResult> {
    let graph = Arc::new(graph);
    let letters = parse_word(&graph, word)?;
    let w = normalize(&graph, &letters)?;
    Ok(NormalizeResult {
        input: word.split_whitespace().collect::<Vec<_>>().join(" "),
        normal_form: w.to_string(),
        length: w.len(),
        initial_letters: w
            .initial_letters()
            .iter()
            .map(|l| l.render(&graph))
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerResult {
    pub chromatic_number: usize,
    pub colors: usize,
    pub coloring: BTreeMap<String, usize>,
    pub tower: TowerDescription,
    pub relators_trivial: bool,
}

impl fmt::Display for TowerResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "coloring with {} colors (chromatic number {})",
            self.colors, self.chromatic_number
        )?;
        write!(f, "{}", self.tower)?;
        writeln!(
            f,
            "every relator trivial: {}",
            if self.relators_trivial { "yes" } else { "no" }
        )
    }
}

pub fn build_tower(graph: Graph, colors: Option<usize>, limits: &Limits) -> Result<TowerResult> {
    let graph = Arc::new(graph);
    let (chr, coloring) = graph.chromatic_number(limits)?;
    let coloring = match colors {
        None => coloring,
        Some(k) if k < chr => {
            return Err(Error::input(format!(
                "{k} colors requested but the chromatic number is {chr}"
            )))
        }
        Some(k) => coloring.refine_to(k)?,
    };
    let tower = tower::build_tower(&graph, &coloring)?;
    Ok(TowerResult {
        chromatic_number: chr,
        colors: coloring.color_count(),
        coloring: (0..graph.vertex_count())
            .map(|v| (graph.name(v).to_string(), coloring.color(v)))
            .collect(),
        relators_trivial: tower.levels.iter().all(|l| l.relators.all_trivial),
        tower,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableResult {
    pub dead: Vec<String>,
    pub representatives: Vec<String>,
    pub others: Vec<String>,
    pub schema: Vec<String>,
    pub table: dbcp::ActionTable,
}

impl fmt::Display for TableResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "D = {}, C = {}, X = {}",
            braces(&self.dead),
            braces(&self.representatives),
            braces(&self.others)
        )?;
        for s in &self.schema {
            writeln!(f, "{s}")?;
        }
        writeln!(f)?;
        write!(f, "{}", self.table)
    }
}

/// The dead set named by `--set`, or the least doubly breakable set.
fn choose_split(
    graph: &Arc<Graph>,
    set: Option<&[String]>,
    limits: &Limits,
) -> Result<Length2Splitting> {
    let dead = match set {
        Some(names) => {
            let names: Vec<&str> = names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()).collect();
            graph.vertex_set(&names)?
        }
        None => match dbcp::find_d(graph, limits)? {
            Some(cert) => cert.dead,
            None => {
                return Err(Error::input(if graph.edge_count() == 0 {
                    dbcp::Refusal::NoEdges.to_string()
                } else {
                    "the graph has no doubly breakable set".to_string()
                }))
            }
        },
    };
    Length2Splitting::new(Arc::clone(graph), &dead)
}

pub fn action_table(
    graph: Graph,
    set: Option<&[String]>,
    depth: usize,
    limits: &Limits,
) -> Result<TableResult> {
    let graph = Arc::new(graph);
    let split = choose_split(&graph, set, limits)?;
    let vertex_names = |vs: &[usize]| -> Vec<String> {
        vs.iter().map(|&v| graph.name(v).to_string()).collect()
    };
    Ok(TableResult {
        dead: names(&graph, &split.certificate().dead),
        representatives: vertex_names(split.representatives()),
        others: vertex_names(split.others()),
        schema: split.kernel_schema(),
        table: split.action_table(depth),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyResult {
    pub depth: usize,
    pub mutated: Option<String>,
    pub checks: Vec<CheckLine>,
    pub passed: bool,
}

impl fmt::Display for VerifyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(m) = &self.mutated {
            writeln!(f, "mutation: {m}")?;
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            writeln!(f, "{} {:width$}  {}", c.status, c.name, c.detail)?;
        }
        writeln!(f, "{}", if self.passed { "all checks passed" } else { "some checks failed" })
    }
}

struct Checks(Vec<CheckLine>);

impl Checks {
    fn push(&mut self, name: &str, status: Status, detail: impl Into<String>) {
        self.0.push(CheckLine {
            name: name.to_string(),
            status,
            detail: detail.into(),
        });
    }

    fn tally(&mut self, name: &str, tally: &tower::CheckTally) {
        let status = if tally.passed() { Status::Pass } else { Status::Fail };
        let mut detail = format!("{}/{} hold", tally.checked - tally.failed, tally.checked);
        if let Some(e) = tally.examples.first() {
            detail.push_str(&format!("; {e}"));
        }
        self.push(name, status, detail);
    }

    fn flag(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.push(name, if ok { Status::Pass } else { Status::Fail }, detail);
    }

    fn skip(&mut self, name: &str, e: &Error) {
        self.push(name, Status::Skip, e.to_string());
    }
}

/// Runs the oracle, automorphism, relator, Euler and Schreier checks. Cap
/// violations become skips; only genuine failures clear `passed`.
pub fn verify(
    graph: Graph,
    set: Option<&[String]>,
    depth: usize,
    mutate: bool,
    limits: &Limits,
) -> Result<VerifyResult> {
    let graph = Arc::new(graph);
    let mut checks = Checks(Vec::new());

    // normal forms against the rewriting oracle
    let mut rng = ChaCha8Rng::seed_from_u64(0x0DD_5EED);
    let n = graph.vertex_count();
    let mut agree = 0;
    let mut disagreement = None;
    for _ in 0..WORD_PAIRS {
        let word = |rng: &mut ChaCha8Rng| -> Vec<Letter> {
            let len = rng.gen_range(0..=(limits.word_budget / 2).saturating_sub(1));
            (0..len)
                .map(|_| Letter::new(rng.gen_range(0..n), rng.gen_bool(0.5)))
                .collect()
        };
        let w1 = word(&mut rng);
        let w2 = if rng.gen_bool(0.5) {
            shuffled_equal(&graph, &w1, &mut rng)
        } else {
            word(&mut rng)
        };
        let fast = normalize(&graph, &w1)? == normalize(&graph, &w2)?;
        let slow = brute_force_equal(&graph, &w1, &w2, limits.word_budget)?;
        if fast == slow {
            agree += 1;
        } else if disagreement.is_none() {
            disagreement = Some(format!(
                "{} vs {}",
                crate::words::render_letters(&graph, &w1),
                crate::words::render_letters(&graph, &w2)
            ));
        }
    }
    checks.flag(
        "word-oracle",
        disagreement.is_none(),
        match &disagreement {
            None => format!("{agree}/{WORD_PAIRS} random pairs agree"),
            Some(d) => format!("disagreement on {d}"),
        },
    );

    // structural test against cycle enumeration, every independent set
    if n > ORACLE_VERTICES {
        checks.skip(
            "dbcp-oracle",
            &Error::Resource {
                what: "subset oracle comparison",
                cap: ORACLE_VERTICES,
                actual: n,
            },
        );
    } else {
        match graph.enumerate_simple_cycles(limits) {
            Ok(cycles) => {
                let mut tested = 0;
                let mut mismatch = None;
                for mask in 0u64..1 << n {
                    let s = VertexSet::from_mask(mask);
                    if !graph.is_independent(&s) {
                        continue;
                    }
                    tested += 1;
                    let oracle = cycles
                        .iter()
                        .all(|c| c.iter().filter(|&&v| s.contains(v)).count() >= 2);
                    if dbcp::structural_condition(&graph, &s)? != oracle && mismatch.is_none() {
                        mismatch = Some(braces(&names(&graph, &s)));
                    }
                }
                checks.flag(
                    "dbcp-oracle",
                    mismatch.is_none(),
                    match mismatch {
                        None => format!("{tested} independent sets agree"),
                        Some(s) => format!("mismatch on {s}"),
                    },
                );
            }
            Err(e) => checks.skip("dbcp-oracle", &e),
        }
    }

    // tower: one split per color class
    match graph.chromatic_number(limits) {
        Ok((_, coloring)) => {
            let mut inverse = tower::CheckTally::default();
            let mut commutation = tower::CheckTally::default();
            let mut star = tower::CheckTally::default();
            for class in coloring.classes() {
                let split = DeadSplit::new(Arc::clone(&graph), class)?;
                let report = split.check_automorphisms(depth);
                inverse.absorb(report.inverse_pairs);
                commutation.absorb(report.commutation);
                star.absorb(report.condition_star);
            }
            checks.tally("tower-inverse-pairs", &inverse);
            checks.tally("tower-commutation", &commutation);
            checks.tally("tower-condition-star", &star);
            let tower = tower::build_tower(&graph, &coloring)?;
            let total: usize = tower.levels.iter().map(|l| l.relators.relators.len()).sum();
            let trivial: usize = tower
                .levels
                .iter()
                .flat_map(|l| &l.relators.relators)
                .filter(|r| r.trivial)
                .count();
            checks.flag(
                "tower-relators",
                trivial == total,
                format!("{trivial}/{total} trivial over {} levels", tower.length),
            );
        }
        Err(e @ Error::Resource { .. }) => {
            for name in [
                "tower-inverse-pairs",
                "tower-commutation",
                "tower-condition-star",
                "tower-relators",
            ] {
                checks.skip(name, &e);
            }
        }
        Err(e) => return Err(e),
    }

    // length-2 splitting
    let split = match (set, graph.edge_count()) {
        (Some(s), _) => Some(choose_split(&graph, Some(s), limits)?),
        (None, 0) => None,
        (None, _) => match dbcp::find_d(&graph, limits) {
            Ok(Some(cert)) => Some(Length2Splitting::new(Arc::clone(&graph), &cert.dead)?),
            Ok(None) => None,
            Err(e @ Error::Resource { .. }) => {
                checks.skip("length2", &e);
                None
            }
            Err(e) => return Err(e),
        },
    };
    let mut mutated = None;
    let certificate: Option<DbcpCertificate> = split.as_ref().map(|s| s.certificate().clone());
    match &split {
        Some(split) => {
            let report = if mutate {
                let bad = mutation(split)
                    .ok_or_else(|| Error::input("the action table has no two distinct entries to swap"))?;
                mutated = Some(bad.0.clone());
                let m = Mutated::swap(split, bad.1, Letter::positive(bad.2), Letter::positive(bad.3));
                dbcp::verify_with(split, &m, depth)?
            } else {
                split.verify(depth)?
            };
            checks.tally("length2-inverse-pairs", &report.inverse_pairs);
            checks.tally("length2-abelianization", &report.abelianization);
            checks.tally("length2-closure", &report.closure);
            let rel = &report.relators.relators;
            let failed = rel.iter().find(|r| !r.trivial);
            checks.flag(
                "length2-relators",
                report.relators.all_trivial,
                match failed {
                    None => format!("{}/{} trivial", rel.len(), rel.len()),
                    Some(r) => format!("{} maps to {}", r.relator, r.image),
                },
            );
        }
        None => {
            if mutate {
                return Err(Error::input("--mutate needs a doubly breakable set"));
            }
            if !checks.0.iter().any(|c| c.name == "length2") {
                checks.push("length2", Status::Skip, "no doubly breakable set");
            }
        }
    }

    let euler = dbcp::euler(&graph, certificate.as_ref(), graph.is_complete_bipartite());
    if euler.agreements.is_empty() {
        checks.push("euler", Status::Skip, "fewer than two formulas apply");
    } else {
        let shown: Vec<String> = euler
            .agreements
            .iter()
            .map(|a| format!("{} {} {}", a.left, if a.equal { "=" } else { "≠" }, a.right))
            .collect();
        checks.flag("euler", euler.all_agree(), shown.join(", "));
    }

    match &certificate {
        Some(cert) => {
            let images = dbcp::neighbor_images(&graph, cert)?;
            let finite: Vec<_> = images.iter().filter(|i| i.schreier.is_some()).collect();
            if finite.is_empty() {
                checks.push("schreier", Status::Skip, "no finite-index neighbor image");
            } else {
                let ok = finite.iter().filter(|i| i.schreier == Some(true)).count();
                checks.flag(
                    "schreier",
                    ok == finite.len(),
                    format!("{ok}/{} finite-index images satisfy it", finite.len()),
                );
            }
        }
        None => checks.push("schreier", Status::Skip, "no doubly breakable set"),
    }

    let passed = checks.0.iter().all(|c| c.status != Status::Fail);
    Ok(VerifyResult {
        depth,
        mutated,
        checks: checks.0,
        passed,
    })
}

/// A word equal to `w` in the group: random commuting swaps, then a
/// cancelling pair inserted at a random position.
fn shuffled_equal(graph: &Graph, w: &[Letter], rng: &mut ChaCha8Rng) -> Vec<Letter> {
    let mut out = w.to_vec();
    for _ in 0..out.len() * 2 {
        if out.len() < 2 {
            break;
        }
        let i = rng.gen_range(1..out.len());
        let (a, b) = (out[i - 1], out[i]);
        if a.vertex != b.vertex && graph.adjacent(a.vertex, b.vertex) {
            out.swap(i - 1, i);
        }
    }
    let l = Letter::new(rng.gen_range(0..graph.vertex_count()), rng.gen_bool(0.5));
    let at = rng.gen_range(0..=out.len());
    out.splice(at..at, [l, l.inverted()]);
    out
}

/// The first explicit row of the action table with two different entries;
/// returns a description, the row symbol and the two columns.
fn mutation(split: &Length2Splitting) -> Option<(String, dbcp::SplitSymbol, usize, usize)> {
    use crate::semidirect::Action;
    let reps = split.representatives();
    for s in split.symbols_up_to(0) {
        for i in 0..reps.len() {
            for j in i + 1..reps.len() {
                let a = split.act(Letter::positive(reps[i]), &s);
                let b = split.act(Letter::positive(reps[j]), &s);
                if a != b {
                    let g = split.graph();
                    let text = format!(
                        "swapped the {} and {} entries of row {}",
                        g.name(reps[i]),
                        g.name(reps[j]),
                        split.render_symbol(&s)
                    );
                    return Some((text, s, reps[i], reps[j]));
                }
            }
        }
    }
    None
}

fn summary(graph: &Graph) -> GraphSummary {
    GraphSummary {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
    }
}

/// Wraps a command result into its report and renders it.
trait Emit {
    fn emit(&self, json: bool, command: &str, file: &str, graph: GraphSummary, warnings: Vec<String>) -> String;
}

impl<T: Serialize + fmt::Display + Clone> Emit for T {
    fn emit(&self, json: bool, command: &str, file: &str, graph: GraphSummary, warnings: Vec<String>) -> String {
        let report = Report {
            command: command.to_string(),
            file: file.to_string(),
            graph,
            result: self.clone(),
            warnings,
        };
        if json {
            let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
            s.push('\n');
            s
        } else {
            report.to_string()
        }
    }
}

/// Executes one parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let limits = cli.limits();
    let (name, file) = match &cli.command {
        Command::Analyze { file } => ("analyze", file),
        Command::Normalize { file, .. } => ("normalize", file),
        Command::Tower { file, .. } => ("tower", file),
        Command::Table { file, .. } => ("table", file),
        Command::Verify { file, .. } => ("verify", file),
    };
    let graph = load_graph(file)?;
    let emit = |result: &dyn Emit, warnings: Vec<String>| {
        result.emit(cli.json, name, &file.display().to_string(), summary(&graph), warnings)
    };
    let (output, success) = match &cli.command {
        Command::Analyze { .. } => {
            let (result, warnings) = analyze(&graph, &limits)?;
            (emit(&result, warnings), true)
        }
        Command::Normalize { word, .. } => {
            let result = normalize_word(graph.clone(), word)?;
            (emit(&result, vec![]), true)
        }
        Command::Tower { colors, .. } => {
            let result = build_tower(graph.clone(), *colors, &limits)?;
            (emit(&result, vec![]), true)
        }
        Command::Table { set, depth, .. } => {
            let result = action_table(graph.clone(), set.as_deref(), *depth, &limits)?;
            (emit(&result, vec![]), true)
        }
        Command::Verify {
            set, depth, mutate, ..
        } => {
            let result = verify(graph.clone(), set.as_deref(), *depth, *mutate, &limits)?;
            let ok = result.passed;
            (emit(&result, vec![]), ok)
        }
    };
    Ok(Outcome { output, success })
}
