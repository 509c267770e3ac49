//! The split `AΓ ≅ F ⋊ AΓ_L` obtained by killing one independent set `D`,
//! and the poly-free tower obtained by peeling color classes.
//!
//! `F` is free on the symbols `d_t` with `d ∈ D` and `t ∈ AΓ_L` such that no
//! geodesic for `t` begins with a neighbor of `d` (or its inverse). A
//! living letter `a` sends `d_t` to `d_{ta}` when that symbol exists and
//! fixes it otherwise. The kernel has infinite rank as soon as `L` is
//! nonempty, so symbols are produced on demand and every enumeration takes
//! an explicit depth bound on `|t|`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freegrp::FreeWord;
use crate::graph::{Coloring, Graph, Limits, VertexSet};
use crate::semidirect::{self, Action, ElementOf, RelatorReport};
use crate::words::{Letter, TraceWord};

/// Default bound on `|t|` for every symbol enumeration.
pub const DEFAULT_DEPTH: usize = 4;

/// The generator `d_t`: `base` is a dead vertex of the ambient graph and
/// `index` a normal form over the living subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KernelSymbol {
    pub base: usize,
    pub index: TraceWord,
}

pub type KernelWord = FreeWord<KernelSymbol>;

/// `AΓ` split along a dead set `D`, with `Γ_L` the subgraph induced by the
/// remaining vertices.
#[derive(Clone, Debug)]
pub struct DeadSplit {
    graph: Arc<Graph>,
    dead: VertexSet,
    living: Arc<Graph>,
    /// living index → ambient index
    living_vertices: Vec<usize>,
    /// ambient index → living index
    living_index: Vec<Option<usize>>,
    /// dead vertex → its neighbors, as living indices
    dead_neighbors: BTreeMap<usize, BTreeSet<usize>>,
}

impl DeadSplit {
    pub fn new(graph: Arc<Graph>, dead: VertexSet) -> Result<Self> {
        if let Some(v) = dead.iter().find(|&v| v >= graph.vertex_count()) {
            return Err(Error::input(format!("vertex index {v} out of range")));
        }
        if !graph.is_independent(&dead) {
            let &(u, v) = graph
                .edges()
                .iter()
                .find(|&&(u, v)| dead.contains(u) && dead.contains(v))
                .expect("an edge inside the dead set");
            return Err(Error::input(format!(
                "dead set is not independent: edge {} {}",
                graph.name(u),
                graph.name(v)
            )));
        }
        let living_set: VertexSet = (0..graph.vertex_count())
            .filter(|&v| !dead.contains(v))
            .collect();
        let (living, living_vertices) = graph.induced(&living_set)?;
        let mut living_index = vec![None; graph.vertex_count()];
        for (i, &v) in living_vertices.iter().enumerate() {
            living_index[v] = Some(i);
        }
        let dead_neighbors = dead
            .iter()
            .map(|d| {
                let ns = graph
                    .neighbor_slice(d)
                    .iter()
                    .filter_map(|&v| living_index[v])
                    .collect();
                (d, ns)
            })
            .collect();
        Ok(DeadSplit {
            graph,
            dead,
            living: Arc::new(living),
            living_vertices,
            living_index,
            dead_neighbors,
        })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn dead(&self) -> &VertexSet {
        &self.dead
    }

    pub fn living(&self) -> &Arc<Graph> {
        &self.living
    }

    /// Ambient vertex of a living index.
    pub fn ambient_vertex(&self, living: usize) -> usize {
        self.living_vertices[living]
    }

    /// Living index of an ambient vertex, if it is alive.
    pub fn living_index(&self, ambient: usize) -> Option<usize> {
        self.living_index[ambient]
    }

    fn neighbors_of(&self, d: usize) -> Result<&BTreeSet<usize>> {
        self.dead_neighbors.get(&d).ok_or_else(|| {
            Error::input(format!(
                "vertex {} is not in the dead set",
                self.graph.name(d)
            ))
        })
    }

    /// Whether `d_t` is a generator: no initial letter of `t` is a neighbor
    /// of `d`.
    pub fn in_td(&self, d: usize, t: &TraceWord) -> Result<bool> {
        let neighbors = self.neighbors_of(d)?;
        Ok(t.initial_letters()
            .iter()
            .all(|l| !neighbors.contains(&l.vertex)))
    }

    /// Validated symbol constructor.
    pub fn symbol(&self, d: usize, t: TraceWord) -> Result<KernelSymbol> {
        if !Arc::ptr_eq(t.graph(), &self.living) && **t.graph() != *self.living {
            return Err(Error::input("index word is not over the living subgraph"));
        }
        if !self.in_td(d, &t)? {
            return Err(Error::input(format!(
                "{} is not a kernel generator",
                self.render_symbol(&KernelSymbol { base: d, index: t })
            )));
        }
        Ok(KernelSymbol { base: d, index: t })
    }

    pub fn unit_symbol(&self, d: usize) -> Result<KernelSymbol> {
        self.symbol(d, TraceWord::identity(&self.living))
    }

    /// The action of one living letter (living index) on a generator.
    pub fn alpha(&self, a: Letter, s: &KernelSymbol) -> KernelSymbol {
        let moved = s.index.append(a);
        if self.in_td(s.base, &moved).expect("symbols carry dead bases") {
            KernelSymbol { base: s.base, index: moved }
        } else {
            s.clone()
        }
    }

    pub fn alpha_word(&self, u: &TraceWord, w: &KernelWord) -> KernelWord {
        self.act_by(u, w)
    }

    /// All normal forms over the living subgraph of length at most `depth`.
    pub fn living_elements(&self, depth: usize) -> Vec<TraceWord> {
        let letters = self.living_letters();
        let mut all = vec![TraceWord::identity(&self.living)];
        let mut seen: HashSet<TraceWord> = all.iter().cloned().collect();
        let mut frontier = all.clone();
        for length in 1..=depth {
            let mut next = Vec::new();
            for t in &frontier {
                for &a in &letters {
                    let ta = t.append(a);
                    if ta.len() == length && seen.insert(ta.clone()) {
                        next.push(ta);
                    }
                }
            }
            next.sort();
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all
    }

    /// Signed letters of the living subgraph, in shortlex order.
    pub fn living_letters(&self) -> Vec<Letter> {
        (0..self.living.vertex_count())
            .flat_map(|v| [Letter::positive(v), Letter::negative(v)])
            .collect()
    }

    /// Every generator `d_t` with `|t| ≤ depth`.
    pub fn symbols_up_to(&self, depth: usize) -> Vec<KernelSymbol> {
        let elements = self.living_elements(depth);
        let mut symbols = Vec::new();
        for d in self.dead.iter() {
            for t in &elements {
                if self.in_td(d, t).expect("dead base") {
                    symbols.push(KernelSymbol { base: d, index: t.clone() });
                }
            }
        }
        symbols
    }

    /// Image of an ambient generator: `d ↦ (d_1, 1)`, `a ↦ (1, a)`.
    pub fn generator_image(&self, v: usize) -> Result<ElementOf<Self>> {
        if self.dead.contains(v) {
            Ok(semidirect::kernel_element(
                self,
                FreeWord::generator(self.unit_symbol(v)?),
            ))
        } else {
            let a = self
                .living_index(v)
                .ok_or_else(|| Error::input(format!("vertex index {v} out of range")))?;
            Ok(semidirect::quotient_element::<Self>(TraceWord::generator(
                &self.living,
                Letter::positive(a),
            )?))
        }
    }

    /// Evaluates every defining commutator of `AΓ` in `F ⋊ AΓ_L`.
    pub fn relator_check(&self) -> Result<RelatorReport> {
        relator_check_with(self, self)
    }

    /// Prose description of each `T_d`.
    pub fn kernel_schema(&self) -> Vec<String> {
        self.dead
            .iter()
            .map(|d| {
                let ns = &self.dead_neighbors[&d];
                if ns.is_empty() {
                    format!(
                        "T_{0} = {{ {0}_t : t in A(Γ_L) }}",
                        self.graph.name(d)
                    )
                } else {
                    let names: Vec<&str> = ns.iter().map(|&v| self.living.name(v)).collect();
                    format!(
                        "T_{0} = {{ {0}_t : no geodesic of t starts with {1} or an inverse }}",
                        self.graph.name(d),
                        names.join(", ")
                    )
                }
            })
            .collect()
    }

    pub fn check_automorphisms(&self, depth: usize) -> AutomorphismReport {
        let symbols = self.symbols_up_to(depth);
        let letters = self.living_letters();
        let mut report = AutomorphismReport::default();
        let render = |s: &KernelSymbol| self.render_symbol(s);

        for s in &symbols {
            for &a in &letters {
                // α_{a⁻¹} ∘ α_a = id
                report.inverse_pairs.checked += 1;
                let back = self.alpha(a.inverted(), &self.alpha(a, s));
                if back != *s {
                    report.inverse_pairs.fail(format!(
                        "{} does not return under {} then its inverse",
                        render(s),
                        a.render(&self.living)
                    ));
                }

                // condition (*): d_{ta} ∉ T_d ⟺ a ~ d and every letter of t ~ a
                report.condition_star.checked += 1;
                let moved = s.index.append(a);
                let left = !self.in_td(s.base, &moved).expect("dead base");
                let right = self.graph.adjacent(self.ambient_vertex(a.vertex), s.base)
                    && s.index.all_letters_adjacent_to(a.vertex);
                if left != right {
                    report.condition_star.fail(format!(
                        "membership of {}·{} disagrees with the adjacency test",
                        render(s),
                        a.render(&self.living)
                    ));
                }
            }
            for &(u, v) in self.living.edges() {
                for a in [Letter::positive(u), Letter::negative(u)] {
                    for b in [Letter::positive(v), Letter::negative(v)] {
                        report.commutation.checked += 1;
                        let ab = self.alpha(b, &self.alpha(a, s));
                        let ba = self.alpha(a, &self.alpha(b, s));
                        if ab != ba {
                            report.commutation.fail(format!(
                                "{} and {} do not commute on {}",
                                a.render(&self.living),
                                b.render(&self.living),
                                render(s)
                            ));
                        }
                    }
                }
            }
        }
        report
    }
}

pub(crate) fn relator_check_with<A>(split: &DeadSplit, action: &A) -> Result<RelatorReport>
where
    A: Action<Symbol = KernelSymbol, Quotient = TraceWord>,
{
    let g = &split.graph;
    let mut pairs = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        pairs.push((
            g.name(u).to_string(),
            split.generator_image(u)?,
            g.name(v).to_string(),
            split.generator_image(v)?,
        ));
    }
    semidirect::check_relators(action, &pairs)
}

impl Action for DeadSplit {
    type Symbol = KernelSymbol;
    type Quotient = TraceWord;

    fn quotient_identity(&self) -> TraceWord {
        TraceWord::identity(&self.living)
    }

    fn quotient_multiply(&self, a: &TraceWord, b: &TraceWord) -> Result<TraceWord> {
        a.multiply(b)
    }

    fn quotient_inverse(&self, a: &TraceWord) -> TraceWord {
        a.invert()
    }

    fn quotient_letters(&self, a: &TraceWord) -> Vec<Letter> {
        a.letters().to_vec()
    }

    fn act(&self, letter: Letter, symbol: &KernelSymbol) -> KernelWord {
        FreeWord::generator(self.alpha(letter, symbol))
    }

    fn render_symbol(&self, s: &KernelSymbol) -> String {
        render_indexed(self.graph.name(s.base), &s.index.to_string(), s.index.len())
    }

    fn render_quotient(&self, q: &TraceWord) -> String {
        q.to_string()
    }
}

/// `d_1`, `d_b`, `d_{b a^-1}`.
pub(crate) fn render_indexed(base: &str, index: &str, len: usize) -> String {
    match len {
        0 => format!("{base}_1"),
        1 if !index.ends_with("^-1") => format!("{base}_{index}"),
        _ => format!("{base}_{{{index}}}"),
    }
}

/// Tally of one family of checks, with the first few failures kept.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub checked: usize,
    pub failed: usize,
    pub examples: Vec<String>,
}

impl CheckTally {
    pub(crate) fn fail(&mut self, message: String) {
        self.failed += 1;
        if self.examples.len() < 5 {
            self.examples.push(message);
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub(crate) fn absorb(&mut self, other: CheckTally) {
        self.checked += other.checked;
        self.failed += other.failed;
        for e in other.examples {
            if self.examples.len() < 5 {
                self.examples.push(e);
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AutomorphismReport {
    pub inverse_pairs: CheckTally,
    pub commutation: CheckTally,
    pub condition_star: CheckTally,
}

impl AutomorphismReport {
    pub fn passed(&self) -> bool {
        self.inverse_pairs.passed() && self.commutation.passed() && self.condition_star.passed()
    }
}

/// One level `AΓ_i ≅ F_i ⋊ AΓ_{i+1}` of a tower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerLevel {
    pub color: usize,
    pub dead: Vec<String>,
    pub ambient: Vec<String>,
    pub living: Vec<String>,
    pub living_edges: usize,
    pub kernel_schema: Vec<String>,
    pub action_rule: String,
    pub relators: RelatorReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerDescription {
    pub length: usize,
    pub levels: Vec<TowerLevel>,
}

const ACTION_RULE: &str =
    "a sends d_t to d_{ta} when d_{ta} is a generator and fixes d_t otherwise; a^-1 likewise with ta^-1";

/// One level per color: the first remaining color class is killed and the
/// construction recurses on the graph induced by the other classes. The
/// last level has no living vertices, so its group is free on that class.
pub fn build_tower(graph: &Arc<Graph>, coloring: &Coloring) -> Result<TowerDescription> {
    let checked = Coloring::new(graph, coloring.assignment().to_vec())?;
    let classes = checked.classes();
    let mut current = Arc::clone(graph);
    let mut levels = Vec::with_capacity(classes.len());
    for (color, class) in classes.iter().enumerate() {
        let dead: VertexSet = class
            .iter()
            .map(|v| current.vertex(graph.name(v)).expect("class survives peeling"))
            .collect();
        let split = DeadSplit::new(Arc::clone(&current), dead)?;
        levels.push(TowerLevel {
            color,
            dead: split.dead().names(&current),
            ambient: current.names().to_vec(),
            living: split.living().names().to_vec(),
            living_edges: split.living().edge_count(),
            kernel_schema: split.kernel_schema(),
            action_rule: ACTION_RULE.to_string(),
            relators: split.relator_check()?,
        });
        current = Arc::clone(split.living());
    }
    Ok(TowerDescription {
        length: levels.len(),
        levels,
    })
}

impl fmt::Display for TowerDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tower of length {}", self.length)?;
        for level in &self.levels {
            writeln!(
                f,
                "level {}: kill {{{}}} in A({}), quotient A({}) with {} edges",
                level.color + 1,
                level.dead.join(", "),
                level.ambient.join(" "),
                if level.living.is_empty() {
                    "∅".to_string()
                } else {
                    level.living.join(" ")
                },
                level.living_edges
            )?;
            for schema in &level.kernel_schema {
                writeln!(f, "  {schema}")?;
            }
            let trivial = level.relators.relators.iter().filter(|r| r.trivial).count();
            writeln!(
                f,
                "  relators trivial: {}/{}",
                trivial,
                level.relators.relators.len()
            )?;
        }
        Ok(())
    }
}

/// Bounds on the poly-free length with the facts that produced them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PflBounds {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub justification: Vec<String>,
}

impl fmt::Display for PflBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some(n) => write!(f, "exact {n}"),
            None => write!(f, "between {} and {}", self.lower, self.upper),
        }
    }
}

/// `clq ≤ pfl ≤ chr`, sharpened to exactly 1 for edgeless graphs, exactly 2
/// when a doubly breakable set exists, and at least 3 when it provably does
/// not. A search that hits its cap leaves the plain bounds in place.
pub fn pfl_bounds(graph: &Graph, limits: &Limits) -> Result<PflBounds> {
    let clq = graph.clique_number(limits)?;
    let (chr, _) = graph.chromatic_number(limits)?;
    let mut justification = vec![
        format!("clique number {clq} is a lower bound"),
        format!("chromatic number {chr} is an upper bound"),
    ];
    let (mut lower, mut upper) = (clq, chr);
    if graph.edge_count() == 0 {
        justification.push("edgeless: the group is free".to_string());
        lower = 1;
        upper = 1;
    } else {
        match crate::dbcp::find_d(graph, limits) {
            Ok(Some(cert)) => {
                justification.push(format!(
                    "doubly breakable set {{{}}} gives length exactly 2",
                    cert.dead.names(graph).join(", ")
                ));
                lower = 2;
                upper = 2;
            }
            Ok(None) => {
                justification.push(
                    "no doubly breakable set: length 2 is impossible, and length 1 needs an edgeless graph"
                        .to_string(),
                );
                lower = lower.max(3);
            }
            Err(Error::Resource { cap, .. }) => {
                justification.push(format!(
                    "doubly breakable set search skipped (more than {cap} vertices)"
                ));
                lower = lower.max(2);
            }
            Err(e) => return Err(e),
        }
    }
    let exact = (lower == upper).then_some(lower);
    Ok(PflBounds {
        lower,
        upper,
        exact,
        justification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::words::{normalize, parse_word};

    fn dab() -> Arc<Graph> {
        Arc::new(Graph::new(&["d", "a", "b"], &[("d", "a")]).unwrap())
    }

    fn split(g: &Arc<Graph>, dead: &[&str]) -> DeadSplit {
        DeadSplit::new(Arc::clone(g), g.vertex_set(dead).unwrap()).unwrap()
    }

    fn living_word(s: &DeadSplit, text: &str) -> TraceWord {
        normalize(s.living(), &parse_word(s.living(), text).unwrap()).unwrap()
    }

    #[test]
    fn membership() {
        let g = dab();
        let s = split(&g, &["d"]);
        assert!(s.in_td(0, &TraceWord::identity(s.living())).unwrap());
        assert!(!s.in_td(0, &living_word(&s, "a")).unwrap());
        let ba = living_word(&s, "b a");
        assert_eq!(ba.to_string(), "b a");
        assert!(s.in_td(0, &ba).unwrap());
        // every geodesic of "b a" starts with b
        let reps = ba.geodesic_representatives(12).unwrap();
        assert!(reps.iter().all(|w| w[0] == Letter::positive(1)));
        assert!(s.in_td(1, &ba).is_err());

        let edge = Arc::new(Graph::new(&["d", "a"], &[("d", "a")]).unwrap());
        let s = split(&edge, &["d"]);
        assert!(!s.in_td(0, &living_word(&s, "a")).unwrap());
    }

    #[test]
    fn alpha_examples() {
        let g = dab();
        let s = split(&g, &["d"]);
        let d1 = s.unit_symbol(0).unwrap();
        let a = Letter::positive(s.living_index(1).unwrap());
        let b = Letter::positive(s.living_index(2).unwrap());
        assert_eq!(s.alpha(a, &d1), d1);
        let db = s.alpha(b, &d1);
        assert_eq!(s.render_symbol(&db), "d_b");
        let dba = s.alpha(a, &db);
        assert_eq!(dba.index, living_word(&s, "b a"));
        assert_eq!(s.render_symbol(&dba), "d_{b a}");
    }

    #[test]
    fn alpha_word_identities() {
        let g = Arc::new(fixtures::pentagon());
        let s = split(&g, &["a", "c"]);
        let w = FreeWord::generator(s.unit_symbol(0).unwrap())
            .mul(&FreeWord::letter(s.unit_symbol(2).unwrap(), true));
        let empty = TraceWord::identity(s.living());
        assert_eq!(s.alpha_word(&empty, &w), w);
        let round = normalize(s.living(), &parse_word(s.living(), "d d^-1").unwrap()).unwrap();
        assert_eq!(s.alpha_word(&round, &w), w);
        // d and e are adjacent in the living subgraph
        let d = Letter::positive(s.living_index(3).unwrap());
        let e = Letter::positive(s.living_index(4).unwrap());
        for sym in s.symbols_up_to(3) {
            let word = FreeWord::generator(sym);
            let de = normalize(s.living(), &[d, e]).unwrap();
            let ed_raw: KernelWord = s.act_on_word(d, &s.act_on_word(e, &word));
            assert_eq!(s.alpha_word(&de, &word), ed_raw);
        }
    }

    #[test]
    fn semidirect_examples() {
        let edge = Arc::new(Graph::new(&["d", "a"], &[("d", "a")]).unwrap());
        let s = split(&edge, &["d"]);
        let id = semidirect::identity(&s);
        let d = s.generator_image(0).unwrap();
        let a = s.generator_image(1).unwrap();
        assert_eq!(semidirect::multiply(&s, &id, &d).unwrap(), d);
        assert_eq!(semidirect::multiply(&s, &d, &id).unwrap(), d);
        let conj = semidirect::multiply(
            &s,
            &semidirect::multiply(&s, &semidirect::inverse(&s, &a), &d).unwrap(),
            &a,
        )
        .unwrap();
        assert_eq!(conj, d);

        let g = dab();
        let s = split(&g, &["d"]);
        let d = s.generator_image(0).unwrap();
        let b = s.generator_image(2).unwrap();
        let conj = semidirect::multiply(
            &s,
            &semidirect::multiply(&s, &semidirect::inverse(&s, &b), &d).unwrap(),
            &b,
        )
        .unwrap();
        assert_eq!(semidirect::render(&s, &conj), "(d_b, ε)");
    }

    #[test]
    fn relators() {
        let edge = Arc::new(Graph::new(&["d", "a"], &[("d", "a")]).unwrap());
        assert!(split(&edge, &["d"]).relator_check().unwrap().all_trivial);
        let c5 = Arc::new(fixtures::pentagon());
        let report = split(&c5, &["a", "c"]).relator_check().unwrap();
        assert_eq!(report.relators.len(), 5);
        assert!(report.all_trivial);
        let ex = Arc::new(fixtures::splitting_example());
        assert!(split(&ex, &["d", "e"]).relator_check().unwrap().all_trivial);
    }

    #[test]
    fn mutated_action_breaks_relators() {
        let c5 = Arc::new(fixtures::pentagon());
        let s = split(&c5, &["a", "c"]);
        let a1 = s.unit_symbol(0).unwrap();
        let b = Letter::positive(s.living_index(1).unwrap());
        let d = Letter::positive(s.living_index(3).unwrap());
        let bad = semidirect::Mutated::swap(&s, a1, b, d);
        assert!(!relator_check_with(&s, &bad).unwrap().all_trivial);
    }

    #[test]
    fn towers() {
        let limits = Limits::default();
        let edgeless = Arc::new(fixtures::edgeless(3));
        let (_, coloring) = edgeless.chromatic_number(&limits).unwrap();
        let tower = build_tower(&edgeless, &coloring).unwrap();
        assert_eq!(tower.length, 1);
        assert!(tower.levels[0].living.is_empty());

        let c5 = Arc::new(fixtures::pentagon());
        let (_, coloring) = c5.chromatic_number(&limits).unwrap();
        let tower = build_tower(&c5, &coloring).unwrap();
        assert_eq!(tower.length, 3);
        assert_eq!(tower.levels[0].dead, ["a", "c"]);
        assert!(tower.levels.iter().all(|l| l.relators.all_trivial));
        let sizes: Vec<usize> = tower.levels.iter().map(|l| l.living.len()).collect();
        assert!(sizes.windows(2).all(|w| w[0] > w[1]));

        let k23 = Arc::new(fixtures::complete_bipartite(2, 3));
        let (_, coloring) = k23.chromatic_number(&limits).unwrap();
        assert_eq!(build_tower(&k23, &coloring).unwrap().length, 2);
    }

    #[test]
    fn improper_coloring_is_rejected() {
        let c5 = Arc::new(fixtures::pentagon());
        let other = fixtures::edgeless(5);
        let (_, coloring) = other.chromatic_number(&Limits::default()).unwrap();
        assert!(build_tower(&c5, &coloring).is_err());
    }

    #[test]
    fn bounds() {
        let limits = Limits::default();
        assert_eq!(pfl_bounds(&fixtures::pentagon(), &limits).unwrap().exact, Some(2));
        assert_eq!(pfl_bounds(&fixtures::prism(), &limits).unwrap().exact, Some(3));
        assert_eq!(pfl_bounds(&fixtures::complete(3), &limits).unwrap().exact, Some(3));
        assert_eq!(pfl_bounds(&fixtures::edgeless(4), &limits).unwrap().exact, Some(1));
        let k4 = pfl_bounds(&fixtures::complete(4), &limits).unwrap();
        assert_eq!((k4.lower, k4.upper), (4, 4));
    }

    #[test]
    fn automorphisms_on_pentagon() {
        let c5 = Arc::new(fixtures::pentagon());
        let report = split(&c5, &["a", "c"]).check_automorphisms(3);
        assert!(report.passed(), "{report:?}");
        assert!(report.commutation.checked > 0);
    }
}
