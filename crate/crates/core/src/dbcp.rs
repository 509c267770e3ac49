//! The doubly breakable cycle property and the length-2 splitting
//! `AΓ ≅ F ⋊ F(C)` that it yields.
//!
//! A set `D` is doubly breakable when it is independent and meets every
//! cycle at least twice. This is decided structurally: `Γ − D` must be a
//! forest and no `d ∈ D` may have two neighbors in one of its trees. The
//! least vertex of each tree is its representative; `C` is the set of
//! representatives and `X` the remaining living vertices. The quotient is
//! free on `C` and the kernel is free on the symbols `d_t` and `x_t`,
//! where `x_t` stands for the conjugate by `t` of `x⁻¹ r_x`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freegrp::{self, FreeWord, Index, SubgroupPresentation};
use crate::graph::{Graph, Limits, VertexSet, MASK_LIMIT};
use crate::semidirect::{self, Action, ElementOf, RelatorReport};
use crate::tower::{render_indexed, CheckTally};
use crate::words::Letter;

/// Why a proposed dead set is not doubly breakable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Refusal {
    NoEdges,
    NotIndependent { edge: (String, String) },
    NotForest { cycle: Vec<String> },
    DoubleNeighbor { dead: String, first: String, second: String },
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refusal::NoEdges => f.write_str("DBCP requires an edge"),
            Refusal::NotIndependent { edge: (u, v) } => {
                write!(f, "dead set is not independent: edge {u} {v}")
            }
            Refusal::NotForest { cycle } => {
                write!(f, "the living subgraph has the cycle {}", cycle.join(" "))
            }
            Refusal::DoubleNeighbor { dead, first, second } => write!(
                f,
                "{dead} has two neighbors {first} and {second} in one living tree"
            ),
        }
    }
}

/// A doubly breakable set with the tree data the splitting needs. All
/// vertices are ambient indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DbcpCertificate {
    pub dead: VertexSet,
    /// Trees of `Γ − D`, ordered by least vertex.
    pub components: Vec<VertexSet>,
    /// Least vertex of each tree, parallel to `components`.
    pub representatives: Vec<usize>,
    /// Living vertex → its representative.
    pub rep_of: BTreeMap<usize, usize>,
    /// Living vertex `y` → the tree path `y, …, r_y`.
    pub paths: BTreeMap<usize, Vec<usize>>,
}

pub type Verdict = std::result::Result<DbcpCertificate, Refusal>;

fn check_subset(graph: &Graph, s: &VertexSet) -> Result<()> {
    match s.iter().find(|&v| v >= graph.vertex_count()) {
        Some(v) => Err(Error::input(format!("vertex index {v} out of range"))),
        None => Ok(()),
    }
}

/// Conditions (i)–(iii) without the requirement that the graph have an
/// edge.
fn structural_refusal(graph: &Graph, dead: &VertexSet) -> Result<Option<Refusal>> {
    check_subset(graph, dead)?;
    if let Some(&(u, v)) = graph
        .edges()
        .iter()
        .find(|&&(u, v)| dead.contains(u) && dead.contains(v))
    {
        return Ok(Some(Refusal::NotIndependent {
            edge: (graph.name(u).to_string(), graph.name(v).to_string()),
        }));
    }
    let living: VertexSet = (0..graph.vertex_count())
        .filter(|&v| !dead.contains(v))
        .collect();
    let (forest, map) = graph.induced(&living)?;
    if let Some(cycle) = forest.find_cycle() {
        return Ok(Some(Refusal::NotForest {
            cycle: cycle.iter().map(|&v| graph.name(map[v]).to_string()).collect(),
        }));
    }
    let mut tree_of = vec![usize::MAX; graph.vertex_count()];
    for (i, comp) in forest.connected_components().iter().enumerate() {
        for v in comp.iter() {
            tree_of[map[v]] = i;
        }
    }
    for d in dead.iter() {
        let mut seen: HashMap<usize, usize> = HashMap::new();
        for &w in graph.neighbor_slice(d) {
            if let Some(&first) = seen.get(&tree_of[w]) {
                return Ok(Some(Refusal::DoubleNeighbor {
                    dead: graph.name(d).to_string(),
                    first: graph.name(first).to_string(),
                    second: graph.name(w).to_string(),
                }));
            }
            seen.insert(tree_of[w], w);
        }
    }
    Ok(None)
}

/// The structural test alone: `D` independent, `Γ − D` a forest, and at
/// most one neighbor of each `d` per tree.
pub fn structural_condition(graph: &Graph, dead: &VertexSet) -> Result<bool> {
    Ok(structural_refusal(graph, dead)?.is_none())
}

/// The defining condition checked directly: every simple cycle contains
/// at least two vertices of `D`.
pub fn cycle_condition(graph: &Graph, dead: &VertexSet, limits: &Limits) -> Result<bool> {
    check_subset(graph, dead)?;
    Ok(graph
        .enumerate_simple_cycles(limits)?
        .iter()
        .all(|c| c.iter().filter(|&&v| dead.contains(v)).count() >= 2))
}

/// Accepts `D` exactly when it is doubly breakable, returning the tree data
/// used by the splitting.
pub fn verify_d(graph: &Graph, dead: &VertexSet) -> Result<Verdict> {
    check_subset(graph, dead)?;
    if graph.edge_count() == 0 {
        return Ok(Err(Refusal::NoEdges));
    }
    if let Some(refusal) = structural_refusal(graph, dead)? {
        return Ok(Err(refusal));
    }
    let living: VertexSet = (0..graph.vertex_count())
        .filter(|&v| !dead.contains(v))
        .collect();
    let (forest, map) = graph.induced(&living)?;
    let mut components = Vec::new();
    let mut representatives = Vec::new();
    let mut rep_of = BTreeMap::new();
    let mut paths = BTreeMap::new();
    for comp in forest.connected_components() {
        let root = comp.first().expect("components are nonempty");
        // parents towards the root; the tree path is unique
        let mut parent: HashMap<usize, usize> = HashMap::from([(root, root)]);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in forest.neighbor_slice(u) {
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(w) {
                    e.insert(u);
                    queue.push_back(w);
                }
            }
        }
        for v in comp.iter() {
            let mut path = vec![map[v]];
            let mut cur = v;
            while cur != root {
                cur = parent[&cur];
                path.push(map[cur]);
            }
            rep_of.insert(map[v], map[root]);
            paths.insert(map[v], path);
        }
        components.push(comp.iter().map(|v| map[v]).collect());
        representatives.push(map[root]);
    }
    Ok(Ok(DbcpCertificate {
        dead: dead.clone(),
        components,
        representatives,
        rep_of,
        paths,
    }))
}

/// Whether `living` contains a cycle or some vertex of `dead` has two
/// neighbors in one of its components.
fn blocked(adjacency: &[u64], dead: u64, living: u64) -> bool {
    let n = adjacency.len();
    let mut root: Vec<usize> = (0..n).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    for u in 0..n {
        if living >> u & 1 == 0 {
            continue;
        }
        let mut later = adjacency[u] & living & !((2u64 << u) - 1);
        while later != 0 {
            let v = later.trailing_zeros() as usize;
            later &= later - 1;
            let (ru, rv) = (find(&mut root, u), find(&mut root, v));
            if ru == rv {
                return true;
            }
            root[ru.max(rv)] = ru.min(rv);
        }
    }
    for d in 0..n {
        if dead >> d & 1 == 0 {
            continue;
        }
        let mut trees = 0u64;
        let mut ns = adjacency[d] & living;
        while ns != 0 {
            let w = ns.trailing_zeros() as usize;
            ns &= ns - 1;
            let r = find(&mut root, w);
            if trees >> r & 1 == 1 {
                return true;
            }
            trees |= 1 << r;
        }
    }
    false
}

/// The lexicographically least doubly breakable set, comparing sets as
/// increasing vertex sequences, or `None` when there is none. Forests with
/// an edge yield `D = ∅`; edgeless graphs never qualify.
pub fn find_d(graph: &Graph, limits: &Limits) -> Result<Option<DbcpCertificate>> {
    let n = graph.vertex_count();
    let cap = limits.search_vertices.min(MASK_LIMIT);
    if n > cap {
        return Err(Error::Resource {
            what: "doubly breakable set search",
            cap,
            actual: n,
        });
    }
    if graph.edge_count() == 0 {
        return Ok(None);
    }
    let adjacency: Vec<u64> = (0..n)
        .map(|v| graph.neighbor_slice(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    match search(&adjacency, all, 0, 0) {
        Some(mask) => match verify_d(graph, &VertexSet::from_mask(mask))? {
            Ok(cert) => Ok(Some(cert)),
            Err(r) => unreachable!("search accepted a refused set: {r}"),
        },
        None => Ok(None),
    }
}

/// Preorder over increasing sequences, so the first hit is lex-least.
fn search(adjacency: &[u64], all: u64, dead: u64, next: usize) -> Option<u64> {
    if !blocked(adjacency, dead, all & !dead) {
        return Some(dead);
    }
    for v in next..adjacency.len() {
        if adjacency[v] & dead != 0 {
            continue;
        }
        let grown = dead | 1 << v;
        // vertices up to v that stay out are living for good
        let settled = ((2u64 << v).wrapping_sub(1)) & !grown;
        if blocked(adjacency, grown, settled) {
            continue;
        }
        if let Some(found) = search(adjacency, all, grown, v + 1) {
            return Some(found);
        }
    }
    None
}

/// Kernel generator `d_t` or `x_t`; `base` is an ambient vertex outside
/// `C` and `index` a reduced word over `C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitSymbol {
    pub base: usize,
    pub index: FreeWord<usize>,
}

pub type SplitWord = FreeWord<SplitSymbol>;

/// `AΓ ≅ F ⋊ F(C)` for a doubly breakable set.
#[derive(Clone, Debug)]
pub struct Length2Splitting {
    graph: Arc<Graph>,
    certificate: DbcpCertificate,
    representatives: Vec<usize>,
    others: Vec<usize>,
    neighbors: BTreeMap<usize, BTreeSet<usize>>,
    represented: BTreeMap<usize, BTreeSet<usize>>,
    /// `x(d, c)`: the neighbor of `d` in the tree of `c`, when it is not `c`.
    bridge: BTreeMap<(usize, usize), usize>,
}

impl Length2Splitting {
    /// Builds the splitting for `dead`, refusing sets that are not doubly
    /// breakable.
    pub fn new(graph: Arc<Graph>, dead: &VertexSet) -> Result<Self> {
        let certificate = verify_d(&graph, dead)?.map_err(|r| Error::input(r.to_string()))?;
        let mut representatives = certificate.representatives.clone();
        representatives.sort_unstable();
        let others = certificate
            .rep_of
            .iter()
            .filter(|(y, r)| y != r)
            .map(|(&y, _)| y)
            .collect();
        let mut neighbors = BTreeMap::new();
        let mut represented = BTreeMap::new();
        let mut bridge = BTreeMap::new();
        for d in dead.iter() {
            let ns: BTreeSet<usize> = graph.neighbor_slice(d).iter().copied().collect();
            let mut rn = BTreeSet::new();
            for &y in &ns {
                let c = certificate.rep_of[&y];
                rn.insert(c);
                if y != c {
                    bridge.insert((d, c), y);
                }
            }
            neighbors.insert(d, ns);
            represented.insert(d, rn);
        }
        Ok(Length2Splitting {
            graph,
            certificate,
            representatives,
            others,
            neighbors,
            represented,
            bridge,
        })
    }

    pub fn from_certificate(graph: Arc<Graph>, certificate: &DbcpCertificate) -> Result<Self> {
        Self::new(graph, &certificate.dead)
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn certificate(&self) -> &DbcpCertificate {
        &self.certificate
    }

    /// `C`, in vertex order.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    /// `X = L − C`, in vertex order.
    pub fn others(&self) -> &[usize] {
        &self.others
    }

    pub fn rep(&self, y: usize) -> Option<usize> {
        self.certificate.rep_of.get(&y).copied()
    }

    /// `RN_d`: representatives of the trees containing neighbors of `d`.
    pub fn represented_neighbors(&self, d: usize) -> Option<&BTreeSet<usize>> {
        self.represented.get(&d)
    }

    pub fn bridge(&self, d: usize, c: usize) -> Option<usize> {
        self.bridge.get(&(d, c)).copied()
    }

    /// Bases of kernel symbols: `D ∪ X` in vertex order.
    pub fn kernel_bases(&self) -> Vec<usize> {
        (0..self.graph.vertex_count())
            .filter(|&v| self.certificate.dead.contains(v) || self.others.binary_search(&v).is_ok())
            .collect()
    }

    /// Letters of `C` an index of `base` may not start with.
    fn forbidden_starts(&self, base: usize) -> Option<BTreeSet<usize>> {
        if let Some(rn) = self.represented.get(&base) {
            Some(rn.clone())
        } else if self.others.binary_search(&base).is_ok() {
            Some(BTreeSet::from([self.certificate.rep_of[&base]]))
        } else {
            None
        }
    }

    fn is_exceptional(&self, base: usize, c: usize) -> bool {
        match self.represented.get(&base) {
            Some(rn) => rn.contains(&c),
            None => self.certificate.rep_of[&base] == c,
        }
    }

    pub fn in_schema(&self, s: &SplitSymbol) -> bool {
        let Some(forbidden) = self.forbidden_starts(s.base) else {
            return false;
        };
        s.index
            .letters()
            .iter()
            .all(|l| self.representatives.binary_search(&l.symbol).is_ok())
            && s.index.first().is_none_or(|l| !forbidden.contains(&l.symbol))
    }

    pub fn symbol(&self, base: usize, index: FreeWord<usize>) -> Result<SplitSymbol> {
        let s = SplitSymbol { base, index };
        if self.in_schema(&s) {
            Ok(s)
        } else {
            Err(Error::input(format!(
                "{} is not a kernel generator",
                self.render_symbol(&s)
            )))
        }
    }

    pub fn unit(&self, base: usize) -> Result<SplitSymbol> {
        self.symbol(base, FreeWord::identity())
    }

    fn unit_word(&self, base: usize) -> SplitWord {
        FreeWord::generator(SplitSymbol {
            base,
            index: FreeWord::identity(),
        })
    }

    /// Reduced words over `C^{±1}` of length at most `depth`, shortest
    /// first and lexicographic within a length.
    pub fn quotient_words(&self, depth: usize) -> Vec<FreeWord<usize>> {
        let letters: Vec<FreeWord<usize>> = self
            .representatives
            .iter()
            .flat_map(|&c| [FreeWord::letter(c, false), FreeWord::letter(c, true)])
            .collect();
        let mut all = vec![FreeWord::identity()];
        let mut frontier = all.clone();
        for _ in 0..depth {
            let mut next = Vec::new();
            for t in &frontier {
                for l in &letters {
                    let tl = t.mul(l);
                    if tl.len() == t.len() + 1 {
                        next.push(tl);
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all
    }

    /// Every kernel generator with index length at most `depth`.
    pub fn symbols_up_to(&self, depth: usize) -> Vec<SplitSymbol> {
        let words = self.quotient_words(depth);
        let mut symbols = Vec::new();
        for base in self.kernel_bases() {
            for t in &words {
                let s = SplitSymbol {
                    base,
                    index: t.clone(),
                };
                if self.in_schema(&s) {
                    symbols.push(s);
                }
            }
        }
        symbols
    }

    /// `x^{(n)}_1, …, x^{(1)}_1`: the tree path of `x` without its
    /// representative, as unit symbols.
    fn path_units(&self, x: usize) -> Vec<SplitWord> {
        let path = &self.certificate.paths[&x];
        path[..path.len() - 1]
            .iter()
            .map(|&v| self.unit_word(v))
            .collect()
    }

    /// Image of `d_1` or `x_1` in the cases where the index does not simply
    /// grow.
    fn exceptional_image(&self, letter: Letter, base: usize) -> SplitWord {
        let c = letter.vertex;
        let unit = self.unit_word(base);
        if self.certificate.dead.contains(base) {
            if self.neighbors[&base].contains(&c) {
                return unit;
            }
            let y = self.unit_word(self.bridge[&(base, c)]);
            if letter.inverse {
                let w = self.act_on_word(letter, &y);
                w.mul(&unit).mul(&w.inverse())
            } else {
                unit.conjugate(&y)
            }
        } else {
            // p[0] = x^{(n)}, …, p[n-1] = x^{(1)}
            let p = self.path_units(base);
            let n = p.len();
            let mut word = FreeWord::identity();
            if letter.inverse {
                word = word.mul(&p[n - 1]);
                for k in (0..n - 1).rev() {
                    word = word.mul(&p[k]).mul(&p[k + 1].inverse());
                }
            } else {
                for k in 0..n - 1 {
                    word = word.mul(&p[k + 1].inverse()).mul(&p[k]);
                }
                word = word.mul(&p[n - 1]);
            }
            word
        }
    }

    /// Image of a vertex: `d ↦ d_1`, `c ↦ c`, `x ↦ r_x · x_1⁻¹`.
    pub fn generator_image(&self, v: usize) -> Result<ElementOf<Self>> {
        if v >= self.graph.vertex_count() {
            return Err(Error::input(format!("vertex index {v} out of range")));
        }
        if self.certificate.dead.contains(v) {
            return Ok(semidirect::kernel_element(self, self.unit_word(v)));
        }
        let r = self.certificate.rep_of[&v];
        let quotient = semidirect::quotient_element::<Self>(FreeWord::generator(r));
        if r == v {
            return Ok(quotient);
        }
        let x = semidirect::kernel_element(self, self.unit_word(v).inverse());
        semidirect::multiply(self, &quotient, &x)
    }

    pub fn relator_check(&self) -> Result<RelatorReport> {
        relator_check_with(self, self)
    }

    pub fn kernel_schema(&self) -> Vec<String> {
        let name = |v: usize| self.graph.name(v).to_string();
        self.kernel_bases()
            .into_iter()
            .map(|b| {
                let forbidden = self.forbidden_starts(b).expect("kernel base");
                let allowed: Vec<String> = self
                    .representatives
                    .iter()
                    .filter(|c| !forbidden.contains(c))
                    .map(|&c| name(c))
                    .collect();
                if allowed.is_empty() {
                    format!("T_{0} = {{ {0}_1 }}", name(b))
                } else {
                    format!(
                        "T_{0} = {{ {0}_1 }} ∪ {{ {0}_t : t starts with {1} or an inverse }}",
                        name(b),
                        allowed.join(", ")
                    )
                }
            })
            .collect()
    }

    /// Inverse pairs, the abelianized permutation, schema closure and the
    /// relators, on every symbol with index length at most `depth`.
    pub fn verify(&self, depth: usize) -> Result<Length2Report> {
        verify_with(self, self, depth)
    }

    /// Rows for every symbol with index length below `depth`, followed by a
    /// generic `b_t` row for each base with longer symbols; one column per
    /// representative.
    pub fn action_table(&self, depth: usize) -> ActionTable {
        let columns: Vec<String> = self
            .representatives
            .iter()
            .map(|&c| self.graph.name(c).to_string())
            .collect();
        let short = self.quotient_words(depth.saturating_sub(1));
        let mut rows = Vec::new();
        for base in self.kernel_bases() {
            for t in short.iter().filter(|t| t.len() < depth) {
                let s = SplitSymbol {
                    base,
                    index: t.clone(),
                };
                if !self.in_schema(&s) {
                    continue;
                }
                let entries = self
                    .representatives
                    .iter()
                    .map(|&c| {
                        let image = self.act(Letter::positive(c), &s);
                        TableEntry {
                            column: self.graph.name(c).to_string(),
                            text: self.entry_text(c, &s, &image),
                            word: Some(self.word_tokens(&image)),
                        }
                    })
                    .collect();
                rows.push(TableRow {
                    symbol: self.render_symbol(&s),
                    generic: false,
                    entries,
                });
            }
            let forbidden = self.forbidden_starts(base).expect("kernel base");
            let has_longer = self.representatives.iter().any(|c| !forbidden.contains(c));
            if has_longer {
                let b = self.graph.name(base);
                rows.push(TableRow {
                    symbol: format!("{b}_t"),
                    generic: true,
                    entries: columns
                        .iter()
                        .map(|c| TableEntry {
                            column: c.clone(),
                            text: format!("{b}_{{t{c}}}"),
                            word: None,
                        })
                        .collect(),
                });
            }
        }
        ActionTable {
            depth,
            columns,
            rows,
        }
    }

    /// Conjugates `σ^τ` by a single symbol keep the exponent notation.
    fn entry_text(&self, c: usize, s: &SplitSymbol, image: &SplitWord) -> String {
        let conjugated = self.certificate.dead.contains(s.base)
            && s.index.is_identity()
            && self.is_exceptional(s.base, c)
            && !self.neighbors[&s.base].contains(&c);
        if conjugated {
            let y = SplitSymbol {
                base: self.bridge[&(s.base, c)],
                index: FreeWord::identity(),
            };
            format!("{}^{{{}}}", self.render_symbol(s), self.render_symbol(&y))
        } else {
            self.render_kernel(image)
        }
    }

    fn word_tokens(&self, w: &SplitWord) -> Vec<String> {
        w.letters()
            .iter()
            .map(|l| {
                let s = self.render_symbol(&l.symbol);
                if l.inverse {
                    format!("{s}^-1")
                } else {
                    s
                }
            })
            .collect()
    }

    fn render_index(&self, t: &FreeWord<usize>) -> String {
        t.render(|&c| self.graph.name(c).to_string())
    }
}

pub(crate) fn relator_check_with<A>(split: &Length2Splitting, action: &A) -> Result<RelatorReport>
where
    A: Action<Symbol = SplitSymbol, Quotient = FreeWord<usize>>,
{
    let g = &split.graph;
    let mut pairs = Vec::with_capacity(g.edge_count());
    for &(u, v) in g.edges() {
        pairs.push((
            g.name(u).to_string(),
            image_under(split, action, u)?,
            g.name(v).to_string(),
            image_under(split, action, v)?,
        ));
    }
    semidirect::check_relators(action, &pairs)
}

/// `generator_image` computed with a possibly different action, so a
/// corrupted action also corrupts the image of `x`.
fn image_under<A>(split: &Length2Splitting, action: &A, v: usize) -> Result<ElementOf<A>>
where
    A: Action<Symbol = SplitSymbol, Quotient = FreeWord<usize>>,
{
    if split.certificate.dead.contains(v) || split.certificate.rep_of[&v] == v {
        return split.generator_image(v);
    }
    let r = semidirect::quotient_element::<A>(FreeWord::generator(split.certificate.rep_of[&v]));
    let x = semidirect::kernel_element(action, split.unit_word(v).inverse());
    semidirect::multiply(action, &r, &x)
}

pub(crate) fn verify_with<A>(split: &Length2Splitting, action: &A, depth: usize) -> Result<Length2Report>
where
    A: Action<Symbol = SplitSymbol, Quotient = FreeWord<usize>>,
{
    let mut inverse_pairs = CheckTally::default();
    let mut abelianization = CheckTally::default();
    let mut closure = CheckTally::default();
    let mut targets: HashMap<(Letter, SplitSymbol), SplitSymbol> = HashMap::new();
    for s in split.symbols_up_to(depth) {
        let unit = FreeWord::generator(s.clone());
        for &c in &split.representatives {
            for inverse in [false, true] {
                let l = Letter::new(c, inverse);
                let image = action.act(l, &s);
                let shown = || {
                    format!(
                        "{} under {}{}",
                        split.render_symbol(&s),
                        split.graph.name(c),
                        if inverse { "^-1" } else { "" }
                    )
                };

                inverse_pairs.checked += 1;
                if action.act_on_word(l.inverted(), &image) != unit {
                    inverse_pairs.fail(format!("{} is not undone by the inverse letter", shown()));
                }

                closure.checked += 1;
                if !image.letters().iter().all(|x| split.in_schema(&x.symbol)) {
                    closure.fail(format!("{} leaves the generating set", shown()));
                }

                abelianization.checked += 1;
                let sums = image.exponent_sums();
                match sums.iter().next() {
                    Some((target, 1)) if sums.len() == 1 => {
                        if let Some(prev) = targets.insert((l, target.clone()), s.clone()) {
                            abelianization.fail(format!(
                                "{} and {} have the same image",
                                split.render_symbol(&prev),
                                shown()
                            ));
                        }
                    }
                    _ => abelianization.fail(format!(
                        "{} is not a single basis element with sign +1",
                        shown()
                    )),
                }
            }
        }
    }
    let relators = relator_check_with(split, action)?;
    let passed = inverse_pairs.passed()
        && abelianization.passed()
        && closure.passed()
        && relators.all_trivial;
    Ok(Length2Report {
        depth,
        inverse_pairs,
        abelianization,
        closure,
        relators,
        passed,
    })
}

impl Action for Length2Splitting {
    type Symbol = SplitSymbol;
    type Quotient = FreeWord<usize>;

    fn quotient_identity(&self) -> FreeWord<usize> {
        FreeWord::identity()
    }

    fn quotient_multiply(&self, a: &FreeWord<usize>, b: &FreeWord<usize>) -> Result<FreeWord<usize>> {
        Ok(a.mul(b))
    }

    fn quotient_inverse(&self, a: &FreeWord<usize>) -> FreeWord<usize> {
        a.inverse()
    }

    fn quotient_letters(&self, a: &FreeWord<usize>) -> Vec<Letter> {
        a.letters()
            .iter()
            .map(|l| Letter::new(l.symbol, l.inverse))
            .collect()
    }

    fn act(&self, letter: Letter, s: &SplitSymbol) -> SplitWord {
        if s.index.is_identity() && self.is_exceptional(s.base, letter.vertex) {
            return self.exceptional_image(letter, s.base);
        }
        let moved = s
            .index
            .mul(&FreeWord::from_pairs([(letter.vertex, letter.inverse)]));
        FreeWord::generator(SplitSymbol {
            base: s.base,
            index: moved,
        })
    }

    fn render_symbol(&self, s: &SplitSymbol) -> String {
        render_indexed(self.graph.name(s.base), &self.render_index(&s.index), s.index.len())
    }

    fn render_quotient(&self, q: &FreeWord<usize>) -> String {
        if q.is_identity() {
            "ε".to_string()
        } else {
            self.render_index(q)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Length2Report {
    pub depth: usize,
    pub inverse_pairs: CheckTally,
    pub abelianization: CheckTally,
    pub closure: CheckTally,
    pub relators: RelatorReport,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub column: String,
    pub text: String,
    /// The image as a list of symbols, absent for generic rows.
    pub word: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub symbol: String,
    pub generic: bool,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionTable {
    pub depth: usize,
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
}

impl ActionTable {
    pub fn entry(&self, row: &str, column: &str) -> Option<&str> {
        let r = self.rows.iter().find(|r| r.symbol == row)?;
        r.entries
            .iter()
            .find(|e| e.column == column)
            .map(|e| e.text.as_str())
    }
}

impl fmt::Display for ActionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = |s: &str| s.chars().count();
        let mut widths = vec![self.rows.iter().map(|r| width(&r.symbol)).max().unwrap_or(0)];
        for (i, c) in self.columns.iter().enumerate() {
            let w = self
                .rows
                .iter()
                .map(|r| width(&r.entries[i].text))
                .chain([width(c)])
                .max()
                .unwrap_or(0);
            widths.push(w);
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - width(c))))
                .collect();
            format!("{} | {}", padded[0], padded[1..].join("  ")).trim_end().to_string()
        };
        let mut header = vec![""];
        header.extend(self.columns.iter().map(String::as_str));
        let header = line(header);
        writeln!(f, "{header}")?;
        writeln!(f, "{}", "-".repeat(width(&header)))?;
        for r in &self.rows {
            let mut cells = vec![r.symbol.as_str()];
            cells.extend(r.entries.iter().map(|e| e.text.as_str()));
            writeln!(f, "{}", line(cells))?;
        }
        Ok(())
    }
}

/// `k`-side data of a length-2 splitting: `δ = |D|`, the number of living
/// trees, and the degree of each dead vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitData {
    pub dead: usize,
    pub components: usize,
    pub degrees: Vec<usize>,
}

impl SplitData {
    pub fn of(graph: &Graph, cert: &DbcpCertificate) -> Self {
        SplitData {
            dead: cert.dead.len(),
            components: cert.components.len(),
            degrees: cert.dead.iter().map(|d| graph.degree(d)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub left: &'static str,
    pub right: &'static str,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub vertices: usize,
    pub edges: usize,
    pub triangle_free: bool,
    pub chi_ve: Option<i64>,
    pub splitting: Option<SplitData>,
    pub chi_cd: Option<i64>,
    pub bipartite: Option<(usize, usize)>,
    pub chi_kq: Option<i64>,
    pub agreements: Vec<Agreement>,
}

impl EulerReport {
    pub fn all_agree(&self) -> bool {
        self.agreements.iter().all(|a| a.equal)
    }
}

/// `1 − v + e`, defined for triangle-free graphs only.
pub fn chi_ve(graph: &Graph) -> Result<i64> {
    if graph.has_triangle() {
        return Err(Error::input("1 - v + e needs a triangle-free graph"));
    }
    Ok(1 - graph.vertex_count() as i64 + graph.edge_count() as i64)
}

/// `1 − c + Σ (g_i − 1)`.
pub fn chi_cd(data: &SplitData) -> i64 {
    1 - data.components as i64 + data.degrees.iter().map(|&g| g as i64 - 1).sum::<i64>()
}

/// `(k − 1)(q − 1)`.
pub fn chi_kq(k: usize, q: usize) -> i64 {
    (k as i64 - 1) * (q as i64 - 1)
}

/// Every applicable formula with pairwise agreement flags.
pub fn euler(
    graph: &Graph,
    certificate: Option<&DbcpCertificate>,
    bipartite: Option<(usize, usize)>,
) -> EulerReport {
    let ve = chi_ve(graph).ok();
    let splitting = certificate.map(|c| SplitData::of(graph, c));
    let cd = splitting.as_ref().map(chi_cd);
    let kq = bipartite.map(|(k, q)| chi_kq(k, q));
    let values = [("chi_ve", ve), ("chi_cd", cd), ("chi_kq", kq)];
    let mut agreements = Vec::new();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if let ((l, Some(a)), (r, Some(b))) = (values[i], values[j]) {
                agreements.push(Agreement {
                    left: l,
                    right: r,
                    equal: a == b,
                });
            }
        }
    }
    EulerReport {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        triangle_free: ve.is_some(),
        chi_ve: ve,
        splitting,
        chi_cd: cd,
        bipartite,
        chi_kq: kq,
        agreements,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Decomposition {
    /// A tree on `n` vertices: `F_{n−1} ⋊ ℤ`.
    SemidirectByZ { n: usize },
    /// `K_{k,q}`: `F_k × F_q`.
    DirectProduct { k: usize, q: usize },
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Decomposition::SemidirectByZ { n } => write!(f, "F_{} ⋊ ℤ", n - 1),
            Decomposition::DirectProduct { k, q } => write!(f, "F_{k} × F_{q}"),
        }
    }
}

/// `[F(C) : φ(⟨N_d⟩)]` for one dead vertex of a length-2 splitting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborImage {
    pub dead: String,
    pub image: Vec<String>,
    pub index: Index,
    pub rank: usize,
    /// The Schreier identity, when the index is finite.
    pub schreier: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Length2Verdict {
    pub poly_fg_free_length2: bool,
    /// Rank of the free group when the graph has no edges.
    pub free_rank: Option<usize>,
    pub decompositions: Vec<Decomposition>,
    /// `None` when the search was skipped by its cap.
    pub dbcp: Option<bool>,
    pub neighbor_images: Vec<NeighborImage>,
    pub summary: String,
}

/// Trees and complete bipartite graphs, each reported with its explicit
/// splitting; both apply to stars. Otherwise the verdict records whether
/// length 2 is still reached through a doubly breakable set.
pub fn classify_length2(graph: &Graph, limits: &Limits) -> Result<Length2Verdict> {
    if graph.vertex_count() == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    if graph.edge_count() == 0 {
        let n = graph.vertex_count();
        return Ok(Length2Verdict {
            poly_fg_free_length2: false,
            free_rank: Some(n),
            decompositions: Vec::new(),
            dbcp: Some(false),
            neighbor_images: Vec::new(),
            summary: format!("free of rank {n}, poly-free length 1"),
        });
    }
    let mut decompositions = Vec::new();
    if graph.is_tree() {
        decompositions.push(Decomposition::SemidirectByZ {
            n: graph.vertex_count(),
        });
    }
    if let Some((k, q)) = graph.is_complete_bipartite() {
        decompositions.push(Decomposition::DirectProduct { k, q });
    }
    let (dbcp, neighbor_images) = match find_d(graph, limits) {
        Ok(Some(cert)) => (Some(true), neighbor_images(graph, &cert)?),
        Ok(None) => (Some(false), Vec::new()),
        Err(Error::Resource { .. }) => (None, Vec::new()),
        Err(e) => return Err(e),
    };
    let poly_fg_free_length2 = !decompositions.is_empty();
    let summary = if poly_fg_free_length2 {
        let parts: Vec<String> = decompositions.iter().map(|d| d.to_string()).collect();
        format!("poly-fg-free of length 2: {}", parts.join(", "))
    } else {
        let tail = match dbcp {
            Some(true) => "pfl = 2 via a doubly breakable set",
            Some(false) => "no doubly breakable set, so pfl ≠ 2",
            None => "doubly breakable set search skipped",
        };
        format!("not poly-fg-free of length 2; {tail}")
    };
    Ok(Length2Verdict {
        poly_fg_free_length2,
        free_rank: None,
        decompositions,
        dbcp,
        neighbor_images,
        summary,
    })
}

/// The subgroups `φ(⟨N_d⟩) = ⟨RN_d⟩` of `F(C)`, with index and rank by
/// folding.
pub fn neighbor_images(graph: &Graph, cert: &DbcpCertificate) -> Result<Vec<NeighborImage>> {
    let mut reps = cert.representatives.clone();
    reps.sort_unstable();
    let position: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let q = reps.len();
    let mut out = Vec::new();
    for d in cert.dead.iter() {
        let rn: BTreeSet<usize> = graph
            .neighbor_slice(d)
            .iter()
            .map(|y| cert.rep_of[y])
            .collect();
        let generators: Vec<FreeWord<usize>> = rn
            .iter()
            .map(|c| FreeWord::generator(position[c]))
            .collect();
        let result = freegrp::subgroup_index(&SubgroupPresentation { rank: q, generators })?;
        let schreier = match result.index {
            Index::Finite(i) => Some(freegrp::schreier_check(q, i, result.rank)),
            Index::Infinite => None,
        };
        out.push(NeighborImage {
            dead: graph.name(d).to_string(),
            image: rn.iter().map(|&c| graph.name(c).to_string()).collect(),
            index: result.index,
            rank: result.rank,
            schreier,
        });
    }
    Ok(out)
}
