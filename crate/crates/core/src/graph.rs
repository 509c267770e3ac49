//! Finite simplicial graphs and the combinatorial searches run over them.
//!
//! Vertices are identified by their position in the input order, which is
//! also the canonical total order used by every witness and tie-break in the
//! crate. The exact solvers work on `u64` adjacency masks, so they refuse
//! graphs above [`MASK_LIMIT`] vertices regardless of the configured caps.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Hard ceiling imposed by the bitmask representation of the searches.
pub const MASK_LIMIT: usize = 64;

/// Size caps for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Clique and chromatic number solvers.
    pub solver_vertices: usize,
    /// Simple cycle enumeration and the doubly-breakable set search.
    pub search_vertices: usize,
    /// Combined word length accepted by the brute-force word oracle.
    pub word_budget: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            solver_vertices: 25,
            search_vertices: 20,
            word_budget: 12,
        }
    }
}

impl Limits {
    /// Caps with every graph-size limit replaced by `max_vertices`.
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Limits {
            solver_vertices: max_vertices,
            search_vertices: max_vertices,
            ..Limits::default()
        }
    }

    fn check(what: &'static str, cap: usize, actual: usize) -> Result<()> {
        let cap = cap.min(MASK_LIMIT);
        if actual > cap {
            Err(Error::Resource { what, cap, actual })
        } else {
            Ok(())
        }
    }
}

/// A set of vertices, iterated in canonical vertex order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn names(&self, graph: &Graph) -> Vec<String> {
        self.iter().map(|v| graph.name(v).to_string()).collect()
    }

    pub fn mask(&self) -> u64 {
        self.iter().fold(0u64, |m, v| m | (1u64 << v))
    }

    pub fn from_mask(mask: u64) -> Self {
        (0..MASK_LIMIT).filter(|&v| mask >> v & 1 == 1).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

/// A proper vertex coloring with colors `0..color_count`, every color used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    assignment: Vec<usize>,
    color_count: usize,
}

impl Coloring {
    /// Wraps an assignment, checking that it is proper and uses every color
    /// in `0..=max`.
    pub fn new(graph: &Graph, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != graph.vertex_count() {
            return Err(Error::input(format!(
                "coloring assigns {} vertices but the graph has {}",
                assignment.len(),
                graph.vertex_count()
            )));
        }
        for &(u, v) in graph.edges() {
            if assignment[u] == assignment[v] {
                return Err(Error::input(format!(
                    "coloring is not proper: edge {} {} is monochromatic",
                    graph.name(u),
                    graph.name(v)
                )));
            }
        }
        let color_count = assignment.iter().map(|&c| c + 1).max().unwrap_or(0);
        let used: BTreeSet<usize> = assignment.iter().copied().collect();
        if used.len() != color_count {
            return Err(Error::input("coloring skips a color index"));
        }
        Ok(Coloring {
            assignment,
            color_count,
        })
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn is_proper(&self, graph: &Graph) -> bool {
        graph
            .edges()
            .iter()
            .all(|&(u, v)| self.assignment[u] != self.assignment[v])
    }

    /// Color classes, indexed by color.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::new(); self.color_count];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].insert(v);
        }
        classes
    }

    /// Splits single vertices off the largest classes until `target` colors
    /// are in use. Fails when the graph has fewer than `target` vertices.
    pub fn refine_to(&self, target: usize) -> Result<Coloring> {
        if target < self.color_count {
            return Err(Error::input(format!(
                "cannot merge a {}-coloring down to {} colors",
                self.color_count, target
            )));
        }
        if target > self.assignment.len() {
            return Err(Error::input(format!(
                "{} colors requested but the graph has only {} vertices",
                target,
                self.assignment.len()
            )));
        }
        let mut assignment = self.assignment.clone();
        let mut count = self.color_count;
        while count < target {
            let mut sizes = vec![0usize; count];
            for &c in &assignment {
                sizes[c] += 1;
            }
            // the largest class, lowest color on ties; its last vertex moves
            let (color, _) = sizes
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
                .expect("at least one color");
            let v = (0..assignment.len())
                .rev()
                .find(|&v| assignment[v] == color)
                .expect("nonempty class");
            assignment[v] = count;
            count += 1;
        }
        Ok(Coloring {
            assignment,
            color_count: count,
        })
    }
}

/// Coarse shape of a graph, as needed by the poly-fg-free classifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    Tree,
    CompleteBipartite { k: usize, q: usize },
    Other,
}

/// A finite simplicial graph with named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_graphic() && !matches!(c, '^' | '#' | ','))
}

impl Graph {
    /// Builds a graph from declared vertices and edges. Vertices are ordered
    /// by first appearance: the declared list, then edge endpoints.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Graph> {
        let mut builder = Builder::default();
        for v in vertices {
            builder.declare(v.as_ref()).map_err(Error::Input)?;
        }
        for (u, v) in edges {
            builder.edge(u.as_ref(), v.as_ref()).map_err(Error::Input)?;
        }
        builder.finish()
    }

    /// Graph with no vertices; only reachable internally, as the living
    /// subgraph of the last tower level.
    pub fn empty() -> Graph {
        Builder::default().build()
    }

    /// Parses the line-oriented graph format (`vertex NAME`, `edge A B`,
    /// `#` comments).
    pub fn parse(text: &str) -> Result<Graph> {
        let mut builder = Builder::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let outcome = match tokens.as_slice() {
                [] => Ok(()),
                ["vertex", name] => builder.declare(name),
                ["edge", u, v] => builder.edge(u, v),
                ["vertex", ..] => Err("expected `vertex NAME`".to_string()),
                ["edge", ..] => Err("expected `edge NAME NAME`".to_string()),
                [other, ..] => Err(format!("unknown directive `{other}`")),
            };
            outcome.map_err(|message| Error::Parse { line, message })?;
        }
        builder.finish()
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::input(format!("unknown vertex `{name}`")))
    }

    /// Resolves a list of names into a vertex set.
    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().map(|n| self.vertex(n.as_ref())).collect()
    }

    pub fn all_vertices(&self) -> VertexSet {
        (0..self.vertex_count()).collect()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbor_slice(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].iter().copied().collect())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::input(format!("vertex index {v} out of range")))
        }
    }

    fn check_subset(&self, s: &VertexSet) -> Result<()> {
        s.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// Adjacency masks; callers must have checked the size against
    /// [`MASK_LIMIT`].
    fn masks(&self) -> Vec<u64> {
        self.adjacency
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &v| m | (1u64 << v)))
            .collect()
    }

    /// The subgraph induced by `s`, together with the map from its vertex
    /// indices back to indices of `self`.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(s)?;
        let keep = s.to_vec();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let mut builder = Builder::default();
        for &v in &keep {
            builder.push_vertex(&self.names[v]);
        }
        for &(u, v) in &self.edges {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                builder.push_edge(local[u], local[v]);
            }
        }
        Ok((builder.build(), keep))
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.induced(s).map(|(g, _)| g)
    }

    /// Components as vertex sets, ordered by their least vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut component = VertexSet::new();
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                component.insert(u);
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.connected_components().len() == self.vertex_count()
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1 && self.is_connected() && self.is_forest()
    }

    /// Some simple cycle, if the graph has one.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if w == parent[u] {
                        continue;
                    }
                    if seen[w] {
                        // w is an already discovered vertex other than the tree parent
                        return Some(self.close_cycle(&parent, u, w));
                    }
                    seen[w] = true;
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        None
    }

    fn close_cycle(&self, parent: &[usize], u: usize, w: usize) -> Vec<usize> {
        let ancestors = |mut x: usize| {
            let mut path = vec![x];
            while parent[x] != usize::MAX {
                x = parent[x];
                path.push(x);
            }
            path
        };
        let from_u = ancestors(u);
        let from_w = ancestors(w);
        let on_w: BTreeSet<usize> = from_w.iter().copied().collect();
        let meet_u = from_u.iter().position(|x| on_w.contains(x)).expect("same tree");
        let meet = from_u[meet_u];
        let meet_w = from_w.iter().position(|&x| x == meet).expect("common ancestor");
        let mut cycle: Vec<usize> = from_u[..=meet_u].to_vec();
        cycle.extend(from_w[..meet_w].iter().rev());
        cycle
    }

    /// Every simple cycle once, up to rotation and reflection. Each cycle
    /// starts at its least vertex and its second vertex is smaller than its
    /// last one.
    pub fn enumerate_simple_cycles(&self, limits: &Limits) -> Result<Vec<Vec<usize>>> {
        Limits::check(
            "simple cycle enumeration",
            limits.search_vertices,
            self.vertex_count(),
        )?;
        let mut cycles = Vec::new();
        let n = self.vertex_count();
        let mut on_path = vec![false; n];
        for start in 0..n {
            let mut path = vec![start];
            on_path[start] = true;
            self.extend_cycles(start, &mut path, &mut on_path, &mut cycles);
            on_path[start] = false;
        }
        Ok(cycles)
    }

    fn extend_cycles(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        cycles: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().expect("nonempty path");
        for &w in &self.adjacency[last] {
            if w == start && path.len() >= 3 && path[1] < last {
                cycles.push(path.clone());
            }
            if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                self.extend_cycles(start, path, on_path, cycles);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    pub fn has_triangle(&self) -> bool {
        self.edges.iter().any(|&(u, v)| {
            self.adjacency[u]
                .iter()
                .any(|&w| w != v && self.adjacent(v, w))
        })
    }

    /// Exact clique number by Bron–Kerbosch with pivoting.
    pub fn clique_number(&self, limits: &Limits) -> Result<usize> {
        self.maximum_clique(limits).map(|c| c.len())
    }

    /// A maximum clique; among maximum cliques the first one found by the
    /// pivoting search in vertex order.
    pub fn maximum_clique(&self, limits: &Limits) -> Result<VertexSet> {
        self.require_nonempty()?;
        Limits::check("clique search", limits.solver_vertices, self.vertex_count())?;
        let masks = self.masks();
        let all = low_bits(self.vertex_count());
        let mut best = 0u64;
        bron_kerbosch(&masks, 0, all, 0, &mut best);
        Ok(VertexSet::from_mask(best))
    }

    /// Exact chromatic number with a witness coloring. Colors are tried from
    /// the clique number upwards; each attempt is a saturation-ordered
    /// backtracking search (ties broken by vertex order), so the witness is
    /// deterministic.
    pub fn chromatic_number(&self, limits: &Limits) -> Result<(usize, Coloring)> {
        let lower = self.clique_number(limits)?;
        Limits::check(
            "chromatic search",
            limits.solver_vertices,
            self.vertex_count(),
        )?;
        let masks = self.masks();
        for k in lower..=self.vertex_count() {
            if let Some(assignment) = color_with(&masks, k) {
                let coloring = Coloring::new(self, assignment)?;
                debug_assert_eq!(coloring.color_count(), k);
                return Ok((k, coloring));
            }
        }
        unreachable!("every graph on n vertices is n-colorable")
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| !(s.contains(u) && s.contains(v)))
    }

    pub fn is_complete_bipartite(&self) -> Option<(usize, usize)> {
        if self.vertex_count() < 2 || !self.is_connected() {
            return None;
        }
        // 2-color from vertex 0, then check every cross pair is an edge
        let mut side = vec![usize::MAX; self.vertex_count()];
        side[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
        let k = side.iter().filter(|&&s| s == 0).count();
        let q = self.vertex_count() - k;
        (self.edge_count() == k * q).then_some((k, q))
    }

    /// Tree, complete bipartite or neither. A single edge is reported as
    /// `K_{1,1}`; every other tree, stars included, as a tree.
    pub fn classify_shape(&self) -> Shape {
        if self.vertex_count() == 2 && self.edge_count() == 1 {
            return Shape::CompleteBipartite { k: 1, q: 1 };
        }
        if self.is_tree() {
            return Shape::Tree;
        }
        match self.is_complete_bipartite() {
            Some((k, q)) => Shape::CompleteBipartite { k, q },
            None => Shape::Other,
        }
    }

    fn require_nonempty(&self) -> Result<()> {
        if self.vertex_count() == 0 {
            Err(Error::input("graph has no vertices"))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Graph {
    /// Writes the graph in the line format accepted by [`Graph::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for name in &self.names {
            writeln!(f, "vertex {name}")?;
        }
        for &(u, v) in &self.edges {
            writeln!(f, "edge {} {}", self.names[u], self.names[v])?;
        }
        Ok(())
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bron_kerbosch(masks: &[u64], current: u64, mut candidates: u64, mut excluded: u64, best: &mut u64) {
    if candidates == 0 && excluded == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let pool = candidates | excluded;
    let pivot = (0..masks.len())
        .filter(|&u| pool >> u & 1 == 1)
        .max_by_key(|&u| ((candidates & masks[u]).count_ones(), std::cmp::Reverse(u)))
        .expect("nonempty pool");
    let mut branch = candidates & !masks[pivot];
    while branch != 0 {
        let v = branch.trailing_zeros() as usize;
        let bit = 1u64 << v;
        branch &= !bit;
        bron_kerbosch(masks, current | bit, candidates & masks[v], excluded & masks[v], best);
        candidates &= !bit;
        excluded |= bit;
    }
}

const UNCOLORED: usize = usize::MAX;

fn color_with(masks: &[u64], k: usize) -> Option<Vec<usize>> {
    let mut colors = vec![UNCOLORED; masks.len()];
    backtrack_coloring(masks, k, 0, &mut colors).then_some(colors)
}

fn backtrack_coloring(masks: &[u64], k: usize, used: usize, colors: &mut [usize]) -> bool {
    let saturation = |v: usize| -> u32 {
        let mut seen = 0u64;
        let mut ns = masks[v];
        while ns != 0 {
            let w = ns.trailing_zeros() as usize;
            ns &= ns - 1;
            if colors[w] != UNCOLORED {
                seen |= 1u64 << colors[w];
            }
        }
        seen.count_ones()
    };
    let next = (0..masks.len())
        .filter(|&v| colors[v] == UNCOLORED)
        .max_by_key(|&v| (saturation(v), std::cmp::Reverse(v)));
    let Some(v) = next else {
        return true;
    };
    // a fresh color is interchangeable with any other unused one
    for c in 0..k.min(used + 1) {
        let clash = {
            let mut ns = masks[v];
            let mut hit = false;
            while ns != 0 {
                let w = ns.trailing_zeros() as usize;
                ns &= ns - 1;
                if colors[w] == c {
                    hit = true;
                    break;
                }
            }
            hit
        };
        if clash {
            continue;
        }
        colors[v] = c;
        if backtrack_coloring(masks, k, used.max(c + 1), colors) {
            return true;
        }
        colors[v] = UNCOLORED;
    }
    false
}

#[derive(Default)]
struct Builder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    declared: BTreeSet<usize>,
    edges: BTreeSet<(usize, usize)>,
}

impl Builder {
    fn push_vertex(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        i
    }

    fn push_edge(&mut self, u: usize, v: usize) -> bool {
        self.edges.insert((u.min(v), u.max(v)))
    }

    fn declare(&mut self, name: &str) -> std::result::Result<(), String> {
        if !valid_name(name) {
            return Err(format!("invalid vertex name `{name}`"));
        }
        let i = self.push_vertex(name);
        if !self.declared.insert(i) {
            return Err(format!("vertex `{name}` declared twice"));
        }
        Ok(())
    }

    fn edge(&mut self, u: &str, v: &str) -> std::result::Result<(), String> {
        for name in [u, v] {
            if !valid_name(name) {
                return Err(format!("invalid vertex name `{name}`"));
            }
        }
        if u == v {
            return Err(format!("loop at `{u}`"));
        }
        let (a, b) = (self.push_vertex(u), self.push_vertex(v));
        if !self.push_edge(a, b) {
            return Err(format!("duplicate edge {u} {v}"));
        }
        Ok(())
    }

    fn finish(self) -> Result<Graph> {
        if self.names.is_empty() {
            return Err(Error::input("graph has no vertices"));
        }
        Ok(self.build())
    }

    fn build(self) -> Graph {
        let mut adjacency = vec![Vec::new(); self.names.len()];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for ns in &mut adjacency {
            ns.sort_unstable();
        }
        Graph {
            names: self.names,
            index: self.index,
            adjacency,
            edges: self.edges.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &Graph, names: &[&str]) -> VertexSet {
        g.vertex_set(names).unwrap()
    }

    #[test]
    fn neighbors_of_pentagon_and_small_graphs() {
        let c5 = fixtures::pentagon();
        let a = c5.vertex("a").unwrap();
        assert_eq!(c5.neighbors(a).unwrap(), set(&c5, &["b", "e"]));

        let single = Graph::new(&["v"], &[]).unwrap();
        assert!(single.neighbors(0).unwrap().is_empty());

        let k3 = fixtures::complete(3);
        assert_eq!(k3.neighbors(0).unwrap(), set(&k3, &["v1", "v2"]));
        assert!(c5.neighbors(7).is_err());
    }

    #[test]
    fn induced_subgraphs_of_pentagon() {
        let c5 = fixtures::pentagon();
        let ac = c5.induced_subgraph(&set(&c5, &["a", "c"])).unwrap();
        assert_eq!((ac.vertex_count(), ac.edge_count()), (2, 0));

        assert_eq!(c5.induced_subgraph(&c5.all_vertices()).unwrap(), c5);

        let abc = c5.induced_subgraph(&set(&c5, &["a", "b", "c"])).unwrap();
        let path = Graph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(abc, path);
    }

    #[test]
    fn components() {
        let c5 = fixtures::pentagon();
        let mut rest = c5.all_vertices();
        rest.remove(0);
        rest.remove(2);
        let (sub, map) = c5.induced(&rest).unwrap();
        let comps: Vec<Vec<usize>> = sub
            .connected_components()
            .iter()
            .map(|c| c.iter().map(|v| map[v]).collect())
            .collect();
        assert_eq!(comps, vec![vec![1], vec![3, 4]]);

        let edgeless = fixtures::edgeless(4);
        assert_eq!(edgeless.connected_components().len(), 4);

        let living = Graph::new(
            &["a", "b", "c", "x", "y"],
            &[("a", "x"), ("x", "y")],
        )
        .unwrap();
        let comps: Vec<Vec<String>> = living
            .connected_components()
            .iter()
            .map(|c| c.names(&living))
            .collect();
        assert_eq!(comps, vec![vec!["a", "x", "y"], vec!["b"], vec!["c"]]);
    }

    #[test]
    fn forests() {
        assert!(fixtures::path(3).is_forest());
        let c5 = fixtures::pentagon();
        assert!(!c5.is_forest());
        assert!(c5
            .induced_subgraph(&set(&c5, &["b", "d", "e"]))
            .unwrap()
            .is_forest());
        let cycle = c5.find_cycle().unwrap();
        assert_eq!(cycle.len(), 5);
        assert!(fixtures::path(6).find_cycle().is_none());
    }

    #[test]
    fn cycle_enumeration() {
        let limits = Limits::default();
        let c5 = fixtures::pentagon();
        let cycles = c5.enumerate_simple_cycles(&limits).unwrap();
        assert_eq!(cycles, vec![vec![0, 1, 2, 3, 4]]);
        assert!(fixtures::star(5)
            .enumerate_simple_cycles(&limits)
            .unwrap()
            .is_empty());
        let k4 = fixtures::complete(4).enumerate_simple_cycles(&limits).unwrap();
        assert_eq!(k4.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(k4.iter().filter(|c| c.len() == 4).count(), 3);

        let big = fixtures::path(21);
        match big.enumerate_simple_cycles(&limits) {
            Err(Error::Resource { cap, actual, .. }) => assert_eq!((cap, actual), (20, 21)),
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn clique_numbers() {
        let limits = Limits::default();
        assert_eq!(fixtures::pentagon().clique_number(&limits).unwrap(), 2);
        assert_eq!(fixtures::prism().clique_number(&limits).unwrap(), 2);
        assert_eq!(fixtures::complete(3).clique_number(&limits).unwrap(), 3);
        assert_eq!(fixtures::edgeless(3).clique_number(&limits).unwrap(), 1);
        assert!(Graph::empty().clique_number(&limits).is_err());
    }

    #[test]
    fn chromatic_numbers_and_witnesses() {
        let limits = Limits::default();
        for (g, expected) in [
            (fixtures::pentagon(), 3),
            (fixtures::prism(), 3),
            (fixtures::complete_bipartite(2, 3), 2),
            (fixtures::complete(5), 5),
            (fixtures::edgeless(4), 1),
        ] {
            let (k, coloring) = g.chromatic_number(&limits).unwrap();
            assert_eq!(k, expected);
            assert!(coloring.is_proper(&g));
            assert_eq!(coloring.color_count(), k);
        }
        // the witness for the pentagon puts a and c in color 0
        let c5 = fixtures::pentagon();
        let (_, coloring) = c5.chromatic_number(&limits).unwrap();
        assert_eq!(coloring.classes()[0], set(&c5, &["a", "c"]));
    }

    #[test]
    fn independence() {
        let c5 = fixtures::pentagon();
        assert!(c5.is_independent(&set(&c5, &["a", "c"])));
        assert!(!c5.is_independent(&set(&c5, &["a", "b"])));
        assert!(c5.is_independent(&VertexSet::new()));
    }

    #[test]
    fn shapes() {
        assert_eq!(fixtures::path(4).classify_shape(), Shape::Tree);
        assert_eq!(
            fixtures::complete_bipartite(2, 3).classify_shape(),
            Shape::CompleteBipartite { k: 2, q: 3 }
        );
        assert_eq!(fixtures::pentagon().classify_shape(), Shape::Other);
        assert_eq!(
            fixtures::path(2).classify_shape(),
            Shape::CompleteBipartite { k: 1, q: 1 }
        );
        assert_eq!(fixtures::edgeless(1).classify_shape(), Shape::Tree);
        assert_eq!(fixtures::edgeless(2).classify_shape(), Shape::Other);
    }

    #[test]
    fn parse_format() {
        let g = Graph::parse("# pentagon\nvertex z\nedge a b # ab\n\nedge b c\n").unwrap();
        assert_eq!(g.names(), ["z", "a", "b", "c"]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(Graph::parse(&g.to_string()).unwrap(), g);

        let err = |text: &str| match Graph::parse(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("edge a b\nedge b a\n"), 2);
        assert_eq!(err("edge a a\n"), 1);
        assert_eq!(err("vertex a\nvertex a\n"), 2);
        assert_eq!(err("vertex a^b\n"), 1);
        assert_eq!(err("\nedge a\n"), 2);
        assert_eq!(err("arc a b\n"), 1);
        assert!(matches!(Graph::parse("# nothing\n"), Err(Error::Input(_))));
    }

    #[test]
    fn refine_coloring() {
        let g = fixtures::complete_bipartite(2, 3);
        let (_, coloring) = g.chromatic_number(&Limits::default()).unwrap();
        let four = coloring.refine_to(4).unwrap();
        assert_eq!(four.color_count(), 4);
        assert!(four.is_proper(&g));
        assert!(coloring.refine_to(1).is_err());
        assert!(coloring.refine_to(6).is_err());
    }
}
