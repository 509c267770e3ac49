//! Free-group words over arbitrary symbol types, and subgroup index and rank
//! computed by folding.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeLetter<S> {
    pub symbol: S,
    pub inverse: bool,
}

impl<S: Clone + Eq> FreeLetter<S> {
    pub fn new(symbol: S, inverse: bool) -> Self {
        FreeLetter { symbol, inverse }
    }

    pub fn inverted(&self) -> Self {
        FreeLetter::new(self.symbol.clone(), !self.inverse)
    }

    fn cancels(&self, other: &Self) -> bool {
        self.inverse != other.inverse && self.symbol == other.symbol
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord<S> {
    letters: Vec<FreeLetter<S>>,
}

/// Reduces a raw letter sequence to its unique freely reduced form.
pub fn free_reduce<S: Clone + Eq>(raw: impl IntoIterator<Item = FreeLetter<S>>) -> FreeWord<S> {
    let mut letters: Vec<FreeLetter<S>> = Vec::new();
    for l in raw {
        if letters.last().is_some_and(|last| last.cancels(&l)) {
            letters.pop();
        } else {
            letters.push(l);
        }
    }
    FreeWord { letters }
}

impl<S: Clone + Eq> FreeWord<S> {
    pub fn identity() -> Self {
        FreeWord { letters: Vec::new() }
    }

    pub fn generator(symbol: S) -> Self {
        FreeWord {
            letters: vec![FreeLetter::new(symbol, false)],
        }
    }

    pub fn letter(symbol: S, inverse: bool) -> Self {
        FreeWord {
            letters: vec![FreeLetter::new(symbol, inverse)],
        }
    }

    /// From `(symbol, inverse)` pairs, reducing on the way.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (S, bool)>) -> Self {
        free_reduce(pairs.into_iter().map(|(s, i)| FreeLetter::new(s, i)))
    }

    pub fn letters(&self) -> &[FreeLetter<S>] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<&FreeLetter<S>> {
        self.letters.first()
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            letters: self.letters.iter().rev().map(FreeLetter::inverted).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        free_reduce(self.letters.iter().chain(&other.letters).cloned())
    }

    /// `by⁻¹ · self · by`.
    pub fn conjugate(&self, by: &Self) -> Self {
        by.inverse().mul(self).mul(by)
    }

    /// Applies `image` to every symbol (inverting for inverse letters) and
    /// reduces the concatenation.
    pub fn substitute<T: Clone + Eq>(&self, mut image: impl FnMut(&S) -> FreeWord<T>) -> FreeWord<T> {
        free_reduce(self.letters.iter().flat_map(|l| {
            let w = image(&l.symbol);
            if l.inverse {
                w.inverse().letters
            } else {
                w.letters
            }
        }))
    }

    pub fn render(&self, mut name: impl FnMut(&S) -> String) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("{}^-1", name(&l.symbol))
                } else {
                    name(&l.symbol)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl<S: Clone + Ord> FreeWord<S> {
    /// Image in the abelianisation: exponent sum per symbol, zeros dropped.
    pub fn exponent_sums(&self) -> BTreeMap<S, i64> {
        let mut sums: BTreeMap<S, i64> = BTreeMap::new();
        for l in &self.letters {
            *sums.entry(l.symbol.clone()).or_default() += if l.inverse { -1 } else { 1 };
        }
        sums.retain(|_, v| *v != 0);
        sums
    }
}

impl<S: fmt::Display + Clone + Eq> fmt::Display for FreeWord<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|s| s.to_string()))
    }
}

/// Finitely many generators of a subgroup of the free group on
/// `0..rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupPresentation {
    pub rank: usize,
    pub generators: Vec<FreeWord<usize>>,
}

/// Folded labeled graph of a subgroup, with vertices numbered in breadth
/// first order from the base vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldedCore {
    pub vertex_count: usize,
    /// `(source, label, target)`, sorted.
    pub edges: Vec<(usize, usize, usize)>,
}

impl FoldedCore {
    /// Every vertex has an outgoing and an incoming edge for every label.
    pub fn is_covering(&self, rank: usize) -> bool {
        let mut out = vec![BTreeSet::new(); self.vertex_count];
        let mut inc = vec![BTreeSet::new(); self.vertex_count];
        for &(s, l, t) in &self.edges {
            out[s].insert(l);
            inc[t].insert(l);
        }
        (0..self.vertex_count).all(|v| out[v].len() == rank && inc[v].len() == rank)
    }

    /// First Betti number `E - V + 1`.
    pub fn rank(&self) -> usize {
        self.edges.len() + 1 - self.vertex_count
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Index {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(i) => write!(f, "{i}"),
            Index::Infinite => f.write_str("∞"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupIndex {
    pub index: Index,
    pub rank: usize,
    pub core: FoldedCore,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            let next = self.0[y];
            self.0[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller representative so the base vertex stays a root
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.0[hi] = lo;
        true
    }
}

/// Folds the wedge of generator loops until no vertex has two equally
/// labeled edges in the same direction.
pub fn fold(subgroup: &SubgroupPresentation) -> Result<FoldedCore> {
    let mut vertex_count = 1;
    let mut raw_edges: Vec<(usize, usize, usize)> = Vec::new();
    for g in &subgroup.generators {
        if let Some(bad) = g.letters().iter().find(|l| l.symbol >= subgroup.rank) {
            return Err(Error::input(format!(
                "generator uses symbol {} outside rank {}",
                bad.symbol, subgroup.rank
            )));
        }
        let n = g.len();
        if n == 0 {
            continue;
        }
        let mut prev = 0;
        for (i, l) in g.letters().iter().enumerate() {
            let next = if i + 1 == n {
                0
            } else {
                vertex_count += 1;
                vertex_count - 1
            };
            if l.inverse {
                raw_edges.push((next, l.symbol, prev));
            } else {
                raw_edges.push((prev, l.symbol, next));
            }
            prev = next;
        }
    }

    let mut uf = UnionFind((0..vertex_count).collect());
    loop {
        let mut merged = false;
        let mut out: HashMap<(usize, usize), usize> = HashMap::new();
        let mut inc: HashMap<(usize, usize), usize> = HashMap::new();
        for &(s, l, t) in &raw_edges {
            let (s, t) = (uf.find(s), uf.find(t));
            if let Some(&t2) = out.get(&(s, l)) {
                merged |= uf.union(t, t2);
            } else {
                out.insert((s, l), t);
            }
            let (s, t) = (uf.find(s), uf.find(t));
            if let Some(&s2) = inc.get(&(t, l)) {
                merged |= uf.union(s, s2);
            } else {
                inc.insert((t, l), s);
            }
        }
        if !merged {
            break;
        }
    }

    let mut edges: BTreeSet<(usize, usize, usize)> = raw_edges
        .iter()
        .map(|&(s, l, t)| (uf.find(s), l, uf.find(t)))
        .collect();

    // renumber breadth first from the base so the core is canonical
    let mut adjacency: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &(s, l, t) in &edges {
        adjacency.entry(s).or_default().push((2 * l, t));
        adjacency.entry(t).or_default().push((2 * l + 1, s));
    }
    let root = uf.find(0);
    let mut number: HashMap<usize, usize> = HashMap::from([(root, 0)]);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let mut next = adjacency.get(&v).cloned().unwrap_or_default();
        next.sort_unstable();
        for (_, w) in next {
            if !number.contains_key(&w) {
                number.insert(w, number.len());
                queue.push_back(w);
            }
        }
    }
    edges = edges
        .into_iter()
        .map(|(s, l, t)| (number[&s], l, number[&t]))
        .collect();
    Ok(FoldedCore {
        vertex_count: number.len(),
        edges: edges.into_iter().collect(),
    })
}

/// Index of the subgroup in the ambient free group, together with its rank.
/// The index is finite exactly when the folded core covers the rose.
pub fn subgroup_index(subgroup: &SubgroupPresentation) -> Result<SubgroupIndex> {
    let core = fold(subgroup)?;
    let index = if core.is_covering(subgroup.rank) {
        Index::Finite(core.vertex_count)
    } else {
        Index::Infinite
    };
    Ok(SubgroupIndex {
        index,
        rank: core.rank(),
        core,
    })
}

/// The Schreier identity `(q - 1) · index = rank - 1`.
pub fn schreier_check(ambient_rank: usize, index: usize, rank: usize) -> bool {
    (ambient_rank as i64 - 1) * index as i64 == rank as i64 - 1
}
