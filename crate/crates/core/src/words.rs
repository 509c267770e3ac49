//! Words in a right-angled Artin group and their shortlex normal forms.
//!
//! Signed letters are ordered `v₁ < v₁⁻¹ < v₂ < v₂⁻¹ < …` following the
//! vertex order of the ambient graph. Normal forms are computed in two
//! passes: a scan-back reduction that cancels each incoming letter against
//! the nearest inverse it can commute past, then a greedy lexicographically
//! least linearisation of the resulting trace.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A generator or its inverse. The derived order is the shortlex letter
/// order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub vertex: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(vertex: usize, inverse: bool) -> Self {
        Letter { vertex, inverse }
    }

    pub fn positive(vertex: usize) -> Self {
        Letter::new(vertex, false)
    }

    pub fn negative(vertex: usize) -> Self {
        Letter::new(vertex, true)
    }

    pub fn inverted(self) -> Self {
        Letter::new(self.vertex, !self.inverse)
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.vertex == other.vertex && self.inverse != other.inverse
    }

    pub fn render(self, graph: &Graph) -> String {
        if self.inverse {
            format!("{}^-1", graph.name(self.vertex))
        } else {
            graph.name(self.vertex).to_string()
        }
    }
}

/// Whether two letters can be swapped: distinct, adjacent vertices.
fn commute(graph: &Graph, a: Letter, b: Letter) -> bool {
    a.vertex != b.vertex && graph.adjacent(a.vertex, b.vertex)
}

/// Parses whitespace separated tokens `a` / `a^-1` into letters.
pub fn parse_word(graph: &Graph, text: &str) -> Result<Vec<Letter>> {
    text.split_whitespace()
        .map(|token| {
            let (name, inverse) = match token.strip_suffix("^-1") {
                Some(base) => (base, true),
                None => (token, false),
            };
            if name.is_empty() || name.contains('^') {
                return Err(Error::input(format!("bad word token `{token}`")));
            }
            Ok(Letter::new(graph.vertex(name)?, inverse))
        })
        .collect()
}

pub fn render_letters(graph: &Graph, letters: &[Letter]) -> String {
    if letters.is_empty() {
        return "ε".to_string();
    }
    letters
        .iter()
        .map(|l| l.render(graph))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The shortlex normal form of a group element, tied to its ambient graph.
///
/// Equality, hashing and ordering look at the letters only (ordering is
/// shortlex); mixing words from different graphs is caught by the
/// operations that combine them.
#[derive(Clone, Debug)]
pub struct TraceWord {
    graph: Arc<Graph>,
    letters: Vec<Letter>,
}

impl PartialEq for TraceWord {
    fn eq(&self, other: &Self) -> bool {
        self.letters == other.letters
    }
}

impl Eq for TraceWord {}

impl Hash for TraceWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.letters.hash(state);
    }
}

impl PartialOrd for TraceWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TraceWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl fmt::Display for TraceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.graph, &self.letters))
    }
}

impl TraceWord {
    pub fn identity(graph: &Arc<Graph>) -> Self {
        TraceWord {
            graph: Arc::clone(graph),
            letters: Vec::new(),
        }
    }

    pub fn generator(graph: &Arc<Graph>, letter: Letter) -> Result<Self> {
        normalize(graph, &[letter])
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn same_ambient(&self, other: &TraceWord) -> Result<()> {
        if Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph {
            Ok(())
        } else {
            Err(Error::input("words live in different groups"))
        }
    }

    pub fn multiply(&self, other: &TraceWord) -> Result<TraceWord> {
        self.same_ambient(other)?;
        let mut raw = self.letters.clone();
        raw.extend_from_slice(&other.letters);
        Ok(TraceWord {
            graph: Arc::clone(&self.graph),
            letters: straighten(&self.graph, reduce(&self.graph, &raw)),
        })
    }

    /// Right multiplication by one letter, which must belong to the ambient
    /// graph.
    pub fn append(&self, letter: Letter) -> TraceWord {
        assert!(letter.vertex < self.graph.vertex_count());
        let mut raw = self.letters.clone();
        raw.push(letter);
        TraceWord {
            graph: Arc::clone(&self.graph),
            letters: straighten(&self.graph, reduce(&self.graph, &raw)),
        }
    }

    pub fn invert(&self) -> TraceWord {
        let raw: Vec<Letter> = self.letters.iter().rev().map(|l| l.inverted()).collect();
        TraceWord {
            graph: Arc::clone(&self.graph),
            letters: straighten(&self.graph, raw),
        }
    }

    /// Letters that begin some geodesic representative: occurrences with no
    /// earlier occurrence they fail to commute with.
    pub fn initial_letters(&self) -> BTreeSet<Letter> {
        let mut initial = BTreeSet::new();
        for (i, &l) in self.letters.iter().enumerate() {
            if self.letters[..i].iter().all(|&m| commute(&self.graph, m, l)) {
                initial.insert(l);
            }
        }
        initial
    }

    /// Whether every vertex occurring in the word is adjacent to `v`. All
    /// geodesic representatives share one letter multiset, so this does not
    /// depend on the representative.
    pub fn all_letters_adjacent_to(&self, v: usize) -> bool {
        self.letters.iter().all(|l| self.graph.adjacent(l.vertex, v))
    }

    /// Every geodesic representative, i.e. the closure of the normal form
    /// under swaps of adjacent commuting letters. Refuses words longer than
    /// `budget`.
    pub fn geodesic_representatives(&self, budget: usize) -> Result<BTreeSet<Vec<Letter>>> {
        if self.len() > budget {
            return Err(Error::Resource {
                what: "geodesic enumeration",
                cap: budget,
                actual: self.len(),
            });
        }
        let mut seen = BTreeSet::from([self.letters.clone()]);
        let mut queue = VecDeque::from([self.letters.clone()]);
        while let Some(w) = queue.pop_front() {
            for i in 1..w.len() {
                if commute(&self.graph, w[i - 1], w[i]) {
                    let mut next = w.clone();
                    next.swap(i - 1, i);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(seen)
    }
}

/// The shortlex least geodesic representative of the element spelled by
/// `raw`.
pub fn normalize(graph: &Arc<Graph>, raw: &[Letter]) -> Result<TraceWord> {
    if let Some(bad) = raw.iter().find(|l| l.vertex >= graph.vertex_count()) {
        return Err(Error::input(format!(
            "letter refers to vertex {} outside the graph",
            bad.vertex
        )));
    }
    Ok(TraceWord {
        graph: Arc::clone(graph),
        letters: straighten(graph, reduce(graph, raw)),
    })
}

/// Cancels each incoming letter against the closest earlier inverse that it
/// commutes past. The output has no cancellable pair, hence is geodesic.
fn reduce(graph: &Graph, raw: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(raw.len());
    for &l in raw {
        let mut cancel = None;
        for j in (0..out.len()).rev() {
            let m = out[j];
            if m.vertex == l.vertex {
                if m.inverse != l.inverse {
                    cancel = Some(j);
                }
                break;
            }
            if !graph.adjacent(m.vertex, l.vertex) {
                break;
            }
        }
        match cancel {
            Some(j) => {
                out.remove(j);
            }
            None => out.push(l),
        }
    }
    out
}

/// Lexicographically least word with the same trace as the geodesic `word`:
/// repeatedly emit the smallest letter that no remaining earlier letter
/// blocks.
fn straighten(graph: &Graph, word: Vec<Letter>) -> Vec<Letter> {
    let n = word.len();
    if n < 2 {
        return word;
    }
    let mut blockers = vec![0usize; n];
    for j in 0..n {
        for i in 0..j {
            if !commute(graph, word[i], word[j]) {
                blockers[j] += 1;
            }
        }
    }
    let mut emitted = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&i| !emitted[i] && blockers[i] == 0)
            .min_by_key(|&i| word[i])
            .expect("a trace always has a minimal letter");
        emitted[next] = true;
        out.push(word[next]);
        for j in next + 1..n {
            if !emitted[j] && !commute(graph, word[next], word[j]) {
                blockers[j] -= 1;
            }
        }
    }
    out
}

/// Decides `w1 = w2` by exhaustive rewriting of `w1 · w2⁻¹` with free
/// cancellations and swaps of adjacent commuting letters, independently of
/// [`normalize`]. Whenever a cancellation is available it is taken; the
/// search reaches the empty word exactly when the element is trivial.
pub fn brute_force_equal(graph: &Graph, w1: &[Letter], w2: &[Letter], budget: usize) -> Result<bool> {
    let total = w1.len() + w2.len();
    if total > budget {
        return Err(Error::Resource {
            what: "brute-force word comparison",
            cap: budget,
            actual: total,
        });
    }
    if let Some(bad) = w1.iter().chain(w2).find(|l| l.vertex >= graph.vertex_count()) {
        return Err(Error::input(format!(
            "letter refers to vertex {} outside the graph",
            bad.vertex
        )));
    }
    let mut start: Vec<Letter> = w1.to_vec();
    start.extend(w2.iter().rev().map(|l| l.inverted()));

    let mut seen: HashSet<Vec<Letter>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        if w.is_empty() {
            return Ok(true);
        }
        let mut successors = Vec::new();
        if let Some(i) = (1..w.len()).find(|&i| w[i - 1].cancels(w[i])) {
            let mut next = w.clone();
            next.drain(i - 1..=i);
            successors.push(next);
        } else {
            for i in 1..w.len() {
                if commute(graph, w[i - 1], w[i]) {
                    let mut next = w.clone();
                    next.swap(i - 1, i);
                    successors.push(next);
                }
            }
        }
        for next in successors {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}
