//! Named graphs and deterministic graph corpora used by the test suites and
//! by `polyfree verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn build(names: &[String], edges: &[(usize, usize)]) -> Graph {
    let pairs: Vec<(&str, &str)> = edges
        .iter()
        .map(|&(u, v)| (names[u].as_str(), names[v].as_str()))
        .collect();
    let vertices: Vec<&str> = names.iter().map(String::as_str).collect();
    Graph::new(&vertices, &pairs).expect("fixture graphs are well formed")
}

/// The 5-cycle `a-b-c-d-e-a`.
pub fn pentagon() -> Graph {
    Graph::new(
        &["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
    )
    .unwrap()
}

/// The pentagonal prism: outer cycle `a..e`, inner cycle `a'..e'`, and the
/// rungs `a-a'`, ..., `e-e'`.
pub fn prism() -> Graph {
    let outer = ["a", "b", "c", "d", "e"];
    let inner = ["a'", "b'", "c'", "d'", "e'"];
    let mut edges = Vec::new();
    for i in 0..5 {
        let j = (i + 1) % 5;
        edges.push((outer[i], outer[j]));
        edges.push((inner[i], inner[j]));
        edges.push((outer[i], inner[i]));
    }
    let vertices: Vec<&str> = outer.iter().chain(inner.iter()).copied().collect();
    Graph::new(&vertices, &edges).unwrap()
}

/// Seven vertices `a,b,c,d,e,x,y` with edges `a-x, x-y, d-y, d-b, e-x, e-b,
/// e-c`. With dead set `{d, e}` the living forest has components
/// `{a,x,y}, {b}, {c}` and the length-2 action table is the classic worked
/// example: the edge set is the only one on these vertices consistent with
/// every entry of that table.
pub fn splitting_example() -> Graph {
    Graph::new(
        &["a", "b", "c", "d", "e", "x", "y"],
        &[
            ("a", "x"),
            ("x", "y"),
            ("d", "y"),
            ("d", "b"),
            ("e", "x"),
            ("e", "b"),
            ("e", "c"),
        ],
    )
    .unwrap()
}

pub fn complete(n: usize) -> Graph {
    let names = numbered(n);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    build(&names, &edges)
}

pub fn edgeless(n: usize) -> Graph {
    build(&numbered(n), &[])
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    build(&numbered(n), &edges)
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    build(&numbered(n), &edges)
}

/// Star with center `v0` and `n - 1` leaves.
pub fn star(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    build(&numbered(n), &edges)
}

/// `K_{k,q}` with sides `p0..` and `q0..`.
pub fn complete_bipartite(k: usize, q: usize) -> Graph {
    let mut names: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
    names.extend((0..q).map(|i| format!("q{i}")));
    let edges: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..q).map(move |j| (i, k + j)))
        .collect();
    build(&names, &edges)
}

/// The labeled tree on `n ≥ 2` vertices encoded by a Prüfer sequence of
/// length `n - 2`.
pub fn tree_from_pruefer(code: &[usize]) -> Graph {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    build(&numbered(n), &edges)
}

/// Every labeled tree on `n ≥ 2` vertices, one per Prüfer sequence.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n >= 2);
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total).map(move |mut code_index| {
        let mut code = vec![0usize; len];
        for slot in code.iter_mut() {
            *slot = code_index % n;
            code_index /= n;
        }
        tree_from_pruefer(&code)
    })
}

/// A reproducible sample of `count` Erdős–Rényi graphs with 1 to
/// `max_vertices` vertices and edge probability drawn per graph.
pub fn random_corpus(seed: u64, count: usize, max_vertices: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_vertices);
            let p: f64 = rng.gen_range(0.2..0.8);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            build(&numbered(n), &edges)
        })
        .collect()
}

/// The fixed 50-graph corpus on at most five vertices.
pub fn small_corpus() -> Vec<Graph> {
    random_corpus(0x5EED_0005, 50, 5)
}

/// Hand-picked graphs exercising every construction, paired with a short
/// label. All have at most twelve vertices.
pub fn named_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("pentagon", pentagon()),
        ("prism", prism()),
        ("splitting-example", splitting_example()),
        ("triangle", complete(3)),
        ("k4", complete(4)),
        ("k2,3", complete_bipartite(2, 3)),
        ("k3,3", complete_bipartite(3, 3)),
        ("path4", path(4)),
        ("star5", star(5)),
        ("cycle4", cycle(4)),
        ("cycle6", cycle(6)),
        ("edgeless3", edgeless(3)),
        ("single", edgeless(1)),
    ]
}

/// Named corpus followed by the small random corpus and a few larger random
/// graphs on up to nine vertices.
pub fn full_corpus() -> Vec<(String, Graph)> {
    let mut all: Vec<(String, Graph)> = named_corpus()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    all.extend(
        small_corpus()
            .into_iter()
            .enumerate()
            .map(|(i, g)| (format!("small-{i}"), g)),
    );
    all.extend(
        random_corpus(0x5EED_0009, 10, 9)
            .into_iter()
            .enumerate()
            .map(|(i, g)| (format!("medium-{i}"), g)),
    );
    all
}
