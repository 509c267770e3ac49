use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use polyfree::dbcp::{self, Length2Splitting};
use polyfree::fixtures;
use polyfree::freegrp::{self, free_reduce, FreeLetter, FreeWord, Index, SubgroupPresentation};
use polyfree::semidirect::Action;
use polyfree::tower::{self, DeadSplit};
use polyfree::words::{brute_force_equal, normalize, Letter};
use polyfree::{Graph, Limits, Shape, VertexSet};

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits >> k & 1 == 1 {
                edges.push((names[u].clone(), names[v].clone()));
            }
            k += 1;
        }
    }
    Graph::new(&names, &edges).unwrap()
}

fn small_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max, any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
}

fn letters(n: usize, raw: &[(usize, bool)]) -> Vec<Letter> {
    raw.iter().map(|&(v, inv)| Letter::new(v % n, inv)).collect()
}

fn raw_word(max_len: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..16, any::<bool>()), 0..=max_len)
}

/// One random rewrite: a commuting swap or the insertion of a cancelling
/// pair, both chosen by `seed`.
fn rewrite(graph: &Graph, w: &[Letter], seed: u64) -> Vec<Letter> {
    let mut out = w.to_vec();
    let n = graph.vertex_count();
    if seed % 2 == 0 && out.len() >= 2 {
        let i = 1 + (seed as usize / 2) % (out.len() - 1);
        let (a, b) = (out[i - 1], out[i]);
        if a.vertex != b.vertex && graph.adjacent(a.vertex, b.vertex) {
            out.swap(i - 1, i);
        }
    } else {
        let l = Letter::new((seed as usize / 2) % n, seed % 4 == 1);
        let at = (seed as usize / 7) % (out.len() + 1);
        out.splice(at..at, [l, l.inverted()]);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn clique_at_most_chromatic(g in small_graph(9)) {
        let limits = Limits::default();
        let clq = g.clique_number(&limits).unwrap();
        let (chr, coloring) = g.chromatic_number(&limits).unwrap();
        prop_assert!(clq <= chr);
        prop_assert!(coloring.is_proper(&g));
        prop_assert_eq!(coloring.color_count(), chr);
        prop_assert_eq!(coloring.classes().len(), chr);
    }

    #[test]
    fn forest_iff_no_cycles(g in small_graph(8)) {
        let cycles = g.enumerate_simple_cycles(&Limits::default()).unwrap();
        prop_assert_eq!(g.is_forest(), cycles.is_empty());
        prop_assert_eq!(g.find_cycle().is_none(), cycles.is_empty());
        for c in &cycles {
            prop_assert!(c.len() >= 3);
            for i in 0..c.len() {
                prop_assert!(g.adjacent(c[i], c[(i + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn display_parse_round_trip(g in small_graph(7)) {
        prop_assert_eq!(Graph::parse(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn normalize_idempotent(g in small_graph(5), raw in raw_word(8)) {
        let g = Arc::new(g);
        let w = letters(g.vertex_count(), &raw);
        let once = normalize(&g, &w).unwrap();
        let twice = normalize(&g, once.letters()).unwrap();
        prop_assert!(once.len() <= w.len());
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn normalize_respects_rewrites(g in small_graph(5), raw in raw_word(8), seeds in prop::collection::vec(any::<u64>(), 1..6)) {
        let g = Arc::new(g);
        let w = letters(g.vertex_count(), &raw);
        let mut v = w.clone();
        for s in seeds {
            v = rewrite(&g, &v, s);
        }
        prop_assert_eq!(normalize(&g, &w).unwrap(), normalize(&g, &v).unwrap());
    }

    #[test]
    fn normalize_matches_oracle(g in small_graph(5), a in raw_word(6), b in raw_word(6)) {
        let g = Arc::new(g);
        let n = g.vertex_count();
        let (w1, w2) = (letters(n, &a), letters(n, &b));
        let fast = normalize(&g, &w1).unwrap() == normalize(&g, &w2).unwrap();
        prop_assert_eq!(fast, brute_force_equal(&g, &w1, &w2, 12).unwrap());
    }

    #[test]
    fn normal_form_is_shortlex_least_geodesic(g in small_graph(5), raw in raw_word(8)) {
        let g = Arc::new(g);
        let u = normalize(&g, &letters(g.vertex_count(), &raw)).unwrap();
        prop_assume!(u.len() <= 6);
        let reps = u.geodesic_representatives(12).unwrap();
        prop_assert_eq!(reps.iter().next().unwrap().as_slice(), u.letters());
        let firsts: BTreeSet<Letter> = reps.iter().filter_map(|w| w.first().copied()).collect();
        prop_assert_eq!(firsts, u.initial_letters());
        // every geodesic has the same letter multiset
        let sorted = |w: &[Letter]| { let mut v = w.to_vec(); v.sort(); v };
        let base = sorted(u.letters());
        for w in &reps {
            prop_assert_eq!(sorted(w), base.clone());
            prop_assert_eq!(normalize(&g, w).unwrap(), u.clone());
        }
    }

    #[test]
    fn group_laws(g in small_graph(5), a in raw_word(5), b in raw_word(5), c in raw_word(5)) {
        let g = Arc::new(g);
        let n = g.vertex_count();
        let (x, y, z) = (
            normalize(&g, &letters(n, &a)).unwrap(),
            normalize(&g, &letters(n, &b)).unwrap(),
            normalize(&g, &letters(n, &c)).unwrap(),
        );
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(x.multiply(&x.invert()).unwrap().is_empty());
        prop_assert!(x.invert().multiply(&x).unwrap().is_empty());
    }

    #[test]
    fn free_reduce_idempotent(raw in prop::collection::vec((0u8..3, any::<bool>()), 0..20)) {
        let once = free_reduce(raw.iter().map(|&(s, i)| FreeLetter::new(s, i)));
        let twice = free_reduce(once.letters().iter().cloned());
        prop_assert!(once.len() <= raw.len());
        prop_assert_eq!(&once, &twice);
        prop_assert!(once.mul(&once.inverse()).is_identity());
    }

    #[test]
    fn subgroup_index_ignores_generator_order(
        gens in prop::collection::vec(prop::collection::vec((0usize..2, any::<bool>()), 1..6), 1..5),
        perm_seed in any::<u64>(),
    ) {
        let words: Vec<FreeWord<usize>> = gens.iter().map(|g| FreeWord::from_pairs(g.iter().copied())).collect();
        let mut shuffled = words.clone();
        let len = shuffled.len();
        for i in (1..len).rev() {
            let j = (perm_seed as usize).wrapping_mul(i + 7) % (i + 1);
            shuffled.swap(i, j);
        }
        let a = freegrp::subgroup_index(&SubgroupPresentation { rank: 2, generators: words }).unwrap();
        let b = freegrp::subgroup_index(&SubgroupPresentation { rank: 2, generators: shuffled }).unwrap();
        prop_assert_eq!(a.index, b.index);
        prop_assert_eq!(a.rank, b.rank);
        if let Index::Finite(i) = a.index {
            prop_assert!(freegrp::schreier_check(2, i, a.rank));
        }
    }

    #[test]
    fn tower_level_checks(g in small_graph(5), class_seed in any::<usize>()) {
        let g = Arc::new(g);
        let (_, coloring) = g.chromatic_number(&Limits::default()).unwrap();
        let classes = coloring.classes();
        let class = classes[class_seed % classes.len()].clone();
        let split = DeadSplit::new(Arc::clone(&g), class).unwrap();
        let report = split.check_automorphisms(2);
        prop_assert!(report.passed(), "{:?}", report);
        prop_assert!(split.relator_check().unwrap().all_trivial);
        let tower = tower::build_tower(&g, &coloring).unwrap();
        prop_assert_eq!(tower.length, coloring.color_count());
    }

    #[test]
    fn action_independent_of_representative(g in small_graph(5), raw in raw_word(5)) {
        let g = Arc::new(g);
        let (_, coloring) = g.chromatic_number(&Limits::default()).unwrap();
        let split = DeadSplit::new(Arc::clone(&g), coloring.classes()[0].clone()).unwrap();
        prop_assume!(split.living().vertex_count() > 0);
        let living = split.living();
        let u = normalize(living, &letters(living.vertex_count(), &raw)).unwrap();
        for s in split.symbols_up_to(1) {
            let w = FreeWord::generator(s);
            let expected = split.act_by(&u, &w);
            for rep in u.geodesic_representatives(12).unwrap() {
                let by_rep = rep.iter().fold(w.clone(), |acc, &l| split.act_on_word(l, &acc));
                prop_assert_eq!(&by_rep, &expected);
            }
        }
    }

    #[test]
    fn dbcp_structural_matches_cycles(g in small_graph(8), mask in any::<u64>()) {
        let n = g.vertex_count();
        let s = VertexSet::from_mask(mask & ((1u64 << n) - 1));
        prop_assume!(g.is_independent(&s));
        prop_assert_eq!(
            dbcp::structural_condition(&g, &s).unwrap(),
            dbcp::cycle_condition(&g, &s, &Limits::default()).unwrap()
        );
    }

    #[test]
    fn dbcp_consequences(g in small_graph(8)) {
        let limits = Limits::default();
        if let Some(cert) = dbcp::find_d(&g, &limits).unwrap() {
            prop_assert!(g.chromatic_number(&limits).unwrap().0 <= 3);
            prop_assert!(g.clique_number(&limits).unwrap() <= 2);
            prop_assert!(!g.has_triangle());
            let report = dbcp::euler(&g, Some(&cert), None);
            prop_assert_eq!(report.chi_ve, report.chi_cd);
            let split = Length2Splitting::new(Arc::new(g), &cert.dead).unwrap();
            let verified = split.verify(2).unwrap();
            prop_assert!(verified.passed, "{:?}", verified);
        }
    }
}

#[test]
fn trees_classify_as_trees() {
    assert_eq!(fixtures::edgeless(1).classify_shape(), Shape::Tree);
    for n in 3..=6 {
        assert!(fixtures::labeled_trees(n).all(|t| t.classify_shape() == Shape::Tree));
    }
}

#[test]
fn complete_bipartite_round_trip() {
    for k in 1..=4 {
        for q in 1..=4 {
            let shape = fixtures::complete_bipartite(k, q).classify_shape();
            let expected = if k == 1 && q > 1 || q == 1 && k > 1 {
                Shape::Tree
            } else {
                Shape::CompleteBipartite { k, q }
            };
            assert_eq!(shape, expected, "K_{k},{q}");
            if let Some((a, b)) = fixtures::complete_bipartite(k, q).is_complete_bipartite() {
                assert!((a, b) == (k, q) || (a, b) == (q, k));
            } else {
                panic!("K_{k},{q} not recognized");
            }
        }
    }
}
