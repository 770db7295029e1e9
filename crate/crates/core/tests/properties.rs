//! Randomized invariants.

use proptest::prelude::*;
use proptest::sample::Index;

use ugg_core::convex::{build_caterpillar_host, build_twochord_host, embed_caterpillar, embed_twochord};
use ugg_core::embedder::{embed_forest, embed_tree};
use ugg_core::geometry::edges_cross;
use ugg_core::validate::validate_embedding;
use ugg_core::{
    BTreeShape, Caterpillar, ChordedCycle, Forest, Interval, Portals, RootedTree, UniversalGraph,
};

/// Tree edges from a parent choice for every vertex after the first.
fn tree_edges(parents: &[Index]) -> Vec<(usize, usize)> {
    parents.iter().enumerate().map(|(x, p)| (p.index(x + 1), x + 1)).collect()
}

fn tree(max: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec(any::<Index>(), 0..max).prop_map(|p| tree_edges(&p))
}

/// Forest: a random tree with each edge kept or dropped.
fn forest(max: usize) -> impl Strategy<Value = Forest> {
    prop::collection::vec((any::<Index>(), any::<bool>()), 0..max).prop_map(|v| {
        let n = v.len() + 1;
        let edges = v
            .iter()
            .enumerate()
            .filter(|(_, (_, keep))| *keep)
            .map(|(x, (p, _))| (p.index(x + 1), x + 1))
            .collect();
        Forest::new(n, edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn locate_and_index_round_trip(h in 1u32..=30, raw in any::<u64>()) {
        let shape = BTreeShape::full(h).unwrap();
        let i = (raw % shape.m() as u64) as usize;
        let (level, pos) = shape.locate(i).unwrap();
        prop_assert_eq!(shape.index(level, pos).unwrap(), i);
        let info = shape.nav(i).unwrap();
        if let Some(l) = info.left_child {
            prop_assert_eq!(shape.nav(l).unwrap().parent, Some(i));
            prop_assert_eq!(info.right_child.map(|r| shape.nav(r).unwrap().parent), Some(Some(i)));
        }
        if let Some(r) = info.right_level_neighbor {
            prop_assert_eq!(shape.nav(r).unwrap().left_level_neighbor, Some(i));
        }
    }

    #[test]
    fn height_order_is_strict_and_transitive(n in 3usize..5000, a in any::<Index>(), b in any::<Index>(), c in any::<Index>()) {
        let shape = BTreeShape::new(n).unwrap();
        let (u, v, w) = (a.index(n), b.index(n), c.index(n));
        prop_assume!(u != v && v != w && u != w);
        let uv = shape.higher(u, v).unwrap();
        prop_assert_ne!(uv, shape.higher(v, u).unwrap());
        if uv && shape.higher(v, w).unwrap() {
            prop_assert!(shape.higher(u, w).unwrap());
        }
    }

    #[test]
    fn crossing_is_symmetric_at_scale(n in 4usize..100_000, v in prop::collection::vec(any::<Index>(), 4)) {
        let shape = BTreeShape::new(n).unwrap();
        let p: Vec<usize> = v.iter().map(|i| i.index(n)).collect();
        prop_assume!(p[0] != p[1] && p[2] != p[3]);
        let base = edges_cross(&shape, (p[0], p[1]), (p[2], p[3])).unwrap();
        prop_assert_eq!(base, edges_cross(&shape, (p[3], p[2]), (p[1], p[0])).unwrap());
    }

    #[test]
    fn cut_vertex_splits_as_promised(edges in tree(60), root in any::<Index>(), s in any::<Index>()) {
        let len = edges.len() + 1;
        prop_assume!(len >= 2);
        let t = RootedTree::from_edges(len, &edges, root.index(len)).unwrap();
        let s = 1 + s.index(len);
        let c = t.cut_vertex(s).unwrap();
        prop_assert!(t.size(c) >= s);
        for &d in t.children(c) {
            prop_assert!(t.size(d) < s);
        }
    }

    #[test]
    fn random_forests_embed(f in forest(300)) {
        let g = UniversalGraph::build(f.n()).unwrap();
        let e = embed_forest(&g, &f).unwrap();
        let r = validate_embedding(&g, f.n(), f.edges(), &e);
        prop_assert!(r.is_ok(), "{:?}", r.failures);
    }

    #[test]
    fn random_trees_embed_with_two_portals(edges in tree(120), a in any::<Index>(), b in any::<Index>(), shift in any::<Index>()) {
        let len = edges.len() + 1;
        prop_assume!(len >= 2);
        let (a, b) = (a.index(len), b.index(len));
        prop_assume!(a != b);
        let g = UniversalGraph::build(511).unwrap();
        let lo = shift.index(511 - len + 1);
        let iv = Interval::new(lo, lo + len - 1).unwrap();
        let t = RootedTree::from_edges(len, &edges, a).unwrap();
        let e = embed_tree(&g, &t, Portals::Two(a, b), iv).unwrap();
        prop_assert!(e.map[a] < e.map[b]);
        let r = validate_embedding(&g, len, &edges, &e);
        prop_assert!(r.is_ok(), "{:?}", r.failures);
        let one = embed_tree(&g, &t, Portals::One(a), iv).unwrap();
        prop_assert_eq!(one.map[a], g.highest(iv));
        prop_assert!(validate_embedding(&g, len, &edges, &one).is_ok());
    }

    #[test]
    fn random_caterpillars_embed(counts in prop::collection::vec(0usize..6, 1..40)) {
        let n = counts.len() + counts.iter().sum::<usize>();
        let mut next = counts.len();
        let leaves = counts.iter().map(|&c| { let l = (next..next + c).collect(); next += c; l }).collect();
        let c = Caterpillar::new(n, (0..counts.len()).collect(), leaves).unwrap();
        let host = build_caterpillar_host(n).unwrap();
        let e = embed_caterpillar(&host, &c).unwrap();
        prop_assert!(validate_embedding(&host, n, &c.edges(), &e).is_ok());
    }

    #[test]
    fn random_twochord_cycles_embed(n in 6usize..400, cuts in prop::collection::vec(any::<Index>(), 4)) {
        // pick four endpoints and pair them without crossing
        let mut p: Vec<usize> = cuts.iter().map(|i| i.index(n)).collect();
        p.sort_unstable();
        p.dedup();
        prop_assume!(p.len() == 4);
        let nested = cuts[0].index(2) == 0;
        let chords = if nested { vec![(p[0], p[3]), (p[1], p[2])] } else { vec![(p[0], p[1]), (p[2], p[3])] };
        let Ok(g) = ChordedCycle::new(n, chords) else { return Ok(()) };
        let host = build_twochord_host(n).unwrap();
        let e = embed_twochord(&host, &g).unwrap();
        prop_assert!(validate_embedding(&host, n, &g.edges(), &e).is_ok());
    }
}
