//! Interval isomorphisms, transfer, replacement and the per-return guarantees
//! of the recursive embedder.

use ugg_core::embedder::{
    embed_forest_audited, embed_tree, iso_interval, replace_highest, transfer_via_isomorphism,
};
use ugg_core::enumerate::{enumerate_forests, enumerate_trees};
use ugg_core::geometry::{CoordinateRealization, QuarterPlane};
use ugg_core::validate::{validate_embedding, ValidationFailure};
use ugg_core::{Embedding, Forest, Interval, Portals, ReturnRecord, RootedTree, UniversalGraph};

fn intervals(n: usize, max_len: usize) -> impl Iterator<Item = Interval> {
    (0..n).flat_map(move |lo| (lo + 1..n.min(lo + max_len)).map(move |hi| Interval::new(lo, hi).unwrap()))
}

#[test]
fn interval_isomorphisms_preserve_edges_crossings_and_top() {
    for n in [15, 31, 63] {
        let g = UniversalGraph::build(n).unwrap();
        let mut interior = 0;
        for iv in intervals(n, n) {
            let k = g.highest(iv);
            if let Ok((target, iso)) = iso_interval(&g, iv, k) {
                assert_eq!(target.len() + 1, iv.len());
                if iv.len() <= 24 {
                    assert_eq!(iso.verify(&g), Ok(()), "n={n} {iv} -> {target}");
                }
                if k != iv.lo && k != iv.hi {
                    interior += 1;
                }
            }
        }
        assert!(interior > 0, "n={n}");
    }
}

fn shapes(len: usize) -> Vec<(Vec<(usize, usize)>, RootedTree, usize)> {
    let mut out = Vec::new();
    for f in enumerate_trees(len).unwrap() {
        for a in 0..len {
            out.push((f.edges().to_vec(), RootedTree::from_edges(len, f.edges(), a).unwrap(), a));
        }
    }
    out
}

#[test]
fn transfer_keeps_embeddings_valid() {
    let n = 31;
    let g = UniversalGraph::build(n).unwrap();
    let mut checked = 0;
    for iv in intervals(n, 8) {
        let k = g.highest(iv);
        if k == iv.lo || k == iv.hi {
            continue;
        }
        let Ok((target, iso)) = iso_interval(&g, iv, k) else { continue };
        for (edges, t, a) in shapes(target.len()) {
            let phi = embed_tree(&g, &t, Portals::One(a), target).unwrap();
            let moved = transfer_via_isomorphism(&iso, &phi).unwrap();
            let r = validate_embedding(&g, t.len(), &edges, &moved);
            assert!(r.is_ok(), "{iv} {edges:?}: {:?}", r.failures);
            let second = iv.iter().filter(|&v| v != k).reduce(|b, v| if g.is_higher(v, b) { v } else { b });
            assert_eq!(Some(moved.map[a]), second);
            assert!(moved.map.iter().all(|&h| iv.contains(h) && h != k));
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn replacement_never_creates_crossings() {
    // only crossings are guaranteed; edges at the new vertex depend on where
    // it sits, so full validity is asserted when it sees the whole interval
    let n = 15;
    let g = UniversalGraph::build(n).unwrap();
    let (mut checked, mut full) = (0, 0);
    for iv in intervals(n, 7).chain((0..n).map(|v| Interval::new(v, v).unwrap())) {
        let k = g.highest(iv);
        let outside = (0..n).filter(|&x| !iv.contains(x));
        for x in outside {
            if !iv.iter().all(|w| w == k || g.is_higher(x, w)) {
                continue;
            }
            let sees_all = iv.iter().all(|w| w == k || g.has_edge(x, w));
            for (edges, t, a) in shapes(iv.len()) {
                let phi = embed_tree(&g, &t, Portals::One(a), iv).unwrap();
                let out = replace_highest(&g, iv, &phi, x).unwrap();
                assert_eq!(out.map[a], x);
                let r = validate_embedding(&g, t.len(), &edges, &out);
                for f in &r.failures {
                    match *f {
                        ValidationFailure::MissingEdge { image, .. } => {
                            assert!(!sees_all && (image.0 == x || image.1 == x))
                        }
                        other => panic!("{iv} x={x} {edges:?}: {other:?}"),
                    }
                }
                full += sees_all as usize;
                checked += 1;
            }
        }
    }
    assert!(checked > 100 && full > 50, "{checked} {full}");
}

#[test]
fn path_from_an_endpoint() {
    let g = UniversalGraph::build(7).unwrap();
    let edges: Vec<(usize, usize)> = (0..6).map(|v| (v, v + 1)).collect();
    let t = RootedTree::from_edges(7, &edges, 0).unwrap();
    let e = embed_tree(&g, &t, Portals::One(0), Interval::new(0, 6).unwrap()).unwrap();
    assert_eq!(e.map[0], 0);
    assert!(validate_embedding(&g, 7, &edges, &e).is_ok());
    let c = CoordinateRealization::realize(g.shape(), 7).unwrap();
    for x in 0..6 {
        for y in x + 1..6 {
            let (e1, e2) = ((e.map[x], e.map[x + 1]), (e.map[y], e.map[y + 1]));
            assert!(!c.segments_cross_exact(e1, e2).unwrap());
        }
    }
}

/// Check the guarantees of one recursive return on real coordinates.
fn check_return(g: &UniversalGraph, c: &CoordinateRealization, rec: &ReturnRecord) {
    let empty = |qp: QuarterPlane, skip: Option<usize>| {
        for &v in &rec.vertices {
            assert!(Some(v) == skip || !qp.contains_point(c, v), "{rec:?}: vertex {v} in {qp:?}");
        }
        for &(u, w) in &rec.edges {
            if Some(u) == skip || Some(w) == skip {
                continue;
            }
            assert!(!qp.meets_segment(c, u, w), "{rec:?}: edge ({u},{w}) meets {qp:?}");
        }
    };
    match rec.portals {
        Portals::One(a) => {
            assert_eq!(a, g.highest(rec.interval), "{rec:?}");
            if let Some(nb) = rec.portal_neighbor {
                empty(QuarterPlane::left(nb), Some(a));
            }
        }
        Portals::Two(a, b) => {
            assert!(a < b);
            empty(QuarterPlane::left(a), None);
            empty(QuarterPlane::right(b), None);
        }
    }
}

#[test]
fn every_return_keeps_its_quarter_planes_empty() {
    for n in 1..=9 {
        let g = UniversalGraph::build(n).unwrap();
        let c = CoordinateRealization::realize(g.shape(), n).unwrap();
        for f in enumerate_forests(n).unwrap() {
            let (_, records) = embed_forest_audited(&g, &f).unwrap();
            assert!(!records.is_empty());
            for rec in &records {
                check_return(&g, &c, rec);
            }
        }
    }
}

#[test]
fn every_return_keeps_its_quarter_planes_empty_up_to_31() {
    for n in [15, 23, 31] {
        let g = UniversalGraph::build(n).unwrap();
        let c = CoordinateRealization::realize(g.shape(), n).unwrap();
        let mut state = 0x2545f4914f6cdd1du64 ^ n as u64;
        for _ in 0..300 {
            let edges: Vec<(usize, usize)> = (1..n)
                .map(|v| {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    ((state % v as u64) as usize, v)
                })
                .collect();
            let f = Forest::new(n, edges).unwrap();
            let (e, records) = embed_forest_audited(&g, &f).unwrap();
            assert!(validate_embedding(&g, n, f.edges(), &e).is_ok());
            for rec in &records {
                check_return(&g, &c, rec);
            }
        }
    }
}

#[test]
fn embedding_with_wrong_map_is_caught() {
    let g = UniversalGraph::build(7).unwrap();
    let phi = Embedding::new(ugg_core::HostRef::Universal { n: 7 }, vec![0, 1]);
    let (_, iso) = iso_interval(&g, Interval::new(0, 2).unwrap(), 0).unwrap();
    assert!(transfer_via_isomorphism(&iso, &phi).is_err());
}
