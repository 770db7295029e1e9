use ugg_core::embedder::{embed_forest, embed_tree};
use ugg_core::enumerate::{enumerate_forests, enumerate_trees};
use ugg_core::validate::validate_embedding;
use ugg_core::{Interval, Portals, RootedTree, UniversalGraph};

#[test]
fn every_forest_up_to_ten_embeds() {
    for n in 1..=10 {
        let g = UniversalGraph::build(n).unwrap();
        for f in enumerate_forests(n).unwrap() {
            let e = embed_forest(&g, &f)
                .unwrap_or_else(|err| panic!("n={n} edges={:?}: {err}", f.edges()));
            let r = validate_embedding(&g, n, f.edges(), &e);
            assert!(r.is_ok(), "n={n} edges={:?}: {:?}", f.edges(), r.failures);
        }
    }
}

#[test]
fn every_tree_embeds_from_every_root_and_portal_pair() {
    for n in 2..=9 {
        let g = UniversalGraph::build(n).unwrap();
        let iv = Interval::new(0, n - 1).unwrap();
        for f in enumerate_trees(n).unwrap() {
            for a in 0..n {
                let t = RootedTree::from_edges(n, f.edges(), a).unwrap();
                let e = embed_tree(&g, &t, Portals::One(a), iv)
                    .unwrap_or_else(|err| panic!("edges={:?} a={a}: {err}", f.edges()));
                assert!(validate_embedding(&g, n, f.edges(), &e).is_ok());
                for b in 0..n {
                    if b == a {
                        continue;
                    }
                    let e = embed_tree(&g, &t, Portals::Two(a, b), iv)
                        .unwrap_or_else(|err| panic!("edges={:?} a={a} b={b}: {err}", f.edges()));
                    let r = validate_embedding(&g, n, f.edges(), &e);
                    assert!(r.is_ok(), "edges={:?} a={a} b={b}: {:?}", f.edges(), r.failures);
                    assert!(e.map[a] < e.map[b]);
                }
            }
        }
    }
}
