use std::collections::BTreeMap;

use ugg_core::embedder::{embed_forest, embed_tree};
use ugg_core::validate::validate_embedding;
use ugg_core::{CaseLabel, Forest, Interval, Portals, RootedTree, UniversalGraph};

/// Small xorshift so the core crate's tests need no RNG dependency.
struct Xs(u64);
impl Xs {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }
    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Random recursive tree with varied shapes: each new vertex attaches to a
/// recent or arbitrary earlier vertex.
fn random_tree(rng: &mut Xs, n: usize) -> Vec<(usize, usize)> {
    let mode = rng.below(3);
    (1..n)
        .map(|v| {
            let p = match mode {
                0 => rng.below(v),
                1 => v - 1 - rng.below(v.min(3)),
                _ => rng.below(v.min(4)),
            };
            (p, v)
        })
        .collect()
}

#[test]
fn random_trees_on_random_intervals() {
    let g = UniversalGraph::build(1023).unwrap();
    let mut rng = Xs(0x9e3779b97f4a7c15);
    let mut seen: BTreeMap<CaseLabel, usize> = BTreeMap::new();
    for _ in 0..3000 {
        let len = 1 + rng.below(200);
        let lo = rng.below(1023 - len + 1);
        let iv = Interval::new(lo, lo + len - 1).unwrap();
        let edges = random_tree(&mut rng, len);
        let a = rng.below(len);
        let t = RootedTree::from_edges(len, &edges, a).unwrap();
        let portals = if len > 1 && rng.below(2) == 0 {
            let mut b = rng.below(len);
            if b == a {
                b = (b + 1) % len;
            }
            Portals::Two(a, b)
        } else {
            Portals::One(a)
        };
        let e = embed_tree(&g, &t, portals, iv)
            .unwrap_or_else(|err| panic!("iv={iv} portals={portals:?} edges={edges:?}: {err}"));
        assert!(e.map.iter().all(|&h| iv.contains(h)));
        let r = validate_embedding(&g, len, &edges, &e);
        assert!(r.is_ok(), "iv={iv} portals={portals:?} edges={edges:?}: {:?}", r.failures);
        for s in &e.provenance {
            *seen.entry(s.case).or_default() += 1;
        }
    }
    let all = [
        CaseLabel::Base,
        CaseLabel::Case1_1,
        CaseLabel::Case1_2_1,
        CaseLabel::Case1_2_2,
        CaseLabel::Case1_2_3,
        CaseLabel::Case1_2_4,
        CaseLabel::Case1_2_5_1,
        CaseLabel::Case1_2_5_2,
        CaseLabel::Case2,
        CaseLabel::Transfer,
        CaseLabel::Replace,
    ];
    for case in all {
        assert!(seen.get(&case).copied().unwrap_or(0) > 0, "{case:?} never ran");
    }
}

#[test]
fn large_random_forests() {
    let mut rng = Xs(0x1234_5678_9abc_def1);
    for n in [255, 1000, 1023, 4095] {
        let g = UniversalGraph::build(n).unwrap();
        for _ in 0..5 {
            let edges: Vec<(usize, usize)> = random_tree(&mut rng, n)
                .into_iter()
                .filter(|_| rng.below(20) != 0)
                .collect();
            let f = Forest::new(n, edges).unwrap();
            let e = embed_forest(&g, &f).unwrap();
            assert!(validate_embedding(&g, n, f.edges(), &e).is_ok());
        }
    }
}
