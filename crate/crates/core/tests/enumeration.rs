//! Enumerator counts against independent slow counters.

use std::collections::BTreeSet;

use ugg_core::convex::Caterpillar;
use ugg_core::enumerate::{
    automorphism_count_brute, count_forest_classes_brute, count_labeled_forests_brute,
    enumerate_caterpillars, enumerate_chorded_cycles, enumerate_forests, enumerate_trees,
    free_tree_canonical, labeled_chord_sets, stabilizer_size,
};
use ugg_core::Forest;

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Labeled forests by the component of vertex 0: choose its other members and
/// one of the k^(k-2) labeled trees on them.
fn labeled_forests_formula(n: u64) -> u64 {
    let mut f = vec![1u64];
    for m in 1..=n {
        let total = (1..=m)
            .map(|k| {
                let trees = if k < 2 { 1 } else { k.pow(k as u32 - 2) };
                binomial(m - 1, k - 1) * trees * f[(m - k) as usize]
            })
            .sum();
        f.push(total);
    }
    f[n as usize]
}

fn forest_key(f: &Forest) -> Vec<String> {
    let adj = f.adjacency();
    let mut key: Vec<String> = f
        .components()
        .iter()
        .map(|comp| {
            let local: Vec<Vec<usize>> = comp
                .iter()
                .map(|&v| adj[v].iter().map(|w| comp.iter().position(|x| x == w).unwrap()).collect())
                .collect();
            free_tree_canonical(&local)
        })
        .collect();
    key.sort();
    key
}

#[test]
fn forest_counts() {
    let counts: Vec<usize> = (1..=12).map(|n| enumerate_forests(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 3, 6, 10, 20, 37, 76, 153, 329, 710, 1601]);
    assert_eq!(counts[..10].iter().sum::<usize>(), 637);
    let trees: Vec<usize> = (1..=12).map(|n| enumerate_trees(n).unwrap().len()).collect();
    assert_eq!(trees, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
}

#[test]
fn forests_are_pairwise_non_isomorphic() {
    for n in 1..=10 {
        let all = enumerate_forests(n).unwrap();
        let keys: BTreeSet<Vec<String>> = all.iter().map(forest_key).collect();
        assert_eq!(keys.len(), all.len(), "n={n}");
    }
}

#[test]
fn labeled_double_count() {
    for n in 1..=8u64 {
        let brute = count_labeled_forests_brute(n as usize);
        assert_eq!(brute, labeled_forests_formula(n), "n={n}");
        let orbits: u64 = enumerate_forests(n as usize)
            .unwrap()
            .iter()
            .map(|f| factorial(n) / automorphism_count_brute(f))
            .sum();
        assert_eq!(orbits, brute, "n={n}");
    }
    assert_eq!(
        (1..=8).map(labeled_forests_formula).collect::<Vec<_>>(),
        [1, 2, 7, 38, 291, 2932, 36961, 561948]
    );
}

#[test]
fn class_count_by_relabeling() {
    for n in 1..=6 {
        assert_eq!(count_forest_classes_brute(n), enumerate_forests(n).unwrap().len(), "n={n}");
    }
}

#[test]
fn caterpillar_counts() {
    let counts: Vec<usize> = (5..=12).map(|n| enumerate_caterpillars(n).unwrap().len()).collect();
    assert_eq!(counts, [3, 6, 10, 20, 36, 72, 136, 272]);
    for n in 4..=14usize {
        let formula = (1 << (n - 4)) + (1 << ((n - 4) / 2));
        assert_eq!(enumerate_caterpillars(n).unwrap().len(), formula, "n={n}");
    }
}

#[test]
fn caterpillars_match_filtered_trees() {
    for n in 1..=12 {
        let filtered: BTreeSet<String> = enumerate_trees(n)
            .unwrap()
            .iter()
            .filter(|f| Caterpillar::from_forest(f).is_ok())
            .map(|f| free_tree_canonical(&f.adjacency()))
            .collect();
        let direct: Vec<String> = enumerate_caterpillars(n)
            .unwrap()
            .iter()
            .map(|c| {
                let f = c.to_forest();
                let again = Caterpillar::from_forest(&f).unwrap();
                assert_eq!(again.n(), n);
                free_tree_canonical(&f.adjacency())
            })
            .collect();
        let unique: BTreeSet<String> = direct.iter().cloned().collect();
        assert_eq!(unique.len(), direct.len(), "n={n}");
        assert_eq!(unique, filtered, "n={n}");
    }
}

#[test]
fn chorded_cycle_orbit_count() {
    for h in 1..=3 {
        for n in (2 * h + 2).max(4)..=12 {
            let mut labeled = 0usize;
            labeled_chord_sets(n, h, false, &mut |_| labeled += 1);
            let classes = enumerate_chorded_cycles(n, h).unwrap();
            let orbits: usize = classes.iter().map(|g| 2 * n / stabilizer_size(g)).sum();
            assert_eq!(orbits, labeled, "n={n} h={h}");
        }
    }
}

#[test]
fn chorded_cycle_examples() {
    assert_eq!(enumerate_chorded_cycles(6, 1).unwrap().len(), 2);
    assert_eq!(enumerate_chorded_cycles(4, 1).unwrap().len(), 1);
    // a chord of length 3 leaves two arcs of two adjacent vertices, so both
    // chords have length 2 and cut off disjoint triangles
    let two = enumerate_chorded_cycles(6, 2).unwrap();
    assert_eq!(two.len(), 1);
    assert_eq!(two[0].chords(), [(0, 2), (3, 5)]);
    let mut labeled = 0usize;
    labeled_chord_sets(6, 2, false, &mut |_| labeled += 1);
    assert_eq!(labeled, 3);
    let counts: Vec<usize> = (6..=30).map(|n| enumerate_chorded_cycles(n, 2).unwrap().len()).collect();
    assert!(counts.windows(2).all(|w| w[0] <= w[1]));
}
