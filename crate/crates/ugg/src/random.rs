//! Seeded uniform random labeled trees.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ugg_core::Forest;

/// Generator used by every seeded sweep.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Tree edges decoded from a Prüfer sequence over `0..seq.len() + 2`.
pub fn prufer_decode(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

/// Uniformly random labeled tree on `n ≥ 1` vertices.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Forest {
    let edges = if n < 2 {
        Vec::new()
    } else {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        prufer_decode(&seq)
    };
    Forest::new(n, edges).expect("decoded Prüfer sequences are trees")
}
