//! Exhaustive enumerators for small forests, caterpillars and chorded cycles,
//! one representative per isomorphism class, plus slow reference counters
//! used to cross-check them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::convex::{Caterpillar, ChordedCycle};
use crate::tree::Forest;
use crate::{Error, Result};

pub const FOREST_CAP: usize = 12;
pub const CATERPILLAR_CAP: usize = 14;
pub const CHORDED_CAP_N: usize = 30;
pub const CHORDED_CAP_H: usize = 3;

/// Rooted unlabeled tree as the sorted multiset of its children, each an index
/// into the table of smaller trees.
#[derive(Debug, Clone)]
struct RootedShape {
    size: usize,
    children: Vec<usize>,
}

/// All rooted unlabeled trees with at most `max` vertices, ordered by size.
fn rooted_shapes(max: usize) -> Vec<RootedShape> {
    let mut all: Vec<RootedShape> = Vec::new();
    for size in 1..=max {
        let pool = all.len();
        let mut out = Vec::new();
        let mut stack = Vec::new();
        children_multisets(&all, pool, size - 1, 0, &mut stack, &mut out);
        all.extend(out.into_iter().map(|children| RootedShape { size, children }));
    }
    all
}

/// Non-decreasing index sequences from `table[from..pool]` whose sizes sum to
/// `left`.
fn children_multisets(
    table: &[RootedShape],
    pool: usize,
    left: usize,
    from: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if left == 0 {
        out.push(stack.clone());
        return;
    }
    for x in from..pool {
        let s = table[x].size;
        if s > left {
            break;
        }
        stack.push(x);
        children_multisets(table, pool, left - s, x, stack, out);
        stack.pop();
    }
}

/// Append the edges of shape `x` rooted at a fresh vertex; returns the root.
fn expand(table: &[RootedShape], x: usize, next: &mut usize, edges: &mut Vec<(usize, usize)>) -> usize {
    let root = *next;
    *next += 1;
    for &c in &table[x].children {
        let child = expand(table, c, next, edges);
        edges.push((root, child));
    }
    root
}

/// Canonical string of a free tree given by adjacency lists: the smaller
/// nested-parenthesis encoding over its one or two centers.
pub fn free_tree_canonical(adj: &[Vec<usize>]) -> String {
    let n = adj.len();
    if n == 0 {
        return String::new();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(adj, c, usize::MAX))
        .min()
        .expect("tree has a center")
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    parts.sort_unstable();
    let mut s = String::from("(");
    for p in parts {
        s.push_str(&p);
    }
    s.push(')');
    s
}

/// One edge list per free tree on exactly `size` vertices, ordered by
/// canonical string.
fn free_trees_of_size(table: &[RootedShape], size: usize) -> Vec<Vec<(usize, usize)>> {
    let mut seen: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
    for x in table.iter().enumerate().filter(|(_, t)| t.size == size).map(|(x, _)| x) {
        let mut edges = Vec::new();
        let mut next = 0;
        expand(table, x, &mut next, &mut edges);
        let code = free_tree_canonical(&adjacency(size, &edges));
        seen.entry(code).or_insert(edges);
    }
    seen.into_values().collect()
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, w) in edges {
        adj[u].push(w);
        adj[w].push(u);
    }
    adj
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    if n > cap {
        return Err(Error::SizeTooLarge { n, cap });
    }
    Ok(())
}

/// Every free tree on `n` vertices up to isomorphism.
pub fn enumerate_trees(n: usize) -> Result<Vec<Forest>> {
    check_cap(n, FOREST_CAP)?;
    let table = rooted_shapes(n);
    Ok(free_trees_of_size(&table, n)
        .into_iter()
        .map(|e| Forest::new(n, e).expect("generated tree is acyclic"))
        .collect())
}

/// Every forest on `n` vertices up to isomorphism.
///
/// Forests are multisets of free trees; each component takes the next block of
/// vertex ids, larger components first.
pub fn enumerate_forests(n: usize) -> Result<Vec<Forest>> {
    check_cap(n, FOREST_CAP)?;
    let table = rooted_shapes(n);
    // (size, edges) for every free tree with at most n vertices, larger first
    let mut pool: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for size in (1..=n).rev() {
        pool.extend(free_trees_of_size(&table, size).into_iter().map(|e| (size, e)));
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    forest_multisets(&pool, n, 0, &mut stack, &mut |parts| {
        let mut edges = Vec::new();
        let mut base = 0;
        for &x in parts {
            let (size, ref es) = pool[x];
            edges.extend(es.iter().map(|&(u, w)| (u + base, w + base)));
            base += size;
        }
        out.push(Forest::new(n, edges).expect("union of trees is a forest"));
    });
    Ok(out)
}

fn forest_multisets(
    pool: &[(usize, Vec<(usize, usize)>)],
    left: usize,
    from: usize,
    stack: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if left == 0 {
        emit(stack);
        return;
    }
    for x in from..pool.len() {
        if pool[x].0 > left {
            continue;
        }
        stack.push(x);
        forest_multisets(pool, left - pool[x].0, x, stack, emit);
        stack.pop();
    }
}

/// Every caterpillar on `n` vertices up to isomorphism.
///
/// A caterpillar with at least three vertices is a sequence of leaf counts
/// along its spine, end counts at least one (two for a one-vertex spine), read
/// the same up to reversal. The smaller of a sequence and its reverse is kept.
pub fn enumerate_caterpillars(n: usize) -> Result<Vec<Caterpillar>> {
    check_cap(n, CATERPILLAR_CAP)?;
    if n <= 2 {
        return Ok(vec![Caterpillar::new(n, vec![0], vec![(1..n).collect()])?]);
    }
    let mut out = Vec::new();
    for spine_len in 1..=n - 2 {
        let leaves = n - spine_len;
        let mut counts = vec![0usize; spine_len];
        leaf_counts(&mut counts, 0, leaves, &mut |seq| {
            let ends_ok = if seq.len() == 1 {
                seq[0] >= 2
            } else {
                seq[0] >= 1 && seq[seq.len() - 1] >= 1
            };
            let rev: Vec<usize> = seq.iter().rev().copied().collect();
            if ends_ok && seq <= rev.as_slice() {
                out.push(caterpillar_from_counts(n, seq));
            }
        });
    }
    Ok(out)
}

fn leaf_counts(counts: &mut [usize], at: usize, left: usize, emit: &mut impl FnMut(&[usize])) {
    if at + 1 == counts.len() {
        counts[at] = left;
        emit(counts);
        return;
    }
    for c in 0..=left {
        counts[at] = c;
        leaf_counts(counts, at + 1, left - c, emit);
    }
}

fn caterpillar_from_counts(n: usize, counts: &[usize]) -> Caterpillar {
    let spine: Vec<usize> = (0..counts.len()).collect();
    let mut next = counts.len();
    let leaves = counts
        .iter()
        .map(|&c| {
            let ls = (next..next + c).collect();
            next += c;
            ls
        })
        .collect();
    Caterpillar::new(n, spine, leaves).expect("generated caterpillar is well formed")
}

/// Every member of the family of `n`-cycles with `h` disjoint non-crossing
/// chords, up to rotation and reflection. Each representative is the
/// lexicographically smallest sorted chord list in its orbit.
pub fn enumerate_chorded_cycles(n: usize, h: usize) -> Result<Vec<ChordedCycle>> {
    if n > CHORDED_CAP_N || h > CHORDED_CAP_H {
        return Err(Error::SizeTooLarge {
            n: n.max(h),
            cap: if n > CHORDED_CAP_N { CHORDED_CAP_N } else { CHORDED_CAP_H },
        });
    }
    if n < 3 || n < 2 * h + 2 {
        return Err(Error::InvalidSize(n));
    }
    let mut out = Vec::new();
    // some rotation moves a chord endpoint to 0, so representatives use vertex 0
    labeled_chord_sets(n, h, true, &mut |chords| {
        if canonical_chords(n, chords) == chords {
            out.push(ChordedCycle::new(n, chords.to_vec()).expect("valid chords"));
        }
    });
    if h == 0 {
        out.truncate(1);
    }
    Ok(out)
}

/// Every valid set of `h` chords on the labeled `n`-cycle, as sorted lists of
/// `(u, w)` with `u < w`. With `through_zero`, only sets whose first chord
/// starts at 0.
pub fn labeled_chord_sets(
    n: usize,
    h: usize,
    through_zero: bool,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    let all: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 2..n).map(move |w| (u, w)))
        .filter(|&(u, w)| !(u == 0 && w == n - 1))
        .collect();
    let mut stack = Vec::new();
    pick_chords(&all, h, 0, through_zero, &mut stack, emit);
}

fn pick_chords(
    all: &[(usize, usize)],
    h: usize,
    from: usize,
    through_zero: bool,
    stack: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if stack.len() == h {
        emit(stack);
        return;
    }
    for (x, &(u, w)) in all.iter().enumerate().skip(from) {
        if through_zero && stack.is_empty() && u != 0 {
            break;
        }
        let fits = stack.iter().all(|&(a, b)| {
            a != u && a != w && b != u && b != w && !crate::convex::convex_cross((a, b), (u, w))
        });
        if fits {
            stack.push((u, w));
            pick_chords(all, h, x + 1, through_zero, stack, emit);
            stack.pop();
        }
    }
}

/// Images of a chord set under the `2n` rotations and reflections.
fn dihedral_images(n: usize, chords: &[(usize, usize)]) -> impl Iterator<Item = Vec<(usize, usize)>> + '_ {
    (0..2 * n).map(move |g| {
        let (reflect, shift) = (g >= n, g % n);
        let mut img: Vec<(usize, usize)> = chords
            .iter()
            .map(|&(u, w)| {
                let f = |v: usize| if reflect { (n - v + shift) % n } else { (v + shift) % n };
                let (a, b) = (f(u), f(w));
                (a.min(b), a.max(b))
            })
            .collect();
        img.sort_unstable();
        img
    })
}

fn canonical_chords(n: usize, chords: &[(usize, usize)]) -> Vec<(usize, usize)> {
    dihedral_images(n, chords).min().unwrap_or_default()
}

/// Number of the `2n` dihedral maps fixing `g`'s chord set.
pub fn stabilizer_size(g: &ChordedCycle) -> usize {
    let mut own = g.chords().to_vec();
    own.sort_unstable();
    dihedral_images(g.n(), &own).filter(|img| *img == own).count()
}

/// Slow reference: labeled forests on `n` vertices, by growing acyclic edge
/// sets in increasing edge order.
pub fn count_labeled_forests_brute(n: usize) -> u64 {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).collect();
    let mut comp: Vec<usize> = (0..n).collect();
    fn grow(edges: &[(usize, usize)], from: usize, comp: &mut Vec<usize>) -> u64 {
        let mut total = 1;
        for x in from..edges.len() {
            let (u, w) = edges[x];
            let (cu, cw) = (comp[u], comp[w]);
            if cu == cw {
                continue;
            }
            let saved = comp.clone();
            for c in comp.iter_mut() {
                if *c == cw {
                    *c = cu;
                }
            }
            total += grow(edges, x + 1, comp);
            *comp = saved;
        }
        total
    }
    grow(&edges, 0, &mut comp)
}

/// Number of vertex permutations preserving the edge set of `f`.
pub fn automorphism_count_brute(f: &Forest) -> u64 {
    let n = f.n();
    let edges: BTreeSet<(usize, usize)> = f.edges().iter().map(|&(u, w)| (u.min(w), u.max(w))).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    permutations(&mut perm, 0, &mut |p| {
        if edges.iter().all(|&(u, w)| edges.contains(&(p[u].min(p[w]), p[u].max(p[w])))) {
            count += 1;
        }
    });
    count
}

fn permutations(p: &mut [usize], at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == p.len() {
        visit(p);
        return;
    }
    for x in at..p.len() {
        p.swap(at, x);
        permutations(p, at + 1, visit);
        p.swap(at, x);
    }
}

/// Slow reference: forests on `n` vertices up to isomorphism, by reducing every
/// labeled forest to its smallest relabeled edge list.
pub fn count_forest_classes_brute(n: usize) -> usize {
    let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).collect();
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    permutations(&mut p, 0, &mut |q| perms.push(q.to_vec()));
    let mut classes = BTreeSet::new();
    let mut comp: Vec<usize> = (0..n).collect();
    let mut chosen = Vec::new();
    fn grow(
        all: &[(usize, usize)],
        from: usize,
        comp: &mut Vec<usize>,
        chosen: &mut Vec<(usize, usize)>,
        perms: &[Vec<usize>],
        classes: &mut BTreeSet<Vec<(usize, usize)>>,
    ) {
        let best = perms
            .iter()
            .map(|p| {
                let mut img: Vec<(usize, usize)> = chosen
                    .iter()
                    .map(|&(u, w)| (p[u].min(p[w]), p[u].max(p[w])))
                    .collect();
                img.sort_unstable();
                img
            })
            .min()
            .unwrap_or_default();
        classes.insert(best);
        for x in from..all.len() {
            let (u, w) = all[x];
            let (cu, cw) = (comp[u], comp[w]);
            if cu == cw {
                continue;
            }
            let saved = comp.clone();
            for c in comp.iter_mut() {
                if *c == cw {
                    *c = cu;
                }
            }
            chosen.push((u, w));
            grow(all, x + 1, comp, chosen, perms, classes);
            chosen.pop();
            *comp = saved;
        }
    }
    grow(&all, 0, &mut comp, &mut chosen, &perms, &mut classes);
    classes.len()
}
