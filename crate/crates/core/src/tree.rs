//! Input graphs: forests and rooted trees.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Forest on vertices `0..n`, edges kept in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Forest {
    /// Validates ids, self-loops, multi-edges and acyclicity.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut uf = UnionFind::new(n);
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidForest(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidForest(format!("self-loop at {u}")));
            }
            if !uf.union(u, v) {
                return Err(Error::InvalidForest(format!(
                    "edge ({u}, {v}) closes a cycle or repeats an edge"
                )));
            }
        }
        Ok(Forest { n, edges })
    }

    /// Forest without edges.
    pub fn empty(n: usize) -> Self {
        Forest { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbor lists; each list follows input edge order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Connected components ordered by their lowest vertex; each component is
    /// listed in BFS order from that vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n
    }

    pub fn degree(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Tree on `0..len` rooted at `root`, with ordered children and subtree sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    size: Vec<usize>,
    preorder: Vec<usize>,
}

impl RootedTree {
    /// Root a connected acyclic adjacency structure. Children keep the order
    /// of the adjacency lists.
    pub fn from_adjacency(adj: &[Vec<usize>], root: usize) -> Result<Self> {
        let len = adj.len();
        if root >= len {
            return Err(Error::IndexOutOfRange {
                index: root,
                bound: len,
            });
        }
        let mut parent = vec![None; len];
        let mut children = vec![Vec::new(); len];
        let mut seen = vec![false; len];
        let mut preorder = Vec::with_capacity(len);
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(u) = stack.pop() {
            preorder.push(u);
            for &w in &adj[u] {
                if Some(w) == parent[u] {
                    continue;
                }
                if seen[w] {
                    return Err(Error::InvalidForest(format!("cycle through {w}")));
                }
                seen[w] = true;
                parent[w] = Some(u);
                children[u].push(w);
            }
            stack.extend(children[u].iter().rev());
        }
        if preorder.len() != len {
            return Err(Error::InvalidForest("tree is not connected".into()));
        }
        let mut size = vec![1; len];
        for &u in preorder.iter().rev() {
            if let Some(p) = parent[u] {
                size[p] += size[u];
            }
        }
        Ok(RootedTree {
            root,
            parent,
            children,
            size,
            preorder,
        })
    }

    /// Root a tree given by its edge list on `0..len`.
    pub fn from_edges(len: usize, edges: &[(usize, usize)], root: usize) -> Result<Self> {
        let forest = Forest::new(len, edges.to_vec())?;
        if !forest.is_tree() {
            return Err(Error::InvalidForest("not connected".into()));
        }
        Self::from_adjacency(&forest.adjacency(), root)
    }

    pub fn len(&self) -> usize {
        self.size.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn size(&self, v: usize) -> usize {
        self.size[v]
    }

    pub fn preorder(&self) -> &[usize] {
        &self.preorder
    }

    /// Edges as `(parent, child)` pairs in preorder of the child.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.preorder
            .iter()
            .filter_map(|&v| self.parent[v].map(|p| (p, v)))
            .collect()
    }

    /// Neighbor lists: parent first, then children in order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|v| {
                self.parent[v]
                    .into_iter()
                    .chain(self.children[v].iter().copied())
                    .collect()
            })
            .collect()
    }

    /// Vertex `c` with `size(c) >= s` and `size(d) <= s - 1` for every child
    /// `d`, found by walking down from the root into the first heavy child.
    pub fn cut_vertex(&self, s: usize) -> Result<usize> {
        if self.len() < 2 || s == 0 || s > self.len() {
            return Err(Error::InvalidS { s, size: self.len() });
        }
        Ok(self.cut_vertex_from(self.root, s))
    }

    pub(crate) fn cut_vertex_from(&self, start: usize, s: usize) -> usize {
        let mut c = start;
        while let Some(&d) = self.children[c].iter().find(|&&d| self.size[d] >= s) {
            c = d;
        }
        c
    }
}
