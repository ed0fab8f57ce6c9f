//! Free and rooted trees, subtree-size tables and size-sorted child lists.
//!
//! Vertices are `0..n` inside the library. The text format and every other
//! external surface use `1..=n`.

use std::fmt::Write as _;

use crate::error::{Error, ParseError, Result};
use crate::sort::counting_sort_desc;

/// An undirected tree on vertices `0..n`, stored as compressed adjacency
/// lists with every neighbor list sorted by ascending id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeTree {
    n: usize,
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl FreeTree {
    /// The tree with a single vertex.
    pub fn singleton() -> Self {
        FreeTree {
            n: 1,
            offsets: vec![0, 0],
            neighbors: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Builds a tree from 0-based edges. Errors carry the line number the
    /// edge would have in the text format (edge `i` sits on line `i + 2`).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> std::result::Result<Self, ParseError> {
        if n == 0 {
            return Err(ParseError::ZeroVertices { line: 1 });
        }
        let mut checker = EdgeChecker::new(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            let line = i + 2;
            for x in [u, v] {
                if x >= n {
                    return Err(ParseError::VertexOutOfRange {
                        line,
                        vertex: x as u64 + 1,
                        n,
                    });
                }
            }
            checker.add(line, u, v)?;
        }
        checker.finish(edges.len() + 2)
    }

    /// Parses the edge-list document: the first non-comment line holds `n`,
    /// followed by exactly `n - 1` lines `u v` with `1 <= u, v <= n`.
    /// Lines starting with `#` and blank lines are ignored.
    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (first_line, header) = lines.next().ok_or(ParseError::Empty)?;
        let n: usize = header.parse().map_err(|_| ParseError::Malformed {
            line: first_line,
            text: header.to_string(),
        })?;
        if n == 0 {
            return Err(ParseError::ZeroVertices { line: first_line });
        }

        let mut checker = EdgeChecker::new(n);
        let mut last_line = first_line;
        for (line, text) in lines {
            last_line = line;
            let mut fields = text.split_whitespace();
            let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(ParseError::Malformed {
                    line,
                    text: text.to_string(),
                });
            };
            let parse_vertex = |s: &str| -> std::result::Result<usize, ParseError> {
                let x: u64 = s.parse().map_err(|_| ParseError::Malformed {
                    line,
                    text: text.to_string(),
                })?;
                if x == 0 || x > n as u64 {
                    return Err(ParseError::VertexOutOfRange { line, vertex: x, n });
                }
                Ok(x as usize - 1)
            };
            let u = parse_vertex(a)?;
            let v = parse_vertex(b)?;
            checker.add(line, u, v)?;
        }
        checker.finish(last_line)
    }

    /// Renders the tree in the edge-list format, 1-based, edges in insertion order.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(8 * self.n);
        let _ = writeln!(s, "{}", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{} {}", u + 1, v + 1);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `u` in ascending id order.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn is_leaf(&self, u: usize) -> bool {
        self.degree(u) == 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Index of the directed edge `(u, v)` in the flat adjacency storage.
    pub(crate) fn slot(&self, u: usize, v: usize) -> Option<usize> {
        self.neighbors(u)
            .binary_search(&v)
            .ok()
            .map(|i| self.offsets[u] + i)
    }

    pub(crate) fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub(crate) fn flat_neighbors(&self) -> &[usize] {
        &self.neighbors
    }

    /// Vertices in BFS order from `root`, with each vertex's parent
    /// (`usize::MAX` for the root).
    pub(crate) fn bfs_order(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let mut parent = vec![usize::MAX; self.n];
        let mut order = Vec::with_capacity(self.n);
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &v in self.neighbors(u) {
                if v != parent[u] {
                    parent[v] = u;
                    order.push(v);
                }
            }
        }
        (order, parent)
    }

    pub fn rooted(&self, root: usize) -> Result<RootedTree<'_>> {
        RootedTree::new(self, root)
    }
}

struct EdgeChecker {
    n: usize,
    uf: Vec<usize>,
    seen: std::collections::HashSet<(usize, usize)>,
    edges: Vec<(usize, usize)>,
}

impl EdgeChecker {
    fn new(n: usize) -> Self {
        EdgeChecker {
            n,
            uf: (0..n).collect(),
            seen: std::collections::HashSet::with_capacity(n),
            edges: Vec::with_capacity(n.saturating_sub(1)),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.uf[x] != x {
            self.uf[x] = self.uf[self.uf[x]];
            x = self.uf[x];
        }
        x
    }

    fn add(&mut self, line: usize, u: usize, v: usize) -> std::result::Result<(), ParseError> {
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u + 1 });
        }
        if self.edges.len() == self.n - 1 {
            return Err(ParseError::EdgeCount {
                line,
                expected: self.n - 1,
                found: self.edges.len() + 1,
            });
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: u + 1,
                v: v + 1,
            });
        }
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return Err(ParseError::Cycle {
                line,
                u: u + 1,
                v: v + 1,
            });
        }
        self.uf[ru] = rv;
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self, last_line: usize) -> std::result::Result<FreeTree, ParseError> {
        let n = self.n;
        if self.edges.len() != n - 1 {
            return Err(ParseError::EdgeCount {
                line: last_line,
                expected: n - 1,
                found: self.edges.len(),
            });
        }
        // n - 1 acyclic edges on n vertices always connect them
        let mut degree = vec![0usize; n];
        for &(u, v) in &self.edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for u in 0..n {
            offsets[u + 1] = offsets[u] + degree[u];
        }
        let mut fill = offsets.clone();
        let mut neighbors = vec![0usize; 2 * (n - 1)];
        for &(u, v) in &self.edges {
            neighbors[fill[u]] = v;
            fill[u] += 1;
            neighbors[fill[v]] = u;
            fill[v] += 1;
        }
        for u in 0..n {
            neighbors[offsets[u]..offsets[u + 1]].sort_unstable();
        }
        Ok(FreeTree {
            n,
            offsets,
            neighbors,
            edges: self.edges,
        })
    }
}

/// A free tree with a designated root; edges point away from the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootedTree<'a> {
    tree: &'a FreeTree,
    root: usize,
}

impl<'a> RootedTree<'a> {
    pub fn new(tree: &'a FreeTree, root: usize) -> Result<Self> {
        if root >= tree.n() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: tree.n(),
            });
        }
        Ok(RootedTree { tree, root })
    }

    pub fn tree(&self) -> &'a FreeTree {
        self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    /// Number of children of `u` under this rooting.
    pub fn out_degree(&self, u: usize) -> usize {
        let d = self.tree.degree(u);
        if u == self.root {
            d
        } else {
            d - 1
        }
    }
}

/// `s_u(v)` for every directed edge `(u, v)`: the number of vertices of the
/// subtree hanging from `v` when the tree is rooted at `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeSizeTable {
    // aligned with FreeTree's flat adjacency storage
    sizes: Vec<usize>,
}

impl SubtreeSizeTable {
    /// Computes the full table with one traversal: `O(n)` time and memory.
    pub fn new(tree: &FreeTree) -> Self {
        let n = tree.n();
        let (order, parent) = tree.bfs_order(0);
        let mut below = vec![1usize; n];
        for &u in order.iter().rev() {
            if parent[u] != usize::MAX {
                below[parent[u]] += below[u];
            }
        }
        let mut sizes = vec![0usize; tree.flat_neighbors().len()];
        for u in 0..n {
            for slot in tree.offsets()[u]..tree.offsets()[u + 1] {
                let v = tree.flat_neighbors()[slot];
                sizes[slot] = if parent[v] == u { below[v] } else { n - below[u] };
            }
        }
        SubtreeSizeTable { sizes }
    }

    /// `s_u(v)`, or `None` when `uv` is not an edge.
    pub fn get(&self, tree: &FreeTree, u: usize, v: usize) -> Option<usize> {
        tree.slot(u, v).map(|s| self.sizes[s])
    }

    /// `(v, s_u(v))` for every neighbor `v` of `u`, ascending by `v`.
    pub fn around<'t>(
        &'t self,
        tree: &'t FreeTree,
        u: usize,
    ) -> impl Iterator<Item = (usize, usize)> + 't {
        let range = tree.offsets()[u]..tree.offsets()[u + 1];
        tree.flat_neighbors()[range.clone()]
            .iter()
            .copied()
            .zip(self.sizes[range].iter().copied())
    }

    pub(crate) fn flat(&self) -> &[usize] {
        &self.sizes
    }
}

/// Subtree sizes of a whole tree; shorthand for [`SubtreeSizeTable::new`].
pub fn subtree_sizes(tree: &FreeTree) -> SubtreeSizeTable {
    SubtreeSizeTable::new(tree)
}

/// Children of every vertex of a rooted tree, sorted non-increasingly by the
/// size of their subtree; equal sizes keep ascending vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedChildLists {
    root: usize,
    offsets: Vec<usize>,
    entries: Vec<(usize, usize)>,
}

impl SortedChildLists {
    /// Builds the lists with a single counting sort over all `n - 1`
    /// parent-child pairs, keyed on sizes in `[1, n - 1]`.
    pub fn new(rt: &RootedTree<'_>, sizes: &SubtreeSizeTable) -> Self {
        let tree = rt.tree();
        let n = tree.n();
        let (_, parent) = tree.bfs_order(rt.root());

        let mut pairs = Vec::with_capacity(n - 1);
        for u in 0..n {
            for slot in tree.offsets()[u]..tree.offsets()[u + 1] {
                let v = tree.flat_neighbors()[slot];
                if v != parent[u] {
                    pairs.push((u, v, sizes.flat()[slot]));
                }
            }
        }
        let mut counts = Vec::new();
        let sorted = counting_sort_desc(&pairs, n - 1, &mut counts, |p| p.2);

        let mut offsets = vec![0usize; n + 1];
        for u in 0..n {
            offsets[u + 1] = offsets[u] + rt.out_degree(u);
        }
        let mut fill = offsets[..n].to_vec();
        let mut entries = vec![(0usize, 0usize); n - 1];
        for (u, v, s) in sorted {
            entries[fill[u]] = (v, s);
            fill[u] += 1;
        }
        SortedChildLists {
            root: rt.root(),
            offsets,
            entries,
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// `(child, subtree size)` pairs of `u`, largest subtree first.
    pub fn children(&self, u: usize) -> &[(usize, usize)] {
        &self.entries[self.offsets[u]..self.offsets[u + 1]]
    }
}

/// Size-sorted child lists of `rt`; shorthand for [`SortedChildLists::new`].
pub fn sorted_child_lists(rt: &RootedTree<'_>, sizes: &SubtreeSizeTable) -> SortedChildLists {
    SortedChildLists::new(rt, sizes)
}

/// A centroidal vertex: one minimizing the largest component left after its
/// removal. When two exist the smaller id is returned.
pub fn centroid(tree: &FreeTree, sizes: &SubtreeSizeTable) -> usize {
    (0..tree.n())
        .min_by_key(|&u| {
            let largest = sizes.around(tree, u).map(|(_, s)| s).max().unwrap_or(0);
            (largest, u)
        })
        .expect("tree has at least one vertex")
}
