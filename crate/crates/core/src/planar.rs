//! Planar MaxLA in linear time.
//!
//! A maximum planar arrangement is a maximum projective arrangement for the
//! best choice of root. The maximum projective cost of every rooting is
//! obtained from a single evaluation plus an `O(1)` update per edge, read
//! off an [`EdgeRecordTable`] while walking the tree breadth-first.

use std::collections::VecDeque;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::projective::{max_projective_cost, max_projective_with_lists, min_projective};
use crate::sort::counting_sort_desc;
use crate::tree::{centroid, subtree_sizes, FreeTree, SortedChildLists, SubtreeSizeTable};

/// One neighbor of `u`, seen from `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRecord {
    /// The neighbor `v`.
    pub neighbor: usize,
    /// `s_u(v)`.
    pub size: usize,
    /// 0-based rank of `v` among the neighbors of `u`, largest subtree first.
    pub index: usize,
    /// 0-based rank of `u` among the neighbors of `v`.
    pub reverse_index: usize,
    /// Sum of the `index + 1` largest subtree sizes around `u`, this one included.
    pub prefix: usize,
}

/// For every vertex, its neighbors sorted non-increasingly by subtree size
/// (ties by ascending id), with cross-references between the two records of
/// each edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRecordTable {
    offsets: Vec<usize>,
    records: Vec<EdgeRecord>,
}

impl EdgeRecordTable {
    /// Builds the table in `O(n)` with two counting sorts.
    ///
    /// All directed edges are sorted by size, which fixes `index` and
    /// `prefix` per vertex in one pass. The same pass emits every edge
    /// reversed, with its index; sorting those by size again visits each
    /// vertex's neighbors in the same order as its record list, so the
    /// reverse indices can be dealt out with one cursor per vertex.
    pub fn new(tree: &FreeTree, sizes: &SubtreeSizeTable) -> Self {
        let n = tree.n();
        let mut counts = Vec::new();

        let mut directed = Vec::with_capacity(2 * (n - 1));
        for u in 0..n {
            directed.extend(sizes.around(tree, u).map(|(v, s)| (u, v, s)));
        }
        let sorted = counting_sort_desc(&directed, n - 1, &mut counts, |e| e.2);

        let offsets = tree.offsets().to_vec();
        let mut records = vec![
            EdgeRecord {
                neighbor: 0,
                size: 0,
                index: 0,
                reverse_index: 0,
                prefix: 0,
            };
            directed.len()
        ];
        let mut filled = vec![0usize; n];
        let mut reversed = Vec::with_capacity(directed.len());
        for &(u, v, s) in &sorted {
            let k = filled[u];
            let before = if k == 0 {
                0
            } else {
                records[offsets[u] + k - 1].prefix
            };
            records[offsets[u] + k] = EdgeRecord {
                neighbor: v,
                size: s,
                index: k,
                reverse_index: 0,
                prefix: before + s,
            };
            filled[u] += 1;
            reversed.push((v, u, n - s, k));
        }

        let reversed = counting_sort_desc(&reversed, n - 1, &mut counts, |e| e.2);
        filled.iter_mut().for_each(|f| *f = 0);
        for &(u, v, _, k) in &reversed {
            let rec = &mut records[offsets[u] + filled[u]];
            debug_assert_eq!(rec.neighbor, v);
            rec.reverse_index = k;
            filled[u] += 1;
        }
        EdgeRecordTable { offsets, records }
    }

    /// Records of `u`, largest subtree first.
    pub fn around(&self, u: usize) -> &[EdgeRecord] {
        &self.records[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    /// The record of `v` seen from `u`, found by scanning `u`'s list.
    pub fn find(&self, u: usize, v: usize) -> Option<&EdgeRecord> {
        self.around(u).iter().find(|r| r.neighbor == v)
    }

    /// The record of `u` seen from `rec.neighbor`, for a record of `u`.
    pub fn twin(&self, rec: &EdgeRecord) -> &EdgeRecord {
        &self.records[self.offsets[rec.neighbor] + rec.reverse_index]
    }

    /// Contribution of the edge `(u, v)` to the maximum projective cost of
    /// the tree rooted at `u`: the root edge length plus the part of the
    /// later root edges passing over the subtree of `v`.
    fn gain(&self, u: usize, rec: &EdgeRecord) -> i64 {
        let rank = rec.index + 1;
        ((self.degree(u) - rank) * rec.size + rec.prefix) as i64
    }

    fn delta_from(&self, u: usize, rec: &EdgeRecord) -> i64 {
        self.gain(rec.neighbor, self.twin(rec)) - self.gain(u, rec)
    }
}

/// Shorthand for [`EdgeRecordTable::new`].
pub fn build_edge_records(tree: &FreeTree, sizes: &SubtreeSizeTable) -> EdgeRecordTable {
    EdgeRecordTable::new(tree, sizes)
}

/// Change of the maximum projective cost when the root moves from `u` to its
/// neighbor `v`, in `O(deg u)` (`O(1)` once the record is known).
pub fn projective_delta(records: &EdgeRecordTable, u: usize, v: usize) -> Result<i64> {
    let rec = records
        .offsets
        .get(u + 1)
        .and_then(|_| records.find(u, v))
        .ok_or(Error::NotAnEdge { u, v })?;
    Ok(records.delta_from(u, rec))
}

/// A root maximizing the maximum projective cost, with that cost.
///
/// Starts from the smallest internal vertex, evaluates it directly, then
/// walks the internal vertices breadth-first, updating the cost across each
/// edge. Leaves are not visited: a leaf's value equals its neighbor's.
/// Ties go to the smallest id.
pub fn find_optimal_root(tree: &FreeTree) -> (usize, u64) {
    optimal_root_with(tree, &subtree_sizes(tree))
}

fn optimal_root_with(tree: &FreeTree, sizes: &SubtreeSizeTable) -> (usize, u64) {
    let n = tree.n();
    if n <= 2 {
        return (0, (n - 1) as u64);
    }
    let records = EdgeRecordTable::new(tree, sizes);
    let start = (0..n)
        .find(|&u| tree.degree(u) >= 2)
        .expect("a tree with n >= 3 has an internal vertex");

    let rt = tree.rooted(start).expect("valid vertex");
    let mut value = vec![0u64; n];
    let mut visited = vec![false; n];
    value[start] = max_projective_cost(&rt, &SortedChildLists::new(&rt, sizes));
    visited[start] = true;

    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for rec in records.around(u) {
            let v = rec.neighbor;
            if visited[v] || tree.degree(v) < 2 {
                continue;
            }
            value[v] = (value[u] as i64 + records.delta_from(u, rec)) as u64;
            visited[v] = true;
            queue.push_back(v);
        }
    }

    let mut best = start;
    for u in 0..n {
        if visited[u] && value[u] > value[best] {
            best = u;
        }
    }
    // smallest id among the maxima
    let best = (0..n)
        .find(|&u| visited[u] && value[u] == value[best])
        .expect("best is visited");
    (best, value[best])
}

/// A maximum planar arrangement and its cost.
pub fn max_planar(tree: &FreeTree) -> (Arrangement, u64) {
    let (_, arr, d) = max_planar_rooted(tree);
    (arr, d)
}

/// Like [`max_planar`], also reporting the chosen root.
pub fn max_planar_rooted(tree: &FreeTree) -> (usize, Arrangement, u64) {
    let sizes = subtree_sizes(tree);
    let (root, value) = optimal_root_with(tree, &sizes);
    let rt = tree.rooted(root).expect("valid root");
    let arr = max_projective_with_lists(&rt, &SortedChildLists::new(&rt, &sizes));
    (root, arr, value)
}

/// Quadratic reference: the best maximum projective cost over all roots,
/// each evaluated from scratch.
pub fn max_planar_reference(tree: &FreeTree) -> u64 {
    let sizes = subtree_sizes(tree);
    (0..tree.n())
        .map(|u| {
            let rt = tree.rooted(u).expect("valid vertex");
            max_projective_cost(&rt, &SortedChildLists::new(&rt, &sizes))
        })
        .max()
        .expect("tree has a vertex")
}

/// Internal vertices with at least one leaf neighbor. Every optimal root is
/// one of these or a leaf hanging from one. For `n = 2` the set is `{0}`.
pub fn optimal_root_candidates(tree: &FreeTree) -> Result<Vec<usize>> {
    let n = tree.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    if n == 2 {
        return Ok(vec![0]);
    }
    Ok((0..n)
        .filter(|&u| tree.degree(u) >= 2 && tree.neighbors(u).iter().any(|&v| tree.is_leaf(v)))
        .collect())
}

/// The backbone of a caterpillar (its non-leaf vertices, in path order), or
/// `None` when the tree is not a caterpillar. Trees with `n <= 2` have an
/// empty backbone.
pub fn caterpillar_backbone(tree: &FreeTree) -> Option<Vec<usize>> {
    let n = tree.n();
    let internal = |u: usize| tree.degree(u) >= 2;
    let inner_degree = |u: usize| tree.neighbors(u).iter().filter(|&&v| internal(v)).count();
    let mut end = None;
    for u in (0..n).filter(|&u| internal(u)) {
        match inner_degree(u) {
            0 | 1 => end = end.or(Some(u)),
            2 => {}
            _ => return None,
        }
    }
    let Some(first) = end else {
        return Some(Vec::new());
    };
    let mut backbone = vec![first];
    let mut prev = usize::MAX;
    let mut cur = first;
    while let Some(&next) = tree
        .neighbors(cur)
        .iter()
        .find(|&&v| v != prev && internal(v))
    {
        backbone.push(next);
        prev = cur;
        cur = next;
    }
    Some(backbone)
}

pub fn is_caterpillar(tree: &FreeTree) -> bool {
    caterpillar_backbone(tree).is_some()
}

/// Graceful maximum planar arrangement of a caterpillar.
///
/// Walking the backbone from one end, each backbone vertex goes at the next
/// free slot of the current end and its leaves fill the other end inward;
/// the next backbone vertex follows those leaves, so the ends alternate.
/// Edge lengths come out as `n - 1, n - 2, ..., 1`.
pub fn max_planar_caterpillar(tree: &FreeTree) -> Result<(Arrangement, u64)> {
    let backbone = caterpillar_backbone(tree).ok_or(Error::NotCaterpillar)?;
    let n = tree.n();
    if backbone.is_empty() {
        let arr = Arrangement::identity(n);
        return Ok((arr, (n - 1) as u64));
    }
    let mut order = vec![usize::MAX; n];
    let (mut lo, mut hi) = (0usize, n - 1);
    let mut at_left = true;
    for &b in &backbone {
        if at_left {
            order[lo] = b;
            lo += 1;
        } else {
            order[hi] = b;
            hi = hi.wrapping_sub(1);
        }
        for &leaf in tree.neighbors(b).iter().filter(|&&v| tree.is_leaf(v)) {
            if at_left {
                order[hi] = leaf;
                hi = hi.wrapping_sub(1);
            } else {
                order[lo] = leaf;
                lo += 1;
            }
        }
        at_left = !at_left;
    }
    let arr = Arrangement::from_order(order).expect("every slot filled once");
    Ok((arr, (n * (n - 1) / 2) as u64))
}

/// A minimum planar arrangement: the minimum projective arrangement rooted
/// at a centroid (the smaller id when there are two).
pub fn min_planar(tree: &FreeTree) -> (Arrangement, u64) {
    let c = centroid(tree, &subtree_sizes(tree));
    min_projective(&tree.rooted(c).expect("valid vertex"))
}
