#![allow(dead_code)]

use treela::generators::{random_tree, SplitMix64};
use treela::oracle::all_free_trees;
use treela::{Arrangement, FreeTree};

/// Every free-tree shape with `lo <= n <= hi`.
pub fn shapes(lo: usize, hi: usize) -> Vec<FreeTree> {
    (lo..=hi).flat_map(|n| all_free_trees(n).unwrap()).collect()
}

/// `count` random trees with `n` drawn uniformly from `lo..=hi`.
pub fn seeded_trees(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<FreeTree> {
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let n = lo + rng.below(hi - lo + 1);
            random_tree(n, rng.next_u64())
        })
        .collect()
}

/// Number of vertices reachable from `v` without stepping on `u`, by a
/// fresh depth-first search.
pub fn fresh_count(tree: &FreeTree, u: usize, v: usize) -> usize {
    let mut seen = vec![false; tree.n()];
    seen[u] = true;
    seen[v] = true;
    let mut stack = vec![v];
    let mut count = 0;
    while let Some(x) = stack.pop() {
        count += 1;
        for &y in tree.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    count
}

/// Vertices of the subtree of `v` when the tree is rooted at `u`.
pub fn subtree_vertices(tree: &FreeTree, u: usize, v: usize) -> Vec<usize> {
    let mut seen = vec![false; tree.n()];
    seen[u] = true;
    seen[v] = true;
    let mut stack = vec![v];
    let mut out = Vec::new();
    while let Some(x) = stack.pop() {
        out.push(x);
        for &y in tree.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    out
}

/// Parent of every vertex when rooted at `root` (`usize::MAX` at the root).
pub fn parents(tree: &FreeTree, root: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; tree.n()];
    let mut seen = vec![false; tree.n()];
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        for &y in tree.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    parent
}

/// Structural properties every maximum projective arrangement has:
/// root at an end, its leaves packed at the other end, the two end vertices
/// adjacent, and every vertex's child subtrees branching the same way.
pub fn check_max_projective_shape(tree: &FreeTree, root: usize, arr: &Arrangement) -> Result<(), String> {
    let n = tree.n();
    if n == 1 {
        return Ok(());
    }
    let rp = arr.position(root);
    if rp != 0 && rp != n - 1 {
        return Err(format!("root {root} at interior position {rp}"));
    }
    let leaves: Vec<usize> = tree.neighbors(root).iter().copied().filter(|&v| tree.is_leaf(v)).collect();
    if !leaves.is_empty() {
        let mut pos: Vec<usize> = leaves.iter().map(|&v| arr.position(v)).collect();
        pos.sort();
        let expected: Vec<usize> = if rp == n - 1 {
            (0..leaves.len()).collect()
        } else {
            (n - leaves.len()..n).collect()
        };
        if pos != expected {
            return Err(format!("root leaves at {pos:?}, expected {expected:?}"));
        }
    }
    if !tree.has_edge(arr.vertex_at(0), arr.vertex_at(n - 1)) {
        return Err("end vertices are not adjacent".into());
    }
    let parent = parents(tree, root);
    for u in 0..n {
        let mut direction = None;
        for &v in tree.neighbors(u).iter().filter(|&&v| v != parent[u]) {
            let pos: Vec<usize> = subtree_vertices(tree, u, v).iter().map(|&x| arr.position(x)).collect();
            let (lo, hi) = (*pos.iter().min().unwrap(), *pos.iter().max().unwrap());
            if hi - lo + 1 != pos.len() {
                return Err(format!("subtree of {v} is not contiguous"));
            }
            let d = if arr.position(v) == lo && lo != hi {
                Some(true)
            } else if arr.position(v) == hi && lo != hi {
                Some(false)
            } else if lo == hi {
                None
            } else {
                return Err(format!("{v} is not at an end of its subtree"));
            };
            if let Some(d) = d {
                if direction.is_some_and(|x| x != d) {
                    return Err(format!("children of {u} branch in different directions"));
                }
                direction = Some(d);
            }
        }
    }
    Ok(())
}
