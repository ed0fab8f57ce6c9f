//! Seeded tree generators: named families and uniformly random labeled trees.
//!
//! Randomness comes from [`SplitMix64`], so a given `(n, seed)` produces the
//! same tree on every platform:
//!
//! ```text
//! state <- state + 0x9E3779B97F4A7C15            (wrapping)
//! z <- state
//! z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9   (wrapping)
//! z <- (z xor (z >> 27)) * 0x94D049BB133111EB   (wrapping)
//! output z xor (z >> 31)
//! ```
//!
//! A value below `bound` is drawn as the high 64 bits of `output * bound`.
//! A random tree of `n >= 3` vertices decodes the Prüfer sequence
//! `x_1 .. x_{n-2}` with `x_i = below(n)` drawn in order.

use rand_xoshiro::rand_core::{Rng, SeedableRng};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::tree::{FreeTree, RootedTree};

/// Seeded SplitMix64 stream with bounded draws and shuffling.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    inner: rand_xoshiro::SplitMix64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 {
            inner: rand_xoshiro::SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform-ish value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }

    /// Fisher-Yates, drawing `below(i + 1)` for `i` from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) in linear time.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<FreeTree> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::Family(format!(
            "a Prüfer sequence for n = {n} must have length n - 2"
        )));
    }
    if let Some(&x) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("some leaf");
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if x < ptr && degree[x] == 1 {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Ok(FreeTree::from_edges(n, &edges).expect("Prüfer decoding yields a tree"))
}

/// Uniformly random labeled tree on `n >= 1` vertices.
pub fn random_tree(n: usize, seed: u64) -> FreeTree {
    match n {
        0 | 1 => FreeTree::singleton(),
        2 => FreeTree::from_edges(2, &[(0, 1)]).expect("single edge"),
        _ => {
            let mut rng = SplitMix64::new(seed);
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n)).collect();
            prufer_decode(n, &seq).expect("valid sequence")
        }
    }
}

/// Named tree families. Labels (1-based as printed):
///
/// - `Star`: hub 1, leaves 2..n.
/// - `Path`: 1-2-...-n.
/// - `Bistar`: hubs 1 and 2 joined; hub 1 holds `first` leaves numbered
///   from 3, hub 2 the next `second`.
/// - `BalancedBistar`: `Bistar` with `ceil((n-2)/2)` and `floor((n-2)/2)` leaves.
/// - `Quasistar`: `Bistar` whose second hub holds exactly one leaf.
/// - `Caterpillar`: backbone 1..k in a path, then the leaves of backbone
///   vertex 1, of vertex 2, and so on.
/// - `Spider`: center 1, then each leg as a path hanging from the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Star,
    Path,
    Bistar { first: usize, second: usize },
    BalancedBistar,
    Quasistar,
    Caterpillar { leaves: Vec<usize> },
    Spider { legs: Vec<usize> },
}

impl Family {
    /// The vertex count implied by the parameters, when they fix it.
    pub fn implied_n(&self) -> Option<usize> {
        match self {
            Family::Bistar { first, second } => Some(first + second + 2),
            Family::Caterpillar { leaves } => Some(leaves.len() + leaves.iter().sum::<usize>()),
            Family::Spider { legs } => Some(1 + legs.iter().sum::<usize>()),
            _ => None,
        }
    }
}

/// Builds the family member with `n` vertices.
pub fn make_family(kind: &Family, n: usize) -> Result<FreeTree> {
    if n == 0 {
        return Err(Error::Family("n must be at least 1".into()));
    }
    if let Some(m) = kind.implied_n() {
        if m != n {
            return Err(Error::Family(format!(
                "parameters describe {m} vertices but n = {n}"
            )));
        }
    }
    let mut edges = Vec::with_capacity(n - 1);
    match kind {
        Family::Star => edges.extend((1..n).map(|v| (0, v))),
        Family::Path => edges.extend((1..n).map(|v| (v - 1, v))),
        Family::BalancedBistar => {
            if n < 2 {
                return Err(Error::Family("a bistar needs two hubs".into()));
            }
            let first = (n - 2).div_ceil(2);
            return make_family(
                &Family::Bistar {
                    first,
                    second: n - 2 - first,
                },
                n,
            );
        }
        Family::Quasistar => {
            if n < 3 {
                return Err(Error::Family("a quasistar needs at least 3 vertices".into()));
            }
            return make_family(
                &Family::Bistar {
                    first: n - 3,
                    second: 1,
                },
                n,
            );
        }
        Family::Bistar { first, second } => {
            edges.push((0, 1));
            edges.extend((2..2 + first).map(|v| (0, v)));
            edges.extend((2 + first..2 + first + second).map(|v| (1, v)));
        }
        Family::Caterpillar { leaves } => {
            if leaves.is_empty() {
                return Err(Error::Family("a caterpillar needs a backbone".into()));
            }
            let k = leaves.len();
            edges.extend((1..k).map(|v| (v - 1, v)));
            let mut next = k;
            for (b, &count) in leaves.iter().enumerate() {
                for _ in 0..count {
                    edges.push((b, next));
                    next += 1;
                }
            }
        }
        Family::Spider { legs } => {
            if legs.contains(&0) {
                return Err(Error::Family("spider legs must be non-empty".into()));
            }
            let mut next = 1;
            for &len in legs {
                edges.push((0, next));
                for i in 1..len {
                    edges.push((next + i - 1, next + i));
                }
                next += len;
            }
        }
    }
    FreeTree::from_edges(n, &edges).map_err(|e| Error::Family(e.to_string()))
}

/// A random caterpillar on `n` vertices: random backbone length, leaves
/// spread at random over the backbone, then labels shuffled.
pub fn random_caterpillar(n: usize, seed: u64) -> FreeTree {
    if n <= 2 {
        return random_tree(n, seed);
    }
    let mut rng = SplitMix64::new(seed);
    // backbone of k vertices leaves n - k leaves; ends need no leaf
    let k = 1 + rng.below(n - 2);
    let mut leaves = vec![0usize; k];
    for _ in 0..n - k {
        leaves[rng.below(k)] += 1;
    }
    let base = make_family(&Family::Caterpillar { leaves }, n).expect("consistent parameters");
    let mut relabel: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut relabel);
    let edges: Vec<_> = base
        .edges()
        .iter()
        .map(|&(u, v)| (relabel[u], relabel[v]))
        .collect();
    FreeTree::from_edges(n, &edges).expect("relabeling keeps a tree")
}

/// A random projective arrangement of `rt`: every vertex shuffles its
/// children and splits them at a random point around itself.
pub fn random_projective_arrangement(rt: &RootedTree<'_>, seed: u64) -> Arrangement {
    let tree = rt.tree();
    let n = tree.n();
    let mut rng = SplitMix64::new(seed);
    let (order, parent) = tree.bfs_order(rt.root());
    let mut size = vec![1usize; n];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let mut position = vec![0usize; n];
    // (vertex, first position of its interval)
    let mut stack = vec![(rt.root(), 0usize)];
    while let Some((u, start)) = stack.pop() {
        let mut children: Vec<usize> = tree
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| v != parent[u])
            .collect();
        rng.shuffle(&mut children);
        let split = rng.below(children.len() + 1);
        let mut at = start;
        for (i, &c) in children.iter().enumerate() {
            if i == split {
                position[u] = at;
                at += 1;
            }
            stack.push((c, at));
            at += size[c];
        }
        if split == children.len() {
            position[u] = at;
        }
    }
    Arrangement::from_positions(position).expect("intervals tile 0..n")
}
