//! Exhaustive reference solvers: every one of the `n!` arrangements is
//! enumerated and filtered by the constraint predicate. Ground truth for the
//! differential tests, limited to `n <= 10`.

use std::collections::BTreeMap;

use crate::arrangement::{cost_unchecked, crossing_free, projective_unchecked, Arrangement};
use crate::error::{Error, Result};
use crate::tree::{subtree_sizes, FreeTree};

/// Largest `n` accepted by the exhaustive routines.
pub const MAX_ORACLE_N: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Unconstrained,
    Planar,
    /// Projective with respect to the given root.
    Projective(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub cost: u64,
    /// The lexicographically first optimal arrangement, by left-to-right vertex order.
    pub witness: Arrangement,
    /// Number of admissible arrangements attaining the optimum.
    pub count: u64,
}

fn guard(n: usize) -> Result<()> {
    if n > MAX_ORACLE_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_ORACLE_N,
        });
    }
    Ok(())
}

/// Rearranges `order` into its lexicographic successor; false at the last one.
fn next_permutation(order: &mut [usize]) -> bool {
    let Some(i) = order.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = order.iter().rposition(|&x| x > order[i]).expect("successor exists");
    order.swap(i, j);
    order[i + 1..].reverse();
    true
}

/// Optimum of `objective` over all arrangements satisfying `constraint`.
pub fn exhaustive(tree: &FreeTree, constraint: Constraint, objective: Objective) -> Result<OracleResult> {
    let n = tree.n();
    guard(n)?;
    if let Constraint::Projective(root) = constraint {
        if root >= n {
            return Err(Error::VertexOutOfRange { vertex: root, n });
        }
    }
    let admissible = |position: &[usize]| match constraint {
        Constraint::Unconstrained => true,
        Constraint::Planar => crossing_free(tree, position),
        Constraint::Projective(root) => projective_unchecked(tree, root, position),
    };

    let mut order: Vec<usize> = (0..n).collect();
    let mut position = vec![0usize; n];
    let mut best: Option<(u64, Vec<usize>, u64)> = None;
    loop {
        for (p, &v) in order.iter().enumerate() {
            position[v] = p;
        }
        if admissible(&position) {
            let d = cost_unchecked(tree, &position);
            match &mut best {
                None => best = Some((d, order.clone(), 1)),
                Some((b, witness, count)) => {
                    let better = match objective {
                        Objective::Max => d > *b,
                        Objective::Min => d < *b,
                    };
                    if better {
                        *b = d;
                        witness.copy_from_slice(&order);
                        *count = 1;
                    } else if d == *b {
                        *count += 1;
                    }
                }
            }
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    // the identity is projective for its first vertex and every constraint
    // admits some arrangement, so `best` is always set
    let (cost, witness, count) = best.expect("some arrangement is admissible");
    Ok(OracleResult {
        cost,
        witness: Arrangement::from_order(witness)?,
        count,
    })
}

/// Isomorphism-invariant certificate: the AHU parenthesis encoding rooted
/// at a centroid, minimized over both centroids when there are two.
pub fn canonical_form(tree: &FreeTree) -> String {
    let sizes = subtree_sizes(tree);
    let largest: Vec<usize> = (0..tree.n())
        .map(|u| sizes.around(tree, u).map(|(_, s)| s).max().unwrap_or(0))
        .collect();
    let best = *largest.iter().min().expect("non-empty tree");
    (0..tree.n())
        .filter(|&u| largest[u] == best)
        .map(|c| ahu_encoding(tree, c))
        .min()
        .expect("a centroid exists")
}

fn ahu_encoding(tree: &FreeTree, root: usize) -> String {
    let (order, parent) = tree.bfs_order(root);
    let mut code: Vec<String> = vec![String::new(); tree.n()];
    for &u in order.iter().rev() {
        let mut children: Vec<String> = tree
            .neighbors(u)
            .iter()
            .filter(|&&v| v != parent[u])
            .map(|&v| std::mem::take(&mut code[v]))
            .collect();
        children.sort_unstable();
        let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        s.push('(');
        children.iter().for_each(|c| s.push_str(c));
        s.push(')');
        code[u] = s;
    }
    std::mem::take(&mut code[root])
}

/// One representative per isomorphism class of free trees on `n` vertices,
/// ordered by canonical form.
///
/// Shapes on `n` vertices are grown from the shapes on `n - 1` by attaching
/// a leaf anywhere; every tree arises this way by deleting one of its leaves.
pub fn all_free_trees(n: usize) -> Result<Vec<FreeTree>> {
    guard(n)?;
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    let mut shapes = vec![FreeTree::singleton()];
    for m in 2..=n {
        let mut next: BTreeMap<String, FreeTree> = BTreeMap::new();
        for t in &shapes {
            for v in 0..m - 1 {
                let mut edges = t.edges().to_vec();
                edges.push((v, m - 1));
                let grown = FreeTree::from_edges(m, &edges).expect("adding a leaf keeps a tree");
                next.entry(canonical_form(&grown)).or_insert(grown);
            }
        }
        shapes = next.into_values().collect();
    }
    Ok(shapes)
}
