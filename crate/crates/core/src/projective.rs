//! Projective MaxLA in linear time, its closed-form cost, and the companion
//! projective minLA.
//!
//! In a maximum projective arrangement every subtree occupies a contiguous
//! interval with its root at one end. The children follow the root from the
//! largest subtree (adjacent) to the smallest (farthest), and each child
//! subtree branches toward the opposite direction of its parent's.

use crate::arrangement::{cost_unchecked, Arrangement};
use crate::tree::{subtree_sizes, RootedTree, SortedChildLists};

/// Which end of its interval a subtree root occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn flip(self) -> Self {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

fn lists_for(rt: &RootedTree<'_>) -> SortedChildLists {
    SortedChildLists::new(rt, &subtree_sizes(rt.tree()))
}

/// A maximum projective arrangement of `rt` and its cost.
pub fn max_projective(rt: &RootedTree<'_>) -> (Arrangement, u64) {
    let lists = lists_for(rt);
    let arr = max_projective_with_lists(rt, &lists);
    let d = cost_unchecked(rt.tree(), arr.positions());
    (arr, d)
}

/// Lays out `rt` into `[0, n)` with the root at the right end. Each frame
/// places its subtree root at the end named by its side and hands the
/// children consecutive sub-intervals, largest first, next to the root.
pub fn max_projective_with_lists(rt: &RootedTree<'_>, lists: &SortedChildLists) -> Arrangement {
    assert_eq!(lists.root(), rt.root(), "child lists rooted elsewhere");
    let n = rt.n();
    let mut position = vec![0usize; n];
    let mut stack = vec![(rt.root(), Side::Right, 0usize, n - 1)];
    while let Some((u, side, a, b)) = stack.pop() {
        let mut used = 0;
        for &(v, size) in lists.children(u) {
            let (ca, cb) = match side {
                Side::Left => (a + used + 1, a + used + size),
                Side::Right => (b - used - size, b - used - 1),
            };
            stack.push((v, side.flip(), ca, cb));
            used += size;
        }
        position[u] = match side {
            Side::Left => a,
            Side::Right => b,
        };
    }
    Arrangement::from_positions(position).expect("intervals tile 0..n")
}

/// Maximum projective cost without building an arrangement: every vertex
/// contributes, for its `i`-th largest child, the total size of its `i`
/// largest child subtrees.
pub fn max_projective_cost(rt: &RootedTree<'_>, lists: &SortedChildLists) -> u64 {
    assert_eq!(lists.root(), rt.root(), "child lists rooted elsewhere");
    (0..rt.n())
        .map(|u| {
            let mut prefix = 0u64;
            let mut total = 0u64;
            for &(_, size) in lists.children(u) {
                prefix += size as u64;
                total += prefix;
            }
            total
        })
        .sum()
}

/// A minimum projective arrangement of `rt` and its cost.
///
/// Children alternate sides of their parent, largest first on the side away
/// from the grandparent, so that on each side subtrees shrink toward the
/// parent. The root sends its largest child to the left.
pub fn min_projective(rt: &RootedTree<'_>) -> (Arrangement, u64) {
    let lists = lists_for(rt);
    let arr = min_projective_with_lists(rt, &lists);
    let d = cost_unchecked(rt.tree(), arr.positions());
    (arr, d)
}

pub fn min_projective_with_lists(rt: &RootedTree<'_>, lists: &SortedChildLists) -> Arrangement {
    assert_eq!(lists.root(), rt.root(), "child lists rooted elsewhere");
    let n = rt.n();
    let mut position = vec![0usize; n];
    // (vertex, side of its parent it lies on, interval)
    let mut stack = vec![(rt.root(), Side::Left, 0usize, n - 1)];
    while let Some((u, far, a, b)) = stack.pop() {
        let children = lists.children(u);
        let far_total: usize = children.iter().step_by(2).map(|c| c.1).sum();
        let (mut left_at, mut right_at) = (a, b + 1);
        for (i, &(v, size)) in children.iter().enumerate() {
            let side = if i % 2 == 0 { far } else { far.flip() };
            match side {
                Side::Left => {
                    stack.push((v, Side::Left, left_at, left_at + size - 1));
                    left_at += size;
                }
                Side::Right => {
                    right_at -= size;
                    stack.push((v, Side::Right, right_at, right_at + size - 1));
                }
            }
        }
        let left_total = match far {
            Side::Left => far_total,
            Side::Right => (b - a) - far_total,
        };
        position[u] = a + left_total;
    }
    Arrangement::from_positions(position).expect("intervals tile 0..n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{cost, is_projective};
    use crate::generators::{make_family, random_tree, Family};
    use crate::tree::FreeTree;
    use proptest::prelude::*;

    fn spider7() -> FreeTree {
        make_family(&Family::Spider { legs: vec![2, 2, 2] }, 7).unwrap()
    }

    #[test]
    fn star_at_hub_reaches_n_choose_2() {
        for n in 1..15 {
            let t = make_family(&Family::Star, n).unwrap();
            let rt = t.rooted(0).unwrap();
            let (arr, d) = max_projective(&rt);
            assert_eq!(d, (n * (n - 1) / 2) as u64);
            assert!(is_projective(&rt, &arr).unwrap());
        }
    }

    #[test]
    fn singleton() {
        let t = FreeTree::singleton();
        let rt = t.rooted(0).unwrap();
        let (arr, d) = max_projective(&rt);
        assert_eq!((arr.n(), d), (1, 0));
        let (arr, d) = min_projective(&rt);
        assert_eq!((arr.n(), d), (1, 0));
    }

    #[test]
    fn spider_from_center() {
        let t = spider7();
        let rt = t.rooted(0).unwrap();
        let (arr, d) = max_projective(&rt);
        assert_eq!(d, 15);
        assert_eq!(max_projective_cost(&rt, &lists_for(&rt)), 15);
        // root at the right end, legs laid out leftward
        assert_eq!(arr.position(0), 6);
        assert_eq!(arr.to_text(), "7 5 6 3 4 1 2");
    }

    #[test]
    fn closed_form_examples() {
        let path = make_family(&Family::Path, 3).unwrap();
        let rt = path.rooted(0).unwrap();
        assert_eq!(max_projective_cost(&rt, &lists_for(&rt)), 3);

        let star = make_family(&Family::Star, 5).unwrap();
        let rt = star.rooted(0).unwrap();
        assert_eq!(max_projective_cost(&rt, &lists_for(&rt)), 10);
    }

    #[test]
    fn min_examples() {
        let star = make_family(&Family::Star, 5).unwrap();
        assert_eq!(min_projective(&star.rooted(0).unwrap()).1, 6);

        let edge = make_family(&Family::Path, 2).unwrap();
        assert_eq!(min_projective(&edge.rooted(0).unwrap()).1, 1);
        assert_eq!(min_projective(&edge.rooted(1).unwrap()).1, 1);

        let path = make_family(&Family::Path, 3).unwrap();
        let (arr, d) = min_projective(&path.rooted(1).unwrap());
        assert_eq!(d, 2);
        assert_eq!(arr.position(1), 1);
    }

    #[test]
    fn long_path_does_not_overflow_the_stack() {
        let n = 200_000;
        let t = make_family(&Family::Path, n).unwrap();
        let rt = t.rooted(0).unwrap();
        let (_, d) = max_projective(&rt);
        assert_eq!(d, (n * (n - 1) / 2) as u64);
        let (_, d) = min_projective(&rt);
        assert_eq!(d, (n - 1) as u64);
    }

    proptest! {
        #[test]
        fn closed_form_matches_layout(n in 1usize..120, seed: u64, root in 0usize..120) {
            let t = random_tree(n, seed);
            let rt = t.rooted(root % n).unwrap();
            let lists = lists_for(&rt);
            let arr = max_projective_with_lists(&rt, &lists);
            prop_assert!(is_projective(&rt, &arr).unwrap());
            prop_assert_eq!(max_projective_cost(&rt, &lists), cost(&t, &arr).unwrap());
        }

        #[test]
        fn min_is_projective_and_below_max(n in 1usize..120, seed: u64, root in 0usize..120) {
            let t = random_tree(n, seed);
            let rt = t.rooted(root % n).unwrap();
            let (arr, lo) = min_projective(&rt);
            prop_assert!(is_projective(&rt, &arr).unwrap());
            prop_assert!(lo <= max_projective(&rt).1);
        }
    }
}
