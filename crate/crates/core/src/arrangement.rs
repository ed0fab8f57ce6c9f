//! Linear arrangements, their cost, and the planarity and projectivity
//! predicates used to validate solver output.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree::{FreeTree, RootedTree};

/// A bijection from vertices `0..n` to positions `0..n`, stored in both
/// directions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrangement {
    position: Vec<usize>,
    inverse: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ArrangementJson {
    n: usize,
    position: Vec<usize>,
}

impl Arrangement {
    pub fn identity(n: usize) -> Self {
        Arrangement {
            position: (0..n).collect(),
            inverse: (0..n).collect(),
        }
    }

    /// From `position[v]` = 0-based position of vertex `v`.
    pub fn from_positions(position: Vec<usize>) -> Result<Self> {
        let inverse = invert(&position)?;
        Ok(Arrangement { position, inverse })
    }

    /// From `order[p]` = vertex placed at 0-based position `p`.
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let position = invert(&order)?;
        Ok(Arrangement {
            position,
            inverse: order,
        })
    }

    pub fn n(&self) -> usize {
        self.position.len()
    }

    /// 0-based position of `v`.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Vertex at 0-based position `p`.
    pub fn vertex_at(&self, p: usize) -> usize {
        self.inverse[p]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    /// Vertices from left to right.
    pub fn order(&self) -> &[usize] {
        &self.inverse
    }

    /// The mirrored arrangement: position `p` becomes `n - 1 - p`.
    pub fn reverse(&self) -> Self {
        let n = self.n();
        Arrangement {
            position: self.position.iter().map(|&p| n - 1 - p).collect(),
            inverse: self.inverse.iter().rev().copied().collect(),
        }
    }

    /// Text form: `pi(1) pi(2) ... pi(n)`, 1-based positions of vertices 1..n.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.n() * 7);
        for (i, p) in self.position.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{}", p + 1);
        }
        s
    }

    /// Parses the text form. The first non-blank, non-comment line is used.
    pub fn parse_text(text: &str) -> Result<Self> {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        let position = line
            .split_whitespace()
            .map(|f| match f.parse::<usize>() {
                Ok(p) if p >= 1 => Ok(p - 1),
                _ => Err(Error::InvalidArrangement(format!("bad position {f:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if position.is_empty() {
            return Err(Error::InvalidArrangement("no positions given".into()));
        }
        Self::from_positions(position)
    }

    /// JSON form `{"n": .., "position": [..]}` with 1-based positions.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ArrangementJson {
            n: self.n(),
            position: self.position.iter().map(|p| p + 1).collect(),
        })
        .expect("plain struct serializes")
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let doc: ArrangementJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidArrangement(format!("bad JSON: {e}")))?;
        if doc.n != doc.position.len() {
            return Err(Error::InvalidArrangement(format!(
                "n = {} but {} positions given",
                doc.n,
                doc.position.len()
            )));
        }
        let position = doc
            .position
            .iter()
            .map(|&p| {
                p.checked_sub(1)
                    .ok_or_else(|| Error::InvalidArrangement("position 0".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_positions(position)
    }

    /// Accepts either the JSON or the text form.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }
}

fn invert(map: &[usize]) -> Result<Vec<usize>> {
    let n = map.len();
    let mut inv = vec![usize::MAX; n];
    for (i, &x) in map.iter().enumerate() {
        if x >= n {
            return Err(Error::InvalidArrangement(format!(
                "value {} out of range 1..={n}",
                x + 1
            )));
        }
        if inv[x] != usize::MAX {
            return Err(Error::InvalidArrangement(format!(
                "value {} used twice",
                x + 1
            )));
        }
        inv[x] = i;
    }
    Ok(inv)
}

fn check_size(tree: &FreeTree, arr: &Arrangement) -> Result<()> {
    if tree.n() != arr.n() {
        return Err(Error::SizeMismatch {
            tree: tree.n(),
            arrangement: arr.n(),
        });
    }
    Ok(())
}

/// Sum of edge lengths `|pi(u) - pi(v)|`.
pub fn cost(tree: &FreeTree, arr: &Arrangement) -> Result<u64> {
    check_size(tree, arr)?;
    Ok(cost_unchecked(tree, arr.positions()))
}

pub(crate) fn cost_unchecked(tree: &FreeTree, position: &[usize]) -> u64 {
    tree.edges()
        .iter()
        .map(|&(u, v)| position[u].abs_diff(position[v]) as u64)
        .sum()
}

/// Edge lengths in edge insertion order.
pub fn edge_lengths(tree: &FreeTree, arr: &Arrangement) -> Result<Vec<usize>> {
    check_size(tree, arr)?;
    Ok(tree
        .edges()
        .iter()
        .map(|&(u, v)| arr.position(u).abs_diff(arr.position(v)))
        .collect())
}

/// No two edges cross. Pairwise test over all edges, quadratic in `n`.
pub fn is_planar(tree: &FreeTree, arr: &Arrangement) -> Result<bool> {
    check_size(tree, arr)?;
    Ok(crossing_free(tree, arr.positions()))
}

pub(crate) fn crossing_free(tree: &FreeTree, position: &[usize]) -> bool {
    let spans: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (position[u], position[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    for (i, &(s, t)) in spans.iter().enumerate() {
        for &(u, v) in &spans[i + 1..] {
            // edges sharing an endpoint share a position and never satisfy
            // either strict interleaving
            if (s < u && u < t && t < v) || (u < s && s < v && v < t) {
                return false;
            }
        }
    }
    true
}

/// Planar, and no edge covers the root.
pub fn is_projective(rt: &RootedTree<'_>, arr: &Arrangement) -> Result<bool> {
    check_size(rt.tree(), arr)?;
    Ok(projective_unchecked(rt.tree(), rt.root(), arr.positions()))
}

pub(crate) fn projective_unchecked(tree: &FreeTree, root: usize, position: &[usize]) -> bool {
    let r = position[root];
    let covers_root = tree.edges().iter().any(|&(u, v)| {
        let (a, b) = (position[u], position[v]);
        a.min(b) < r && r < a.max(b)
    });
    !covers_root && crossing_free(tree, position)
}
