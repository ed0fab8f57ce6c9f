//! Maximum (and minimum) linear arrangements of trees under the projective
//! and planar constraints, in linear time.
//!
//! A linear arrangement places the `n` vertices of a tree on positions of a
//! line; its cost is the total edge length. An arrangement is *planar* when
//! no two edges cross as arcs drawn above the line, and *projective* for a
//! rooted tree when it is planar and no edge passes over the root.
//!
//! - [`projective::max_projective`] and [`projective::max_projective_cost`]
//!   solve projective MaxLA.
//! - [`planar::max_planar`] solves planar MaxLA by locating the best root
//!   with [`planar::find_optimal_root`].
//! - [`projective::min_projective`] and [`planar::min_planar`] are the
//!   minimization counterparts.
//! - [`oracle`] enumerates all arrangements of small trees for reference.
//!
//! Vertices and positions are 0-based in this API. The text formats read
//! and written by [`FreeTree::parse`] and [`Arrangement::to_text`] are
//! 1-based.

pub mod arrangement;
pub mod bench;
pub mod error;
pub mod generators;
pub mod oracle;
pub mod planar;
pub mod projective;
mod sort;
pub mod tree;

pub use arrangement::{cost, is_planar, is_projective, Arrangement};
pub use error::{Error, ParseError, Result};
pub use tree::{FreeTree, RootedTree, SortedChildLists, SubtreeSizeTable};
