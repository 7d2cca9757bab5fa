//! Two-colorings of complete graphs, the degree dichotomy that reduces tree
//! Ramsey questions to the embedding hypothesis, and exhaustive verification
//! for small orders.

use crate::graph::{graph_from_edge_mask, Graph};
use crate::oracle::{brute_embed, hypothesis_holds};
use crate::tree::Tree;
use crate::{LksError, Result};
use rayon::prelude::*;

/// Exhaustive coloring search is feasible up to this order (21 edge bits).
pub const RAMSEY_EXHAUSTIVE_CAP: usize = 7;

/// A red/blue coloring of the edges of `K_n`, stored as a bitmask over the
/// pairs `(u, v)` with `u < v` in the order `(0,1), (0,2), (1,2), (0,3), …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    red: u64,
}

/// Number of vertex pairs, i.e. bits in a coloring mask.
pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

impl EdgeColoring {
    pub fn new(n: usize, red: u64) -> Result<Self> {
        let bits = pair_count(n);
        if bits > 63 {
            return Err(LksError::CapExceeded(format!(
                "coloring masks support at most 63 pairs, K_{n} has {bits}"
            )));
        }
        if bits < 64 && red >> bits != 0 {
            return Err(LksError::Precondition(format!(
                "mask {red:#x} has bits beyond the {bits} pairs of K_{n}"
            )));
        }
        Ok(EdgeColoring { n, red })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn red_mask(&self) -> u64 {
        self.red
    }

    /// The graph formed by the red edges.
    pub fn red_graph(&self) -> Graph {
        graph_from_edge_mask(self.n, self.red).expect("mask validated at construction")
    }

    /// The graph formed by the blue edges (the complement of the red graph).
    pub fn blue_graph(&self) -> Graph {
        let bits = pair_count(self.n);
        let all = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
        graph_from_edge_mask(self.n, all & !self.red).expect("mask validated at construction")
    }
}

/// Which color class carries the degree hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ReductionSide {
    Red,
    Blue,
}

/// The dichotomy for a coloring of `K_{k+m}`: at least half the vertices have
/// red degree `>= k`, or at least half have blue degree `>= m`. Red wins ties.
///
/// Every vertex has red degree plus blue degree `k + m - 1`, so each vertex
/// is red-high or blue-high, and one side covers half of them.
pub fn ramsey_reduction(col: &EdgeColoring, k: usize, m: usize) -> Result<ReductionSide> {
    if col.n != k + m {
        return Err(LksError::Precondition(format!(
            "reduction needs order k + m = {}, coloring has {}",
            k + m,
            col.n
        )));
    }
    if hypothesis_holds(&col.red_graph(), k) {
        return Ok(ReductionSide::Red);
    }
    let blue = hypothesis_holds(&col.blue_graph(), m);
    assert!(blue, "dichotomy failed: neither side satisfies the hypothesis");
    Ok(ReductionSide::Blue)
}

/// `true` iff the coloring contains `t1` in red or `t2` in blue.
pub fn contains_mono_tree(col: &EdgeColoring, t1: &Tree, t2: &Tree) -> bool {
    brute_embed(&col.red_graph(), t1).is_some() || brute_embed(&col.blue_graph(), t2).is_some()
}

/// Checks every 2-coloring of `K_n`; returns a witness coloring containing
/// neither `t1` in red nor `t2` in blue, or `None` when all colorings do.
pub fn ramsey_check(t1: &Tree, t2: &Tree, n: usize) -> Result<Option<EdgeColoring>> {
    if n > RAMSEY_EXHAUSTIVE_CAP {
        return Err(LksError::CapExceeded(format!(
            "exhaustive coloring search requested for n={n}, cap is {RAMSEY_EXHAUSTIVE_CAP}"
        )));
    }
    if t1.order() > n || t2.order() > n {
        return Ok(Some(EdgeColoring::new(n, 0)?));
    }
    let total: u64 = 1u64 << pair_count(n);
    let witness = (0..total).into_par_iter().find_first(|&mask| {
        let col = EdgeColoring::new(n, mask).expect("mask in range");
        !contains_mono_tree(&col, t1, t2)
    });
    Ok(witness.map(|mask| EdgeColoring::new(n, mask).expect("mask in range")))
}

/// The smallest `n` such that every 2-coloring of `K_n` contains `t1` in red
/// or `t2` in blue.
pub fn ramsey_number(t1: &Tree, t2: &Tree) -> Result<usize> {
    for n in 1..=RAMSEY_EXHAUSTIVE_CAP {
        if ramsey_check(t1, t2, n)?.is_none() {
            return Ok(n);
        }
    }
    Err(LksError::CapExceeded(format!(
        "ramsey number of trees with {} and {} edges exceeds the search cap",
        t1.edge_count(),
        t2.edge_count()
    )))
}

/// Closed form for two stars with `k` and `m` edges: `k + m - 1` when both
/// are even, `k + m` otherwise.
pub fn star_ramsey(k: usize, m: usize) -> usize {
    if k.is_multiple_of(2) && m.is_multiple_of(2) {
        k + m - 1
    } else {
        k + m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coloring_split_partitions_edges() {
        let col = EdgeColoring::new(4, 0b010101).unwrap();
        let red = col.red_graph();
        let blue = col.blue_graph();
        assert_eq!(red.edge_count() + blue.edge_count(), 6);
        for u in 0..4 {
            for v in (u + 1)..4 {
                assert!(red.has_edge(u, v) ^ blue.has_edge(u, v));
            }
        }
        assert!(EdgeColoring::new(4, 1 << 6).is_err());
        assert!(EdgeColoring::new(12, 0).is_err());
    }

    #[test]
    fn dichotomy_holds_exhaustively_small() {
        for (k, m) in [(1usize, 2usize), (2, 2), (2, 3)] {
            let n = k + m;
            for mask in 0..(1u64 << pair_count(n)) {
                let col = EdgeColoring::new(n, mask).unwrap();
                match ramsey_reduction(&col, k, m).unwrap() {
                    ReductionSide::Red => assert!(hypothesis_holds(&col.red_graph(), k)),
                    ReductionSide::Blue => {
                        assert!(!hypothesis_holds(&col.red_graph(), k));
                        assert!(hypothesis_holds(&col.blue_graph(), m));
                    }
                }
            }
        }
    }

    #[test]
    fn single_edge_ramsey_is_two() {
        let e = Tree::path(1);
        assert_eq!(ramsey_number(&e, &e).unwrap(), 2);
    }

    #[test]
    fn star_numbers_match_formula_small() {
        for k in 1..=3usize {
            for m in k..=3usize {
                if k + m > RAMSEY_EXHAUSTIVE_CAP {
                    continue;
                }
                let r = ramsey_number(&Tree::star(k), &Tree::star(m)).unwrap();
                assert_eq!(r, star_ramsey(k, m), "stars ({k},{m})");
            }
        }
        assert_eq!(star_ramsey(2, 2), 3);
        assert_eq!(star_ramsey(2, 4), 5);
        assert_eq!(star_ramsey(3, 4), 7);
    }

    #[test]
    fn path_pair_example() {
        // Two paths with 2 edges each: known value 4 (both odd-ish case k+m
        // is an upper bound; the red/blue K_3 split of K_3 avoids both).
        let p2 = Tree::path(2);
        let r = ramsey_number(&p2, &p2).unwrap();
        assert!(ramsey_check(&p2, &p2, r).unwrap().is_none());
        assert!(ramsey_check(&p2, &p2, r - 1).unwrap().is_some());
        assert!(r <= 4);
    }

    #[test]
    fn reduction_rejects_wrong_order() {
        let col = EdgeColoring::new(4, 0).unwrap();
        assert!(ramsey_reduction(&col, 3, 3).is_err());
    }
}
