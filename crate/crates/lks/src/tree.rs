//! Trees as guest structures: validated edge lists, canonical forms,
//! isomorph-free enumeration, and the text exchange format.

use crate::graph::{set_members, Graph};
use crate::{LksError, Result};
use std::collections::HashSet;

/// Default cap (in edges) for isomorph-free tree enumeration.
pub const DEFAULT_TREE_ENUM_CAP: usize = 9;

/// A connected acyclic graph given by its edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Tree {
    /// Validates connectivity and the edge count `order - 1`.
    pub fn new(order: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if order == 0 {
            return Err(LksError::InvalidTree("order must be positive".into()));
        }
        if edges.len() != order - 1 {
            return Err(LksError::InvalidTree(format!(
                "tree on {order} vertices must have {} edges, got {}",
                order - 1,
                edges.len()
            )));
        }
        let g = Graph::from_edges(order, &edges)?;
        if g.edge_count() != order - 1 {
            return Err(LksError::InvalidTree("duplicate edges".into()));
        }
        if !g.is_connected() {
            return Err(LksError::InvalidTree("not connected".into()));
        }
        let mut edges = edges;
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        Ok(Tree { order, edges })
    }

    /// Single vertex.
    pub fn trivial() -> Self {
        Tree {
            order: 1,
            edges: Vec::new(),
        }
    }

    /// Path with `k` edges.
    pub fn path(k: usize) -> Self {
        Tree::new(k + 1, (0..k).map(|i| (i, i + 1)).collect()).expect("path is a tree")
    }

    /// Star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        Tree::new(k + 1, (1..=k).map(|v| (0, v)).collect()).expect("star is a tree")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.order - 1
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Adjacency view of the tree.
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.order, &self.edges).expect("validated edges")
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn diameter(&self) -> usize {
        self.to_graph().diameter().expect("trees are connected")
    }

    /// AHU canonical code; equal codes iff isomorphic trees.
    pub fn canonical_code(&self) -> String {
        let g = self.to_graph();
        let centers = tree_centers(&g);
        match centers.len() {
            1 => rooted_code(&g, centers[0], None),
            2 => {
                let (c1, c2) = (centers[0], centers[1]);
                let a = rooted_code(&g, c1, Some(c2));
                let b = rooted_code(&g, c2, Some(c1));
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                format!("[{lo}{hi}]")
            }
            _ => unreachable!("a tree has one or two centers"),
        }
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.order == other.order && self.canonical_code() == other.canonical_code()
    }

    /// Serializes as the exchange format: a `tree <order>` header line
    /// followed by whitespace-separated edge endpoints.
    pub fn to_text(&self) -> String {
        let mut s = format!("tree {}\n", self.order);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the exchange format.
    pub fn from_text(text: &str) -> Result<Tree> {
        let mut tokens = text.split_whitespace();
        match tokens.next() {
            Some("tree") => {}
            _ => return Err(LksError::Parse("missing `tree` header".into())),
        }
        let order: usize = tokens
            .next()
            .ok_or_else(|| LksError::Parse("missing order".into()))?
            .parse()
            .map_err(|e| LksError::Parse(format!("bad order: {e}")))?;
        let rest: Vec<usize> = tokens
            .map(|t| t.parse().map_err(|e| LksError::Parse(format!("bad vertex id: {e}"))))
            .collect::<Result<_>>()?;
        if !rest.len().is_multiple_of(2) {
            return Err(LksError::Parse("odd number of edge endpoints".into()));
        }
        let edges = rest.chunks(2).map(|c| (c[0], c[1])).collect();
        Tree::new(order, edges)
    }
}

/// The one or two middle vertices of a tree (peeling leaves).
pub fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 1 {
        return vec![0];
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &leaves {
            removed[v] = true;
            remaining -= 1;
            for u in set_members(g.neighbors(v)) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        leaves = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn rooted_code(g: &Graph, root: usize, blocked: Option<usize>) -> String {
    let mut kids: Vec<String> = set_members(g.neighbors(root))
        .filter(|&u| Some(u) != blocked)
        .map(|u| rooted_code_from(g, u, root))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn rooted_code_from(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = set_members(g.neighbors(v))
        .filter(|&u| u != parent)
        .map(|u| rooted_code_from(g, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// One representative per isomorphism class of trees with exactly `k` edges.
pub fn enumerate_trees(k: usize) -> Result<Vec<Tree>> {
    enumerate_trees_capped(k, DEFAULT_TREE_ENUM_CAP)
}

/// As [`enumerate_trees`], with an explicit cap on `k`.
pub fn enumerate_trees_capped(k: usize, cap: usize) -> Result<Vec<Tree>> {
    if k > cap {
        return Err(LksError::CapExceeded(format!(
            "tree enumeration requested for k={k}, cap is {cap}"
        )));
    }
    // Grow by attaching a new leaf everywhere, deduplicating by canonical code.
    let mut level = vec![Tree::trivial()];
    for size in 2..=(k + 1) {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for attach in 0..t.order {
                let mut edges = t.edges.clone();
                edges.push((attach, size - 1));
                let grown = Tree::new(size, edges).expect("leaf attachment keeps a tree");
                if seen.insert(grown.canonical_code()) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_match_oeis() {
        // Unlabeled trees on k+1 vertices: 1, 1, 1, 2, 3, 6, 11, 23, 47.
        let expect = [1usize, 1, 1, 2, 3, 6, 11, 23, 47];
        for (k, &want) in expect.iter().enumerate() {
            assert_eq!(enumerate_trees(k).unwrap().len(), want, "k={k}");
        }
        assert!(enumerate_trees(10).is_err());
    }

    #[test]
    fn enumerated_trees_are_valid_and_distinct() {
        for k in 0..=6 {
            let trees = enumerate_trees(k).unwrap();
            for t in &trees {
                assert_eq!(t.order(), k + 1);
                assert_eq!(t.edge_count(), k);
                assert!(t.to_graph().is_connected());
            }
            for i in 0..trees.len() {
                for j in (i + 1)..trees.len() {
                    assert!(!trees[i].is_isomorphic(&trees[j]));
                }
            }
        }
    }

    #[test]
    fn canonical_code_invariant_under_relabeling() {
        let a = Tree::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Tree::new(4, vec![(3, 2), (2, 0), (0, 1)]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&Tree::star(3)));
    }

    #[test]
    fn text_roundtrip() {
        for t in enumerate_trees(5).unwrap() {
            let s = t.to_text();
            assert!(s.starts_with("tree 6\n"));
            assert_eq!(Tree::from_text(&s).unwrap(), t);
        }
        assert!(Tree::from_text("garbage").is_err());
        assert!(Tree::from_text("tree 3\n0 1").is_err());
    }

    #[test]
    fn rejects_non_trees() {
        assert!(Tree::new(3, vec![(0, 1)]).is_err());
        assert!(Tree::new(4, vec![(0, 1), (2, 3), (0, 1)]).is_err());
        assert!(Tree::new(3, vec![(0, 1), (0, 1)]).is_err());
    }

    #[test]
    fn centers_of_paths_and_stars() {
        assert_eq!(tree_centers(&Tree::path(4).to_graph()), vec![2]);
        assert_eq!(tree_centers(&Tree::path(3).to_graph()), vec![1, 2]);
        assert_eq!(tree_centers(&Tree::star(5).to_graph()), vec![0]);
    }
}
