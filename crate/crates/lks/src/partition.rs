//! The degree-threshold split `L`/`S`, edge-minimal reduction, and the
//! refinement `A`, `B`, `C`, `D` with the derived sets `N`, `X`, `Ñ`.

use crate::graph::{set_members, Graph, VertexSet};
use crate::oracle::hypothesis_holds;
use crate::{LksError, Result};
use serde::Serialize;

/// A host graph paired with the degree threshold `k`.
#[derive(Clone, Debug)]
pub struct LksInstance {
    pub g: Graph,
    pub k: usize,
}

impl LksInstance {
    pub fn new(g: Graph, k: usize) -> Self {
        LksInstance { g, k }
    }

    /// At least `n/2` vertices of degree `>= k`.
    pub fn hypothesis(&self) -> bool {
        hypothesis_holds(&self.g, self.k)
    }
}

/// `L` = vertices of degree `>= k`; `S` = the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LksPartition {
    pub l: VertexSet,
    pub s: VertexSet,
}

/// Computes the threshold split.
pub fn lks_partition(g: &Graph, k: usize) -> LksPartition {
    let l = crate::graph::set_from((0..g.vertex_count()).filter(|&v| g.degree(v) >= k));
    LksPartition {
        l,
        s: g.vertex_set() & !l,
    }
}

/// Deletes edges in lexicographic order as long as the hypothesis survives.
///
/// The result is edge-minimal: deleting any remaining edge would leave fewer
/// than `n/2` vertices of degree `k`, and in particular `S` is independent in
/// the result. Errors when the hypothesis fails for the input.
pub fn edge_minimal_reduce(g: &Graph, k: usize) -> Result<Graph> {
    if !hypothesis_holds(g, k) {
        return Err(LksError::HypothesisNotMet);
    }
    let mut h = g.clone();
    // A single lexicographic pass suffices: degrees only decrease, so an edge
    // whose deletion once broke the hypothesis can never become deletable.
    for (u, v) in g.edges() {
        h.remove_edge(u, v)?;
        if !hypothesis_holds(&h, k) {
            h.add_edge(u, v)?;
        }
    }
    debug_assert!(is_minimal(&h, k));
    Ok(h)
}

fn is_minimal(g: &Graph, k: usize) -> bool {
    g.edges().iter().all(|&(u, v)| {
        let mut h = g.clone();
        h.remove_edge(u, v).expect("edge present");
        !hypothesis_holds(&h, k)
    })
}

/// The refinement of `V(G)`:
/// `A = {v ∈ L : deg_L(v) < k/2}`, `B = L ∖ A`,
/// `C = {v ∈ S : deg(v) = deg_L(v) >= k/2}`, `D = S ∖ C`,
/// with `N = N(B) ∩ L`, `X = {v ∈ L : deg_{C∪L}(v) >= k/2}`, `Ñ = N(B∪C) ∩ L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbcdPartition {
    pub a: VertexSet,
    pub b: VertexSet,
    pub c: VertexSet,
    pub d: VertexSet,
    pub n: VertexSet,
    pub x: VertexSet,
    pub n_tilde: VertexSet,
}

/// Computes the refinement. Half-integral thresholds are compared in scaled
/// integers (`2·deg` against `k`).
pub fn abcd_partition(g: &Graph, k: usize, p: &LksPartition) -> AbcdPartition {
    let mut a = 0;
    let mut b = 0;
    let mut c = 0;
    let mut d = 0;
    for v in set_members(p.l) {
        if 2 * g.degree_into(v, p.l) < k {
            a |= 1u64 << v;
        } else {
            b |= 1u64 << v;
        }
    }
    for v in set_members(p.s) {
        let dl = g.degree_into(v, p.l);
        if g.degree(v) == dl && 2 * dl >= k {
            c |= 1u64 << v;
        } else {
            d |= 1u64 << v;
        }
    }
    let n = g.neighborhood_of_set(b) & p.l;
    let cl = c | p.l;
    let x = crate::graph::set_from(
        set_members(p.l).filter(|&v| 2 * g.degree_into(v, cl) >= k),
    );
    let n_tilde = g.neighborhood_of_set(b | c) & p.l;
    AbcdPartition {
        a,
        b,
        c,
        d,
        n,
        x,
        n_tilde,
    }
}

/// Stable JSON view of the partitions: sorted vertex lists.
#[derive(Debug, Serialize)]
pub struct PartitionRecord {
    pub k: usize,
    pub l: Vec<usize>,
    pub s: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
    pub n: Vec<usize>,
    pub x: Vec<usize>,
    pub n_tilde: Vec<usize>,
}

pub fn partition_record(k: usize, p: &LksPartition, abcd: &AbcdPartition) -> PartitionRecord {
    let list = |s: VertexSet| set_members(s).collect::<Vec<_>>();
    PartitionRecord {
        k,
        l: list(p.l),
        s: list(p.s),
        a: list(abcd.a),
        b: list(abcd.b),
        c: list(abcd.c),
        d: list(abcd.d),
        n: list(abcd.n),
        x: list(abcd.x),
        n_tilde: list(abcd.n_tilde),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::tight_construction;
    use crate::graph::{enumerate_labeled_graphs, full_set};

    #[test]
    fn split_examples() {
        let k5 = Graph::complete(5).unwrap();
        let p = lks_partition(&k5, 4);
        assert_eq!(p.l, full_set(5));
        assert_eq!(p.s, 0);

        let empty = Graph::empty(4).unwrap();
        assert_eq!(lks_partition(&empty, 1).l, 0);

        let tight = tight_construction(3, 8).unwrap();
        assert_eq!(lks_partition(&tight, 3).l.count_ones(), 2);
    }

    #[test]
    fn reduce_makes_s_independent_and_is_minimal() {
        for g in enumerate_labeled_graphs(5).unwrap() {
            for k in 1..=4 {
                if !hypothesis_holds(&g, k) {
                    continue;
                }
                let h = edge_minimal_reduce(&g, k).unwrap();
                assert!(hypothesis_holds(&h, k));
                let p = lks_partition(&h, k);
                // S independent: no S-S edges.
                assert!(set_members(p.s).all(|v| h.degree_into(v, p.s) == 0));
                assert!(is_minimal(&h, k));
            }
        }
    }

    #[test]
    fn reduce_k4_with_k2_gives_minimal_graph() {
        let g = Graph::complete(4).unwrap();
        let h = edge_minimal_reduce(&g, 2).unwrap();
        assert!(hypothesis_holds(&h, 2));
        assert!(is_minimal(&h, 2));
        // An already-minimal path is unchanged.
        let p4 = Graph::path(4).unwrap();
        assert!(hypothesis_holds(&p4, 2));
        let r = edge_minimal_reduce(&p4, 2).unwrap();
        assert_eq!(r, p4);
        // Hypothesis-violating input errors.
        assert!(edge_minimal_reduce(&Graph::empty(4).unwrap(), 1).is_err());
    }

    #[test]
    fn abcd_on_complete_graph() {
        let k = 4;
        let g = Graph::complete(k + 1).unwrap();
        let p = lks_partition(&g, k);
        let abcd = abcd_partition(&g, k, &p);
        assert_eq!(abcd.a, 0);
        assert_eq!(abcd.b, g.vertex_set());
        assert_eq!(abcd.c, 0);
        assert_eq!(abcd.d, 0);
    }

    #[test]
    fn abcd_on_tight_construction() {
        let g = tight_construction(3, 8).unwrap();
        let p = lks_partition(&g, 3);
        let abcd = abcd_partition(&g, 3, &p);
        assert_eq!(abcd.b, 0);
        assert_eq!(abcd.a, p.l);
        assert_eq!(abcd.c, 0);
        assert_eq!(abcd.d, p.s);
    }

    #[test]
    fn c_membership_fixture() {
        // S-vertex 5 adjacent only to L-vertices, with 2·deg >= k.
        let mut g = Graph::complete(5).unwrap().pad_with_isolated(1).unwrap();
        g.add_edge(5, 0).unwrap();
        g.add_edge(5, 1).unwrap();
        let k = 4;
        let p = lks_partition(&g, k);
        assert_eq!(p.s, 1 << 5);
        let abcd = abcd_partition(&g, k, &p);
        assert_eq!(abcd.c, 1 << 5);
    }

    #[test]
    fn counting_identity_between_sets() {
        for g in enumerate_labeled_graphs(5).unwrap().step_by(11) {
            let y = 0b00110;
            let z = 0b11000;
            let direct = g.edges_between(y, z);
            let summed: usize = set_members(y).map(|v| g.degree_into(v, z)).sum();
            assert_eq!(direct, summed);
        }
    }

    #[test]
    fn partition_json_is_sorted() {
        let g = tight_construction(3, 8).unwrap();
        let p = lks_partition(&g, 3);
        let abcd = abcd_partition(&g, 3, &p);
        let rec = partition_record(3, &p, &abcd);
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.contains("\"k\":3"));
        let mut sorted = rec.l.clone();
        sorted.sort_unstable();
        assert_eq!(rec.l, sorted);
    }
}
