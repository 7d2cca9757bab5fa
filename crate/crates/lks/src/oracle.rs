//! Exact brute-force tree embedding and verification. Every constructive
//! module is cross-checked against this one.

use crate::embedding::Embedding;
use crate::graph::{set_members, Graph};
use crate::tree::Tree;

/// Exact backtracking search for an embedding of `t` into `g`.
///
/// Guest vertices are processed in BFS order from a maximum-degree vertex, so
/// every non-root candidate is restricted to neighbours of its parent's image.
/// Returns the lexicographically first embedding found, or `None` when none
/// exists.
pub fn brute_embed(g: &Graph, t: &Tree) -> Option<Embedding> {
    if t.order() > g.vertex_count() {
        return None;
    }
    let tg = t.to_graph();
    let root = (0..t.order()).max_by_key(|&v| tg.degree(v)).unwrap_or(0);

    // BFS order with parents.
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; t.order()];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for u in set_members(tg.neighbors(v)) {
            if u != parent[v] && u != root
                && parent[u] == usize::MAX {
                    parent[u] = v;
                    order.push(u);
                }
        }
        i += 1;
    }
    debug_assert_eq!(order.len(), t.order());

    let mut emb = Embedding::new(t.order());
    if backtrack(g, &tg, &order, &parent, 0, &mut emb) {
        Some(emb)
    } else {
        None
    }
}

fn backtrack(
    g: &Graph,
    tg: &Graph,
    order: &[usize],
    parent: &[usize],
    depth: usize,
    emb: &mut Embedding,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let guest = order[depth];
    let need = tg.degree(guest);
    let candidates = if depth == 0 {
        g.vertex_set()
    } else {
        let pimg = emb.host_of(parent[guest]).expect("parent placed earlier");
        g.neighbors(pimg)
    };
    for host in set_members(candidates & !emb.used_hosts()) {
        if g.degree(host) < need {
            continue;
        }
        emb.assign(guest, host).expect("candidate is fresh");
        if backtrack(g, tg, order, parent, depth + 1, emb) {
            return true;
        }
        emb.unassign(guest);
    }
    false
}

/// True iff `emb` is total, injective, and maps every guest edge to a host edge.
pub fn verify_embedding(g: &Graph, t: &Tree, emb: &Embedding) -> bool {
    if emb.guest_order() != t.order() || !emb.is_total() {
        return false;
    }
    let mut seen = 0u64;
    for v in 0..t.order() {
        let h = emb.host_of(v).expect("total");
        if h >= g.vertex_count() || seen & (1 << h) != 0 {
            return false;
        }
        seen |= 1 << h;
    }
    t.edges()
        .iter()
        .all(|&(u, v)| g.has_edge(emb.host_of(u).unwrap(), emb.host_of(v).unwrap()))
}

/// The degree hypothesis: at least `n/2` vertices of `g` have degree `>= k`
/// (exact rational comparison, i.e. `2·|L| >= n`).
pub fn hypothesis_holds(g: &Graph, k: usize) -> bool {
    let high = (0..g.vertex_count()).filter(|&v| g.degree(v) >= k).count();
    2 * high >= g.vertex_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal;
    use crate::graph::enumerate_labeled_graphs;
    use crate::tree::enumerate_trees;

    #[test]
    fn edge_into_any_graph_with_an_edge() {
        let g = Graph::from_edges(4, &[(1, 3)]).unwrap();
        let e = brute_embed(&g, &Tree::path(1)).unwrap();
        assert!(verify_embedding(&g, &Tree::path(1), &e));
        let empty = Graph::empty(3).unwrap();
        assert!(brute_embed(&empty, &Tree::path(1)).is_none());
    }

    #[test]
    fn p4_into_star_fails_but_into_c4_succeeds() {
        let p4 = Tree::path(3);
        let star = Tree::star(3).to_graph();
        assert!(brute_embed(&star, &p4).is_none());
        let c4 = Graph::cycle(4).unwrap();
        let e = brute_embed(&c4, &p4).unwrap();
        assert!(verify_embedding(&c4, &p4, &e));
    }

    #[test]
    fn verify_rejects_bad_maps() {
        let t = Tree::path(2);
        let g = Graph::path(3).unwrap();
        let mut e = Embedding::new(3);
        e.assign(0, 0).unwrap();
        e.assign(1, 1).unwrap();
        assert!(!verify_embedding(&g, &t, &e)); // not total
        e.assign(2, 2).unwrap();
        assert!(verify_embedding(&g, &t, &e));
        let mut bad = Embedding::new(3);
        bad.assign(0, 0).unwrap();
        bad.assign(1, 2).unwrap();
        bad.assign(2, 1).unwrap();
        assert!(!verify_embedding(&g, &t, &bad)); // guest edge 0-1 -> host 0,2
    }

    #[test]
    fn hypothesis_examples() {
        assert!(hypothesis_holds(&Graph::complete(5).unwrap(), 4));
        assert!(hypothesis_holds(&Graph::empty(4).unwrap(), 0));
        let tight = extremal::tight_construction(3, 8).unwrap();
        assert!(!hypothesis_holds(&tight, 3));
    }

    /// Independent second oracle: try all injective maps.
    fn embed_by_all_maps(g: &Graph, t: &Tree) -> bool {
        fn rec(g: &Graph, t: &Tree, map: &mut Vec<usize>, used: u64) -> bool {
            let v = map.len();
            if v == t.order() {
                return true;
            }
            for h in 0..g.vertex_count() {
                if used & (1 << h) != 0 {
                    continue;
                }
                let ok = t
                    .edges()
                    .iter()
                    .filter(|&&(a, b)| (a == v && b < v) || (b == v && a < v))
                    .all(|&(a, b)| {
                        let other = if a == v { b } else { a };
                        g.has_edge(h, map[other])
                    });
                if ok {
                    map.push(h);
                    if rec(g, t, map, used | (1 << h)) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        if t.order() > g.vertex_count() {
            return false;
        }
        rec(g, t, &mut Vec::new(), 0)
    }

    #[test]
    fn agrees_with_independent_all_maps_oracle() {
        let trees: Vec<Tree> = (1..=4).flat_map(|k| enumerate_trees(k).unwrap()).collect();
        for g in enumerate_labeled_graphs(5).unwrap().step_by(7) {
            for t in &trees {
                let fast = brute_embed(&g, t);
                let slow = embed_by_all_maps(&g, t);
                assert_eq!(fast.is_some(), slow, "g={:?} t={:?}", g, t);
                if let Some(e) = fast {
                    assert!(verify_embedding(&g, t, &e));
                }
            }
        }
    }

    #[test]
    fn subtree_monotonicity() {
        // If t' contains t as a subtree and t' embeds, then t embeds.
        let g = Graph::from_graph6("DQw").unwrap_or_else(|_| Graph::cycle(5).unwrap());
        for k in 2..=4 {
            for big in enumerate_trees(k).unwrap() {
                if brute_embed(&g, &big).is_some() {
                    // Remove a leaf to get a subtree.
                    let leaf = (0..big.order()).find(|&v| big.degree(v) == 1).unwrap();
                    let edges: Vec<(usize, usize)> = big
                        .edges()
                        .iter()
                        .filter(|&&(a, b)| a != leaf && b != leaf)
                        .map(|&(a, b)| {
                            let fix = |x: usize| if x > leaf { x - 1 } else { x };
                            (fix(a), fix(b))
                        })
                        .collect();
                    let small = Tree::new(big.order() - 1, edges).unwrap();
                    assert!(brute_embed(&g, &small).is_some());
                }
            }
        }
    }
}
