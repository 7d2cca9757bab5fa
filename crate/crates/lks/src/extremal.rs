//! Tightness constructions: hosts with just under the required number of
//! high-degree vertices, and the spider tree they fail to contain.

use crate::graph::Graph;
use crate::oracle::brute_embed;
use crate::tree::Tree;
use crate::{LksError, Result};
use serde::Serialize;

/// The blocked construction: `n/(k+1)` components, each a clique `A_i` of
/// size `(k-1)/2` completely joined to an independent set `B_i` of size
/// `(k+3)/2`. Requires `k` odd and `(k+1) | n`.
pub fn tight_construction(k: usize, n: usize) -> Result<Graph> {
    if k.is_multiple_of(2) {
        return Err(LksError::Precondition(format!("k must be odd, got {k}")));
    }
    if n == 0 || !n.is_multiple_of(k + 1) {
        return Err(LksError::Precondition(format!(
            "n must be a positive multiple of k+1 = {}, got {n}",
            k + 1
        )));
    }
    let a_size = (k - 1) / 2;
    let b_size = (k + 3) / 2;
    let block = a_size + b_size; // == k + 1
    let mut g = Graph::empty(n)?;
    for comp in 0..(n / (k + 1)) {
        let base = comp * block;
        for i in 0..a_size {
            for j in (i + 1)..a_size {
                g.add_edge(base + i, base + j)?;
            }
            for j in 0..b_size {
                g.add_edge(base + i, base + a_size + j)?;
            }
        }
    }
    Ok(g)
}

/// The spider witness: a star with `(k+1)/2` edges, all but one subdivided.
/// Requires `k` odd. Has exactly `k` edges; vertex 0 is the centre.
pub fn spider(k: usize) -> Result<Tree> {
    if k.is_multiple_of(2) {
        return Err(LksError::Precondition(format!("k must be odd, got {k}")));
    }
    let legs = k.div_ceil(2);
    let mut edges = Vec::new();
    let mut next = 1;
    // One pendant edge, then legs-1 subdivided legs.
    edges.push((0, next));
    next += 1;
    for _ in 0..legs - 1 {
        edges.push((0, next));
        edges.push((next, next + 1));
        next += 2;
    }
    Tree::new(next, edges)
}

/// Number of vertices with degree `>= k` in a graph.
pub fn high_degree_count(g: &Graph, k: usize) -> usize {
    (0..g.vertex_count()).filter(|&v| g.degree(v) >= k).count()
}

/// The lower-bound formula for the number of high-degree vertices needed:
/// `n/2 - 2⌊n/(k+1)⌋ - (n mod (k+1))`, evaluated exactly (ceiling for odd
/// `n`) and clamped at zero.
pub fn required_high_degree_lower_bound(n: usize, k: usize) -> usize {
    let half = n.div_ceil(2) as i64;
    let raw = half - 2 * (n / (k + 1)) as i64 - (n % (k + 1)) as i64;
    raw.max(0) as usize
}

/// Report confirming the tightness of the construction for `(k, n)`.
#[derive(Serialize)]
pub struct TightnessWitness {
    pub schema_version: u32,
    pub k: usize,
    pub n: usize,
    pub graph6: String,
    pub high_degree_count: usize,
    pub expected_high_degree_count: usize,
    pub spider_edges: Vec<(usize, usize)>,
    pub spider_embeds: bool,
}

/// Builds the construction, counts its high-degree vertices against the
/// closed form `n/2 - n/(k+1)`, and confirms via the oracle that the spider
/// does not embed.
pub fn tightness_witness(k: usize, n: usize) -> Result<TightnessWitness> {
    let g = tight_construction(k, n)?;
    let t = spider(k)?;
    let count = high_degree_count(&g, k);
    let expected = n / 2 - n / (k + 1);
    let embeds = brute_embed(&g, &t).is_some();
    Ok(TightnessWitness {
        schema_version: 1,
        k,
        n,
        graph6: g.to_graph6(),
        high_degree_count: count,
        expected_high_degree_count: expected,
        spider_edges: t.edges().to_vec(),
        spider_embeds: embeds,
    })
}
