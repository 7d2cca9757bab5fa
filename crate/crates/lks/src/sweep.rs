//! Systematic verification sweeps: every small host against every tree of a
//! chosen class, plus seeded random dense hosts against random caterpillars.

use crate::caterpillar::{embed_caterpillar, CatOutcome};
use crate::diam5::{embed_diam5, CascadeOutcome};
use crate::graph::{enumerate_labeled_graphs_capped, Graph};
use crate::oracle::{brute_embed, hypothesis_holds};
use crate::taxonomy::{all_layouts, CaterpillarShape};
use crate::tree::{enumerate_trees_capped, Tree};
use crate::Result;
use rand_chacha::ChaCha8Rng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

/// Which trees a sweep feeds to the embedders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeClass {
    All,
    Diam5,
    Caterpillar,
}

impl std::fmt::Display for TreeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TreeClass::All => "all",
            TreeClass::Diam5 => "diam5",
            TreeClass::Caterpillar => "caterpillar",
        })
    }
}

impl std::str::FromStr for TreeClass {
    type Err = crate::LksError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(TreeClass::All),
            "diam5" => Ok(TreeClass::Diam5),
            "caterpillar" => Ok(TreeClass::Caterpillar),
            other => Err(crate::LksError::Parse(format!(
                "unknown tree class {other:?} (expected all, diam5, or caterpillar)"
            ))),
        }
    }
}

/// One host/tree pair the sweep could not handle constructively.
#[derive(Clone, Debug, Serialize)]
pub struct GapRecord {
    pub graph6: String,
    pub k: usize,
    pub tree_edges: Vec<(usize, usize)>,
    pub note: String,
}

/// Aggregated result of a sweep.
#[derive(Debug, Serialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub class: String,
    pub n_max: usize,
    pub hosts: u64,
    pub cases: u64,
    pub embedded: u64,
    /// Cases outside the constructive coverage that the oracle confirmed.
    pub oracle_fallbacks: u64,
    pub gaps: Vec<GapRecord>,
}

impl SweepReport {
    pub fn clean(&self) -> bool {
        self.gaps.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    embedded: u64,
    oracle_fallbacks: u64,
    gaps: Vec<GapRecord>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.embedded += other.embedded;
        self.oracle_fallbacks += other.oracle_fallbacks;
        self.gaps.extend(other.gaps);
        self
    }
}

fn in_class(t: &Tree, class: TreeClass) -> bool {
    match class {
        TreeClass::All => true,
        TreeClass::Diam5 => t.diameter() <= 5,
        TreeClass::Caterpillar => !all_layouts(t).is_empty(),
    }
}

fn run_case(g: &Graph, k: usize, t: &Tree, class: TreeClass, seed: u64, tally: &mut Tally) {
    tally.cases += 1;
    let use_diam5 = match class {
        TreeClass::Diam5 => true,
        TreeClass::Caterpillar => false,
        TreeClass::All => t.diameter() <= 5,
    };
    if use_diam5 {
        match embed_diam5(g, k, t) {
            Ok(CascadeOutcome::Embedded { .. }) => tally.embedded += 1,
            Ok(CascadeOutcome::Failed(f)) => tally.gaps.push(GapRecord {
                graph6: g.to_graph6(),
                k,
                tree_edges: t.edges().to_vec(),
                note: format!("cascade failure: {:?}", f.kind),
            }),
            Err(e) => tally.gaps.push(GapRecord {
                graph6: g.to_graph6(),
                k,
                tree_edges: t.edges().to_vec(),
                note: format!("cascade error: {e}"),
            }),
        }
        return;
    }
    let is_caterpillar = !all_layouts(t).is_empty();
    if is_caterpillar {
        match embed_caterpillar(g, k, t, seed) {
            Ok(CatOutcome::Embedded { .. }) => {
                tally.embedded += 1;
                return;
            }
            Ok(CatOutcome::Unsupported { .. }) => {}
            Ok(CatOutcome::Failed(f)) => {
                tally.gaps.push(GapRecord {
                    graph6: g.to_graph6(),
                    k,
                    tree_edges: t.edges().to_vec(),
                    note: format!("caterpillar failure: {:?}", f.kind),
                });
                return;
            }
            Err(e) => {
                tally.gaps.push(GapRecord {
                    graph6: g.to_graph6(),
                    k,
                    tree_edges: t.edges().to_vec(),
                    note: format!("caterpillar error: {e}"),
                });
                return;
            }
        }
    }
    // Outside constructive coverage: the oracle must still find an embedding.
    tally.oracle_fallbacks += 1;
    if brute_embed(g, t).is_some() {
        tally.embedded += 1;
    } else {
        tally.gaps.push(GapRecord {
            graph6: g.to_graph6(),
            k,
            tree_edges: t.edges().to_vec(),
            note: "oracle found no embedding under the degree hypothesis".into(),
        });
    }
}

/// Runs every labeled host on up to `n_max` vertices against every tree of
/// the class with at most `k` edges, for every `k` satisfying the hypothesis.
pub fn exhaustive_sweep(n_max: usize, class: TreeClass, seed: u64) -> Result<SweepReport> {
    let mut trees_by_edges: Vec<Vec<Tree>> = vec![Vec::new()];
    for edges in 1..n_max.max(1) {
        trees_by_edges.push(
            enumerate_trees_capped(edges, n_max)?
                .into_iter()
                .filter(|t| in_class(t, class))
                .collect(),
        );
    }
    let mut hosts = 0u64;
    let mut total = Tally::default();
    for n in 1..=n_max {
        let graphs: Vec<Graph> = enumerate_labeled_graphs_capped(n, n_max)?.collect();
        hosts += graphs.len() as u64;
        let tally = graphs
            .par_iter()
            .map(|g| {
                let mut tally = Tally::default();
                for k in 1..n.max(1) {
                    if !hypothesis_holds(g, k) {
                        continue;
                    }
                    for trees in trees_by_edges.iter().take(k.min(n - 1) + 1).skip(1) {
                        for t in trees {
                            run_case(g, k, t, class, seed, &mut tally);
                        }
                    }
                }
                tally
            })
            .reduce(Tally::default, Tally::merge);
        total = total.merge(tally);
    }
    Ok(SweepReport {
        schema_version: 1,
        class: class.to_string(),
        n_max,
        hosts,
        cases: total.cases,
        embedded: total.embedded,
        oracle_fallbacks: total.oracle_fallbacks,
        gaps: total.gaps,
    })
}

/// Draws a shape with even joint distance and at least as many leaves as the
/// distance, totalling exactly `k` edges.
fn random_even_shape(rng: &mut ChaCha8Rng, k: usize) -> CaterpillarShape {
    debug_assert!(k >= 1);
    // Choose c even with room for b, d >= 1 on each side when c > 0.
    let c_max = if k >= 4 { (k - 2) / 2 } else { 0 };
    let c = 2 * (if c_max >= 2 { rng.gen_range(0..=c_max / 2) } else { 0 });
    let rem = k - c;
    let (b, d) = if c == 0 {
        (rng.gen_range(0..=rem), 0)
    } else {
        // b + d >= c keeps the covered regime, with b, d >= 1.
        let bd = rng.gen_range(c.max(2)..=rem);
        let b = rng.gen_range(1..bd.max(2)).min(bd - 1);
        (b, bd - b)
    };
    let rest = rem - b - d;
    let a = rng.gen_range(0..=rest);
    CaterpillarShape::new(a, b, c, d, rest - a)
}

fn random_host(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.4..0.95);
    let mut g = Graph::empty(n).expect("n within bounds");
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// Largest `k` for which the degree hypothesis holds (0 when none).
pub fn max_hypothesis_k(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut degs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degs.sort_unstable_by(|x, y| y.cmp(x));
    degs[n.div_ceil(2) - 1]
}

/// Seeded random sweep: dense hosts on up to `n_max` vertices, each against a
/// random covered caterpillar. Every case must embed constructively.
pub fn random_caterpillar_sweep(count: u64, n_max: usize, seed: u64) -> Result<SweepReport> {
    let tally = (0..count)
        .into_par_iter()
        .map(|case| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(case.wrapping_mul(0x9e3779b97f4a7c15)));
            let mut tally = Tally::default();
            let (g, k) = loop {
                let n = rng.gen_range(6..=n_max);
                let g = random_host(&mut rng, n);
                let k_cap = max_hypothesis_k(&g);
                if k_cap >= 2 {
                    let k = rng.gen_range(2..=k_cap);
                    break (g, k);
                }
            };
            let tree_edges = rng.gen_range(2..=k);
            let shape = random_even_shape(&mut rng, tree_edges);
            let t = shape.reconstruct();
            match embed_caterpillar(&g, k, &t, seed ^ case) {
                Ok(CatOutcome::Embedded { .. }) => {
                    tally.cases += 1;
                    tally.embedded += 1;
                }
                other => {
                    tally.cases += 1;
                    tally.gaps.push(GapRecord {
                        graph6: g.to_graph6(),
                        k,
                        tree_edges: t.edges().to_vec(),
                        note: format!("random case {case}: {other:?}"),
                    });
                }
            }
            tally
        })
        .reduce(Tally::default, Tally::merge);
    Ok(SweepReport {
        schema_version: 1,
        class: TreeClass::Caterpillar.to_string(),
        n_max,
        hosts: count,
        cases: tally.cases,
        embedded: tally.embedded,
        oracle_fallbacks: tally.oracle_fallbacks,
        gaps: tally.gaps,
    })
}
