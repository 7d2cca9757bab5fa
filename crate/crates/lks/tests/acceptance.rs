//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line.

use lks::caterpillar::{find_path_of_length, rotate_path};
use lks::diam5::greedy_leaf_completion;
use lks::embedding::Embedding;
use lks::extremal::tightness_witness;
use lks::graph::{full_set, vbit, Graph};
use lks::oracle::{hypothesis_holds, verify_embedding};
use lks::ramsey::{pair_count, ramsey_check, ramsey_number, ramsey_reduction, star_ramsey, EdgeColoring, ReductionSide};
use lks::sweep::{exhaustive_sweep, max_hypothesis_k, random_caterpillar_sweep, TreeClass};
use lks::taxonomy::{caterpillar_decompose, center_edge, level_sets, CaterpillarShape};
use lks::tree::{enumerate_trees, Tree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;

fn report(criterion: u32, name: &str, pass: bool) {
    println!(
        "criterion {criterion} ({name}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} ({name}) failed");
}

#[test]
fn criterion_1_small_diameter_exhaustive() {
    let r = exhaustive_sweep(6, TreeClass::Diam5, 0).expect("sweep runs");
    let pass = r.clean() && r.oracle_fallbacks == 0 && r.cases > 0 && r.embedded == r.cases;
    if !r.clean() {
        eprintln!("first gaps: {:?}", &r.gaps[..r.gaps.len().min(3)]);
    }
    report(1, "small-diameter cascade, exhaustive n <= 6", pass);
}

#[test]
fn criterion_2_caterpillar_exhaustive_and_random() {
    let ex = exhaustive_sweep(6, TreeClass::Caterpillar, 0).expect("sweep runs");
    let rnd = random_caterpillar_sweep(10_000, 30, 0xCA7).expect("sweep runs");
    let pass = ex.clean() && rnd.clean() && rnd.embedded == 10_000 && ex.embedded == ex.cases;
    if !pass {
        eprintln!(
            "exhaustive gaps: {:?}; random gaps: {:?}",
            &ex.gaps[..ex.gaps.len().min(3)],
            &rnd.gaps[..rnd.gaps.len().min(3)]
        );
    }
    report(2, "caterpillar embedder, exhaustive n <= 6 plus 10^4 random hosts", pass);
}

#[test]
fn criterion_3_tightness_witnesses() {
    let mut pass = true;
    for k in [3usize, 5, 7] {
        let n = k + 1; // smallest valid order
        let w = tightness_witness(k, n).expect("construction valid");
        pass &= w.high_degree_count == n / 2 - n / (k + 1);
        pass &= w.high_degree_count == w.expected_high_degree_count;
        pass &= !w.spider_embeds;
    }
    report(3, "extremal construction tight for k in {3,5,7}", pass);
}

#[test]
fn criterion_4_tree_ramsey_bound_and_star_values() {
    let mut pass = true;
    // Upper bound k + m for every unordered pair of trees with k + m <= 7.
    for k in 1..=6usize {
        for m in k..=(7 - k) {
            for t1 in enumerate_trees(k).unwrap() {
                for t2 in enumerate_trees(m).unwrap() {
                    if ramsey_check(&t1, &t2, k + m).unwrap().is_some() {
                        eprintln!("bound violated for {k}-edge and {m}-edge pair");
                        pass = false;
                    }
                }
            }
        }
    }
    // Exact star values match the parity formula.
    for k in 1..=6usize {
        for m in k..=(7 - k) {
            let r = ramsey_number(&Tree::star(k), &Tree::star(m)).unwrap();
            if r != star_ramsey(k, m) {
                eprintln!("stars ({k},{m}): got {r}, formula {}", star_ramsey(k, m));
                pass = false;
            }
        }
    }
    report(4, "tree Ramsey bound k+m and exact star values", pass);
}

#[test]
fn criterion_5_reduction_dichotomy() {
    let mut pass = true;
    // Exhaustive over all colorings for n <= 6 and every split k + m = n.
    for n in 2..=6usize {
        for k in 1..n {
            let m = n - k;
            for mask in 0..(1u64 << pair_count(n)) {
                let col = EdgeColoring::new(n, mask).unwrap();
                let ok = match ramsey_reduction(&col, k, m).unwrap() {
                    ReductionSide::Red => hypothesis_holds(&col.red_graph(), k),
                    ReductionSide::Blue => hypothesis_holds(&col.blue_graph(), m),
                };
                pass &= ok;
            }
        }
    }
    // 10^5 seeded random colorings at n = 8, every split.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let bits = pair_count(8);
    for _ in 0..100_000 {
        let mask = rng.gen::<u64>() & ((1u64 << bits) - 1);
        let col = EdgeColoring::new(8, mask).unwrap();
        for k in 1..8usize {
            let ok = match ramsey_reduction(&col, k, 8 - k).unwrap() {
                ReductionSide::Red => hypothesis_holds(&col.red_graph(), k),
                ReductionSide::Blue => hypothesis_holds(&col.blue_graph(), 8 - k),
            };
            pass &= ok;
        }
    }
    report(5, "reduction dichotomy, exhaustive n <= 6 plus 10^5 random n = 8", pass);
}

/// Random labeled tree on `order` vertices via a uniform sequence decode.
fn random_tree(rng: &mut ChaCha8Rng, order: usize) -> Tree {
    if order == 1 {
        return Tree::trivial();
    }
    if order == 2 {
        return Tree::path(1);
    }
    let seq: Vec<usize> = (0..order - 2).map(|_| rng.gen_range(0..order)).collect();
    let mut degree = vec![1usize; order];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(order - 1);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..order).filter(|&v| degree[v] == 1).collect();
    for &x in &seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf.min(x), leaf.max(x)));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let mut rest = leaves.into_iter();
    let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((u.min(v), u.max(v)));
    Tree::new(order, edges).expect("sequence decode yields a tree")
}

fn random_host(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[test]
fn criterion_6_structural_invariants() {
    let mut pass = true;
    const CASES: usize = 10_000;

    // Level-set partition exactness and the orientation inequality.
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let mut done = 0;
    while done < CASES {
        let order = rng.gen_range(2..=10);
        let t = random_tree(&mut rng, order);
        if t.diameter() > 5 {
            continue;
        }
        done += 1;
        let (r1, r2) = center_edge(&t).unwrap().expect("diameter <= 5");
        let d = level_sets(&t, r1, r2).unwrap();
        let parts = [vbit(d.r1), vbit(d.r2), d.v1, d.v2, d.w1 & !d.v2, d.w2 & !d.v1];
        let union = parts.iter().fold(0, |acc, &p| acc | p);
        pass &= union == t.to_graph().vertex_set();
        // Pairwise disjoint after removing the deliberate W/V overlap.
        let total: u32 = parts.iter().map(|p| p.count_ones()).sum();
        pass &= total == union.count_ones();
        pass &= d.k == 0 || 2 * ((d.v2 | d.w1).count_ones() as usize) < d.k;
        pass &= d.v1p & !d.v1 == 0 && d.v2p & !d.v2 == 0;
    }

    // Decompose/reconstruct round-trip on random shapes.
    let mut rng = ChaCha8Rng::seed_from_u64(62);
    for _ in 0..CASES {
        let s = CaterpillarShape::new(
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
            rng.gen_range(0..=4),
        );
        if s.k() == 0 {
            continue;
        }
        let t = s.reconstruct();
        match caterpillar_decompose(&t) {
            Some(c) => {
                pass &= c.reconstruct().is_isomorphic(&t) && c.k() == t.edge_count();
            }
            None => pass = false,
        }
    }

    // Rotation preserves path validity, endpoints count, and vertex set.
    let mut rng = ChaCha8Rng::seed_from_u64(63);
    let mut done = 0;
    while done < CASES {
        let n = rng.gen_range(5..=12);
        let p = rng.gen_range(0.5..0.95);
        let g = random_host(&mut rng, n, p);
        let Ok(q) = find_path_of_length(&g, rng.gen_range(2..n), full_set(n), done as u64) else {
            continue;
        };
        let m = q.length();
        let xm = q.last();
        let pivots: Vec<usize> = (0..m)
            .filter(|&s| g.has_edge(q.vertices()[s], xm) && s + 1 < m)
            .collect();
        if pivots.is_empty() {
            continue;
        }
        done += 1;
        let s = pivots[rng.gen_range(0..pivots.len())];
        let r = rotate_path(&g, &q, s).unwrap();
        pass &= r.length() == m && r.vertex_set() == q.vertex_set();
        pass &= r.vertices()[..=s] == q.vertices()[..=s];
    }

    // Greedy leaf completion never hits a capacity failure when every parent
    // image has degree at least the tree's edge count.
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    let mut done = 0;
    while done < CASES {
        let n = rng.gen_range(4..=14);
        let p = rng.gen_range(0.4..0.9);
        let g = random_host(&mut rng, n, p);
        let k = max_hypothesis_k(&g);
        if k == 0 {
            continue;
        }
        done += 1;
        let j = rng.gen_range(1..=k);
        let t = Tree::star(j);
        let centers: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= k).collect();
        let centre = centers[rng.gen_range(0..centers.len())];
        let mut emb = Embedding::new(t.order());
        emb.assign(0, centre).unwrap();
        match greedy_leaf_completion(&g, &t, &emb) {
            Ok(full) => pass &= verify_embedding(&g, &t, &full),
            Err(_) => pass = false,
        }
    }

    report(6, "structural invariant suites, 10^4 seeded cases each", pass);
}

#[test]
fn criterion_7_cli_determinism() {
    let bin = env!("CARGO_BIN_EXE_lks");
    let k7 = Graph::complete(7).unwrap().to_graph6();
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<String>>();
    let invocations: Vec<Vec<String>> = vec![
        s(&["embed", "--host", "C~", "--tree", "path:3", "-k", "3", "--seed", "7"]),
        s(&["embed", "--host", &k7, "--tree", "C(1,1,2,1,1)", "-k", "6", "--method", "caterpillar", "--seed", "9"]),
        s(&["sweep", "--n-max", "4", "--class", "all", "--seed", "3", "--random-hosts", "50", "--random-n-max", "12"]),
        s(&["ramsey", "--t1", "star:2", "--t2", "star:2"]),
        s(&["extremal", "-k", "3", "--pad", "2"]),
    ];
    let mut pass = true;
    for args in &invocations {
        let run = || {
            Command::new(bin)
                .args(args)
                .output()
                .expect("binary runs")
        };
        let (a, b) = (run(), run());
        if a.stdout != b.stdout || a.status.code() != b.status.code() {
            eprintln!("non-deterministic output for {:?}", args);
            pass = false;
        }
        if a.stdout.is_empty() {
            eprintln!("no output for {:?}: {}", args, String::from_utf8_lossy(&a.stderr));
            pass = false;
        }
    }
    report(7, "byte-identical JSON across repeated runs", pass);
}
