//! Guest-tree classification: the center-edge/level-set decomposition used by
//! the small-diameter embedder, and caterpillar shape recognition.

use crate::graph::{set_members, vbit, Graph, VertexSet};
use crate::tree::Tree;
use crate::{LksError, Result};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Level sets of a tree around a center edge `r1 r2`.
///
/// `V1 = N(r1) ∖ {r2}`, `W1 = N(V1) ∖ {r1}`, `V1' = N(W1)` (the members of
/// `V1` that have children), and symmetrically on the other side. Oriented at
/// construction so that `|V2 ∪ W1| < k/2`.
#[derive(Clone, Debug)]
pub struct CenterDecomposition {
    pub r1: usize,
    pub r2: usize,
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub w1: VertexSet,
    pub w2: VertexSet,
    pub v1p: VertexSet,
    pub v2p: VertexSet,
    /// Edge count of the tree.
    pub k: usize,
}

impl CenterDecomposition {
    /// Swaps the roles of the two sides.
    pub fn swapped(&self) -> CenterDecomposition {
        CenterDecomposition {
            r1: self.r2,
            r2: self.r1,
            v1: self.v2,
            v2: self.v1,
            w1: self.w2,
            w2: self.w1,
            v1p: self.v2p,
            v2p: self.v1p,
            k: self.k,
        }
    }
}

/// Finds an edge whose endpoints cover the tree within distance 2, preferring
/// the lexicographically smallest. Exists iff the diameter is at most 5.
pub fn center_edge(t: &Tree) -> Result<Option<(usize, usize)>> {
    if t.order() < 2 {
        return Err(LksError::Precondition(
            "center_edge needs a tree on at least 2 vertices".into(),
        ));
    }
    let g = t.to_graph();
    for &(u, v) in t.edges() {
        let du = g.distances_from(u);
        let dv = g.distances_from(v);
        if (0..t.order()).all(|x| du[x] <= 2 || dv[x] <= 2) {
            return Ok(Some((u, v)));
        }
    }
    Ok(None)
}

/// Computes the level sets around `r1 r2`, flipping the orientation if needed
/// so that `2·|V2 ∪ W1| < k`.
pub fn level_sets(t: &Tree, r1: usize, r2: usize) -> Result<CenterDecomposition> {
    let g = t.to_graph();
    if !g.has_edge(r1, r2) {
        return Err(LksError::Precondition(format!("{r1}{r2} is not a tree edge")));
    }
    let v1 = g.neighbors(r1) & !vbit(r2);
    let v2 = g.neighbors(r2) & !vbit(r1);
    let w1 = g.neighborhood_of_set(v1) & !vbit(r1);
    let w2 = g.neighborhood_of_set(v2) & !vbit(r2);
    let covered = vbit(r1) | vbit(r2) | v1 | v2 | w1 | w2;
    if covered != g.vertex_set() {
        return Err(LksError::Precondition(
            "some tree vertex is farther than 2 from both endpoints".into(),
        ));
    }
    let v1p = g.neighborhood_of_set(w1) & v1;
    let v2p = g.neighborhood_of_set(w2) & v2;
    let k = t.edge_count();
    let d = CenterDecomposition {
        r1,
        r2,
        v1,
        v2,
        w1,
        w2,
        v1p,
        v2p,
        k,
    };
    if 2 * ((d.v2 | d.w1).count_ones() as usize) < k || k == 0 {
        Ok(d)
    } else {
        let s = d.swapped();
        debug_assert!(2 * ((s.v2 | s.w1).count_ones() as usize) < k);
        Ok(s)
    }
}

/// The shape `C(a, b, c, d, e)` of a caterpillar with at most two star
/// centres: a body path of length `a + c + e` with joints at the `(a+1)`-th
/// and `(a+c+1)`-th body vertices carrying `b` resp. `d` extra leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaterpillarShape {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
}

impl CaterpillarShape {
    pub fn new(a: usize, b: usize, c: usize, d: usize, e: usize) -> Self {
        CaterpillarShape { a, b, c, d, e }
    }

    /// Total edge count `k = a + b + c + d + e`.
    pub fn k(&self) -> usize {
        self.a + self.b + self.c + self.d + self.e
    }

    /// Off-body leaf count `ℓ = b + d`.
    pub fn leaf_budget(&self) -> usize {
        self.b + self.d
    }

    /// Body length `a + c + e`.
    pub fn body_len(&self) -> usize {
        self.a + self.c + self.e
    }

    pub fn reversed(&self) -> CaterpillarShape {
        CaterpillarShape::new(self.e, self.d, self.c, self.b, self.a)
    }

    /// Builds the tree with the canonical vertex numbering: body vertices
    /// `0..=body_len` in order, then the `b` leaves of the first joint, then
    /// the `d` leaves of the second.
    pub fn reconstruct(&self) -> Tree {
        let bl = self.body_len();
        let mut edges: Vec<(usize, usize)> = (0..bl).map(|i| (i, i + 1)).collect();
        let j1 = self.a;
        let j2 = self.a + self.c;
        let mut next = bl + 1;
        for _ in 0..self.b {
            edges.push((j1, next));
            next += 1;
        }
        for _ in 0..self.d {
            edges.push((j2, next));
            next += 1;
        }
        Tree::new(self.k() + 1, edges).expect("shape reconstruction is a tree")
    }
}

impl fmt::Display for CaterpillarShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{},{},{},{})", self.a, self.b, self.c, self.d, self.e)
    }
}

impl FromStr for CaterpillarShape {
    type Err = LksError;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix("C(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| LksError::Parse(format!("expected C(a,b,c,d,e), got {s:?}")))?;
        let nums: Vec<usize> = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|e| LksError::Parse(format!("bad shape component: {e}")))
            })
            .collect::<Result<_>>()?;
        if nums.len() != 5 {
            return Err(LksError::Parse(format!("expected 5 components, got {}", nums.len())));
        }
        Ok(CaterpillarShape::new(nums[0], nums[1], nums[2], nums[3], nums[4]))
    }
}

/// A shape together with the concrete vertices of `t` realizing it.
#[derive(Clone, Debug)]
pub struct CaterpillarLayout {
    pub shape: CaterpillarShape,
    /// Body vertices in order; `body[a]` and `body[a+c]` are the joints.
    pub body: Vec<usize>,
    pub leaves1: Vec<usize>,
    pub leaves2: Vec<usize>,
}

/// The unique path between two vertices of a tree.
fn tree_path(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![u];
    let mut seen = vbit(u);
    while let Some(x) = stack.pop() {
        if x == v {
            break;
        }
        for y in set_members(g.neighbors(x) & !seen) {
            parent[y] = x;
            seen |= vbit(y);
            stack.push(y);
        }
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// All admissible layouts of `t` as a two-joint caterpillar.
///
/// A representation with an empty star on either joint is only admitted with
/// `c = 0`, so single-star caterpillars and plain paths never report a
/// positive joint distance.
pub fn all_layouts(t: &Tree) -> Vec<CaterpillarLayout> {
    let g = t.to_graph();
    let n = t.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let body = if u == v { vec![u] } else { tree_path(&g, u, v) };
            let body_set: VertexSet = body.iter().fold(0, |acc, &x| acc | vbit(x));
            // Every off-body vertex must be a leaf hanging off the body.
            let mut pos_of = vec![usize::MAX; n];
            for (i, &x) in body.iter().enumerate() {
                pos_of[x] = i;
            }
            let mut ok = true;
            let mut attach: Vec<Vec<usize>> = vec![Vec::new(); body.len()];
            for w in 0..n {
                if body_set & vbit(w) != 0 {
                    continue;
                }
                if g.degree(w) != 1 {
                    ok = false;
                    break;
                }
                let p = set_members(g.neighbors(w)).next().expect("leaf has a neighbour");
                if pos_of[p] == usize::MAX {
                    ok = false;
                    break;
                }
                attach[pos_of[p]].push(w);
            }
            if !ok {
                continue;
            }
            let positions: Vec<usize> = (0..body.len()).filter(|&i| !attach[i].is_empty()).collect();
            let bl = body.len() - 1;
            match positions.len() {
                0 => {
                    // Pure path: both joints coincide, c = 0.
                    for p in 0..=bl {
                        out.push(CaterpillarLayout {
                            shape: CaterpillarShape::new(p, 0, 0, 0, bl - p),
                            body: body.clone(),
                            leaves1: Vec::new(),
                            leaves2: Vec::new(),
                        });
                    }
                }
                1 => {
                    let p = positions[0];
                    let leaves = &attach[p];
                    for split in 0..=leaves.len() {
                        out.push(CaterpillarLayout {
                            shape: CaterpillarShape::new(p, split, 0, leaves.len() - split, bl - p),
                            body: body.clone(),
                            leaves1: leaves[..split].to_vec(),
                            leaves2: leaves[split..].to_vec(),
                        });
                    }
                }
                2 => {
                    let (p, q) = (positions[0], positions[1]);
                    out.push(CaterpillarLayout {
                        shape: CaterpillarShape::new(
                            p,
                            attach[p].len(),
                            q - p,
                            attach[q].len(),
                            bl - q,
                        ),
                        body: body.clone(),
                        leaves1: attach[p].clone(),
                        leaves2: attach[q].clone(),
                    });
                }
                _ => {}
            }
        }
    }
    out
}

/// All admissible shapes of `t`, deduplicated.
pub fn all_shapes(t: &Tree) -> Vec<CaterpillarShape> {
    let set: BTreeSet<CaterpillarShape> = all_layouts(t).into_iter().map(|l| l.shape).collect();
    set.into_iter().collect()
}

fn canonical_key(s: &CaterpillarShape) -> (usize, CaterpillarShape) {
    (s.body_len(), *s)
}

/// Canonical shape: maximal body length, ties broken by the lexicographically
/// greatest tuple (every representation coexists with its reversal, and the
/// greatest tuple picks one orientation deterministically). `None` when `t`
/// is not a caterpillar with at most two vertices of degree exceeding 2.
pub fn caterpillar_decompose(t: &Tree) -> Option<CaterpillarShape> {
    all_shapes(t).into_iter().max_by_key(canonical_key)
}

/// Canonical layout matching [`caterpillar_decompose`].
pub fn decompose_layout(t: &Tree) -> Option<CaterpillarLayout> {
    all_layouts(t).into_iter().max_by_key(|l| canonical_key(&l.shape))
}

/// Membership in the class of `k`-edge caterpillars with `ℓ` off-body leaves
/// and joints at distance `c`, allowing every admissible re-parameterization.
pub fn family_membership(t: &Tree, k: usize, l: usize, c: usize) -> bool {
    t.edge_count() == k
        && all_shapes(t)
            .iter()
            .any(|s| s.leaf_budget() == l && s.c == c)
}
