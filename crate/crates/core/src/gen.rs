//! Seeded generators for embedded planar instances and group labelings.
//!
//! All randomness comes from a single `ChaCha8Rng` seeded with
//! `seed_from_u64(seed)` per call, so corpora are reproducible bit for bit.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EmbeddedGraph, Graph};
use crate::group::{Group, GroupLabels};

const THIN_ATTEMPTS: usize = 64;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random stacked triangulation (Apollonian network) on `n >= 3` vertices.
///
/// Starts from the triangle `0, 1, 2` and repeatedly stacks a new vertex
/// into a uniformly chosen inner face. The outer face stays the initial
/// triangle, anchored at dart `(1, 0)`.
pub fn gen_stacked_triangulation(n: usize, seed: u64) -> Result<EmbeddedGraph> {
    if n < 3 {
        return Err(Error::InvalidRequest("stacked triangulation needs n >= 3".into()));
    }
    let mut rng = rng(seed);
    let mut rotation: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    // Inner faces as (a, b, c): darts a->b, b->c, c->a walk the face.
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
    for v in 3..n {
        let fi = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[fi];
        insert_after(&mut rotation[a], c, v);
        insert_after(&mut rotation[b], a, v);
        insert_after(&mut rotation[c], b, v);
        rotation.push(vec![a, c, b]);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces[fi] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    let g = Graph::new(n, edges)?;
    EmbeddedGraph::new(g, rotation, Some((1, 0)))
}

fn insert_after(rot: &mut Vec<usize>, anchor: usize, v: usize) {
    let pos = rot.iter().position(|&w| w == anchor).expect("anchor in rotation");
    rot.insert(pos + 1, v);
}

/// `r x c` grid; vertex `(i, j)` has id `i * c + j`. The outer face is
/// anchored at dart `(0, 1)` along the top row.
pub fn gen_grid(r: usize, c: usize) -> Result<EmbeddedGraph> {
    if r < 2 || c < 2 {
        return Err(Error::InvalidRequest("grid needs r, c >= 2".into()));
    }
    let id = |i: usize, j: usize| i * c + j;
    let mut edges = Vec::new();
    let mut rotation = Vec::with_capacity(r * c);
    for i in 0..r {
        for j in 0..c {
            if j + 1 < c {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < r {
                edges.push((id(i, j), id(i + 1, j)));
            }
            // Clockwise on screen: up, right, down, left.
            let mut rot = Vec::with_capacity(4);
            if i > 0 {
                rot.push(id(i - 1, j));
            }
            if j + 1 < c {
                rot.push(id(i, j + 1));
            }
            if i + 1 < r {
                rot.push(id(i + 1, j));
            }
            if j > 0 {
                rot.push(id(i, j - 1));
            }
            rotation.push(rot);
        }
    }
    let g = Graph::new(r * c, edges)?;
    EmbeddedGraph::new(g, rotation, Some((id(0, 0), id(0, 1))))
}

/// `m` concentric cycles of length `len` joined by radial spokes. Vertex
/// `(i, j)` (cycle `i`, position `j`) has id `i * len + j`; cycle 0 is
/// outermost and carries the outer anchor `(0, 1)`.
pub fn gen_nested_cycles(m: usize, len: usize) -> Result<EmbeddedGraph> {
    if m < 1 || len < 3 {
        return Err(Error::InvalidRequest("nested cycles need m >= 1, len >= 3".into()));
    }
    let id = |i: usize, j: usize| i * len + (j % len);
    let mut edges = Vec::new();
    let mut rotation = Vec::with_capacity(m * len);
    for i in 0..m {
        for j in 0..len {
            edges.push((id(i, j), id(i, j + 1)));
            if i + 1 < m {
                edges.push((id(i, j), id(i + 1, j)));
            }
            // Clockwise: outward, forward along the cycle, inward, backward.
            let mut rot = Vec::with_capacity(4);
            if i > 0 {
                rot.push(id(i - 1, j));
            }
            rot.push(id(i, j + 1));
            if i + 1 < m {
                rot.push(id(i + 1, j));
            }
            rot.push(id(i, j + len - 1));
            rotation.push(rot);
        }
    }
    let g = Graph::new(m * len, edges)?;
    EmbeddedGraph::new(g, rotation, Some((id(0, 0), id(0, 1))))
}

/// Drops each edge independently with probability `1 - keep_prob`,
/// resampling until the result is connected.
pub fn thin_edges(eg: &EmbeddedGraph, keep_prob: f64, seed: u64) -> Result<EmbeddedGraph> {
    if keep_prob >= 1.0 {
        return Ok(eg.clone());
    }
    let mut rng = rng(seed);
    let m = eg.graph().m();
    for _ in 0..THIN_ATTEMPTS {
        let removed: Vec<bool> = (0..m).map(|_| rng.gen::<f64>() >= keep_prob).collect();
        if let Some(thin) = eg.without_edges(&removed)? {
            return Ok(thin);
        }
    }
    Err(Error::DisconnectionAfterRetries(THIN_ATTEMPTS))
}

/// How arc labels are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelMode {
    /// Uniform over the whole group.
    Uniform,
    /// Uniform over the non-identity elements (identity for the trivial
    /// group).
    NonIdentity,
}

/// Random labels for every edge, stored for the `(lo, hi)` orientation with
/// the reverse arc carrying the inverse.
pub fn gen_labels(g: &Graph, group: &Group, mode: LabelMode, seed: u64) -> Result<GroupLabels> {
    let mut rng = rng(seed);
    let order = group.order();
    let labels = g
        .edges()
        .iter()
        .map(|_| match mode {
            LabelMode::NonIdentity if order > 1 => rng.gen_range(1..order),
            LabelMode::NonIdentity => 0,
            LabelMode::Uniform => rng.gen_range(0..order),
        })
        .collect();
    GroupLabels::new(g, group.clone(), labels)
}

/// Random connected subset of `allowed` vertices grown from a random start,
/// of size at most `max_size`. Returns an empty set when nothing is allowed.
pub fn random_connected_subset(
    g: &Graph,
    allowed: &[bool],
    max_size: usize,
    rng: &mut impl Rng,
) -> Vec<usize> {
    let starts: Vec<usize> = (0..g.n()).filter(|&v| allowed[v]).collect();
    let Some(&start) = starts.choose(rng) else {
        return Vec::new();
    };
    let target = rng.gen_range(1..=max_size.max(1));
    let mut inside = vec![false; g.n()];
    inside[start] = true;
    let mut set = vec![start];
    while set.len() < target {
        let mut frontier: Vec<usize> = set
            .iter()
            .flat_map(|&u| g.neighbors(u).iter().copied())
            .filter(|&w| allowed[w] && !inside[w])
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        let Some(&w) = frontier.choose(rng) else {
            break;
        };
        inside[w] = true;
        set.push(w);
    }
    set.sort_unstable();
    set
}
