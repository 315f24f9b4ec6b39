//! Seeded instance corpora shared by the integration suites.
#![allow(dead_code)]

use cdt::gen::{self, LabelMode};
use cdt::{EmbeddedGraph, Group, Instance, ProblemKind};

/// One generated instance with a human-readable name.
#[derive(Clone, Debug)]
pub struct Case {
    pub name: String,
    pub embedding: EmbeddedGraph,
    pub instance: Instance,
}

impl Case {
    fn new(name: String, embedding: EmbeddedGraph, instance: Instance) -> Self {
        Case {
            name,
            embedding,
            instance,
        }
    }
}

/// Grid shapes with at most 16 vertices.
const SMALL_GRIDS: [(usize, usize); 4] = [(3, 4), (4, 4), (3, 5), (2, 8)];

/// `count` embedded graphs alternating stacked triangulations on `6..=16`
/// vertices with thinned small grids.
pub fn vertex_embeddings(count: usize, seed: u64) -> Vec<(String, EmbeddedGraph)> {
    (0..count)
        .map(|t| {
            let s = seed + t as u64;
            if t % 2 == 0 {
                let n = 6 + (t / 2) % 11;
                (format!("stacked-n{n}-s{s}"), gen::gen_stacked_triangulation(n, s).unwrap())
            } else {
                let (r, c) = SMALL_GRIDS[(t / 2) % SMALL_GRIDS.len()];
                let q = [0.7, 0.8, 0.9][(t / 2) % 3];
                let base = gen::gen_grid(r, c).unwrap();
                (format!("grid-{r}x{c}-keep{q}-s{s}"), gen::thin_edges(&base, q, s).unwrap())
            }
        })
        .collect()
}

/// `count` embedded graphs with at most `max_edges` edges: stacked
/// triangulations on `5..=9` vertices and thinned small grids.
pub fn edge_embeddings(count: usize, seed: u64, max_edges: usize) -> Vec<(String, EmbeddedGraph)> {
    let mut out = Vec::with_capacity(count);
    let mut t = 0usize;
    while out.len() < count {
        let s = seed + t as u64;
        let idx = out.len();
        let item = if idx % 2 == 0 {
            let n = 5 + (idx / 2) % 5;
            (format!("stacked-n{n}-s{s}"), gen::gen_stacked_triangulation(n, s).unwrap())
        } else {
            let (r, c) = SMALL_GRIDS[(idx / 2) % SMALL_GRIDS.len()];
            let q = [0.75, 0.85, 0.95][(idx / 2) % 3];
            let base = gen::gen_grid(r, c).unwrap();
            (format!("grid-{r}x{c}-keep{q}-s{s}"), gen::thin_edges(&base, q, s).unwrap())
        };
        t += 1;
        if item.1.graph().m() <= max_edges {
            out.push(item);
        }
    }
    out
}

pub fn oct_corpus(count: usize, seed: u64) -> Vec<Case> {
    vertex_embeddings(count, seed)
        .into_iter()
        .map(|(name, eg)| {
            let inst = Instance::oct(eg.graph().clone());
            Case::new(name, eg, inst)
        })
        .collect()
}

pub fn eb_corpus(count: usize, seed: u64) -> Vec<Case> {
    edge_embeddings(count, seed, 22)
        .into_iter()
        .map(|(name, eg)| {
            let inst = Instance::eb(eg.graph().clone());
            Case::new(name, eg, inst)
        })
        .collect()
}

/// Group instances over `Z_order` with uniformly drawn labels.
pub fn group_corpus(kind: ProblemKind, order: usize, count: usize, seed: u64) -> Vec<Case> {
    edge_embeddings(count, seed, 22)
        .into_iter()
        .enumerate()
        .map(|(t, (name, eg))| {
            let labels =
                gen::gen_labels(eg.graph(), &Group::cyclic(order), LabelMode::Uniform, seed ^ t as u64)
                    .unwrap();
            let inst = Instance::new(eg.graph().clone(), kind, Some(labels)).unwrap();
            Case::new(format!("{name}-z{order}"), eg, inst)
        })
        .collect()
}

/// The same graph with every edge labelled by the generator of `Z_2`.
pub fn as_z2_group(case: &Case, kind: ProblemKind) -> Instance {
    let g = case.instance.graph();
    let labels = gen::gen_labels(g, &Group::cyclic(2), LabelMode::NonIdentity, 0).unwrap();
    Instance::new(g.clone(), kind, Some(labels)).unwrap()
}
