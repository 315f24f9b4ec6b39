//! Contraction of the components of `G[X]` and the admissible labelings of
//! each contracted component.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::graph::Graph;
use crate::problem::Instance;

/// Quotient of a graph by the connected components of `G[X]`.
#[derive(Clone, Debug, Serialize)]
pub struct ContractionMap {
    /// The simple quotient graph on super-vertices.
    #[serde(skip)]
    pub quotient: Graph,
    /// Super-vertex of every original vertex.
    pub rep: Vec<usize>,
    /// Sorted original vertices of every super-vertex.
    pub members: Vec<Vec<usize>>,
    /// Whether a super-vertex is a contracted component of `G[X]`.
    pub is_contracted: Vec<bool>,
    /// Original edge indices behind each quotient edge (indexed like the
    /// quotient's edge list).
    pub edge_provenance: Vec<Vec<usize>>,
    /// Original edges with both endpoints inside one contracted component.
    pub internal_edges: Vec<Vec<usize>>,
}

impl ContractionMap {
    pub fn super_vertices(&self) -> usize {
        self.members.len()
    }
}

/// Contracts every connected component of `G[X]` into one super-vertex.
///
/// Super-vertices are numbered by their smallest original vertex, so the
/// empty `X` yields the identity map.
pub fn contract(g: &Graph, x: &[usize]) -> ContractionMap {
    let n = g.n();
    let mut in_x = vec![false; n];
    for &v in x {
        in_x[v] = true;
    }
    let mut comp = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = groups.len();
        comp[s] = id;
        let mut members = vec![s];
        if in_x[s] {
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if in_x[w] && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        members.sort_unstable();
        groups.push(members);
    }
    let is_contracted: Vec<bool> = groups.iter().map(|m| in_x[m[0]]).collect();

    let mut by_pair: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut internal = vec![Vec::new(); groups.len()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (a, b) = (comp[u], comp[v]);
        if a == b {
            internal[a].push(e);
        } else {
            by_pair.entry((a.min(b), a.max(b))).or_default().push(e);
        }
    }
    let quotient = Graph::new(groups.len(), by_pair.keys().copied()).expect("simple quotient");
    let edge_provenance = by_pair.into_values().collect();
    ContractionMap {
        quotient,
        rep: comp,
        members: groups,
        is_contracted,
        edge_provenance,
        internal_edges: internal,
    }
}

/// Admissible labelings of one contracted component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentOrbit {
    /// Original vertices, sorted; the order of every state vector.
    pub vertices: Vec<usize>,
    /// One label per vertex for each admissible state. For the bipartite
    /// problems the two states are complementary 2-colourings; for the group
    /// problems the `g` states are the left translates `h * mu` of one
    /// consistent labeling `mu`, ordered by the root label `h`.
    pub states: Vec<Vec<usize>>,
    pub infeasible: bool,
}

impl ComponentOrbit {
    /// Label of original vertex `v` in state `s`.
    pub fn label(&self, s: usize, v: usize) -> usize {
        let pos = self.vertices.binary_search(&v).expect("member of the component");
        self.states[s][pos]
    }
}

/// Propagates labels from the smallest vertex across the connected set
/// `component`; a conflicting edge means no labeling exists.
pub fn component_orbit(inst: &Instance, component: &[usize]) -> ComponentOrbit {
    let g = inst.graph();
    let mut vertices = component.to_vec();
    vertices.sort_unstable();
    let pos_of = |v: usize| vertices.binary_search(&v).ok();
    let mut base = vec![usize::MAX; vertices.len()];
    let mut infeasible = false;
    if let Some(&root) = vertices.first() {
        base[0] = 0;
        let mut queue = VecDeque::from([root]);
        'bfs: while let Some(u) = queue.pop_front() {
            let lu = base[pos_of(u).unwrap()];
            for &w in g.neighbors(u) {
                let Some(pw) = pos_of(w) else { continue };
                let e = g.edge_index(u, w).unwrap();
                let want = inst.propagate(e, u, lu);
                if base[pw] == usize::MAX {
                    base[pw] = want;
                    queue.push_back(w);
                } else if base[pw] != want {
                    infeasible = true;
                    break 'bfs;
                }
            }
        }
        debug_assert!(infeasible || base.iter().all(|&l| l != usize::MAX), "connected component");
    }
    let states = if infeasible || vertices.is_empty() {
        Vec::new()
    } else {
        match inst.labels() {
            None => vec![base.clone(), base.iter().map(|&l| 1 - l).collect()],
            Some(l) => {
                let grp = l.group();
                (0..grp.order())
                    .map(|h| base.iter().map(|&x| grp.mul(h, x)).collect())
                    .collect()
            }
        }
    };
    ComponentOrbit {
        vertices,
        states,
        infeasible,
    }
}
