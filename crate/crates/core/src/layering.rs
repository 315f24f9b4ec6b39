//! Onion-peeling layers from vertex-face distances and the residue-class
//! sets built from them.

use serde::Serialize;

use crate::graph::{build_vfi, merged_face_classes, trace_faces, EmbeddedGraph, FaceSet, VfiGraph};
use crate::error::Result;

/// Layers `L_1..L_m`; `L_i` holds the vertices at vertex-face distance
/// `2i - 1` from the outer face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Layering {
    /// `layers[i - 1]` is `L_i`, sorted.
    pub layers: Vec<Vec<usize>>,
    /// 1-based layer index of every vertex.
    pub level_of: Vec<usize>,
}

impl Layering {
    pub fn m(&self) -> usize {
        self.layers.len()
    }

    pub fn layer(&self, i: usize) -> &[usize] {
        &self.layers[i - 1]
    }
}

/// BFS over the incidence graph from the outer face.
pub fn compute_layers(vfi: &VfiGraph, outer: usize) -> Layering {
    let dist = vfi.distances_from(vfi.face_node(outer));
    let level_of: Vec<usize> = dist[..vfi.n_vertices]
        .iter()
        .map(|&d| {
            assert!(d != usize::MAX && d % 2 == 1, "connected incidence graph");
            d.div_ceil(2)
        })
        .collect();
    let m = level_of.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); m];
    for (v, &l) in level_of.iter().enumerate() {
        layers[l - 1].push(v);
    }
    debug_assert_eq!(layers.iter().map(Vec::len).sum::<usize>(), vfi.n_vertices);
    Layering { layers, level_of }
}

/// Traces faces, builds the incidence graph and layers in one go.
pub fn layers_of(eg: &EmbeddedGraph) -> Result<(FaceSet, VfiGraph, Layering)> {
    let fs = trace_faces(eg)?;
    let vfi = build_vfi(eg, &fs)?;
    let lay = compute_layers(&vfi, fs.outer);
    Ok((fs, vfi, lay))
}

/// Disjoint sets `Z_1..Z_p`; `Z_i` is the union of the layers whose index is
/// congruent to `i` modulo `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZFamily {
    pub p: usize,
    /// `zsets[i - 1]` is `Z_i`, sorted.
    pub zsets: Vec<Vec<usize>>,
}

impl ZFamily {
    pub fn z(&self, i: usize) -> &[usize] {
        &self.zsets[i - 1]
    }

    /// Index `i` of the set containing `v`.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.zsets
            .iter()
            .position(|z| z.binary_search(&v).is_ok())
            .map(|i| i + 1)
    }
}

pub fn build_zsets(lay: &Layering, p: usize) -> ZFamily {
    assert!(p >= 1, "p must be positive");
    let mut zsets = vec![Vec::new(); p];
    for (j, layer) in lay.layers.iter().enumerate() {
        // Layer index j + 1, residue 0 mapped to Z_p.
        let i = (j % p) + 1;
        zsets[i - 1].extend_from_slice(layer);
    }
    for z in &mut zsets {
        z.sort_unstable();
    }
    ZFamily { p, zsets }
}

/// Outcome of [`check_layer_invariants`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LayerReport {
    /// Edges whose endpoints are more than one layer apart.
    pub edge_violations: Vec<(usize, usize)>,
    /// `(face, u, v)` with `u, v` on the face more than one layer apart.
    pub face_violations: Vec<(usize, usize, usize)>,
    /// Layers `i` for which `L_i` is not the outer boundary of `G[L_{>=i}]`.
    pub outer_boundary_violations: Vec<usize>,
}

impl LayerReport {
    pub fn ok(&self) -> bool {
        self.edge_violations.is_empty()
            && self.face_violations.is_empty()
            && self.outer_boundary_violations.is_empty()
    }
}

/// Checks the structural facts of the layering; failures are reported with
/// witnesses.
pub fn check_layer_invariants(eg: &EmbeddedGraph, fs: &FaceSet, lay: &Layering) -> LayerReport {
    let g = eg.graph();
    let mut report = LayerReport::default();
    for &(u, v) in g.edges() {
        if lay.level_of[u].abs_diff(lay.level_of[v]) > 1 {
            report.edge_violations.push((u, v));
        }
    }
    for (f, verts) in fs.boundary.iter().enumerate() {
        let lo = verts.iter().map(|&v| lay.level_of[v]).min().unwrap_or(0);
        let hi = verts.iter().map(|&v| lay.level_of[v]).max().unwrap_or(0);
        if hi > lo + 1 {
            let u = *verts.iter().find(|&&v| lay.level_of[v] == lo).unwrap();
            let v = *verts.iter().find(|&&v| lay.level_of[v] == hi).unwrap();
            report.face_violations.push((f, u, v));
        }
    }
    for i in 1..=lay.m() {
        let mut expected = outer_boundary_of_deep_part(eg, fs, lay, i);
        expected.sort_unstable();
        if expected != lay.layer(i) {
            report.outer_boundary_violations.push(i);
        }
    }
    report
}

/// Vertices on the boundary of the outer face of the sub-embedding induced
/// on `L_{>=i}`.
///
/// The faces of the full embedding are merged into the regions they form
/// once every edge leaving `L_{>=i}` is erased; the region containing the
/// outer face is the outer face of the sub-embedding. Its boundary is read
/// off by walking the sub-embedding faces of every surviving dart that lies
/// on that region.
pub fn outer_boundary_of_deep_part(
    eg: &EmbeddedGraph,
    fs: &FaceSet,
    lay: &Layering,
    i: usize,
) -> Vec<usize> {
    let g = eg.graph();
    let keep = |v: usize| lay.level_of[v] >= i;
    let classes = merged_face_classes(eg, fs, |e| {
        let (u, v) = g.edges()[e];
        !(keep(u) && keep(v))
    });
    let outer = classes.find_const(fs.outer);
    let in_outer = |f: usize| classes.find_const(f) == outer;

    let deep: Vec<usize> = (0..g.n()).filter(|&v| keep(v)).collect();
    let (sub, map) = eg.induced(&deep);
    let mut on_boundary = vec![false; deep.len()];
    let mut walked = std::collections::HashSet::new();
    for (f, darts) in fs.faces.iter().enumerate() {
        if !in_outer(f) {
            continue;
        }
        for &(u, v) in darts {
            let (Some(&a), Some(&b)) = (map.get(&u), map.get(&v)) else {
                continue;
            };
            // Walk the sub-embedding face of the surviving dart.
            let mut d = (a, b);
            while walked.insert(d) {
                on_boundary[d.0] = true;
                d = sub.next_dart(d);
            }
        }
    }
    // Vertices isolated in the sub-embedding lie inside one region.
    for (a, &v) in deep.iter().enumerate() {
        if sub.graph().degree(a) == 0 && eg.graph().degree(v) > 0 {
            let f = fs.face_of[&(v, eg.rotation()[v][0])];
            if in_outer(f) {
                on_boundary[a] = true;
            }
        }
    }
    if g.m() == 0 {
        return deep;
    }
    deep.iter()
        .enumerate()
        .filter(|(a, _)| on_boundary[*a])
        .map(|(_, &v)| v)
        .collect()
}
