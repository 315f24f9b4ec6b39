//! Simple graphs, combinatorial sphere embeddings, faces and the
//! vertex-face incidence graph.
//!
//! An embedding is a rotation system: for every vertex the clockwise cyclic
//! order of its neighbours. A face is traced by the rule
//! `(u, v) -> (v, w)` where `w` follows `u` in the rotation of `v`; this walks
//! the face lying to the left of each dart.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// A directed edge.
pub type Dart = (usize, usize);

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    index: HashMap<(usize, usize), usize>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range
    /// endpoints. Edges are stored with the smaller endpoint first, in input
    /// order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            index: HashMap::new(),
        };
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            let key = (u.min(v), u.max(v));
            if g.index.contains_key(&key) {
                return Err(Error::InvalidGraph(format!("parallel edge ({u}, {v})")));
            }
            g.index.insert(key, g.edges.len());
            g.edges.push(key);
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(lo, hi)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.index.contains_key(&(u.min(v), u.max(v)))
    }

    /// Index of the edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order. Returns the subgraph and the old-to-new map.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, HashMap<usize, usize>) {
        let map: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((*map.get(&u)?, *map.get(&v)?)));
        let g = Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph");
        (g, map)
    }
}

/// A connected graph together with a rotation system and a designated outer
/// face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    outer_anchor: Option<Dart>,
}

impl EmbeddedGraph {
    /// Validates that every rotation is a permutation of the vertex's
    /// neighbourhood and that the anchor is a dart. When `outer_anchor` is
    /// `None` the dart `(0, rotation[0][0])` is used, if it exists.
    pub fn new(graph: Graph, rotation: Vec<Vec<usize>>, outer_anchor: Option<Dart>) -> Result<Self> {
        if rotation.len() != graph.n() {
            return Err(Error::InvalidGraph(format!(
                "rotation has {} entries for {} vertices",
                rotation.len(),
                graph.n()
            )));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut a = rot.clone();
            let mut b = graph.neighbors(v).to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(Error::InvalidGraph(format!(
                    "rotation of vertex {v} is not a permutation of its neighbours"
                )));
            }
        }
        let outer_anchor = match outer_anchor {
            Some((u, v)) => {
                if !graph.has_edge(u, v) {
                    return Err(Error::DanglingAnchor(u, v));
                }
                Some((u, v))
            }
            None => rotation.first().and_then(|r| r.first()).map(|&w| (0, w)),
        };
        Ok(EmbeddedGraph {
            graph,
            rotation,
            outer_anchor,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn outer_anchor(&self) -> Option<Dart> {
        self.outer_anchor
    }

    pub fn with_outer_anchor(&self, anchor: Dart) -> Result<Self> {
        EmbeddedGraph::new(self.graph.clone(), self.rotation.clone(), Some(anchor))
    }

    /// The dart following `(u, v)` along its face.
    pub fn next_dart(&self, (u, v): Dart) -> Dart {
        let rot = &self.rotation[v];
        let pos = rot.iter().position(|&w| w == u).expect("dart of the graph");
        (v, rot[(pos + 1) % rot.len()])
    }

    /// Sub-embedding induced by `vertices` with the rotation restricted to
    /// surviving neighbours. Vertices are relabelled in the given order; the
    /// anchor is kept when both its endpoints survive.
    pub fn induced(&self, vertices: &[usize]) -> (EmbeddedGraph, HashMap<usize, usize>) {
        let (g, map) = self.graph.induced(vertices);
        let rotation = vertices
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter_map(|w| map.get(w).copied())
                    .collect()
            })
            .collect();
        let anchor = self
            .outer_anchor
            .and_then(|(u, v)| Some((*map.get(&u)?, *map.get(&v)?)));
        let eg = EmbeddedGraph::new(g, rotation, anchor).expect("restriction of a valid rotation");
        (eg, map)
    }

    /// Removes the edges flagged in `removed` (indexed like
    /// [`Graph::edges`]). The new outer anchor is a surviving dart of the
    /// region that contains the old outer face; returns `None` when the
    /// result would have no anchorable dart or is disconnected.
    pub fn without_edges(&self, removed: &[bool]) -> Result<Option<EmbeddedGraph>> {
        let faces = trace_faces(self)?;
        let g = &self.graph;
        let kept: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed[*i])
            .map(|(_, &e)| e)
            .collect();
        let ng = Graph::new(g.n(), kept)?;
        if !ng.is_connected() {
            return Ok(None);
        }
        let rotation: Vec<Vec<usize>> = (0..g.n())
            .map(|v| {
                self.rotation[v]
                    .iter()
                    .copied()
                    .filter(|&w| ng.has_edge(v, w))
                    .collect()
            })
            .collect();
        let merged = merged_face_classes(self, &faces, |e| removed[e]);
        let outer_class = merged.find_const(faces.outer);
        let anchor = faces
            .faces
            .iter()
            .enumerate()
            .filter(|(f, _)| merged.find_const(*f) == outer_class)
            .flat_map(|(_, darts)| darts.iter())
            .find(|&&(u, v)| ng.has_edge(u, v))
            .copied();
        if anchor.is_none() && ng.m() > 0 {
            return Ok(None);
        }
        Ok(Some(EmbeddedGraph::new(ng, rotation, anchor)?))
    }
}

/// The faces of an embedded graph.
#[derive(Clone, Debug)]
pub struct FaceSet {
    /// Each face as the cyclic sequence of darts walked along it.
    pub faces: Vec<Vec<Dart>>,
    /// Face containing each dart.
    pub face_of: HashMap<Dart, usize>,
    /// Sorted boundary vertex set of each face.
    pub boundary: Vec<Vec<usize>>,
    /// Id of the outer face.
    pub outer: usize,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// Walks every face of the embedding and checks Euler's formula.
pub fn trace_faces(eg: &EmbeddedGraph) -> Result<FaceSet> {
    let g = eg.graph();
    if g.n() == 0 {
        return Err(Error::InvalidGraph("empty graph has no embedding".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.m() == 0 {
        return Ok(FaceSet {
            faces: vec![Vec::new()],
            face_of: HashMap::new(),
            boundary: vec![vec![0]],
            outer: 0,
        });
    }
    let mut face_of: HashMap<Dart, usize> = HashMap::with_capacity(2 * g.m());
    let mut faces = Vec::new();
    let mut boundary = Vec::new();
    for u in 0..g.n() {
        for &v in &eg.rotation()[u] {
            if face_of.contains_key(&(u, v)) {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = (u, v);
            loop {
                if face_of.insert(d, id).is_some() {
                    // A dart revisited before closing the cycle means the
                    // walk is not a permutation cycle.
                    return Err(Error::InvalidGraph("face walk did not close".into()));
                }
                walk.push(d);
                d = eg.next_dart(d);
                if d == (u, v) {
                    break;
                }
            }
            let mut verts: Vec<usize> = walk.iter().map(|&(a, _)| a).collect();
            verts.sort_unstable();
            verts.dedup();
            boundary.push(verts);
            faces.push(walk);
        }
    }
    if g.n() + faces.len() != g.m() + 2 {
        return Err(Error::EulerViolation {
            n: g.n(),
            m: g.m(),
            faces: faces.len(),
        });
    }
    let anchor = eg.outer_anchor().expect("graph with edges has an anchor");
    let outer = *face_of
        .get(&anchor)
        .ok_or(Error::DanglingAnchor(anchor.0, anchor.1))?;
    Ok(FaceSet {
        faces,
        face_of,
        boundary,
        outer,
    })
}

/// Bipartite vertex-face incidence graph. Nodes `0..n` are the vertices of
/// the embedded graph, nodes `n..n + faces` are its faces.
#[derive(Clone, Debug)]
pub struct VfiGraph {
    pub n_vertices: usize,
    pub n_faces: usize,
    pub adj: Vec<Vec<usize>>,
}

impl VfiGraph {
    pub fn face_node(&self, f: usize) -> usize {
        self.n_vertices + f
    }

    pub fn incidences(&self) -> usize {
        self.adj[..self.n_vertices].iter().map(Vec::len).sum()
    }

    /// Faces incident to vertex `v`.
    pub fn faces_of(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(move |&x| x - self.n_vertices)
    }

    /// BFS distances from node `src`; `usize::MAX` marks unreachable nodes.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.adj.len()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.adj.is_empty() || self.distances_from(0).iter().all(|&d| d != usize::MAX)
    }
}

/// Builds the vertex-face incidence graph and checks it is connected.
pub fn build_vfi(eg: &EmbeddedGraph, fs: &FaceSet) -> Result<VfiGraph> {
    let n = eg.graph().n();
    let mut adj = vec![Vec::new(); n + fs.len()];
    for (f, verts) in fs.boundary.iter().enumerate() {
        for &v in verts {
            adj[v].push(n + f);
            adj[n + f].push(v);
        }
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let vfi = VfiGraph {
        n_vertices: n,
        n_faces: fs.len(),
        adj,
    };
    if !vfi.is_connected() {
        return Err(Error::InvalidGraph("vertex-face incidence graph is disconnected".into()));
    }
    Ok(vfi)
}

/// Minimal union-find over face ids.
#[derive(Clone, Debug)]
pub(crate) struct FaceClasses {
    parent: Vec<usize>,
}

impl FaceClasses {
    fn new(n: usize) -> Self {
        FaceClasses {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub(crate) fn find_const(&self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Groups faces into the regions they form once the edges selected by
/// `removed` (by edge index) are erased: the two sides of an erased edge
/// become one region.
pub(crate) fn merged_face_classes(
    eg: &EmbeddedGraph,
    fs: &FaceSet,
    removed: impl Fn(usize) -> bool,
) -> FaceClasses {
    let mut uf = FaceClasses::new(fs.len());
    for (i, &(u, v)) in eg.graph().edges().iter().enumerate() {
        if removed(i) {
            uf.union(fs.face_of[&(u, v)], fs.face_of[&(v, u)]);
        }
    }
    uf
}
