//! Tree decompositions: min-fill heuristic, validation, nice form and an
//! exact oracle for small graphs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Rooted tree decomposition. Bags are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
}

impl TreeDecomposition {
    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag size minus one (0 for an empty decomposition).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn root(&self) -> Option<usize> {
        self.parent.iter().position(Option::is_none)
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.len()];
        for (t, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                ch[*p].push(t);
            }
        }
        ch
    }

    /// Intersection of a node's bag with its parent's bag.
    pub fn adhesion(&self, t: usize) -> Vec<usize> {
        match self.parent[t] {
            None => Vec::new(),
            Some(p) => sorted_intersection(&self.bags[t], &self.bags[p]),
        }
    }

    /// Union of the bags in the subtree rooted at `t`.
    pub fn cone(&self, t: usize) -> Vec<usize> {
        let ch = self.children();
        let mut out = BTreeSet::new();
        let mut stack = vec![t];
        while let Some(s) = stack.pop() {
            out.extend(self.bags[s].iter().copied());
            stack.extend(ch[s].iter().copied());
        }
        out.into_iter().collect()
    }

    /// Nodes ordered so that every child precedes its parent.
    pub fn post_order(&self) -> Vec<usize> {
        let ch = self.children();
        let mut order = Vec::with_capacity(self.len());
        let Some(root) = self.root() else {
            return order;
        };
        let mut stack = vec![(root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                order.push(t);
            } else {
                stack.push((t, true));
                for &c in ch[t].iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        order
    }
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// First failed tree-decomposition axiom, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotATree(String),
    VertexNotCovered(usize),
    EdgeNotCovered(usize, usize),
    DisconnectedOccurrence(usize),
    NiceStructure(String),
}

/// Checks the three axioms plus that the parent pointers form one tree.
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> std::result::Result<(), Violation> {
    let roots = td.parent.iter().filter(|p| p.is_none()).count();
    if roots != 1 {
        return Err(Violation::NotATree(format!("{roots} roots")));
    }
    if td.post_order().len() != td.len() {
        return Err(Violation::NotATree("parent pointers contain a cycle".into()));
    }
    if td.bags.iter().flatten().any(|&v| v >= g.n()) {
        return Err(Violation::NotATree("bag holds an unknown vertex".into()));
    }
    let mut occurrences = vec![Vec::new(); g.n()];
    for (t, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            occurrences[v].push(t);
        }
    }
    for (v, occ) in occurrences.iter().enumerate() {
        if occ.is_empty() {
            return Err(Violation::VertexNotCovered(v));
        }
    }
    for &(u, v) in g.edges() {
        let both = occurrences[u]
            .iter()
            .any(|&t| td.bags[t].binary_search(&v).is_ok());
        if !both {
            return Err(Violation::EdgeNotCovered(u, v));
        }
    }
    for (v, occ) in occurrences.iter().enumerate() {
        // Exactly one occurrence whose parent lacks v: the top of its subtree.
        let tops = occ
            .iter()
            .filter(|&&t| match td.parent[t] {
                None => true,
                Some(p) => td.bags[p].binary_search(&v).is_err(),
            })
            .count();
        if tops != 1 {
            return Err(Violation::DisconnectedOccurrence(v));
        }
    }
    Ok(())
}

/// Min-fill elimination ordering; ties broken by degree, then vertex id.
pub fn min_fill_order(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive = vec![true; n];
    let mut fill: Vec<Option<usize>> = vec![None; n];
    let fill_of = |adj: &[BTreeSet<usize>], w: usize| {
        let nb: Vec<usize> = adj[w].iter().copied().collect();
        let mut missing = 0;
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !adj[x].contains(&y) {
                    missing += 1;
                }
            }
        }
        missing
    };
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let f = *fill[v].get_or_insert_with(|| fill_of(&adj, v));
            let key = (f, adj[v].len(), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let (_, _, v) = best.expect("a live vertex remains");
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
        for &x in &nb {
            adj[x].remove(&v);
        }
        alive[v] = false;
        adj[v].clear();
        for &x in &nb {
            fill[x] = None;
            for &y in &adj[x] {
                fill[y] = None;
            }
        }
        order.push((v, nb));
    }
    order
}

/// Tree decomposition from an elimination order: the bag of `v` is `v`
/// with its neighbours at elimination time, hung below the bag of the
/// earliest-eliminated of those neighbours.
pub fn decomposition_from_order(n: usize, order: &[(usize, Vec<usize>)]) -> TreeDecomposition {
    if n == 0 {
        return TreeDecomposition {
            bags: vec![Vec::new()],
            parent: vec![None],
        };
    }
    let mut position = vec![0; n];
    for (i, (v, _)) in order.iter().enumerate() {
        position[*v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut parent = Vec::with_capacity(n);
    for (v, nb) in order {
        let mut bag = nb.clone();
        bag.push(*v);
        bag.sort_unstable();
        bags.push(bag);
        parent.push(nb.iter().map(|&w| position[w]).min());
    }
    // Hang every component root below the last one.
    let last = order.len() - 1;
    for (i, p) in parent.iter_mut().enumerate() {
        if p.is_none() && i != last {
            *p = Some(last);
        }
    }
    TreeDecomposition { bags, parent }
}

pub fn heuristic_decompose(g: &Graph) -> TreeDecomposition {
    decomposition_from_order(g.n(), &min_fill_order(g))
}

/// Node kinds of a nice tree decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
    IntroduceEdge(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Nice tree decomposition with empty leaf and root bags. Nodes are stored
/// children first, so index order is a valid bottom-up schedule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub n_vertices: usize,
}

impl NiceTreeDecomposition {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|x| x.bag.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let mut parent = vec![None; self.nodes.len()];
        for (t, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                parent[c] = Some(t);
            }
        }
        TreeDecomposition {
            bags: self.nodes.iter().map(|x| x.bag.clone()).collect(),
            parent,
        }
    }

    /// Checks node-local bag relations, that each edge of `g` is introduced
    /// exactly once where both endpoints are present, and the ordinary axioms.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), Violation> {
        let bad = |msg: String| Err(Violation::NiceStructure(msg));
        let mut introduced = vec![0usize; g.m()];
        for (t, node) in self.nodes.iter().enumerate() {
            if node.children.iter().any(|&c| c >= t) {
                return bad(format!("node {t} precedes a child"));
            }
            let child_bag = |i: usize| &self.nodes[node.children[i]].bag;
            match (node.kind, node.children.len()) {
                (NiceKind::Leaf, 0) if node.bag.is_empty() => {}
                (NiceKind::Introduce(v), 1) => {
                    let mut expect = child_bag(0).clone();
                    if expect.contains(&v) {
                        return bad(format!("node {t} reintroduces {v}"));
                    }
                    expect.push(v);
                    expect.sort_unstable();
                    if expect != node.bag {
                        return bad(format!("introduce node {t} has wrong bag"));
                    }
                }
                (NiceKind::Forget(v), 1) => {
                    let expect: Vec<usize> =
                        child_bag(0).iter().copied().filter(|&w| w != v).collect();
                    if !child_bag(0).contains(&v) || expect != node.bag {
                        return bad(format!("forget node {t} has wrong bag"));
                    }
                }
                (NiceKind::Join, 2) => {
                    if child_bag(0) != &node.bag || child_bag(1) != &node.bag {
                        return bad(format!("join node {t} has unequal bags"));
                    }
                }
                (NiceKind::IntroduceEdge(u, v), 1) => {
                    if child_bag(0) != &node.bag
                        || node.bag.binary_search(&u).is_err()
                        || node.bag.binary_search(&v).is_err()
                    {
                        return bad(format!("introduce-edge node {t} has wrong bag"));
                    }
                    match g.edge_index(u, v) {
                        Some(e) => introduced[e] += 1,
                        None => return bad(format!("({u}, {v}) is not an edge")),
                    }
                }
                _ => return bad(format!("node {t} has a malformed kind or arity")),
            }
        }
        if !self.nodes[self.root()].bag.is_empty() {
            return bad("root bag is not empty".into());
        }
        if let Some(e) = introduced.iter().position(|&c| c != 1) {
            let (u, v) = g.edges()[e];
            return bad(format!("edge ({u}, {v}) introduced {} times", introduced[e]));
        }
        validate_decomposition(g, &self.to_tree_decomposition())
    }
}

struct NiceBuilder<'a> {
    g: &'a Graph,
    nodes: Vec<NiceNode>,
    edge_done: Vec<bool>,
}

impl NiceBuilder<'_> {
    fn push(&mut self, kind: NiceKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    fn introduce(&mut self, top: usize, v: usize) -> usize {
        let mut bag = self.nodes[top].bag.clone();
        let pos = bag.binary_search(&v).unwrap_err();
        bag.insert(pos, v);
        self.push(NiceKind::Introduce(v), bag, vec![top])
    }

    /// Introduces every pending edge at `v`, then forgets `v`.
    fn forget(&mut self, mut top: usize, v: usize) -> usize {
        let bag = self.nodes[top].bag.clone();
        for &w in &bag {
            if let Some(e) = self.g.edge_index(v, w) {
                if !self.edge_done[e] {
                    self.edge_done[e] = true;
                    top = self.push(NiceKind::IntroduceEdge(v.min(w), v.max(w)), bag.clone(), vec![top]);
                }
            }
        }
        let rest: Vec<usize> = bag.into_iter().filter(|&w| w != v).collect();
        self.push(NiceKind::Forget(v), rest, vec![top])
    }

    fn reshape(&mut self, mut top: usize, target: &[usize]) -> usize {
        let current = self.nodes[top].bag.clone();
        for &v in current.iter().filter(|v| target.binary_search(v).is_err()) {
            top = self.forget(top, v);
        }
        for &v in target.iter().filter(|v| current.binary_search(v).is_err()) {
            top = self.introduce(top, v);
        }
        top
    }
}

/// Converts a valid decomposition of `g` into nice form with the same width.
pub fn make_nice(g: &Graph, td: &TreeDecomposition) -> NiceTreeDecomposition {
    let mut b = NiceBuilder {
        g,
        nodes: Vec::new(),
        edge_done: vec![false; g.m()],
    };
    let children = td.children();
    let mut top = vec![usize::MAX; td.len()];
    for t in td.post_order() {
        let bag = &td.bags[t];
        let mut branches = Vec::new();
        for &c in &children[t] {
            branches.push(b.reshape(top[c], bag));
        }
        if branches.is_empty() {
            let leaf = b.push(NiceKind::Leaf, Vec::new(), Vec::new());
            branches.push(b.reshape(leaf, bag));
        }
        let mut acc = branches[0];
        for &other in &branches[1..] {
            acc = b.push(NiceKind::Join, bag.clone(), vec![acc, other]);
        }
        top[t] = acc;
    }
    let root = td.root().expect("decomposition has a root");
    b.reshape(top[root], &[]);
    NiceTreeDecomposition {
        nodes: b.nodes,
        n_vertices: g.n(),
    }
}

/// Default vertex cap for [`exact_treewidth`].
pub const EXACT_TREEWIDTH_CAP: usize = 16;

/// Exact treewidth by dynamic programming over elimination prefixes:
/// `TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|)` where `Q(S, v)` are
/// the vertices outside `S + v` reachable from `v` through `S`.
pub fn exact_treewidth(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    if n > cap || n > 24 {
        return Err(Error::InstanceTooLarge(format!("{n} vertices (cap {})", cap.min(24))));
    }
    if n == 0 {
        return Ok(0);
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let q = |s: u32, v: usize| -> u32 {
        // Flood from v through s; count frontier outside s.
        let mut seen = 1u32 << v;
        let mut stack = vec![v];
        let mut out = 0u32;
        while let Some(x) = stack.pop() {
            let mut rest = nbr[x] & !seen;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                seen |= 1 << w;
                if s >> w & 1 == 1 {
                    stack.push(w);
                } else {
                    out |= 1 << w;
                }
            }
        }
        out.count_ones()
    };
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = vec![u8::MAX; 1usize << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let cand = tw[prev as usize].max(q(prev, v) as u8);
            best = best.min(cand);
        }
        tw[s as usize] = best;
    }
    Ok(tw[full as usize] as usize)
}

/// Serialised form: `{"nodes": [{"id", "parent", "bag"}], "width"}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub nodes: Vec<NodeJson>,
    pub width: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub parent: Option<usize>,
    pub bag: Vec<usize>,
}

impl From<&TreeDecomposition> for DecompositionJson {
    fn from(td: &TreeDecomposition) -> Self {
        DecompositionJson {
            nodes: td
                .bags
                .iter()
                .zip(&td.parent)
                .enumerate()
                .map(|(id, (bag, &parent))| NodeJson {
                    id,
                    parent,
                    bag: bag.clone(),
                })
                .collect(),
            width: td.width(),
        }
    }
}
