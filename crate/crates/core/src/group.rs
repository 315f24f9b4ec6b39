//! Finite groups given by multiplication tables and group labelings of arcs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A finite group on elements `0..order` with identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl Group {
    /// Validates closure, identity at index 0, associativity and inverses.
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let g = mul.len();
        if g == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if mul.iter().any(|row| row.len() != g || row.iter().any(|&x| x >= g)) {
            return Err(Error::InvalidGroup("table is not closed on 0..g".into()));
        }
        if (0..g).any(|a| mul[0][a] != a || mul[a][0] != a) {
            return Err(Error::InvalidGroup("element 0 is not the identity".into()));
        }
        for a in 0..g {
            for b in 0..g {
                for c in 0..g {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inv = vec![0; g];
        for a in 0..g {
            inv[a] = (0..g)
                .find(|&b| mul[a][b] == 0)
                .ok_or_else(|| Error::InvalidGroup(format!("{a} has no inverse")))?;
        }
        Ok(Group { mul, inv })
    }

    /// The cyclic group `Z_g` under addition mod `g`.
    pub fn cyclic(g: usize) -> Self {
        let mul = (0..g)
            .map(|a| (0..g).map(|b| (a + b) % g).collect())
            .collect();
        Group::from_table(mul).expect("cyclic group table")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }
}

/// Arc labels of a group-labelled graph. One label is stored per edge for
/// the `(lo, hi)` orientation; the reverse arc carries its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLabels {
    group: Group,
    labels: Vec<usize>,
}

impl GroupLabels {
    pub fn new(g: &Graph, group: Group, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != g.m() {
            return Err(Error::InvalidLabels(format!(
                "{} labels for {} edges",
                labels.len(),
                g.m()
            )));
        }
        if labels.iter().any(|&x| x >= group.order()) {
            return Err(Error::InvalidLabels("label outside the group".into()));
        }
        Ok(GroupLabels { group, labels })
    }

    /// Builds labels from directed triples `(u, v, label of u->v)`. Every
    /// edge must be labelled and a pair given in both directions must agree
    /// up to inversion.
    pub fn from_arcs(g: &Graph, group: Group, arcs: &[(usize, usize, usize)]) -> Result<Self> {
        let mut labels: Vec<Option<usize>> = vec![None; g.m()];
        for &(u, v, x) in arcs {
            let e = g
                .edge_index(u, v)
                .ok_or_else(|| Error::InvalidLabels(format!("({u}, {v}) is not an edge")))?;
            if x >= group.order() {
                return Err(Error::InvalidLabels(format!("label {x} outside the group")));
            }
            let forward = if u < v { x } else { group.inv(x) };
            match labels[e] {
                Some(prev) if prev != forward => {
                    return Err(Error::InvalidLabels(format!(
                        "labels of ({u}, {v}) and ({v}, {u}) are not inverse"
                    )))
                }
                _ => labels[e] = Some(forward),
            }
        }
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(e, l)| {
                l.ok_or_else(|| {
                    let (u, v) = g.edges()[e];
                    Error::InvalidLabels(format!("edge ({u}, {v}) is unlabelled"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        GroupLabels::new(g, group, labels)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn edge_labels(&self) -> &[usize] {
        &self.labels
    }

    /// Label of the arc `u -> v` of edge `e`.
    pub fn arc(&self, g: &Graph, e: usize, u: usize) -> usize {
        let (lo, _) = g.edges()[e];
        if u == lo {
            self.labels[e]
        } else {
            self.group.inv(self.labels[e])
        }
    }

    /// Directed triples for serialisation, one per edge in `(lo, hi)` form.
    pub fn to_arcs(&self, g: &Graph) -> Vec<(usize, usize, usize)> {
        g.edges()
            .iter()
            .zip(&self.labels)
            .map(|(&(u, v), &x)| (u, v, x))
            .collect()
    }

    /// Restricts the labels to the subgraph induced by `vertices` (same
    /// relabelling as [`Graph::induced`]).
    pub fn induced(&self, g: &Graph, vertices: &[usize], sub: &Graph) -> GroupLabels {
        let map: std::collections::HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut labels = vec![0; sub.m()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if let (Some(&a), Some(&b)) = (map.get(&u), map.get(&v)) {
                let se = sub.edge_index(a, b).expect("induced edge");
                labels[se] = if a < b {
                    self.arc(g, e, u)
                } else {
                    self.arc(g, e, v)
                };
            }
        }
        GroupLabels {
            group: self.group.clone(),
            labels,
        }
    }
}
