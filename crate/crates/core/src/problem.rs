//! Problem identifiers, instances and deletion sets.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::GroupLabels;

/// The four deletion problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    /// Odd cycle transversal.
    Oct,
    /// Edge bipartization.
    Eb,
    /// Group feedback vertex set.
    Gfvs,
    /// Group feedback edge set.
    Gfes,
}

impl ProblemKind {
    pub fn deletes_vertices(self) -> bool {
        matches!(self, ProblemKind::Oct | ProblemKind::Gfvs)
    }

    pub fn is_group(self) -> bool {
        matches!(self, ProblemKind::Gfvs | ProblemKind::Gfes)
    }

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Oct => "oct",
            ProblemKind::Eb => "eb",
            ProblemKind::Gfvs => "gfvs",
            ProblemKind::Gfes => "gfes",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "oct" => Ok(ProblemKind::Oct),
            "eb" => Ok(ProblemKind::Eb),
            "gfvs" => Ok(ProblemKind::Gfvs),
            "gfes" => Ok(ProblemKind::Gfes),
            other => Err(Error::Parse(format!("unknown problem `{other}`"))),
        }
    }
}

/// A graph paired with a problem, plus arc labels for the group problems.
#[derive(Clone, Debug)]
pub struct Instance {
    graph: Graph,
    kind: ProblemKind,
    labels: Option<GroupLabels>,
}

impl Instance {
    pub fn new(graph: Graph, kind: ProblemKind, labels: Option<GroupLabels>) -> Result<Self> {
        match (&labels, kind.is_group()) {
            (None, true) => Err(Error::InvalidRequest(format!("{kind} needs group labels"))),
            (Some(l), true) if l.edge_labels().len() != graph.m() => {
                Err(Error::InvalidLabels("label count does not match edges".into()))
            }
            (Some(_), false) => Ok(Instance {
                graph,
                kind,
                labels: None,
            }),
            _ => Ok(Instance {
                graph,
                kind,
                labels,
            }),
        }
    }

    pub fn oct(graph: Graph) -> Self {
        Instance::new(graph, ProblemKind::Oct, None).expect("oct needs no labels")
    }

    pub fn eb(graph: Graph) -> Self {
        Instance::new(graph, ProblemKind::Eb, None).expect("eb needs no labels")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn labels(&self) -> Option<&GroupLabels> {
        self.labels.as_ref()
    }

    /// Number of vertex labels: the two sides of a bipartition, or the group
    /// order.
    pub fn label_count(&self) -> usize {
        match &self.labels {
            Some(l) => l.group().order(),
            None => 2,
        }
    }

    /// Whether vertex labels `la` on `a` and `lb` on the other endpoint of
    /// edge `e` are compatible along the arc leaving `a`.
    pub fn arc_consistent(&self, e: usize, a: usize, la: usize, lb: usize) -> bool {
        match &self.labels {
            None => la != lb,
            Some(l) => lb == l.group().mul(la, l.arc(&self.graph, e, a)),
        }
    }

    /// Label of the far endpoint forced by `la` on `a` along edge `e`.
    pub fn propagate(&self, e: usize, a: usize, la: usize) -> usize {
        match &self.labels {
            None => 1 - la,
            Some(l) => l.group().mul(la, l.arc(&self.graph, e, a)),
        }
    }

    /// The same problem on the subgraph induced by `vertices`.
    pub fn induced(&self, vertices: &[usize]) -> Instance {
        let (sub, _) = self.graph.induced(vertices);
        let labels = self
            .labels
            .as_ref()
            .map(|l| l.induced(&self.graph, vertices, &sub));
        Instance {
            graph: sub,
            kind: self.kind,
            labels,
        }
    }
}

/// A deletion set: vertices for OCT/GFVS, edges (as `(lo, hi)`) for EB/GFES.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Solution {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
}

impl Solution {
    pub fn empty(kind: ProblemKind) -> Self {
        if kind.deletes_vertices() {
            Solution::Vertices(Vec::new())
        } else {
            Solution::Edges(Vec::new())
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Solution::Vertices(v) => v.len(),
            Solution::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sorts and normalises edge orientation.
    pub fn normalized(self) -> Self {
        match self {
            Solution::Vertices(mut v) => {
                v.sort_unstable();
                v.dedup();
                Solution::Vertices(v)
            }
            Solution::Edges(e) => {
                let mut e: Vec<_> = e.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
                e.sort_unstable();
                e.dedup();
                Solution::Edges(e)
            }
        }
    }

    /// Vertices touched by the solution (endpoints for edge solutions).
    pub fn touched_vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = match self {
            Solution::Vertices(v) => v.clone(),
            Solution::Edges(e) => e.iter().flat_map(|&(u, v)| [u, v]).collect(),
        };
        out.sort_unstable();
        out.dedup();
        out
    }
}
