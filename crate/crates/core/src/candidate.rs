//! Candidate sets: vertices or edges guaranteed to contain some optimal
//! solution.

use serde::Serialize;

use crate::graph::Graph;
use crate::problem::{Instance, ProblemKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CandidateKind {
    Vertex,
    Edge,
}

/// Membership over vertices or over edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateSet {
    kind: CandidateKind,
    member: Vec<bool>,
}

impl CandidateSet {
    pub fn vertices(n: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut member = vec![false; n];
        members.into_iter().for_each(|v| member[v] = true);
        CandidateSet {
            kind: CandidateKind::Vertex,
            member,
        }
    }

    pub fn edges(m: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut member = vec![false; m];
        members.into_iter().for_each(|e| member[e] = true);
        CandidateSet {
            kind: CandidateKind::Edge,
            member,
        }
    }

    pub fn kind(&self) -> CandidateKind {
        self.kind
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member.get(x).copied().unwrap_or(false)
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.member.len()).filter(|&x| self.member[x]).collect()
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Vertices a solution drawn from this set can touch: the members
    /// themselves, or the endpoints of member edges.
    pub fn vertex_support(&self, g: &Graph) -> Vec<bool> {
        match self.kind {
            CandidateKind::Vertex => self.member.clone(),
            CandidateKind::Edge => {
                let mut out = vec![false; g.n()];
                for e in self.members() {
                    let (u, v) = g.edges()[e];
                    out[u] = true;
                    out[v] = true;
                }
                out
            }
        }
    }
}

/// Produces a candidate set for an instance. An implementation must keep
/// at least one optimal solution inside the set it returns.
pub trait CandidateProvider {
    fn name(&self) -> &'static str;
    fn candidates(&self, inst: &Instance) -> CandidateSet;
}

/// The whole vertex set or edge set.
#[derive(Clone, Copy, Debug, Default)]
pub struct TrivialCandidates;

impl CandidateProvider for TrivialCandidates {
    fn name(&self) -> &'static str {
        "trivial"
    }

    fn candidates(&self, inst: &Instance) -> CandidateSet {
        candidate_trivial(inst.graph(), inst.kind())
    }
}

pub fn candidate_trivial(g: &Graph, kind: ProblemKind) -> CandidateSet {
    if kind.deletes_vertices() {
        CandidateSet::vertices(g.n(), 0..g.n())
    } else {
        CandidateSet::edges(g.m(), 0..g.m())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_sets() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let v = candidate_trivial(&g, ProblemKind::Oct);
        assert_eq!((v.kind(), v.members()), (CandidateKind::Vertex, vec![0, 1, 2]));
        let e = candidate_trivial(&g, ProblemKind::Gfes);
        assert_eq!((e.kind(), e.members()), (CandidateKind::Edge, vec![0, 1]));
        let empty = Graph::new(0, []).unwrap();
        assert!(candidate_trivial(&empty, ProblemKind::Eb).is_empty());
        assert!(candidate_trivial(&empty, ProblemKind::Oct).is_empty());
    }

    #[test]
    fn edge_support() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = CandidateSet::edges(3, [2]);
        assert_eq!(c.vertex_support(&g), vec![false, false, true, true]);
    }
}
