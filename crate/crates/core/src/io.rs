//! Graph file formats.
//!
//! JSON: `{"n", "edges", "rotation", "outer_anchor"}` with optional group
//! fields `{"group_size", "mul", "labels": [[u, v, label of u->v], ...]}`.
//! Text edge list: a `p <n> <m>` header followed by `e <u> <v>` lines,
//! 0-indexed; `c` lines are comments.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EmbeddedGraph, Graph};
use crate::group::{Group, GroupLabels};
use crate::problem::{Instance, ProblemKind};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_anchor: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<(usize, usize, usize)>>,
}

impl GraphFile {
    pub fn from_embedded(eg: &EmbeddedGraph, labels: Option<&GroupLabels>) -> Self {
        GraphFile {
            n: eg.graph().n(),
            edges: eg.graph().edges().to_vec(),
            rotation: Some(eg.rotation().to_vec()),
            outer_anchor: eg.outer_anchor(),
            group_size: labels.map(|l| l.group().order()),
            mul: labels.map(|l| l.group().table().to_vec()),
            labels: labels.map(|l| l.to_arcs(eg.graph())),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied())
    }

    pub fn embedded(&self) -> Result<EmbeddedGraph> {
        let rotation = self
            .rotation
            .clone()
            .ok_or_else(|| Error::Parse("graph has no rotation system".into()))?;
        EmbeddedGraph::new(self.graph()?, rotation, self.outer_anchor)
    }

    /// Group labels, if the file carries them. A missing `mul` with a
    /// `group_size` means the cyclic group.
    pub fn group_labels(&self, g: &Graph) -> Result<Option<GroupLabels>> {
        let Some(arcs) = &self.labels else {
            return Ok(None);
        };
        let group = match (&self.mul, self.group_size) {
            (Some(mul), size) => {
                let grp = Group::from_table(mul.clone())?;
                if size.is_some_and(|s| s != grp.order()) {
                    return Err(Error::InvalidGroup("group_size disagrees with mul".into()));
                }
                grp
            }
            (None, Some(size)) => Group::cyclic(size),
            (None, None) => return Err(Error::InvalidGroup("labels without a group".into())),
        };
        GroupLabels::from_arcs(g, group, arcs).map(Some)
    }

    pub fn instance(&self, kind: ProblemKind) -> Result<Instance> {
        let g = self.graph()?;
        let labels = if kind.is_group() {
            self.group_labels(&g)?
        } else {
            None
        };
        Instance::new(g, kind, labels)
    }
}

pub fn parse_json(text: &str) -> Result<GraphFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses the `p`/`e` text format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let mut tok = line.split_whitespace();
        let bad = || Error::Parse(format!("line {}: `{line}`", lineno + 1));
        match tok.next() {
            None | Some("c") => continue,
            Some("p") => {
                let n = tok.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                let m = tok.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                header = Some((n, m));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(Error::Parse("edge before `p` header".into()));
                }
                let u = tok.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                let v = tok.next().and_then(|t| t.parse().ok()).ok_or_else(bad)?;
                edges.push((u, v));
            }
            Some(_) => return Err(bad()),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Parse("missing `p` header".into()))?;
    if edges.len() != m {
        return Err(Error::Parse(format!("header says {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

/// Either format, chosen by content: JSON starts with `{`.
pub fn load(path: &Path) -> Result<GraphFile> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        parse_json(&text)
    } else {
        let g = parse_edge_list(&text)?;
        Ok(GraphFile {
            n: g.n(),
            edges: g.edges().to_vec(),
            ..GraphFile::default()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use proptest::prelude::*;

    #[test]
    fn edge_list_roundtrip() {
        let g = gen::gen_grid(3, 4).unwrap().graph().clone();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(parse_edge_list("e 0 1\n").is_err());
        assert!(parse_edge_list("p 2 2\ne 0 1\n").is_err());
        assert!(parse_edge_list("p 2 1\ne 0 x\n").is_err());
        assert!(parse_edge_list("p 2 2\ne 0 1\ne 1 0\n").is_err());
        assert!(parse_edge_list("c hi\np 2 1\ne 0 1\n").is_ok());
    }

    #[test]
    fn group_file_defaults_to_cyclic() {
        let text = r#"{"n": 3, "edges": [[0,1],[1,2]], "group_size": 3,
                       "labels": [[0,1,2],[2,1,1]]}"#;
        let f = parse_json(text).unwrap();
        let inst = f.instance(ProblemKind::Gfvs).unwrap();
        let l = inst.labels().unwrap();
        assert_eq!(l.edge_labels(), &[2, 2]);
    }

    proptest! {
        #[test]
        fn json_roundtrip(n in 3usize..30, seed in 0u64..500) {
            let eg = gen::gen_stacked_triangulation(n, seed).unwrap();
            let labels = gen::gen_labels(eg.graph(), &Group::cyclic(3), gen::LabelMode::Uniform, seed).unwrap();
            let file = GraphFile::from_embedded(&eg, Some(&labels));
            let text = serde_json::to_string(&file).unwrap();
            let back = parse_json(&text).unwrap();
            prop_assert_eq!(back.embedded().unwrap(), eg.clone());
            prop_assert_eq!(back.group_labels(eg.graph()).unwrap().unwrap(), labels);
        }
    }
}
