//! Contraction-friendly dynamic programming over a nice tree decomposition
//! of `G / X`.
//!
//! A plain super-vertex takes one of the problem's vertex labels (a side of
//! the bipartition or a group element) or, for the vertex problems and only
//! when it is a candidate, the extra "deleted" state. A contracted component
//! takes an index into its orbit of admissible labelings. Each table maps a
//! configuration of the bag to the minimum cost below the node:
//! deleted vertices are charged where they are forgotten and deleted edges
//! where their quotient edge is introduced, so every object is paid once.

use std::collections::BTreeMap;

use crate::candidate::{CandidateKind, CandidateSet};
use crate::contraction::{component_orbit, contract, ComponentOrbit, ContractionMap};
use crate::error::{Error, Result};
use crate::oracle::has_violation;
use crate::problem::{Instance, Solution};
use crate::treewidth::{heuristic_decompose, make_nice, NiceKind, NiceTreeDecomposition};

type Config = Vec<u8>;

#[derive(Clone, Copy, Debug)]
struct Entry {
    cost: u32,
    /// State chosen for the forgotten vertex (forget nodes only).
    choice: u8,
}

type Table = BTreeMap<Config, Entry>;

/// Counters collected during one DP run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DpStats {
    pub nodes: usize,
    pub max_bag: usize,
    pub max_table: usize,
    /// States a single super-vertex can take: 3 for OCT, 2 for EB, `g + 1`
    /// for GFVS, `g` for GFES.
    pub state_bound: usize,
    /// Nodes whose table exceeded `state_bound ^ |bag|`.
    pub table_bound_violations: usize,
}

impl DpStats {
    pub fn table_bound_ok(&self) -> bool {
        self.table_bound_violations == 0
    }
}

/// Result of [`solve_on_td`].
#[derive(Clone, Debug)]
pub struct DpOutcome {
    /// Minimum cost over solutions avoiding `X`, or `None` if none exists.
    pub cost: Option<usize>,
    pub solution: Option<Solution>,
    pub stats: DpStats,
}

/// Tables kept after a run: forget-node tables for the traceback plus the
/// root table.
pub struct DpRun<'a> {
    ctx: Context<'a>,
    ntd: &'a NiceTreeDecomposition,
    forget_tables: Vec<Option<Table>>,
    root: Table,
    pub stats: DpStats,
}

struct Context<'a> {
    inst: &'a Instance,
    cmap: &'a ContractionMap,
    cand: &'a CandidateSet,
    orbits: Vec<Option<ComponentOrbit>>,
    /// Number of vertex labels; also the code of the deleted state.
    labels: usize,
}

impl Context<'_> {
    fn domain(&self, q: usize) -> usize {
        match &self.orbits[q] {
            Some(o) => o.states.len(),
            None => {
                let v = self.cmap.members[q][0];
                let deletable = self.inst.kind().deletes_vertices() && self.cand.contains(v);
                self.labels + usize::from(deletable)
            }
        }
    }

    /// Label of original vertex `a` whose super-vertex has state `s`;
    /// `None` when it is deleted.
    fn label(&self, a: usize, s: u8) -> Option<usize> {
        let q = self.cmap.rep[a];
        match &self.orbits[q] {
            Some(o) => Some(o.label(s as usize, a)),
            None if s as usize == self.labels => None,
            None => Some(s as usize),
        }
    }

    /// Cost of the original edges behind quotient edge `qe`, or `None` if the
    /// configuration is infeasible for them.
    fn edge_cost(&self, qe: usize, su: u8, sv: u8, qu: usize) -> Option<u32> {
        let g = self.inst.graph();
        let mut cost = 0;
        for &e in &self.cmap.edge_provenance[qe] {
            let (a, b) = g.edges()[e];
            let (sa, sb) = if self.cmap.rep[a] == qu { (su, sv) } else { (sv, su) };
            let (Some(la), Some(lb)) = (self.label(a, sa), self.label(b, sb)) else {
                continue;
            };
            if self.inst.arc_consistent(e, a, la, lb) {
                continue;
            }
            if self.inst.kind().deletes_vertices() {
                return None;
            }
            let undeletable =
                self.cmap.is_contracted[self.cmap.rep[a]] || self.cmap.is_contracted[self.cmap.rep[b]];
            if undeletable || !self.cand.contains(e) {
                return None;
            }
            cost += 1;
        }
        Some(cost)
    }
}

fn check_inputs(
    inst: &Instance,
    x: &[usize],
    cand: &CandidateSet,
    cmap: &ContractionMap,
    ntd: &NiceTreeDecomposition,
) -> Result<()> {
    let g = inst.graph();
    let mismatch = |m: String| Err(Error::DecompositionMismatch(m));
    if cmap.rep.len() != g.n() {
        return mismatch("contraction map is over a different vertex set".into());
    }
    let mut in_x = vec![false; g.n()];
    for &v in x {
        in_x[v] = true;
    }
    for (v, &q) in cmap.rep.iter().enumerate() {
        if cmap.is_contracted[q] != in_x[v] {
            return mismatch(format!("vertex {v} disagrees with X about contraction"));
        }
    }
    let expected = if inst.kind().deletes_vertices() {
        CandidateKind::Vertex
    } else {
        CandidateKind::Edge
    };
    if cand.kind() != expected {
        return Err(Error::InvalidRequest(format!(
            "{} needs a {expected:?} candidate set",
            inst.kind()
        )));
    }
    if ntd.n_vertices != cmap.quotient.n() {
        return mismatch(format!(
            "decomposition covers {} vertices, quotient has {}",
            ntd.n_vertices,
            cmap.quotient.n()
        ));
    }
    if let Err(v) = ntd.validate(&cmap.quotient) {
        return mismatch(format!("{v:?}"));
    }
    if inst.label_count() + 1 > u8::MAX as usize {
        return Err(Error::InvalidGroup("group order must be below 255".into()));
    }
    Ok(())
}

/// Runs the DP; `None` means some contracted component has no admissible
/// labeling, so no solution avoids `X`.
pub fn run_dp<'a>(
    inst: &'a Instance,
    x: &[usize],
    cand: &'a CandidateSet,
    cmap: &'a ContractionMap,
    ntd: &'a NiceTreeDecomposition,
) -> Result<Option<DpRun<'a>>> {
    check_inputs(inst, x, cand, cmap, ntd)?;
    let mut orbits = Vec::with_capacity(cmap.super_vertices());
    for (q, members) in cmap.members.iter().enumerate() {
        if cmap.is_contracted[q] {
            let o = component_orbit(inst, members);
            if o.infeasible {
                return Ok(None);
            }
            orbits.push(Some(o));
        } else {
            orbits.push(None);
        }
    }
    let labels = inst.label_count();
    let ctx = Context {
        inst,
        cmap,
        cand,
        orbits,
        labels,
    };
    let mut stats = DpStats {
        nodes: ntd.nodes.len(),
        state_bound: labels + usize::from(inst.kind().deletes_vertices()),
        ..DpStats::default()
    };
    let vertex_problem = inst.kind().deletes_vertices();

    let mut tables: Vec<Option<Table>> = vec![None; ntd.nodes.len()];
    let mut forget_tables: Vec<Option<Table>> = vec![None; ntd.nodes.len()];
    for (t, node) in ntd.nodes.iter().enumerate() {
        let mut take = |c: usize| tables[c].take().expect("child table computed");
        let table: Table = match node.kind {
            NiceKind::Leaf => Table::from([(Vec::new(), Entry { cost: 0, choice: 0 })]),
            NiceKind::Introduce(v) => {
                let child = take(node.children[0]);
                let pos = node.bag.binary_search(&v).unwrap();
                let mut out = Table::new();
                for (cfg, entry) in child {
                    for s in 0..ctx.domain(v) {
                        let mut c = cfg.clone();
                        c.insert(pos, s as u8);
                        out.insert(c, Entry { choice: 0, ..entry });
                    }
                }
                out
            }
            NiceKind::Forget(v) => {
                let child_node = &ntd.nodes[node.children[0]];
                let child = take(node.children[0]);
                let pos = child_node.bag.binary_search(&v).unwrap();
                let plain = ctx.orbits[v].is_none();
                let mut out = Table::new();
                for (mut cfg, entry) in child {
                    let s = cfg.remove(pos);
                    let deleted = vertex_problem && plain && s as usize == labels;
                    let cost = entry.cost + u32::from(deleted);
                    let slot = out.entry(cfg).or_insert(Entry {
                        cost: u32::MAX,
                        choice: 0,
                    });
                    if cost < slot.cost {
                        *slot = Entry { cost, choice: s };
                    }
                }
                forget_tables[t] = Some(out.clone());
                out
            }
            NiceKind::Join => {
                let left = take(node.children[0]);
                let right = take(node.children[1]);
                left.into_iter()
                    .filter_map(|(cfg, l)| {
                        let r = right.get(&cfg)?;
                        Some((cfg, Entry { cost: l.cost + r.cost, choice: 0 }))
                    })
                    .collect()
            }
            NiceKind::IntroduceEdge(u, v) => {
                let child = take(node.children[0]);
                let qe = cmap.quotient.edge_index(u, v).expect("quotient edge");
                let pu = node.bag.binary_search(&u).unwrap();
                let pv = node.bag.binary_search(&v).unwrap();
                child
                    .into_iter()
                    .filter_map(|(cfg, entry)| {
                        let extra = ctx.edge_cost(qe, cfg[pu], cfg[pv], u)?;
                        Some((cfg, Entry { cost: entry.cost + extra, choice: 0 }))
                    })
                    .collect()
            }
        };
        stats.max_bag = stats.max_bag.max(node.bag.len());
        stats.max_table = stats.max_table.max(table.len());
        let bound = (stats.state_bound as f64).powi(node.bag.len() as i32);
        if table.len() as f64 > bound {
            stats.table_bound_violations += 1;
        }
        tables[t] = Some(table);
    }
    let root = tables[ntd.root()].take().expect("root table");
    Ok(Some(DpRun {
        ctx,
        ntd,
        forget_tables,
        root,
        stats,
    }))
}

impl DpRun<'_> {
    /// Minimum cost at the (empty) root bag.
    pub fn cost(&self) -> Option<usize> {
        self.root.get(&Vec::new()).map(|e| e.cost as usize)
    }

    /// Walks the stored choices down from the root and reads off the
    /// optimal deletion set.
    pub fn extract_solution(&self) -> Result<Solution> {
        if self.cost().is_none() {
            return Err(Error::NoFeasibleEntry);
        }
        let ctx = &self.ctx;
        let ntd = self.ntd;
        let mut state = vec![u8::MAX; ctx.cmap.super_vertices()];
        let mut stack: Vec<(usize, Config)> = vec![(ntd.root(), Vec::new())];
        while let Some((t, cfg)) = stack.pop() {
            let node = &ntd.nodes[t];
            match node.kind {
                NiceKind::Leaf => {}
                NiceKind::Introduce(v) => {
                    let mut c = cfg;
                    c.remove(node.bag.binary_search(&v).unwrap());
                    stack.push((node.children[0], c));
                }
                NiceKind::Forget(v) => {
                    let table = self.forget_tables[t].as_ref().expect("forget table kept");
                    let choice = table.get(&cfg).ok_or(Error::NoFeasibleEntry)?.choice;
                    state[v] = choice;
                    let child_bag = &ntd.nodes[node.children[0]].bag;
                    let mut c = cfg;
                    c.insert(child_bag.binary_search(&v).unwrap(), choice);
                    stack.push((node.children[0], c));
                }
                NiceKind::Join => {
                    stack.push((node.children[0], cfg.clone()));
                    stack.push((node.children[1], cfg));
                }
                NiceKind::IntroduceEdge(..) => stack.push((node.children[0], cfg)),
            }
        }
        let g = ctx.inst.graph();
        let sol = if ctx.inst.kind().deletes_vertices() {
            Solution::Vertices(
                (0..g.n())
                    .filter(|&v| ctx.label(v, state[ctx.cmap.rep[v]]).is_none())
                    .collect(),
            )
        } else {
            Solution::Edges(
                g.edges()
                    .iter()
                    .enumerate()
                    .filter(|&(e, &(a, b))| {
                        let la = ctx.label(a, state[ctx.cmap.rep[a]]).unwrap();
                        let lb = ctx.label(b, state[ctx.cmap.rep[b]]).unwrap();
                        !ctx.inst.arc_consistent(e, a, la, lb)
                    })
                    .map(|(_, &e)| e)
                    .collect(),
            )
        };
        Ok(sol)
    }
}

/// Minimum deletion cost over solutions disjoint from `x` drawn from
/// `cand`, with a witness checked against the violation test.
pub fn solve_on_td(
    inst: &Instance,
    x: &[usize],
    cand: &CandidateSet,
    cmap: &ContractionMap,
    ntd: &NiceTreeDecomposition,
) -> Result<DpOutcome> {
    let Some(run) = run_dp(inst, x, cand, cmap, ntd)? else {
        return Ok(DpOutcome {
            cost: None,
            solution: None,
            stats: DpStats::default(),
        });
    };
    let Some(cost) = run.cost() else {
        return Ok(DpOutcome {
            cost: None,
            solution: None,
            stats: run.stats,
        });
    };
    let sol = run.extract_solution()?;
    if sol.len() != cost || has_violation(inst, &sol) {
        return Err(Error::WitnessRejected(format!(
            "traceback gave {} elements for cost {cost}",
            sol.len()
        )));
    }
    Ok(DpOutcome {
        cost: Some(cost),
        solution: Some(sol),
        stats: run.stats,
    })
}

/// Contracts `x`, decomposes the quotient with min-fill, and runs the DP.
/// Returns the outcome and the decomposition width.
pub fn solve_restricted(inst: &Instance, x: &[usize], cand: &CandidateSet) -> Result<(DpOutcome, usize)> {
    let cmap = contract(inst.graph(), x);
    let td = heuristic_decompose(&cmap.quotient);
    let ntd = make_nice(&cmap.quotient, &td);
    let out = solve_on_td(inst, x, cand, &cmap, &ntd)?;
    Ok((out, td.width()))
}
