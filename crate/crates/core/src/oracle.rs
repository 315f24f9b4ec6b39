//! Exhaustive ground truth and solution checking for small instances.

use std::collections::VecDeque;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::problem::{Instance, ProblemKind, Solution};

/// Size caps for exhaustive search.
#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 20,
            max_edges: 24,
        }
    }
}

/// True iff removing `s` still leaves an odd cycle (OCT/EB) or a non-null
/// cycle (GFVS/GFES).
///
/// Labels are propagated by BFS over what remains; a conflict on some edge
/// is exactly a violating cycle.
pub fn has_violation(inst: &Instance, s: &Solution) -> bool {
    let g = inst.graph();
    let mut vertex_gone = vec![false; g.n()];
    let mut edge_gone = vec![false; g.m()];
    match s {
        Solution::Vertices(vs) => vs.iter().for_each(|&v| vertex_gone[v] = true),
        Solution::Edges(es) => {
            for &(u, v) in es {
                if let Some(e) = g.edge_index(u, v) {
                    edge_gone[e] = true;
                }
            }
        }
    }
    let mut label = vec![usize::MAX; g.n()];
    for root in 0..g.n() {
        if vertex_gone[root] || label[root] != usize::MAX {
            continue;
        }
        label[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                let e = g.edge_index(u, w).unwrap();
                if vertex_gone[w] || edge_gone[e] {
                    continue;
                }
                let want = match inst.labels() {
                    None => label[u] ^ 1,
                    Some(l) => l.group().mul(label[u], l.arc(g, e, u)),
                };
                if label[w] == usize::MAX {
                    label[w] = want;
                    queue.push_back(w);
                } else if label[w] != want {
                    return true;
                }
            }
        }
    }
    false
}

/// Exact optimum with the lexicographically first optimal witness.
pub fn brute_force(inst: &Instance, limits: OracleLimits) -> Result<(usize, Solution)> {
    brute_force_restricted(inst, &[], limits)?
        .ok_or_else(|| unreachable_infeasible(inst.kind()))
}

fn unreachable_infeasible(kind: ProblemKind) -> Error {
    Error::InvalidRequest(format!("{kind} without forbidden vertices is always solvable"))
}

/// Exact optimum over solutions disjoint from `x` (endpoint-disjoint for
/// the edge problems); `None` when no such solution exists.
pub fn brute_force_restricted(
    inst: &Instance,
    x: &[usize],
    limits: OracleLimits,
) -> Result<Option<(usize, Solution)>> {
    let universe = restricted_universe(inst, x, limits)?;
    for size in 0..=universe.len() {
        for pick in universe.iter().copied().combinations(size) {
            let s = to_solution(inst, &pick);
            if !has_violation(inst, &s) {
                return Ok(Some((size, s)));
            }
        }
    }
    Ok(None)
}

/// Every optimal solution disjoint from `x`, in lexicographic order.
pub fn all_optima(inst: &Instance, x: &[usize], limits: OracleLimits) -> Result<Vec<Solution>> {
    let Some((opt, _)) = brute_force_restricted(inst, x, limits)? else {
        return Ok(Vec::new());
    };
    let universe = restricted_universe(inst, x, limits)?;
    Ok(universe
        .iter()
        .copied()
        .combinations(opt)
        .map(|pick| to_solution(inst, &pick))
        .filter(|s| !has_violation(inst, s))
        .collect())
}

fn restricted_universe(inst: &Instance, x: &[usize], limits: OracleLimits) -> Result<Vec<usize>> {
    let g = inst.graph();
    let mut forbidden = vec![false; g.n()];
    for &v in x {
        forbidden[v] = true;
    }
    if inst.kind().deletes_vertices() {
        if g.n() > limits.max_vertices {
            return Err(Error::InstanceTooLarge(format!(
                "{} vertices (cap {})",
                g.n(),
                limits.max_vertices
            )));
        }
        Ok((0..g.n()).filter(|&v| !forbidden[v]).collect())
    } else {
        if g.m() > limits.max_edges {
            return Err(Error::InstanceTooLarge(format!(
                "{} edges (cap {})",
                g.m(),
                limits.max_edges
            )));
        }
        Ok(g.edges()
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| !forbidden[u] && !forbidden[v])
            .map(|(e, _)| e)
            .collect())
    }
}

fn to_solution(inst: &Instance, pick: &[usize]) -> Solution {
    if inst.kind().deletes_vertices() {
        Solution::Vertices(pick.to_vec())
    } else {
        Solution::Edges(pick.iter().map(|&e| inst.graph().edges()[e]).collect())
    }
}
