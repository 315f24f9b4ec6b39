//! Layered enumeration driver: pick `p`, build the residue sets, enumerate
//! exception sets inside each one, contract the rest and run the DP.

use std::time::Instant;

use itertools::Itertools;
use log::{debug, info};
use serde::Serialize;

use crate::candidate::{CandidateProvider, CandidateSet, TrivialCandidates};
use crate::dp::solve_restricted;
use crate::error::{Error, Result};
use crate::graph::EmbeddedGraph;
use crate::layering::{build_zsets, layers_of, ZFamily};
use crate::oracle::has_violation;
use crate::problem::{Instance, ProblemKind, Solution};

pub const DEFAULT_MAX_PAIRS: u64 = 10_000_000;

/// Default layer period: `floor(sqrt(k))`, at least 1.
pub fn default_p(k: usize) -> usize {
    k.isqrt().max(1)
}

/// Largest exception set per residue class: `ceil(k / p)` for vertex
/// problems, `ceil(2k / p)` over candidate-edge endpoints for edge problems.
pub fn exception_budget(kind: ProblemKind, k: usize, p: usize) -> usize {
    if kind.deletes_vertices() {
        k.div_ceil(p)
    } else {
        (2 * k).div_ceil(p)
    }
}

/// One enumerated hypothesis: the solution avoids `Z_i` except for `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pair {
    pub i: usize,
    pub y: Vec<usize>,
}

impl Pair {
    /// The contracted set `Z_i \ Y'`.
    pub fn contracted(&self, zf: &ZFamily) -> Vec<usize> {
        zf.z(self.i)
            .iter()
            .copied()
            .filter(|v| self.y.binary_search(v).is_err())
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// `sum_i sum_{s <= budget} C(|Z_i ∩ support|, s)`.
pub fn pair_count(zf: &ZFamily, support: &[bool], budget: usize) -> u128 {
    zf.zsets
        .iter()
        .map(|z| {
            let a = z.iter().filter(|&&v| support[v]).count();
            (0..=budget.min(a)).map(|s| binomial(a, s)).fold(0u128, u128::saturating_add)
        })
        .fold(0u128, u128::saturating_add)
}

/// All pairs `(i, Y')` with `Y' ⊆ Z_i ∩ support`, `|Y'| <= budget`; `i`
/// ascending, then `Y'` by size, then lexicographically.
pub fn enumerate_pairs(
    zf: &ZFamily,
    support: &[bool],
    budget: usize,
    max_pairs: u64,
) -> Result<impl Iterator<Item = Pair>> {
    let count = pair_count(zf, support, budget);
    if count > max_pairs as u128 {
        return Err(Error::PairLimitExceeded {
            count,
            limit: max_pairs,
        });
    }
    let pools: Vec<Vec<usize>> = zf
        .zsets
        .iter()
        .map(|z| z.iter().copied().filter(|&v| support[v]).collect())
        .collect();
    Ok(pools.into_iter().enumerate().flat_map(move |(i, pool)| {
        (0..=budget.min(pool.len())).flat_map(move |s| {
            pool.clone()
                .into_iter()
                .combinations(s)
                .map(move |y| Pair { i: i + 1, y })
        })
    }))
}

/// A solve call: problem instance, its embedding and the budget `k`.
pub struct SolveRequest {
    pub instance: Instance,
    pub embedding: EmbeddedGraph,
    pub k: usize,
    pub p: Option<usize>,
    pub max_pairs: u64,
    pub provider: Box<dyn CandidateProvider + Send + Sync>,
}

impl SolveRequest {
    pub fn new(instance: Instance, embedding: EmbeddedGraph, k: usize) -> Self {
        SolveRequest {
            instance,
            embedding,
            k,
            p: None,
            max_pairs: DEFAULT_MAX_PAIRS,
            provider: Box::new(TrivialCandidates),
        }
    }

    pub fn with_p(mut self, p: usize) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_max_pairs(mut self, max_pairs: u64) -> Self {
        self.max_pairs = max_pairs;
        self
    }

    pub fn with_provider(mut self, provider: Box<dyn CandidateProvider + Send + Sync>) -> Self {
        self.provider = provider;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SolveStats {
    pub pairs: usize,
    pub feasible_pairs: usize,
    pub max_width: usize,
    pub mean_width: f64,
    /// Largest `width / (p + |Y'| + 1)` over the pairs.
    pub max_width_ratio: f64,
    pub p: usize,
    pub time_ms: u128,
    pub table_bound_violations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveResult {
    pub problem: ProblemKind,
    pub k: usize,
    pub feasible: bool,
    pub opt: Option<usize>,
    pub solution: Option<Solution>,
    /// The pair that produced the returned solution.
    pub best_pair: Option<Pair>,
    pub stats: SolveStats,
}

/// Runs the full enumeration on a connected embedded instance.
///
/// Every pair is evaluated; the first pair in enumeration order that attains
/// the minimum supplies the solution. When the true optimum is at most `k`
/// it is returned exactly.
pub fn solve(req: &SolveRequest) -> Result<SolveResult> {
    let start = Instant::now();
    let inst = &req.instance;
    let g = inst.graph();
    if req.embedding.graph() != g {
        return Err(Error::InvalidRequest("embedding and instance graphs differ".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let kind = inst.kind();
    let p = req.p.unwrap_or_else(|| default_p(req.k));
    if p == 0 {
        return Err(Error::InvalidRequest("p must be at least 1".into()));
    }
    let mut result = SolveResult {
        problem: kind,
        k: req.k,
        feasible: false,
        opt: None,
        solution: None,
        best_pair: None,
        stats: SolveStats {
            p,
            ..SolveStats::default()
        },
    };
    if g.n() == 0 || req.k == 0 {
        let empty = Solution::empty(kind);
        if !has_violation(inst, &empty) {
            result.feasible = true;
            result.opt = Some(0);
            result.solution = Some(empty);
        }
        result.stats.time_ms = start.elapsed().as_millis();
        return Ok(result);
    }

    let (_, _, lay) = layers_of(&req.embedding)?;
    let zf = build_zsets(&lay, p);
    let cand: CandidateSet = req.provider.candidates(inst);
    let support = cand.vertex_support(g);
    let budget = exception_budget(kind, req.k, p);
    info!(
        "{kind}: n={} m={} k={} p={p} layers={} budget={budget} pairs={}",
        g.n(),
        g.m(),
        req.k,
        lay.m(),
        pair_count(&zf, &support, budget)
    );

    let mut width_sum = 0usize;
    let mut best: Option<(usize, Solution, Pair)> = None;
    for pair in enumerate_pairs(&zf, &support, budget, req.max_pairs)? {
        let x = pair.contracted(&zf);
        let (out, width) = solve_restricted(inst, &x, &cand)?;
        let stats = &mut result.stats;
        stats.pairs += 1;
        width_sum += width;
        stats.max_width = stats.max_width.max(width);
        let ratio = width as f64 / (p + pair.y.len() + 1) as f64;
        stats.max_width_ratio = stats.max_width_ratio.max(ratio);
        stats.table_bound_violations += out.stats.table_bound_violations;
        if let (Some(cost), Some(sol)) = (out.cost, out.solution) {
            stats.feasible_pairs += 1;
            debug!("pair i={} |Y'|={} width={width} cost={cost}", pair.i, pair.y.len());
            if best.as_ref().is_none_or(|(c, _, _)| cost < *c) {
                best = Some((cost, sol, pair));
            }
        }
    }
    result.stats.mean_width = if result.stats.pairs > 0 {
        width_sum as f64 / result.stats.pairs as f64
    } else {
        0.0
    };
    if let Some((cost, sol, pair)) = best {
        if cost <= req.k {
            debug_assert!(!has_violation(inst, &sol));
            result.feasible = true;
            result.opt = Some(cost);
            result.solution = Some(sol.normalized());
            result.best_pair = Some(pair);
        }
    }
    result.stats.time_ms = start.elapsed().as_millis();
    Ok(result)
}

/// Smallest `k` for which [`solve`] is feasible, trying `k = 0, 1, ...`.
pub fn minimize(instance: Instance, embedding: EmbeddedGraph, max_pairs: u64) -> Result<SolveResult> {
    let limit = if instance.kind().deletes_vertices() {
        instance.graph().n()
    } else {
        instance.graph().m()
    };
    for k in 0..=limit {
        let req = SolveRequest::new(instance.clone(), embedding.clone(), k).with_max_pairs(max_pairs);
        let res = solve(&req)?;
        if res.feasible {
            return Ok(res);
        }
    }
    unreachable!("deleting everything is always a solution")
}

/// Solves each connected component separately with the same budget and
/// sums the optima. Component solutions are mapped back to original ids.
pub fn solve_split(
    instance: &Instance,
    embedding: &EmbeddedGraph,
    k: usize,
    p: Option<usize>,
    max_pairs: u64,
) -> Result<SolveResult> {
    let start = Instant::now();
    let comps = instance.graph().components();
    let kind = instance.kind();
    let mut total = 0usize;
    let mut feasible = true;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut stats = SolveStats::default();
    let mut width_weighted = 0.0;
    for comp in &comps {
        let sub_inst = instance.induced(comp);
        let (sub_eg, _) = embedding.induced(comp);
        let mut req = SolveRequest::new(sub_inst, sub_eg, k).with_max_pairs(max_pairs);
        if let Some(p) = p {
            req = req.with_p(p);
        }
        let r = solve(&req)?;
        stats.pairs += r.stats.pairs;
        stats.feasible_pairs += r.stats.feasible_pairs;
        stats.max_width = stats.max_width.max(r.stats.max_width);
        stats.max_width_ratio = stats.max_width_ratio.max(r.stats.max_width_ratio);
        stats.p = stats.p.max(r.stats.p);
        stats.table_bound_violations += r.stats.table_bound_violations;
        width_weighted += r.stats.mean_width * r.stats.pairs as f64;
        match (r.opt, r.solution) {
            (Some(opt), Some(sol)) => {
                total += opt;
                match sol {
                    Solution::Vertices(vs) => vertices.extend(vs.into_iter().map(|v| comp[v])),
                    Solution::Edges(es) => edges.extend(es.into_iter().map(|(a, b)| (comp[a], comp[b]))),
                }
            }
            _ => feasible = false,
        }
    }
    if stats.pairs > 0 {
        stats.mean_width = width_weighted / stats.pairs as f64;
    }
    if stats.p == 0 {
        stats.p = p.unwrap_or_else(|| default_p(k));
    }
    feasible &= total <= k;
    let solution = feasible.then(|| {
        if kind.deletes_vertices() {
            Solution::Vertices(vertices)
        } else {
            Solution::Edges(edges)
        }
        .normalized()
    });
    stats.time_ms = start.elapsed().as_millis();
    Ok(SolveResult {
        problem: kind,
        k,
        feasible,
        opt: feasible.then_some(total),
        solution,
        best_pair: None,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::Graph;
    use crate::oracle::{brute_force, OracleLimits};

    fn zf(sets: Vec<Vec<usize>>) -> ZFamily {
        ZFamily {
            p: sets.len(),
            zsets: sets,
        }
    }

    #[test]
    fn pairs_in_order() {
        // a = 0, b = 1, c = 2.
        let z = zf(vec![vec![0], vec![1, 2]]);
        let pairs: Vec<Pair> = enumerate_pairs(&z, &[true; 3], 1, 100).unwrap().collect();
        let expect = vec![
            Pair { i: 1, y: vec![] },
            Pair { i: 1, y: vec![0] },
            Pair { i: 2, y: vec![] },
            Pair { i: 2, y: vec![1] },
            Pair { i: 2, y: vec![2] },
        ];
        assert_eq!(pairs, expect);
    }

    #[test]
    fn zero_budget_and_empty_support() {
        let z = zf(vec![vec![0, 3], vec![1, 2], vec![4]]);
        assert_eq!(enumerate_pairs(&z, &[true; 5], 0, 100).unwrap().count(), 3);
        assert_eq!(enumerate_pairs(&z, &[false; 5], 4, 100).unwrap().count(), 3);
    }

    #[test]
    fn pair_limit() {
        let z = zf(vec![(0..30).collect()]);
        assert!(matches!(
            enumerate_pairs(&z, &[true; 30], 10, 1000),
            Err(Error::PairLimitExceeded { .. })
        ));
    }

    #[test]
    fn pair_count_matches_closed_form() {
        let z = zf(vec![(0..7).collect(), (7..12).collect()]);
        let n = enumerate_pairs(&z, &[true; 12], 3, u64::MAX).unwrap().count();
        let expect: u128 = [7usize, 5]
            .iter()
            .map(|&a| (0..=3).map(|s| binomial(a, s)).sum::<u128>())
            .sum();
        assert_eq!(n as u128, expect);
        assert_eq!(pair_count(&z, &[true; 12], 3), expect);
    }

    fn c5() -> EmbeddedGraph {
        let g = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let rot = (0..5).map(|i| vec![(i + 1) % 5, (i + 4) % 5]).collect();
        EmbeddedGraph::new(g, rot, None).unwrap()
    }

    #[test]
    fn c5_oct() {
        let eg = c5();
        let r = solve(&SolveRequest::new(Instance::oct(eg.graph().clone()), eg.clone(), 1)).unwrap();
        assert!(r.feasible);
        assert_eq!(r.opt, Some(1));
        let r0 = solve(&SolveRequest::new(Instance::oct(eg.graph().clone()), eg, 0)).unwrap();
        assert!(!r0.feasible);
    }

    #[test]
    fn bipartite_needs_nothing() {
        let eg = gen::gen_grid(4, 4).unwrap();
        for k in [0, 1, 3] {
            let r = solve(&SolveRequest::new(Instance::oct(eg.graph().clone()), eg.clone(), k)).unwrap();
            assert_eq!(r.opt, Some(0));
            assert_eq!(r.solution, Some(Solution::Vertices(vec![])));
        }
    }

    #[test]
    fn stacked_matches_oracle() {
        let eg = gen::gen_stacked_triangulation(12, 7).unwrap();
        let inst = Instance::oct(eg.graph().clone());
        let (opt, _) = brute_force(&inst, OracleLimits::default()).unwrap();
        let r = solve(&SolveRequest::new(inst.clone(), eg.clone(), 4)).unwrap();
        assert!(opt <= 4);
        assert_eq!(r.opt, Some(opt));
        assert!(!has_violation(&inst, r.solution.as_ref().unwrap()));
        // Determinism of results and stats apart from time.
        let r2 = solve(&SolveRequest::new(inst, eg, 4)).unwrap();
        assert_eq!(r.solution, r2.solution);
        assert_eq!((r.stats.pairs, r.stats.max_width), (r2.stats.pairs, r2.stats.max_width));
    }

    #[test]
    fn minimize_finds_optimum() {
        let eg = gen::gen_stacked_triangulation(9, 2).unwrap();
        let inst = Instance::eb(eg.graph().clone());
        let (opt, _) = brute_force(&inst, OracleLimits::default()).unwrap();
        let r = minimize(inst, eg, DEFAULT_MAX_PAIRS).unwrap();
        assert_eq!(r.opt, Some(opt));
    }

    #[test]
    fn split_sums_components() {
        // Two disjoint triangles.
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let rot = vec![
            vec![1, 2],
            vec![2, 0],
            vec![0, 1],
            vec![4, 5],
            vec![5, 3],
            vec![3, 4],
        ];
        let eg = EmbeddedGraph::new(g.clone(), rot, None).unwrap();
        let inst = Instance::oct(g);
        let r = solve_split(&inst, &eg, 2, None, DEFAULT_MAX_PAIRS).unwrap();
        assert_eq!(r.opt, Some(2));
        assert!(!has_violation(&inst, r.solution.as_ref().unwrap()));
        let r1 = solve_split(&inst, &eg, 1, None, DEFAULT_MAX_PAIRS).unwrap();
        assert!(!r1.feasible);
        assert!(matches!(
            solve(&SolveRequest::new(inst, eg, 2)),
            Err(Error::Disconnected)
        ));
    }
}
