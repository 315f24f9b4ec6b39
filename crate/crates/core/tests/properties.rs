//! Randomised properties over generated planar instances.

use std::collections::BTreeSet;

use cdt::gen::{self, LabelMode};
use cdt::layering::layers_of;
use cdt::solver::{enumerate_pairs, pair_count};
use cdt::{
    brute_force, build_zsets, candidate_trivial, component_orbit, contract, heuristic_decompose,
    make_nice, solve, solve_restricted, EmbeddedGraph, Group, Instance, OracleLimits, ProblemKind,
    SolveRequest,
};
use proptest::prelude::*;

fn embedding(kind: u8, size: usize, seed: u64) -> EmbeddedGraph {
    match kind % 3 {
        0 => gen::gen_stacked_triangulation(4 + size % 6, seed).unwrap(),
        1 => gen::thin_edges(&gen::gen_grid(3, 2 + size % 3).unwrap(), 0.8, seed).unwrap(),
        _ => gen::gen_nested_cycles(2, 3 + size % 3).unwrap(),
    }
}

fn instance(eg: &EmbeddedGraph, problem: ProblemKind, seed: u64) -> Instance {
    let g = eg.graph().clone();
    let labels = problem
        .is_group()
        .then(|| gen::gen_labels(&g, &Group::cyclic(3), LabelMode::Uniform, seed).unwrap());
    Instance::new(g, problem, labels).unwrap()
}

fn problem(t: u8) -> ProblemKind {
    [ProblemKind::Oct, ProblemKind::Eb, ProblemKind::Gfvs, ProblemKind::Gfes][t as usize % 4]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dp_without_contraction_matches_oracle(k in 0u8..3, size in 0usize..6, seed in 0u64..1000, t in 0u8..4) {
        let eg = embedding(k, size, seed);
        let inst = instance(&eg, problem(t), seed);
        let cand = candidate_trivial(inst.graph(), inst.kind());
        let (opt, _) = brute_force(&inst, OracleLimits::default()).unwrap();
        let (out, _) = solve_restricted(&inst, &[], &cand).unwrap();
        prop_assert_eq!(out.cost, Some(opt));
        prop_assert!(out.stats.table_bound_ok());
    }

    #[test]
    fn solver_is_sound_and_deterministic(k in 0u8..3, size in 0usize..6, seed in 0u64..1000, t in 0u8..4, budget in 0usize..4) {
        let eg = embedding(k, size, seed);
        let inst = instance(&eg, problem(t), seed);
        let req = SolveRequest::new(inst.clone(), eg, budget);
        let mut a = solve(&req).unwrap();
        let mut b = solve(&req).unwrap();
        a.stats.time_ms = 0;
        b.stats.time_ms = 0;
        prop_assert_eq!(&a, &b);
        if let Some(sol) = &a.solution {
            prop_assert!(sol.len() <= budget);
            prop_assert!(!cdt::has_violation(&inst, sol));
        }
        let (opt, _) = brute_force(&inst, OracleLimits::default()).unwrap();
        prop_assert_eq!(a.feasible, opt <= budget);
    }

    #[test]
    fn contraction_expands_back(k in 0u8..3, size in 0usize..6, seed in 0u64..1000) {
        let eg = embedding(k, size, seed);
        let g = eg.graph();
        let mut rng = gen::rng(seed);
        let x = gen::random_connected_subset(g, &vec![true; g.n()], 5, &mut rng);
        let cm = contract(g, &x);
        let mut rebuilt: BTreeSet<usize> = cm.edge_provenance.iter().flatten().copied().collect();
        rebuilt.extend(cm.internal_edges.iter().flatten().copied());
        prop_assert_eq!(rebuilt, (0..g.m()).collect::<BTreeSet<_>>());
        for (q, prov) in cm.edge_provenance.iter().enumerate() {
            let (a, b) = cm.quotient.edges()[q];
            for &e in prov {
                let (u, v) = g.edges()[e];
                let ends = [cm.rep[u], cm.rep[v]];
                prop_assert!(ends == [a, b] || ends == [b, a]);
            }
        }
        for (s, members) in cm.members.iter().enumerate() {
            prop_assert!(members.iter().all(|&v| cm.rep[v] == s));
        }
    }

    #[test]
    fn orbits_have_full_size(k in 0u8..3, size in 0usize..6, seed in 0u64..1000, t in 0u8..4) {
        let eg = embedding(k, size, seed);
        let inst = instance(&eg, problem(t), seed);
        let g = inst.graph();
        let mut rng = gen::rng(seed + 1);
        let comp = gen::random_connected_subset(g, &vec![true; g.n()], 4, &mut rng);
        let orbit = component_orbit(&inst, &comp);
        if !orbit.infeasible {
            prop_assert_eq!(orbit.states.len(), inst.label_count());
            let distinct: BTreeSet<_> = orbit.states.iter().collect();
            prop_assert_eq!(distinct.len(), orbit.states.len());
        }
    }

    #[test]
    fn layers_and_zsets_partition(k in 0u8..3, size in 0usize..6, seed in 0u64..1000, p in 1usize..5) {
        let eg = embedding(k, size, seed);
        let (_, _, lay) = layers_of(&eg).unwrap();
        let zf = build_zsets(&lay, p);
        let n = eg.graph().n();
        prop_assert_eq!(lay.layers.iter().map(Vec::len).sum::<usize>(), n);
        let all: BTreeSet<usize> = zf.zsets.iter().flatten().copied().collect();
        prop_assert_eq!(all.len(), n);
        prop_assert_eq!(zf.zsets.iter().map(Vec::len).sum::<usize>(), n);
    }

    #[test]
    fn pair_stream_matches_closed_form(k in 0u8..3, size in 0usize..6, seed in 0u64..1000, p in 1usize..4, budget in 0usize..3) {
        let eg = embedding(k, size, seed);
        let (_, _, lay) = layers_of(&eg).unwrap();
        let zf = build_zsets(&lay, p);
        let support: Vec<bool> = (0..eg.graph().n()).map(|v| !(v as u64 + seed).is_multiple_of(3)).collect();
        let pairs: Vec<_> = enumerate_pairs(&zf, &support, budget, u64::MAX).unwrap().collect();
        prop_assert_eq!(pairs.len() as u128, pair_count(&zf, &support, budget));
        let distinct: BTreeSet<_> = pairs.iter().map(|p| (p.i, p.y.clone())).collect();
        prop_assert_eq!(distinct.len(), pairs.len());
    }

    #[test]
    fn nice_form_preserves_width(seed in 0u64..1000, n in 4usize..40) {
        let g = gen::gen_stacked_triangulation(n, seed).unwrap().graph().clone();
        let td = heuristic_decompose(&g);
        let ntd = make_nice(&g, &td);
        prop_assert_eq!(ntd.width(), td.width());
        prop_assert_eq!(ntd.validate(&g), Ok(()));
    }
}
