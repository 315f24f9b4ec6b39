//! Small hand-checked instances run through the public API.

use cdt::candidate::CandidateKind;
use cdt::gen::{self, LabelMode};
use cdt::layering::layers_of;
use cdt::solver::{enumerate_pairs, minimize};
use cdt::treewidth::{NiceKind, Violation};
use cdt::{
    brute_force, brute_force_restricted, build_vfi, build_zsets, candidate_trivial,
    check_layer_invariants, component_orbit, contract, exact_treewidth, has_violation,
    heuristic_decompose, make_nice, solve, solve_restricted, trace_faces, validate_decomposition,
    EmbeddedGraph, Error, Graph, Group, GroupLabels, Instance, Layering, OracleLimits, ProblemKind,
    Solution, SolveRequest, TreeDecomposition, ZFamily,
};

fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

fn triangle_embedding() -> EmbeddedGraph {
    EmbeddedGraph::new(cycle(3), vec![vec![1, 2], vec![2, 0], vec![0, 1]], None).unwrap()
}

fn limits() -> OracleLimits {
    OracleLimits::default()
}

#[test]
fn faces_of_small_embeddings() {
    let fs = trace_faces(&triangle_embedding()).unwrap();
    assert_eq!(fs.len(), 2);
    assert!(fs.boundary.iter().all(|b| b == &[0, 1, 2]));

    let p3 = EmbeddedGraph::new(path(3), vec![vec![1], vec![0, 2], vec![1]], None).unwrap();
    let fs = trace_faces(&p3).unwrap();
    assert_eq!(fs.len(), 1);
    assert_eq!(fs.boundary[0], vec![0, 1, 2]);

    let grid = gen::gen_grid(3, 3).unwrap();
    assert_eq!(grid.graph().m(), 12);
    assert_eq!(trace_faces(&grid).unwrap().len(), 5);
}

#[test]
fn vertex_face_incidences() {
    let eg = triangle_embedding();
    let vfi = build_vfi(&eg, &trace_faces(&eg).unwrap()).unwrap();
    assert_eq!((vfi.n_vertices, vfi.n_faces, vfi.incidences()), (3, 2, 6));

    let k2 = EmbeddedGraph::new(path(2), vec![vec![1], vec![0]], None).unwrap();
    let vfi = build_vfi(&k2, &trace_faces(&k2).unwrap()).unwrap();
    assert_eq!((vfi.n_vertices, vfi.n_faces, vfi.incidences()), (2, 1, 2));

    let grid = gen::gen_grid(3, 3).unwrap();
    let vfi = build_vfi(&grid, &trace_faces(&grid).unwrap()).unwrap();
    assert_eq!(vfi.faces_of(4).count(), 4);
}

#[test]
fn onion_layers() {
    let (_, _, lay) = layers_of(&triangle_embedding()).unwrap();
    assert_eq!(lay.layers, vec![vec![0, 1, 2]]);

    let prism = gen::gen_nested_cycles(2, 3).unwrap();
    let (fs, _, lay) = layers_of(&prism).unwrap();
    assert_eq!(lay.layers, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    assert!(check_layer_invariants(&prism, &fs, &lay).ok());

    let grid = gen::gen_grid(3, 3).unwrap();
    let (fs, _, lay) = layers_of(&grid).unwrap();
    assert_eq!(lay.layers, vec![vec![0, 1, 2, 3, 5, 6, 7, 8], vec![4]]);
    assert!(check_layer_invariants(&grid, &fs, &lay).ok());

    let nested = gen::gen_nested_cycles(3, 4).unwrap();
    let (_, _, lay) = layers_of(&nested).unwrap();
    for i in 1..=3 {
        assert_eq!(lay.layer(i), &((i - 1) * 4..i * 4).collect::<Vec<_>>()[..]);
    }

    let star = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
    let star = EmbeddedGraph::new(star, vec![vec![1, 2, 3, 4], vec![0], vec![0], vec![0], vec![0]], None).unwrap();
    let (fs, _, lay) = layers_of(&star).unwrap();
    assert_eq!(lay.m(), 1);
    assert!(check_layer_invariants(&star, &fs, &lay).ok());
}

#[test]
fn z_sets_by_residue() {
    let lay = Layering {
        layers: (0..5).map(|i| vec![i]).collect(),
        level_of: (1..=5).collect(),
    };
    let zf = build_zsets(&lay, 2);
    assert_eq!(zf.z(1), &[0, 2, 4]);
    assert_eq!(zf.z(2), &[1, 3]);
    assert_eq!(build_zsets(&lay, 1).z(1), &[0, 1, 2, 3, 4]);
    let wide = build_zsets(&lay, 7);
    assert!((1..=5).all(|i| wide.z(i) == [i - 1]));
    assert!(wide.z(6).is_empty() && wide.z(7).is_empty());
}

#[test]
fn contraction_examples() {
    let g = gen::gen_grid(3, 3).unwrap().graph().clone();
    let id = contract(&g, &[]);
    assert_eq!(id.quotient, g);
    assert!(id.is_contracted.iter().all(|&c| !c));

    let all = contract(&g, &(0..9).collect::<Vec<_>>());
    assert_eq!((all.quotient.n(), all.quotient.m()), (1, 0));

    let prism = gen::gen_nested_cycles(2, 3).unwrap().graph().clone();
    let cm = contract(&prism, &[3, 4, 5]);
    assert_eq!(cm.quotient.n(), 4);
    assert_eq!(cm.quotient.m(), 6);
    assert_eq!(cm.internal_edges[cm.rep[3]].len(), 3);
}

#[test]
fn orbit_sizes() {
    let edge = Instance::oct(path(2));
    assert_eq!(component_orbit(&edge, &[0, 1]).states.len(), 2);

    let tri = Instance::oct(cycle(3));
    assert!(component_orbit(&tri, &[0, 1, 2]).infeasible);

    let tree = path(4);
    let labels = gen::gen_labels(&tree, &Group::cyclic(3), LabelMode::Uniform, 3).unwrap();
    let inst = Instance::new(tree, ProblemKind::Gfvs, Some(labels)).unwrap();
    let orbit = component_orbit(&inst, &[0, 1, 2, 3]);
    assert_eq!(orbit.states.len(), 3);
}

#[test]
fn decomposition_widths() {
    assert_eq!(heuristic_decompose(&path(6)).width(), 1);
    assert_eq!(heuristic_decompose(&cycle(6)).width(), 2);
    assert_eq!(heuristic_decompose(&complete(4)).width(), 3);

    assert_eq!(exact_treewidth(&path(5), 16).unwrap(), 1);
    assert_eq!(exact_treewidth(gen::gen_grid(3, 3).unwrap().graph(), 16).unwrap(), 3);
    assert_eq!(exact_treewidth(&complete(5), 16).unwrap(), 4);
    assert!(matches!(
        exact_treewidth(&path(30), 16),
        Err(Error::InstanceTooLarge(_))
    ));
}

#[test]
fn decomposition_violations() {
    let g = cycle(4);
    let missing_edge = TreeDecomposition {
        bags: vec![vec![0, 1, 2], vec![2, 3]],
        parent: vec![None, Some(0)],
    };
    assert_eq!(validate_decomposition(&g, &missing_edge), Err(Violation::EdgeNotCovered(0, 3)));

    let p = path(3);
    let split = TreeDecomposition {
        bags: vec![vec![0, 1], vec![1, 2], vec![0]],
        parent: vec![None, Some(0), Some(1)],
    };
    assert_eq!(validate_decomposition(&p, &split), Err(Violation::DisconnectedOccurrence(0)));

    for seed in 0..100u64 {
        let g = gen::gen_stacked_triangulation(4 + (seed as usize % 20), seed).unwrap().graph().clone();
        assert_eq!(validate_decomposition(&g, &heuristic_decompose(&g)), Ok(()));
    }
}

#[test]
fn nice_form() {
    let k3 = cycle(3);
    let single = TreeDecomposition {
        bags: vec![vec![0, 1, 2]],
        parent: vec![None],
    };
    let ntd = make_nice(&k3, &single);
    let introduced = ntd
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NiceKind::IntroduceEdge(..)))
        .count();
    assert_eq!(introduced, 3);
    assert_eq!(ntd.validate(&k3), Ok(()));

    let p4 = path(4);
    let pd = TreeDecomposition {
        bags: vec![vec![0, 1], vec![1, 2], vec![2, 3]],
        parent: vec![None, Some(0), Some(1)],
    };
    let ntd = make_nice(&p4, &pd);
    assert_eq!(ntd.width(), 1);
    assert_eq!(ntd.validate(&p4), Ok(()));
}

#[test]
fn dp_examples() {
    let c5 = Instance::oct(cycle(5));
    let cand = candidate_trivial(c5.graph(), ProblemKind::Oct);
    assert_eq!(solve_restricted(&c5, &[], &cand).unwrap().0.cost, Some(1));

    let z2 = gen::gen_labels(&complete(4), &Group::cyclic(2), LabelMode::NonIdentity, 0).unwrap();
    let gfvs = Instance::new(complete(4), ProblemKind::Gfvs, Some(z2)).unwrap();
    let cand = candidate_trivial(gfvs.graph(), ProblemKind::Gfvs);
    assert_eq!(solve_restricted(&gfvs, &[], &cand).unwrap().0.cost, Some(2));

    let c6 = Instance::oct(cycle(6));
    let cand = candidate_trivial(c6.graph(), ProblemKind::Oct);
    assert_eq!(solve_restricted(&c6, &[0, 1], &cand).unwrap().0.cost, Some(0));

    let k4 = Instance::oct(complete(4));
    let cand = candidate_trivial(k4.graph(), ProblemKind::Oct);
    assert_eq!(solve_restricted(&k4, &[0, 1], &cand).unwrap().0.cost, Some(2));
}

#[test]
fn traceback_examples() {
    let c5 = Instance::oct(cycle(5));
    let cand = candidate_trivial(c5.graph(), ProblemKind::Oct);
    let sol = solve_restricted(&c5, &[], &cand).unwrap().0.solution.unwrap();
    assert_eq!(sol.len(), 1);
    assert!(!has_violation(&c5, &sol));

    let eb = Instance::eb(complete(4));
    let cand = candidate_trivial(eb.graph(), ProblemKind::Eb);
    let sol = solve_restricted(&eb, &[], &cand).unwrap().0.solution.unwrap();
    assert_eq!(sol.len(), 2);
    assert!(!has_violation(&eb, &sol));

    let g = gen::gen_grid(3, 3).unwrap().graph().clone();
    let null = GroupLabels::new(&g, Group::cyclic(3), vec![0; g.m()]).unwrap();
    let gfes = Instance::new(g, ProblemKind::Gfes, Some(null)).unwrap();
    let cand = candidate_trivial(gfes.graph(), ProblemKind::Gfes);
    assert_eq!(solve_restricted(&gfes, &[], &cand).unwrap().0.solution, Some(Solution::Edges(vec![])));
}

#[test]
fn pair_stream_examples() {
    // a = 0, b = 1, c = 2.
    let zf = ZFamily {
        p: 2,
        zsets: vec![vec![0], vec![1, 2]],
    };
    let all = [true; 3];
    let pairs: Vec<(usize, Vec<usize>)> = enumerate_pairs(&zf, &all, 1, 100)
        .unwrap()
        .map(|p| (p.i, p.y))
        .collect();
    assert_eq!(
        pairs,
        vec![(1, vec![]), (1, vec![0]), (2, vec![]), (2, vec![1]), (2, vec![2])]
    );
    assert_eq!(enumerate_pairs(&zf, &all, 0, 100).unwrap().count(), 2);
    assert_eq!(enumerate_pairs(&zf, &[false; 3], 3, 100).unwrap().count(), 2);
}

#[test]
fn solver_examples() {
    let c5 = gen::gen_nested_cycles(1, 5).unwrap();
    let res = solve(&SolveRequest::new(Instance::oct(c5.graph().clone()), c5, 1)).unwrap();
    assert!(res.feasible);
    assert_eq!(res.opt, Some(1));

    let grid = gen::gen_grid(4, 5).unwrap();
    for k in [0, 2] {
        let res = solve(&SolveRequest::new(Instance::oct(grid.graph().clone()), grid.clone(), k)).unwrap();
        assert_eq!(res.opt, Some(0));
        assert_eq!(res.solution, Some(Solution::Vertices(vec![])));
    }

    let eg = gen::gen_stacked_triangulation(12, 7).unwrap();
    let inst = Instance::oct(eg.graph().clone());
    let (opt, _) = brute_force(&inst, limits()).unwrap();
    let res = solve(&SolveRequest::new(inst.clone(), eg.clone(), 4)).unwrap();
    assert_eq!(res.opt.filter(|_| opt <= 4), (opt <= 4).then_some(opt));
    assert_eq!(minimize(inst, eg, 10_000_000).unwrap().opt, Some(opt));
}

#[test]
fn trivial_candidates() {
    let g = gen::gen_grid(2, 3).unwrap().graph().clone();
    let v = candidate_trivial(&g, ProblemKind::Gfvs);
    assert_eq!((v.kind(), v.members()), (CandidateKind::Vertex, (0..6).collect()));
    let e = candidate_trivial(&g, ProblemKind::Eb);
    assert_eq!((e.kind(), e.len()), (CandidateKind::Edge, 7));
    assert!(candidate_trivial(&Graph::new(0, []).unwrap(), ProblemKind::Oct).is_empty());
}

#[test]
fn violation_checker() {
    let tri = Instance::oct(cycle(3));
    assert!(has_violation(&tri, &Solution::Vertices(vec![])));
    assert!((0..3).all(|v| !has_violation(&tri, &Solution::Vertices(vec![v]))));

    let g = cycle(3);
    let null = GroupLabels::new(&g, Group::cyclic(3), vec![0; 3]).unwrap();
    let gfes = Instance::new(g, ProblemKind::Gfes, Some(null)).unwrap();
    assert!(!has_violation(&gfes, &Solution::Edges(vec![])));
}

#[test]
fn oracle_examples() {
    assert_eq!(brute_force(&Instance::oct(complete(4)), limits()).unwrap().0, 2);
    assert_eq!(brute_force(&Instance::eb(cycle(7)), limits()).unwrap().0, 1);
    let k33 = Graph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
    assert_eq!(brute_force(&Instance::oct(k33), limits()).unwrap().0, 0);

    let c5 = Instance::oct(cycle(5));
    for v in 0..5 {
        assert_eq!(brute_force_restricted(&c5, &[v], limits()).unwrap().map(|r| r.0), Some(1));
    }
    assert_eq!(brute_force_restricted(&Instance::oct(cycle(3)), &[0, 1, 2], limits()).unwrap(), None);
    let (cost, sol) = brute_force_restricted(&Instance::eb(cycle(5)), &[0, 1], limits()).unwrap().unwrap();
    assert_eq!(cost, 1);
    assert!(!sol.touched_vertices().iter().any(|v| *v < 2));
}

#[test]
fn generators() {
    let tri = gen::gen_stacked_triangulation(3, 0).unwrap();
    assert_eq!(tri.graph().m(), 3);
    for n in 4..30 {
        assert_eq!(gen::gen_stacked_triangulation(n, n as u64).unwrap().graph().m(), 3 * n - 6);
    }
    let square = gen::gen_grid(2, 2).unwrap();
    assert_eq!((square.graph().n(), square.graph().m()), (4, 4));
    assert!((0..4).all(|v| square.graph().degree(v) == 2) && square.graph().is_connected());

    let eg = gen::gen_grid(4, 4).unwrap();
    assert_eq!(gen::thin_edges(&eg, 1.0, 3).unwrap(), eg);
    let trivial = gen::gen_labels(eg.graph(), &Group::cyclic(1), LabelMode::Uniform, 3).unwrap();
    assert!(trivial.edge_labels().iter().all(|&l| l == 0));
}
