//! Group feedback vertex and edge set over Z_3, plus the Z_2 case that
//! reduces to odd cycle transversal.
//!
//! ```bash
//! cargo run --release --example group_feedback
//! ```

use cdt::gen::{self, LabelMode};
use cdt::solver::minimize;
use cdt::{brute_force, Group, Instance, OracleLimits, ProblemKind};

fn main() -> cdt::Result<()> {
    let eg = gen::thin_edges(&gen::gen_grid(4, 4)?, 0.85, 11)?;
    let g = eg.graph().clone();

    let z3 = gen::gen_labels(&g, &Group::cyclic(3), LabelMode::Uniform, 11)?;
    for kind in [ProblemKind::Gfvs, ProblemKind::Gfes] {
        let inst = Instance::new(g.clone(), kind, Some(z3.clone()))?;
        let res = minimize(inst, eg.clone(), cdt::solver::DEFAULT_MAX_PAIRS)?;
        println!("{kind} over Z_3: {:?} -> {:?}", res.opt, res.solution);
    }

    let tri = gen::gen_stacked_triangulation(10, 4)?.graph().clone();
    let z2 = gen::gen_labels(&tri, &Group::cyclic(2), LabelMode::NonIdentity, 0)?;
    let gfvs = Instance::new(tri.clone(), ProblemKind::Gfvs, Some(z2))?;
    let limits = OracleLimits::default();
    println!(
        "Z_2 non-identity GFVS {} == OCT {}",
        brute_force(&gfvs, limits)?.0,
        brute_force(&Instance::oct(tri), limits)?.0
    );
    Ok(())
}
