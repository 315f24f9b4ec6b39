//! Odd cycle transversal on a stacked triangulation, checked against the
//! exhaustive oracle.
//!
//! ```bash
//! cargo run --release --example solve_oct -- 14 7
//! ```

use cdt::gen;
use cdt::{brute_force, has_violation, solve, Instance, OracleLimits, SolveRequest};

fn main() -> cdt::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer"));
    let n = args.next().unwrap_or(14) as usize;
    let seed = args.next().unwrap_or(7);

    let eg = gen::gen_stacked_triangulation(n, seed)?;
    let inst = Instance::oct(eg.graph().clone());
    let (opt, _) = brute_force(&inst, OracleLimits::default())?;

    for k in opt.saturating_sub(1)..=opt {
        let res = solve(&SolveRequest::new(inst.clone(), eg.clone(), k))?;
        println!(
            "k={k}: feasible={} opt={:?} pairs={} max_width={}",
            res.feasible, res.opt, res.stats.pairs, res.stats.max_width
        );
        if let Some(sol) = &res.solution {
            println!("  transversal {sol:?}, verified: {}", !has_violation(&inst, sol));
        }
    }
    println!("oracle optimum {opt}");
    Ok(())
}
