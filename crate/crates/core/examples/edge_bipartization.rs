//! Minimum edge bipartization of a stacked triangulation.
//!
//! ```bash
//! cargo run --release --example edge_bipartization
//! ```

use cdt::gen;
use cdt::solver::minimize;
use cdt::{Instance, Solution};

fn main() -> cdt::Result<()> {
    let eg = gen::gen_stacked_triangulation(9, 3)?;
    let inst = Instance::eb(eg.graph().clone());
    let res = minimize(inst, eg, cdt::solver::DEFAULT_MAX_PAIRS)?;
    println!("minimum edge bipartization: {:?}", res.opt);
    if let Some(Solution::Edges(edges)) = &res.solution {
        println!("  delete {edges:?}");
    }
    println!(
        "  p={} pairs={} mean width {:.2}",
        res.stats.p, res.stats.pairs, res.stats.mean_width
    );
    Ok(())
}
