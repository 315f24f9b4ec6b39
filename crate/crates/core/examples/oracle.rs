//! Exhaustive optima, restricted optima, and the violation checker.
//!
//! ```bash
//! cargo run --example oracle
//! ```

use cdt::oracle::all_optima;
use cdt::{brute_force, brute_force_restricted, has_violation, Graph, Instance, OracleLimits, Solution};

fn main() -> cdt::Result<()> {
    let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5)))?;
    let inst = Instance::oct(c5);
    let limits = OracleLimits::default();

    println!("C_5 odd cycle transversal: {:?}", brute_force(&inst, limits)?);
    println!("optima: {:?}", all_optima(&inst, &[], limits)?);
    println!(
        "avoiding {{0, 1, 2}}: {:?}",
        brute_force_restricted(&inst, &[0, 1, 2], limits)?
    );
    println!(
        "deleting nothing leaves an odd cycle: {}",
        has_violation(&inst, &Solution::Vertices(vec![]))
    );
    Ok(())
}
