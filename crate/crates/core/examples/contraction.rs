//! Contract one residue class of a nested-cycle graph and inspect the
//! quotient and the admissible states of each contracted component.
//!
//! ```bash
//! cargo run --example contraction
//! ```

use cdt::gen;
use cdt::layering::layers_of;
use cdt::{build_zsets, component_orbit, contract, heuristic_decompose, Instance};

fn main() -> cdt::Result<()> {
    let eg = gen::gen_nested_cycles(6, 8)?;
    let (_, _, lay) = layers_of(&eg)?;
    let zf = build_zsets(&lay, 3);
    let g = eg.graph();
    println!("original: n={} m={} width={}", g.n(), g.m(), heuristic_decompose(g).width());

    let x = zf.z(1);
    let cm = contract(g, x);
    println!(
        "contracting Z_1 ({} vertices): quotient n={} m={} width={}",
        x.len(),
        cm.quotient.n(),
        cm.quotient.m(),
        heuristic_decompose(&cm.quotient).width()
    );

    let inst = Instance::oct(g.clone());
    for (s, members) in cm.members.iter().enumerate().filter(|(s, _)| cm.is_contracted[*s]) {
        let orbit = component_orbit(&inst, members);
        println!(
            "  super-vertex {s}: {} members, {} colourings",
            members.len(),
            orbit.states.len()
        );
    }
    Ok(())
}
