//! Peel a grid into layers and group them into residue-class sets.
//!
//! ```bash
//! cargo run --example layers
//! ```

use cdt::gen;
use cdt::layering::layers_of;
use cdt::{build_zsets, check_layer_invariants};

fn main() -> cdt::Result<()> {
    let eg = gen::gen_grid(7, 7)?;
    let (fs, vfi, lay) = layers_of(&eg)?;
    println!(
        "7x7 grid: {} faces, {} vertex-face incidences, {} layers",
        fs.len(),
        vfi.incidences(),
        lay.m()
    );
    for (i, layer) in lay.layers.iter().enumerate() {
        println!("  L_{} = {layer:?}", i + 1);
    }
    println!("invariants hold: {}", check_layer_invariants(&eg, &fs, &lay).ok());

    let zf = build_zsets(&lay, 2);
    for i in 1..=zf.p {
        println!("  Z_{i} has {} vertices", zf.z(i).len());
    }
    Ok(())
}
