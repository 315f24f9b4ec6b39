//! Min-fill tree decomposition, its nice form, and the exact width for
//! comparison.
//!
//! ```bash
//! cargo run --example treedecomp
//! ```

use cdt::gen;
use cdt::treewidth::{DecompositionJson, EXACT_TREEWIDTH_CAP};
use cdt::{exact_treewidth, heuristic_decompose, make_nice, validate_decomposition};

fn main() -> cdt::Result<()> {
    let g = gen::gen_grid(4, 4)?.graph().clone();
    let td = heuristic_decompose(&g);
    assert_eq!(validate_decomposition(&g, &td), Ok(()));
    let ntd = make_nice(&g, &td);
    println!(
        "4x4 grid: min-fill width {} with {} bags, nice form has {} nodes",
        td.width(),
        td.len(),
        ntd.nodes.len()
    );
    println!("exact treewidth {}", exact_treewidth(&g, EXACT_TREEWIDTH_CAP)?);
    println!("{}", serde_json::to_string(&DecompositionJson::from(&td)).unwrap());
    Ok(())
}
