//! Width of `G / (Z_i \ Z')` against `p + |Z'| + 1` on a large grid, as
//! benchmark CSV rows.
//!
//! ```bash
//! cargo run --release --example width_bench -- 20
//! ```

use cdt::bench::{sample_widths, BenchRow, BENCH_HEADER};
use cdt::gen;

fn main() -> cdt::Result<()> {
    let side = std::env::args().nth(1).map_or(20, |a| a.parse().expect("grid side"));
    let eg = gen::gen_grid(side, side)?;
    println!("{BENCH_HEADER}");
    for p in 2..=5 {
        let start = std::time::Instant::now();
        let samples = sample_widths(&eg, p, 30, 8, p as u64)?;
        let row = BenchRow {
            instance: format!("grid-{side}x{side}"),
            n: eg.graph().n(),
            m: eg.graph().m(),
            p,
            pairs: samples.len(),
            max_width: samples.iter().map(|s| s.width).max().unwrap_or(0),
            width_ratio: samples.iter().map(|s| s.ratio).fold(0.0, f64::max),
            opt: None,
            time_ms: start.elapsed().as_millis(),
        };
        println!("{}", row.to_csv());
    }
    Ok(())
}
