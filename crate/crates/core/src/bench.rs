//! Width probes and benchmark rows.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::contraction::contract;
use crate::error::Result;
use crate::gen;
use crate::graph::EmbeddedGraph;
use crate::layering::{build_zsets, layers_of, ZFamily};
use crate::treewidth::heuristic_decompose;

/// Heuristic width of `G / (Z_i \ Z')`.
pub fn contracted_width(eg: &EmbeddedGraph, zf: &ZFamily, i: usize, zprime: &[usize]) -> usize {
    let x: Vec<usize> = zf
        .z(i)
        .iter()
        .copied()
        .filter(|v| !zprime.contains(v))
        .collect();
    let cm = contract(eg.graph(), &x);
    heuristic_decompose(&cm.quotient).width()
}

#[derive(Clone, Debug, Serialize)]
pub struct WidthSample {
    pub p: usize,
    pub i: usize,
    pub zprime: usize,
    pub width: usize,
    /// `width / (p + |Z'| + 1)`.
    pub ratio: f64,
}

/// `samples` random draws of `i` and `Z' ⊆ Z_i` with `|Z'| <= max_zprime`.
pub fn sample_widths(
    eg: &EmbeddedGraph,
    p: usize,
    samples: usize,
    max_zprime: usize,
    seed: u64,
) -> Result<Vec<WidthSample>> {
    let (_, _, lay) = layers_of(eg)?;
    let zf = build_zsets(&lay, p);
    let mut rng = gen::rng(seed);
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let i = rng.gen_range(1..=p);
        let z = zf.z(i);
        let size = rng.gen_range(0..=max_zprime.min(z.len()));
        let mut zprime: Vec<usize> = z.choose_multiple(&mut rng, size).copied().collect();
        zprime.sort_unstable();
        let width = contracted_width(eg, &zf, i, &zprime);
        out.push(WidthSample {
            p,
            i,
            zprime: zprime.len(),
            width,
            ratio: width as f64 / (p + zprime.len() + 1) as f64,
        });
    }
    Ok(out)
}

/// One CSV row of `cdt bench`.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub p: usize,
    pub pairs: usize,
    pub max_width: usize,
    pub width_ratio: f64,
    pub opt: Option<usize>,
    pub time_ms: u128,
}

pub const BENCH_HEADER: &str = "instance,n,m,p,pairs,max_width,width_ratio,opt,time_ms";

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.4},{},{}",
            self.instance,
            self.n,
            self.m,
            self.p,
            self.pairs,
            self.max_width,
            self.width_ratio,
            self.opt.map(|o| o.to_string()).unwrap_or_default(),
            self.time_ms
        )
    }
}
