#![allow(dead_code)]

use imcg_core::circulant::{directed_candidates, undirected_candidates};
use imcg_core::{enumerate_specs, GraphSpec};

pub fn spec(n: u64, b: &[u64], d: &[(u64, i64)]) -> GraphSpec {
    GraphSpec::build(n, b, d).unwrap()
}

/// Every valid spec for each modulus, in enumeration order.
pub fn all_specs(ns: impl IntoIterator<Item = u64>) -> impl Iterator<Item = GraphSpec> {
    ns.into_iter().flat_map(enumerate_specs)
}

/// A valid spec picked from bit masks; used to drive randomized properties.
pub fn spec_from_bits(n: u64, b_bits: u64, d_bits: u64, s_bits: u64) -> GraphSpec {
    let b: Vec<u64> = undirected_candidates(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| b_bits >> (i % 64) & 1 == 1)
        .map(|(_, d)| d)
        .collect();
    let d: Vec<(u64, i64)> = directed_candidates(n)
        .into_iter()
        .enumerate()
        .filter(|(i, d)| d_bits >> (i % 64) & 1 == 1 && !b.contains(d))
        .map(|(i, d)| (d, if s_bits >> (i % 64) & 1 == 1 { 1 } else { -1 }))
        .collect();
    spec(n, &b, &d)
}
