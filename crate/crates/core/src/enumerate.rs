//! Exhaustive enumeration of valid `(n, B, D, sigma)` descriptions.

use alloc::vec::Vec;

use crate::circulant::{directed_candidates, undirected_candidates, GraphSpec, Sign};

/// Number of valid specs of order `n`.
///
/// A directed candidate (divisor of `n/4`) is in `B`, or outside `B` and
/// either absent from `D` or present with one of two signs; every other
/// proper divisor is simply in or out of `B`.
pub fn count_specs(n: u64) -> u128 {
    if n < 2 {
        return 1;
    }
    let proper = undirected_candidates(n).len() as u32;
    let dir = directed_candidates(n).len() as u32;
    4u128.pow(dir) * 2u128.pow(proper - dir)
}

fn subsets(items: &[u64]) -> impl Iterator<Item = Vec<u64>> + '_ {
    (0u64..1 << items.len()).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect()
    })
}

/// Every sign assignment on `k` directed classes.
pub fn sign_assignments(k: usize) -> impl Iterator<Item = Vec<Sign>> {
    (0u64..1 << k).map(move |mask| {
        (0..k)
            .map(|i| {
                if mask >> (k - 1 - i) & 1 == 1 {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect()
    })
}

/// Every valid spec of order `n`, sorted lexicographically by
/// `(B, D, sigma)` with `B` and `D` as ascending sequences and
/// `-1 < +1`.
pub fn enumerate_specs(n: u64) -> Vec<GraphSpec> {
    let proper = undirected_candidates(n);
    let dir = directed_candidates(n);
    let mut keyed = Vec::new();
    for b in subsets(&proper) {
        let free: Vec<u64> = dir.iter().copied().filter(|d| !b.contains(d)).collect();
        for d in subsets(&free) {
            for signs in sign_assignments(d.len()) {
                let pairs: Vec<(u64, i64)> =
                    d.iter().zip(&signs).map(|(&d, s)| (d, s.value())).collect();
                let spec = GraphSpec::build(n, &b, &pairs).expect("enumerated specs are valid");
                keyed.push(((b.clone(), d.clone(), signs), spec));
            }
        }
    }
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    keyed.into_iter().map(|(_, s)| s).collect()
}

/// The same `(n, B, D)` under every sign assignment.
pub fn sigma_variants(spec: &GraphSpec) -> Vec<GraphSpec> {
    sign_assignments(spec.sigma().len())
        .map(|signs| spec.with_signs(&signs))
        .collect()
}
