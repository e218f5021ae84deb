//! Divisor-set description of integral mixed circulant graphs, their
//! connection sets and Hermitian adjacency matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::numthy::{divisors, gcd, split_two, MAX_ARG};

/// Orientation choice for a directed divisor class.
///
/// `Plus` selects the residues `k` with `k/d = 1 (mod 4)`, `Minus` those with
/// `k/d = 3 (mod 4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    /// Residue class mod 4 the sign selects.
    pub fn residue(self) -> u64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => 3,
        }
    }
}

/// A validated `(n, B, D, sigma)` description.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphSpec {
    n: u64,
    undirected: Vec<u64>,
    directed: BTreeMap<u64, Sign>,
}

impl GraphSpec {
    /// Shorthand for [`validate_spec`] with `sigma` given as `(d, ±1)` pairs.
    pub fn build(n: u64, undirected: &[u64], directed: &[(u64, i64)]) -> Result<GraphSpec> {
        let d: Vec<u64> = directed.iter().map(|&(d, _)| d).collect();
        let mut sigma = BTreeMap::new();
        for &(d, s) in directed {
            sigma.insert(d, Sign::from_value(s).ok_or(Error::SigmaDomainMismatch)?);
        }
        validate_spec(n, undirected, &d, &sigma)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// The undirected divisor classes `B`, ascending.
    pub fn undirected(&self) -> &[u64] {
        &self.undirected
    }

    /// The directed divisor classes `D`, ascending.
    pub fn directed(&self) -> impl Iterator<Item = u64> + '_ {
        self.directed.keys().copied()
    }

    pub fn sigma(&self) -> &BTreeMap<u64, Sign> {
        &self.directed
    }

    pub fn sign(&self, d: u64) -> Option<Sign> {
        self.directed.get(&d).copied()
    }

    pub fn has_undirected(&self, d: u64) -> bool {
        self.undirected.binary_search(&d).is_ok()
    }

    pub fn has_directed(&self, d: u64) -> bool {
        self.directed.contains_key(&d)
    }

    /// Same `(n, B, D)` with every sign replaced by `signs[i]` (in `D` order).
    pub fn with_signs(&self, signs: &[Sign]) -> GraphSpec {
        assert_eq!(signs.len(), self.directed.len());
        GraphSpec {
            n: self.n,
            undirected: self.undirected.clone(),
            directed: self
                .directed
                .keys()
                .copied()
                .zip(signs.iter().copied())
                .collect(),
        }
    }
}

fn sorted_unique(xs: &[u64]) -> Vec<u64> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Checks `(n, B, D, sigma)` against the integrality characterisation.
pub fn validate_spec(
    n: u64,
    undirected: &[u64],
    directed: &[u64],
    sigma: &BTreeMap<u64, Sign>,
) -> Result<GraphSpec> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if n > MAX_ARG {
        return Err(Error::OutOfRange(n));
    }
    let b = sorted_unique(undirected);
    let d = sorted_unique(directed);
    if !d.is_empty() && !n.is_multiple_of(4) {
        return Err(Error::BadModulus(n));
    }
    for &x in &b {
        if x == 0 || x >= n || !n.is_multiple_of(x) {
            return Err(Error::BadDivisor {
                divisor: x,
                directed: false,
            });
        }
    }
    for &x in &d {
        if x == 0 || !(n / 4).is_multiple_of(x) {
            return Err(Error::BadDivisor {
                divisor: x,
                directed: true,
            });
        }
    }
    if let Some(&x) = b.iter().find(|x| d.binary_search(x).is_ok()) {
        return Err(Error::Overlap(x));
    }
    if sigma.len() != d.len() || !d.iter().all(|x| sigma.contains_key(x)) {
        return Err(Error::SigmaDomainMismatch);
    }
    Ok(GraphSpec {
        n,
        undirected: b,
        directed: sigma.clone(),
    })
}

/// `G_n(d)`: residues `1 <= k < n` with `gcd(k, n) = d`. `d = n` yields `∅`.
pub fn gn_d(n: u64, d: u64) -> Result<Vec<u64>> {
    if n == 0 || d == 0 {
        return Err(Error::Zero);
    }
    if !n.is_multiple_of(d) {
        return Err(Error::BadDivisor {
            divisor: d,
            directed: false,
        });
    }
    Ok((1..n / d)
        .filter(|&a| gcd(a, n / d) == 1)
        .map(|a| a * d)
        .collect())
}

/// `G_n^r(d) = d * G_{n/d}^r(1)`: the elements `k` of `G_n(d)` with
/// `k/d = r (mod 4)`.
pub fn gn_rd(n: u64, d: u64, r: u64) -> Result<Vec<u64>> {
    if r != 1 && r != 3 {
        return Err(Error::BadResidue(r));
    }
    if !n.is_multiple_of(4) {
        return Err(Error::NotDivisibleByFour(n));
    }
    if d == 0 || !(n / 4).is_multiple_of(d) {
        return Err(Error::BadDivisor {
            divisor: d,
            directed: true,
        });
    }
    Ok(gn_d(n, d)?
        .into_iter()
        .filter(|k| (k / d) % 4 == r)
        .collect())
}

/// Difference set of a mixed circulant graph: the undirected part `C \ C̄`
/// and the directed part `C̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    n: u64,
    undirected: Vec<u64>,
    directed: Vec<u64>,
}

impl ConnectionSet {
    /// Builds a connection set from raw residues, checking its invariants
    /// but not integrality.
    pub fn new(n: u64, undirected: &[u64], directed: &[u64]) -> Result<ConnectionSet> {
        if n == 0 {
            return Err(Error::Zero);
        }
        let u = sorted_unique(undirected);
        let d = sorted_unique(directed);
        let in_range = |x: &u64| *x != 0 && *x < n;
        if !u.iter().all(in_range) || !d.iter().all(in_range) {
            return Err(Error::InvalidConnectionSet);
        }
        let neg = |x: u64| n - x;
        let closed = u.iter().all(|&x| u.binary_search(&neg(x)).is_ok());
        let antisym = d
            .iter()
            .all(|&x| d.binary_search(&neg(x)).is_err() && u.binary_search(&neg(x)).is_err());
        let disjoint = u.iter().all(|x| d.binary_search(x).is_err());
        if !(closed && antisym && disjoint) {
            return Err(Error::InvalidConnectionSet);
        }
        Ok(ConnectionSet {
            n,
            undirected: u,
            directed: d,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn undirected(&self) -> &[u64] {
        &self.undirected
    }

    pub fn directed(&self) -> &[u64] {
        &self.directed
    }

    /// The whole set `C`, ascending.
    pub fn all(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .undirected
            .iter()
            .chain(&self.directed)
            .copied()
            .collect();
        v.sort_unstable();
        v
    }
}

pub fn build_connection_set(spec: &GraphSpec) -> ConnectionSet {
    let n = spec.n();
    let mut undirected = Vec::new();
    for &d in spec.undirected() {
        undirected.extend(gn_d(n, d).expect("validated divisor"));
    }
    let mut directed = Vec::new();
    for (&d, s) in spec.sigma() {
        directed.extend(gn_rd(n, d, s.residue()).expect("validated divisor"));
    }
    undirected.sort_unstable();
    directed.sort_unstable();
    ConnectionSet {
        n,
        undirected,
        directed,
    }
}

/// Entry of a Hermitian adjacency matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Entry {
    Zero,
    One,
    PlusI,
    MinusI,
}

impl Entry {
    pub fn conj(self) -> Entry {
        match self {
            Entry::PlusI => Entry::MinusI,
            Entry::MinusI => Entry::PlusI,
            e => e,
        }
    }

    /// `(re, im)` of the entry.
    pub fn to_parts(self) -> (i8, i8) {
        match self {
            Entry::Zero => (0, 0),
            Entry::One => (1, 0),
            Entry::PlusI => (0, 1),
            Entry::MinusI => (0, -1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianMatrix {
    order: usize,
    entries: Vec<Entry>,
}

impl HermitianMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, u: usize, v: usize) -> Entry {
        self.entries[u * self.order + v]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Entry]> {
        self.entries.chunks(self.order)
    }
}

pub fn hermitian_adjacency(cs: &ConnectionSet) -> HermitianMatrix {
    let n = cs.n() as usize;
    let mut row0 = alloc::vec![Entry::Zero; n];
    for &c in cs.undirected() {
        row0[c as usize] = Entry::One;
    }
    for &c in cs.directed() {
        row0[c as usize] = Entry::PlusI;
        row0[n - c as usize] = Entry::MinusI;
    }
    let mut entries = Vec::with_capacity(n * n);
    for u in 0..n {
        entries.extend((0..n).map(|v| row0[(v + n - u) % n]));
    }
    HermitianMatrix { order: n, entries }
}

/// Divisor classes layered by the 2-adic valuation of `n/d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorPartition {
    n: u64,
    b_layers: Vec<Vec<u64>>,
    d_layers: Vec<Vec<u64>>,
}

impl DivisorPartition {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Number of layers, `nu2(n) + 1`.
    pub fn depth(&self) -> usize {
        self.b_layers.len()
    }

    /// `B_i`; empty beyond `nu2(n)`.
    pub fn b(&self, i: usize) -> &[u64] {
        self.b_layers.get(i).map_or(&[], |v| v.as_slice())
    }

    /// `D_i`; empty below 2 and beyond `nu2(n)`.
    pub fn d(&self, i: usize) -> &[u64] {
        self.d_layers.get(i).map_or(&[], |v| v.as_slice())
    }

    /// `B*_i = B_i \ {n / 2^i}`.
    pub fn b_star(&self, i: usize) -> Vec<u64> {
        let layer = self.b(i);
        match n_over_pow2(self.n, i as u32) {
            Some(x) => layer.iter().copied().filter(|&d| d != x).collect(),
            None => layer.to_vec(),
        }
    }
}

/// `n / 2^i` when it is an integer.
pub fn n_over_pow2(n: u64, i: u32) -> Option<u64> {
    if i < 64 && n.is_multiple_of(1u64 << i) {
        Some(n >> i)
    } else {
        None
    }
}

/// Whether `lhs = k * rhs` as sets, i.e. `lhs = {k x : x in rhs}`.
pub fn scaled_eq(lhs: &[u64], k: u64, rhs: &[u64]) -> bool {
    let mut scaled: Vec<u64> = rhs.iter().map(|x| x * k).collect();
    scaled.sort_unstable();
    let mut l = lhs.to_vec();
    l.sort_unstable();
    l == scaled
}

pub fn partition_divisors(spec: &GraphSpec) -> DivisorPartition {
    let n = spec.n();
    let depth = split_two(n).0 as usize + 1;
    let mut b_layers = alloc::vec![Vec::new(); depth];
    let mut d_layers = alloc::vec![Vec::new(); depth];
    for &d in spec.undirected() {
        b_layers[split_two(n / d).0 as usize].push(d);
    }
    for d in spec.directed() {
        d_layers[split_two(n / d).0 as usize].push(d);
    }
    DivisorPartition {
        n,
        b_layers,
        d_layers,
    }
}

/// Proper divisors of `n` (`1 <= d < n`), the admissible undirected classes.
pub fn undirected_candidates(n: u64) -> Vec<u64> {
    let mut v = divisors(n).unwrap_or_default();
    v.pop();
    v
}

/// Divisors of `n/4` when `4 | n`, the admissible directed classes.
pub fn directed_candidates(n: u64) -> Vec<u64> {
    if !n.is_multiple_of(4) {
        return Vec::new();
    }
    divisors(n / 4).unwrap_or_default()
}
