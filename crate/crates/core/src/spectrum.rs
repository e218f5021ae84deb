//! Integer spectra of integral mixed circulant graphs.
//!
//! Three independent routes are provided: the layered closed form
//! ([`eigenvalues_closed_form`]), the split by the residue of the character
//! index mod 4 ([`eigenvalues_by_class`]) and a floating-point character sum
//! over the connection set ([`eigenvalues_oracle`]).
//!
//! Index 0 is the trivial character and is always `|C \ C̄|`; formulas that
//! substitute the odd part `j'` of `j` use `j' = 0` there, with
//! `c_m(0) = phi(m)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::circulant::{
    n_over_pow2, partition_divisors, scaled_eq, ConnectionSet, DivisorPartition, GraphSpec,
};
use crate::error::{Error, Result};
use crate::numthy::{euler_phi, ramanujan_sum_any, split_two, ORACLE_TOL};

/// Eigenvalues `gamma[j]` indexed by the character `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum {
    gamma: Vec<i64>,
}

impl Spectrum {
    pub fn from_values(gamma: Vec<i64>) -> Spectrum {
        assert!(!gamma.is_empty(), "spectrum of an empty graph");
        Spectrum { gamma }
    }

    pub fn n(&self) -> u64 {
        self.gamma.len() as u64
    }

    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    /// `gamma[j mod n]`.
    pub fn at(&self, j: i64) -> i64 {
        let n = self.gamma.len() as i64;
        self.gamma[j.rem_euclid(n) as usize]
    }

    pub fn trace(&self) -> i64 {
        self.gamma.iter().sum()
    }

    pub fn into_values(self) -> Vec<i64> {
        self.gamma
    }
}

fn neg1_pow(k: u64) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Odd part of `j`, or 0 for `j = 0`.
fn odd_part(j: u64) -> u64 {
    if j == 0 {
        0
    } else {
        split_two(j).1
    }
}

fn trivial_eigenvalue(spec: &GraphSpec) -> i64 {
    spec.undirected()
        .iter()
        .map(|&d| euler_phi(spec.n() / d).expect("validated divisor") as i64)
        .sum()
}

/// Partition plus sign lookup shared by the layered formulas.
struct Layers<'a> {
    spec: &'a GraphSpec,
    part: DivisorPartition,
    depth: u32,
}

impl<'a> Layers<'a> {
    fn new(spec: &'a GraphSpec) -> Layers<'a> {
        let part = partition_divisors(spec);
        let depth = part.depth() as u32 - 1;
        Layers { spec, part, depth }
    }

    fn n(&self) -> u64 {
        self.spec.n()
    }

    fn b(&self, i: u32) -> &[u64] {
        self.part.b(i as usize)
    }

    fn d(&self, i: u32) -> &[u64] {
        self.part.d(i as usize)
    }

    fn sigma(&self, d: u64) -> i64 {
        self.spec.sign(d).expect("directed class").value()
    }

    /// Contribution of `B_i` (`i >= 1`) at index `j`, without the `2^(i-1)`
    /// weight: `1_Z(j/2^(i-1)) (-1)^(j/2^(i-1)) sum c_{n/(2^i d)}(j')`.
    fn b_term(&self, i: u32, j: u64) -> i64 {
        let step = 1u64 << (i - 1);
        if !j.is_multiple_of(step) {
            return 0;
        }
        let sign = neg1_pow(j / step);
        let jp = odd_part(j);
        let s: i64 = self
            .b(i)
            .iter()
            .map(|&d| ramanujan_sum_any(self.n() / ((1u64 << i) * d), jp))
            .sum();
        sign * s
    }

    /// Contribution of `D_i` (`i >= 2`) at index `j`, without the `2^(i-1)`
    /// weight.
    fn d_term(&self, i: u32, j: u64) -> i64 {
        let step = 1u64 << (i - 2);
        if j == 0 || !j.is_multiple_of(step) || (j / step).is_multiple_of(2) {
            return 0;
        }
        let x = j / step;
        self.d(i)
            .iter()
            .map(|&d| {
                let m = self.n() / ((1u64 << i) * d);
                self.sigma(d)
                    * neg1_pow((m - 1) / 2)
                    * neg1_pow(x.div_ceil(2))
                    * ramanujan_sum_any(m, x)
            })
            .sum()
    }

    fn b0_sum(&self, q: u64) -> i64 {
        self.b(0)
            .iter()
            .map(|&d| ramanujan_sum_any(self.n() / d, q))
            .sum()
    }

    /// `sum_{d in B_i} c_{n/(2^i d)}(q)` over an explicit set.
    fn csum(&self, set: &[u64], i: u32, q: u64) -> i64 {
        set.iter()
            .map(|&d| ramanujan_sum_any(self.n() / ((1u64 << i) * d), q))
            .sum()
    }

    fn lambda1(&self, j: u64) -> i64 {
        self.d(2)
            .iter()
            .map(|&d| {
                let m = self.n() / (4 * d);
                self.sigma(d)
                    * neg1_pow((m - 1) / 2)
                    * neg1_pow(j.div_ceil(2))
                    * ramanujan_sum_any(m, j)
            })
            .sum()
    }

    fn lambda2(&self, j: u64) -> i64 {
        let half = j / 2;
        self.d(3)
            .iter()
            .map(|&d| {
                let m = self.n() / (8 * d);
                self.sigma(d)
                    * neg1_pow((m - 1) / 2)
                    * neg1_pow(half.div_ceil(2))
                    * ramanujan_sum_any(m, half)
            })
            .sum()
    }

    fn lambda3(&self, j: u64) -> i64 {
        let mut total = 0;
        for i in 4..=self.depth {
            let w = 1i64 << (i - 4);
            total += w * (self.b_term(i, j) + self.d_term(i, j));
        }
        total
    }

    fn delta(&self, j: u64) -> i64 {
        let jp = odd_part(j);
        let b2_star = self.part.b_star(2);
        let b3_sum = neg1_pow(j / 4) * self.csum(self.b(3), 3, jp);
        self.csum(&b2_star, 2, jp) + b3_sum + 2 * self.lambda3(j)
    }

    fn has_b(&self, d: Option<u64>) -> i64 {
        d.map_or(0, |d| self.spec.has_undirected(d) as i64)
    }
}

/// Layered closed form: every term is an integer Ramanujan sum of an odd
/// modulus.
pub fn eigenvalues_closed_form(spec: &GraphSpec) -> Spectrum {
    let layers = Layers::new(spec);
    let n = spec.n();
    let mut gamma = Vec::with_capacity(n as usize);
    gamma.push(trivial_eigenvalue(spec));
    for j in 1..n {
        let mut g = layers.b0_sum(odd_part(j));
        for i in 1..=layers.depth {
            g += (1i64 << (i - 1)) * layers.b_term(i, j);
        }
        for i in 2..=layers.depth {
            g += (1i64 << (i - 1)) * layers.d_term(i, j);
        }
        gamma.push(g);
    }
    Spectrum { gamma }
}

/// Eigenvalues through the three residue classes of `j` (odd, `2 mod 4`,
/// `0 mod 4`). Needs an even order.
pub fn eigenvalues_by_class(spec: &GraphSpec) -> Result<Spectrum> {
    let n = spec.n();
    if !n.is_multiple_of(2) {
        return Err(Error::OddModulus(n));
    }
    let l = Layers::new(spec);
    let mut gamma = Vec::with_capacity(n as usize);
    gamma.push(trivial_eigenvalue(spec));
    for j in 1..n {
        let g = match j % 4 {
            1 | 3 => l.b0_sum(j) - l.csum(l.b(1), 1, j) + 2 * l.lambda1(j),
            2 => {
                let h = j / 2;
                l.b0_sum(h) + l.csum(l.b(1), 1, h) - 2 * l.csum(l.b(2), 2, h) + 4 * l.lambda2(j)
            }
            _ => {
                let jp = odd_part(j);
                l.b0_sum(jp)
                    + l.csum(l.b(1), 1, jp)
                    + 2 * l.csum(l.b(2), 2, jp)
                    + 4 * neg1_pow(j / 4) * l.csum(l.b(3), 3, jp)
                    + 8 * l.lambda3(j)
            }
        };
        gamma.push(g);
    }
    Ok(Spectrum { gamma })
}

/// Character sum `sum_{k in C\C̄} w^{jk} + i sum_{k in C̄} (w^{jk} - w^{-jk})`
/// in `f64`, each value rounded to the nearest integer.
pub fn eigenvalues_oracle(cs: &ConnectionSet) -> Result<Spectrum> {
    let n = cs.n();
    let mut gamma = Vec::with_capacity(n as usize);
    for j in 0..n {
        let mut re = 0.0;
        let mut im = 0.0;
        for &k in cs.undirected() {
            let theta = 2.0 * PI * ((j * k) % n) as f64 / n as f64;
            re += libm::cos(theta);
            im += libm::sin(theta);
        }
        for &k in cs.directed() {
            let theta = 2.0 * PI * ((j * k) % n) as f64 / n as f64;
            // i (e^{i theta} - e^{-i theta}) = -2 sin(theta)
            re -= 2.0 * libm::sin(theta);
        }
        let r = libm::round(re);
        let residual = libm::fmax(libm::fabs(re - r), libm::fabs(im));
        if residual >= ORACLE_TOL {
            return Err(Error::NonIntegerResidual {
                value: re,
                residual,
            });
        }
        gamma.push(r as i64);
    }
    Ok(Spectrum { gamma })
}

/// Auxiliary sums at one index; only the terms defined on `j`'s residue
/// class are present.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AuxTerms {
    /// Defined for odd `j`.
    pub lambda1: Option<i64>,
    /// Defined for `j = 2 (mod 4)`.
    pub lambda2: Option<i64>,
    /// Defined for `j = 0 (mod 4)`.
    pub lambda3: Option<i64>,
    /// Defined for `j = 0 (mod 4)`.
    pub delta: Option<i64>,
}

fn check_index(spec: &GraphSpec, j: u64) -> Result<()> {
    if j >= spec.n() {
        return Err(Error::VertexOutOfRange {
            vertex: j,
            n: spec.n(),
        });
    }
    Ok(())
}

pub fn aux_terms(spec: &GraphSpec, j: u64) -> Result<AuxTerms> {
    check_index(spec, j)?;
    let l = Layers::new(spec);
    let mut aux = AuxTerms::default();
    match j % 4 {
        1 | 3 => aux.lambda1 = Some(l.lambda1(j)),
        2 => aux.lambda2 = Some(l.lambda2(j)),
        _ => {
            aux.lambda3 = Some(l.lambda3(j));
            aux.delta = Some(l.delta(j));
        }
    }
    Ok(aux)
}

pub fn lambda1(spec: &GraphSpec, j: u64) -> Result<i64> {
    aux_terms(spec, j)?
        .lambda1
        .ok_or(Error::WrongResidueClass { j })
}

pub fn lambda2(spec: &GraphSpec, j: u64) -> Result<i64> {
    aux_terms(spec, j)?
        .lambda2
        .ok_or(Error::WrongResidueClass { j })
}

pub fn lambda3(spec: &GraphSpec, j: u64) -> Result<i64> {
    aux_terms(spec, j)?
        .lambda3
        .ok_or(Error::WrongResidueClass { j })
}

pub fn delta(spec: &GraphSpec, j: u64) -> Result<i64> {
    aux_terms(spec, j)?
        .delta
        .ok_or(Error::WrongResidueClass { j })
}

/// `4 | n`, `D_2 ⊆ {n/4}` and `B_0 = 2 B*_1 = 4 B*_2`.
pub fn satisfies_reduced_hypotheses(spec: &GraphSpec) -> bool {
    let n = spec.n();
    if !n.is_multiple_of(4) {
        return false;
    }
    let p = partition_divisors(spec);
    p.d(2).iter().all(|&d| d == n / 4)
        && scaled_eq(p.b(0), 2, &p.b_star(1))
        && scaled_eq(p.b(0), 4, &p.b_star(2))
}

/// Four-case form of the spectrum under [`satisfies_reduced_hypotheses`].
pub fn reduced_eigenvalues(spec: &GraphSpec) -> Result<Spectrum> {
    if !satisfies_reduced_hypotheses(spec) {
        return Err(Error::HypothesesNotMet);
    }
    let n = spec.n();
    let l = Layers::new(spec);
    let half = l.has_b(n_over_pow2(n, 1));
    let quarter_b = l.has_b(n_over_pow2(n, 2));
    let quarter_d = spec.sign(n / 4).map_or(0, |s| s.value());
    let gamma = (0..n)
        .map(|j| match j % 4 {
            0 => half + 2 * quarter_b + 4 * l.delta(j),
            1 => -half - 2 * quarter_d,
            2 => half - 2 * quarter_b + 4 * l.lambda2(j),
            _ => -half + 2 * quarter_d,
        })
        .collect();
    Ok(Spectrum { gamma })
}
