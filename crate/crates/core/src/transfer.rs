//! Perfect and multiple state transfer.
//!
//! With `U(t) = exp(i t H)` and an integer spectrum, the `(a, b)` entry is
//! `(1/n) sum_r exp(2 pi i (gamma_r t' + r (a - b)/n))` with `t' = t / 2pi`,
//! so `U` is 1-periodic in `t'` and transfer happens at rational `t'` only.
//! Decisions come from three directions that are cross-checked against each
//! other: the divisor-set classification, 2-adic valuations of eigenvalue
//! gaps, and exact congruence solving backed by numeric amplitudes.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_complex::Complex64;

use crate::circulant::{n_over_pow2, partition_divisors, scaled_eq, GraphSpec};
use crate::error::{Error, Result};
use crate::numthy::{gcd, nu2_signed};
use crate::spectrum::{eigenvalues_closed_form, Spectrum};

/// Default tolerance on `|1 - |U_ab||`.
pub const VERIFY_TOL: f64 = 1e-9;

/// A reduced time `t' = p/q` in units of `2 pi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalTime {
    p: i64,
    q: u64,
}

impl RationalTime {
    pub fn new(p: i64, q: u64) -> RationalTime {
        assert!(q != 0, "zero denominator");
        let g = gcd(p.unsigned_abs(), q).max(1);
        RationalTime {
            p: p / g as i64,
            q: q / g,
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn to_f64(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

impl fmt::Display for RationalTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

fn check_vertex(n: u64, v: u64) -> Result<()> {
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

/// `(a - b) mod n`.
fn offset(n: u64, a: u64, b: u64) -> u64 {
    (a + n - b) % n
}

/// `U_ab` at a real `t'`.
pub fn transition_amplitude(spectrum: &Spectrum, a: u64, b: u64, tprime: f64) -> Complex64 {
    let n = spectrum.n();
    let r_off = offset(n, a, b);
    let frac_t = tprime - libm::floor(tprime);
    let sum: Complex64 = spectrum
        .gamma()
        .iter()
        .enumerate()
        .map(|(r, &g)| {
            let x = g as f64 * frac_t;
            let phase_t = x - libm::floor(x);
            let phase_r = ((r as u64 * r_off) % n) as f64 / n as f64;
            Complex64::from_polar(1.0, 2.0 * PI * (phase_t + phase_r))
        })
        .sum();
    sum / n as f64
}

/// `U_ab` at a rational `t'`, with each phase reduced exactly before the
/// trigonometric evaluation.
pub fn transition_amplitude_at(spectrum: &Spectrum, a: u64, b: u64, t: RationalTime) -> Complex64 {
    let n = spectrum.n() as i128;
    let q = t.q() as i128;
    let p = t.p() as i128;
    let r_off = offset(spectrum.n(), a, b) as i128;
    let modulus = n * q;
    let sum: Complex64 = spectrum
        .gamma()
        .iter()
        .enumerate()
        .map(|(r, &g)| {
            let num = (g as i128 * p * n + r as i128 * r_off * q).rem_euclid(modulus);
            Complex64::from_polar(1.0, 2.0 * PI * num as f64 / modulus as f64)
        })
        .sum();
    sum / n as f64
}

/// Cyclic first and second eigenvalue differences with their valuations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceProfile {
    /// `gamma[j+1] - gamma[j]`.
    pub deltas: Vec<i64>,
    /// `gamma[j+2] - gamma[j]`.
    pub step2: Vec<i64>,
    /// 2-adic valuation of each delta; `None` marks a zero gap.
    pub valuations: Vec<Option<u32>>,
    pub step2_valuations: Vec<Option<u32>>,
}

impl DifferenceProfile {
    pub fn has_zero_gap(&self) -> bool {
        self.valuations.iter().any(Option::is_none)
    }

    /// The common valuation of all entries, if there is one.
    fn constant(vals: &[Option<u32>]) -> Option<u32> {
        let first = vals.first().copied().flatten()?;
        vals.iter().all(|&v| v == Some(first)).then_some(first)
    }
}

pub fn difference_profile(spectrum: &Spectrum) -> DifferenceProfile {
    let n = spectrum.n() as i64;
    let deltas: Vec<i64> = (0..n)
        .map(|j| spectrum.at(j + 1) - spectrum.at(j))
        .collect();
    let step2: Vec<i64> = (0..n)
        .map(|j| spectrum.at(j + 2) - spectrum.at(j))
        .collect();
    let valuations = deltas.iter().map(|&x| nu2_signed(x)).collect();
    let step2_valuations = step2.iter().map(|&x| nu2_signed(x)).collect();
    DifferenceProfile {
        deltas,
        step2,
        valuations,
        step2_valuations,
    }
}

/// The constant gap valuation `m` that certifies antipodal transfer, if any.
pub fn antipodal_pst_by_valuation(spectrum: &Spectrum) -> Result<Option<u32>> {
    let n = spectrum.n();
    if !n.is_multiple_of(2) {
        return Err(Error::OddModulus(n));
    }
    Ok(DifferenceProfile::constant(
        &difference_profile(spectrum).valuations,
    ))
}

/// First gaps all of valuation 1 and second gaps all of valuation 2.
pub fn mst_by_valuation(spectrum: &Spectrum) -> Result<bool> {
    let n = spectrum.n();
    if !n.is_multiple_of(4) {
        return Err(Error::NotDivisibleByFour(n));
    }
    let prof = difference_profile(spectrum);
    Ok(DifferenceProfile::constant(&prof.valuations) == Some(1)
        && DifferenceProfile::constant(&prof.step2_valuations) == Some(2))
}

/// Which branch of the antipodal classification a spec falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PstCase {
    /// `D_2 = {n/4}`, `n/2 ∉ B`.
    I,
    /// `D_2 = ∅`, exactly one of `n/2`, `n/4` in `B`.
    II,
    /// `8 | n`, `D_2 = ∅`, `{n/4, n/2} ⊆ B`, `D_3 = {n/8}`, `B*_2 = 2 B*_3`.
    III,
}

impl PstCase {
    pub fn tag(self) -> &'static str {
        match self {
            PstCase::I => "i",
            PstCase::II => "ii",
            PstCase::III => "iii",
        }
    }
}

fn is_singleton(set: &[u64], x: Option<u64>) -> bool {
    matches!((set, x), ([only], Some(x)) if *only == x)
}

/// Divisor-set test for transfer between `b` and `b + n/2`.
pub fn classify_pst(spec: &GraphSpec) -> Option<PstCase> {
    let n = spec.n();
    if !n.is_multiple_of(4) {
        return None;
    }
    let p = partition_divisors(spec);
    let base = scaled_eq(p.b(0), 2, &p.b_star(1)) && scaled_eq(p.b(0), 4, &p.b_star(2));
    if !base {
        return None;
    }
    let half_in_b = spec.has_undirected(n / 2);
    let quarter_in_b = spec.has_undirected(n / 4);
    let d2 = p.d(2);
    if is_singleton(d2, Some(n / 4)) && !half_in_b {
        return Some(PstCase::I);
    }
    if !d2.is_empty() {
        return None;
    }
    if half_in_b != quarter_in_b {
        return Some(PstCase::II);
    }
    if half_in_b
        && quarter_in_b
        && n.is_multiple_of(8)
        && is_singleton(p.d(3), n_over_pow2(n, 3))
        && scaled_eq(&p.b_star(2), 2, &p.b_star(3))
    {
        return Some(PstCase::III);
    }
    None
}

/// Divisor-set test for transfer among `b, b + n/4, b + n/2, b + 3n/4`.
pub fn classify_mst(spec: &GraphSpec) -> bool {
    let n = spec.n();
    if !n.is_multiple_of(8) {
        return false;
    }
    let p = partition_divisors(spec);
    let b0 = p.b(0);
    scaled_eq(b0, 2, &p.b_star(1))
        && scaled_eq(b0, 4, &p.b_star(2))
        && scaled_eq(b0, 8, &p.b_star(3))
        && is_singleton(p.d(2), Some(n / 4))
        && is_singleton(p.d(3), Some(n / 8))
        && !spec.has_undirected(n / 2)
}

/// `classify_mst` with the `D_3 = {n/8}` clause widened to `D_3 ⊆ {n/8}`
/// and `n/8 ∈ B ∪ D`. Agrees with the valuation criterion where
/// `classify_mst` misses specs carrying `n/8` undirected.
pub fn classify_mst_amended(spec: &GraphSpec) -> bool {
    let n = spec.n();
    if !n.is_multiple_of(8) {
        return false;
    }
    let p = partition_divisors(spec);
    let b0 = p.b(0);
    let eighth = n / 8;
    scaled_eq(b0, 2, &p.b_star(1))
        && scaled_eq(b0, 4, &p.b_star(2))
        && scaled_eq(b0, 8, &p.b_star(3))
        && is_singleton(p.d(2), Some(n / 4))
        && p.d(3).iter().all(|&d| d == eighth)
        && (spec.has_undirected(eighth) || spec.has_directed(eighth))
        && !spec.has_undirected(n / 2)
}

/// Gcd of all `gap_j - gap_0`; every transfer time lies in `(1/g) Z`.
/// Zero when all gaps coincide.
pub fn gap_gcd(spectrum: &Spectrum) -> u64 {
    let deltas = difference_profile(spectrum).deltas;
    deltas
        .iter()
        .fold(0, |g, &d| gcd(g, (d - deltas[0]).unsigned_abs()))
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Smallest `t' in (0, 1]` with `gap_j t' + (a - b)/n ∈ Z` for every `j`.
///
/// Differences of gaps force `t' = s/g` with `g` from [`gap_gcd`]; the
/// remaining condition on gap 0 is the linear congruence
/// `n gap_0 s = -(a - b) g (mod n g)`, solved directly.
pub fn pst_feasible_pair(spectrum: &Spectrum, a: u64, b: u64) -> Result<Option<RationalTime>> {
    let n = spectrum.n();
    check_vertex(n, a)?;
    check_vertex(n, b)?;
    if a == b {
        return Err(Error::SamePair);
    }
    let g = gap_gcd(spectrum);
    if g == 0 {
        // All gaps equal; they sum to zero around the cycle, so all vanish.
        return Ok(None);
    }
    let gap0 = spectrum.at(1) - spectrum.at(0);
    let r = offset(n, a, b) as i128;
    let (n, g) = (n as i128, g as i128);
    let modulus = n * g;
    let coeff = (n * gap0 as i128).rem_euclid(modulus);
    let rhs = (-r * g).rem_euclid(modulus);
    let (h, inv, _) = ext_gcd(coeff, modulus);
    let h = h.abs().max(1);
    if coeff == 0 || rhs % h != 0 {
        return Ok(None);
    }
    let reduced_mod = modulus / h;
    let mut s = ((rhs / h) * inv).rem_euclid(reduced_mod);
    if s == 0 {
        s = reduced_mod;
    }
    Ok(Some(RationalTime::new(s as i64, g as u64)))
}

/// `1 / 2^(m+1)`, the antipodal transfer time for constant gap valuation `m`.
pub fn antipodal_time(m: u32) -> RationalTime {
    RationalTime::new(1, 1u64 << (m + 1))
}

pub fn minimal_pst_time(spectrum: &Spectrum, a: u64, b: u64) -> Result<RationalTime> {
    pst_feasible_pair(spectrum, a, b)?.ok_or(Error::NotFeasible)
}

/// Result of evaluating `U_ab` at a candidate time.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericCheck {
    pub passed: bool,
    /// `U_ab / |U_ab|`.
    pub phase: Complex64,
    /// `|1 - |U_ab||`.
    pub residual: f64,
}

pub fn verify_numeric(
    spectrum: &Spectrum,
    a: u64,
    b: u64,
    t: RationalTime,
    tol: f64,
) -> NumericCheck {
    let u = transition_amplitude_at(spectrum, a, b, t);
    let modulus = u.norm();
    let residual = libm::fabs(1.0 - modulus);
    let phase = if modulus > 0.0 {
        u / modulus
    } else {
        Complex64::new(0.0, 0.0)
    };
    NumericCheck {
        passed: residual < tol,
        phase,
        residual,
    }
}

/// Scan of `|U_ab|` over `t' = k/g`, `k = 1..=g`; returns the first time
/// reaching modulus 1 within `tol`. Independent of the congruence solver.
pub fn feasible_by_grid(spectrum: &Spectrum, a: u64, b: u64, tol: f64) -> Option<RationalTime> {
    let g = gap_gcd(spectrum);
    (1..=g as i64)
        .map(|k| RationalTime::new(k, g))
        .find(|&t| verify_numeric(spectrum, a, b, t, tol).passed)
}

/// Offsets `k in 1..n` for which transfer `0 -> k` is feasible.
pub fn pair_restriction_check(spectrum: &Spectrum) -> Result<BTreeSet<u64>> {
    let n = spectrum.n();
    if !n.is_multiple_of(4) {
        return Err(Error::NotDivisibleByFour(n));
    }
    let mut out = BTreeSet::new();
    for k in 1..n {
        if pst_feasible_pair(spectrum, k, 0)?.is_some() {
            out.insert(k);
        }
    }
    Ok(out)
}

/// Classification for undirected specs (`D = ∅`). Exactly one of `n/4`,
/// `n/2` lies in `B`; with both, `K_4 = IMCG_4({1,2})` would qualify.
pub fn special_case_basic(spec: &GraphSpec) -> Result<bool> {
    if !spec.sigma().is_empty() {
        return Err(Error::Precondition("directed classes must be empty"));
    }
    let n = spec.n();
    if !n.is_multiple_of(4) {
        return Ok(false);
    }
    let p = partition_divisors(spec);
    Ok(scaled_eq(&p.b_star(1), 2, &p.b_star(2))
        && scaled_eq(p.b(0), 4, &p.b_star(2))
        && (spec.has_undirected(n / 4) != spec.has_undirected(n / 2)))
}

/// Classification for oriented specs (`B = ∅`).
pub fn special_case_oriented(spec: &GraphSpec) -> Result<bool> {
    if !spec.undirected().is_empty() {
        return Err(Error::Precondition("undirected classes must be empty"));
    }
    let n = spec.n();
    if !n.is_multiple_of(4) {
        return Ok(false);
    }
    Ok(is_singleton(partition_divisors(spec).d(2), Some(n / 4)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    None,
    AntipodalPst,
    QuarterPst,
    Mst,
}

impl VerdictKind {
    pub fn tag(self) -> &'static str {
        match self {
            VerdictKind::None => "none",
            VerdictKind::AntipodalPst => "antipodal_pst",
            VerdictKind::QuarterPst => "quarter_pst",
            VerdictKind::Mst => "mst",
        }
    }
}

/// A verified transfer between two vertices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairWitness {
    pub from: u64,
    pub to: u64,
    pub time: RationalTime,
    pub phase: Complex64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransferVerdict {
    pub kind: VerdictKind,
    /// The pair, or the four quarter vertices for MST.
    pub vertices: Vec<u64>,
    /// Constant gap valuation, for antipodal pairs.
    pub m: Option<u32>,
    pub case: Option<PstCase>,
    pub witness_time: Option<RationalTime>,
    pub phase: Option<Complex64>,
    pub residual: Option<f64>,
    /// Every verified pair behind the verdict.
    pub witnesses: Vec<PairWitness>,
}

fn witness(spectrum: &Spectrum, a: u64, b: u64, tol: f64) -> Result<Option<PairWitness>> {
    let Some(time) = pst_feasible_pair(spectrum, a, b)? else {
        return Ok(None);
    };
    let check = verify_numeric(spectrum, a, b, time, tol);
    if !check.passed {
        return Err(Error::VerificationFailed {
            residual: check.residual,
        });
    }
    Ok(Some(PairWitness {
        from: a,
        to: b,
        time,
        phase: check.phase,
        residual: check.residual,
    }))
}

/// Transfer verdict for one pair of vertices.
pub fn check_pst(spec: &GraphSpec, a: u64, b: u64, tol: f64) -> Result<TransferVerdict> {
    let spectrum = eigenvalues_closed_form(spec);
    let n = spec.n();
    check_vertex(n, a)?;
    check_vertex(n, b)?;
    let antipodal = 2 * offset(n, a, b) == n;
    let found = witness(&spectrum, a, b, tol)?;
    let kind = match (&found, antipodal) {
        (None, _) => VerdictKind::None,
        (Some(_), true) => VerdictKind::AntipodalPst,
        (Some(_), false) => VerdictKind::QuarterPst,
    };
    let m = if antipodal {
        antipodal_pst_by_valuation(&spectrum)?
    } else {
        None
    };
    Ok(TransferVerdict {
        kind,
        vertices: alloc::vec![a, b],
        m,
        case: if antipodal { classify_pst(spec) } else { None },
        witness_time: found.map(|w| w.time),
        phase: found.map(|w| w.phase),
        residual: found.map(|w| w.residual),
        witnesses: found.into_iter().collect(),
    })
}

/// Multiple-transfer verdict on `0, n/4, n/2, 3n/4`.
///
/// The reported time and phase are those of the pair `(0, n/4)`; the
/// residual is the worst of the three quarter pairs.
pub fn check_mst(spec: &GraphSpec, tol: f64) -> Result<TransferVerdict> {
    let n = spec.n();
    let mut verdict = TransferVerdict {
        kind: VerdictKind::None,
        vertices: if n.is_multiple_of(4) {
            alloc::vec![0, n / 4, n / 2, 3 * n / 4]
        } else {
            Vec::new()
        },
        m: None,
        case: None,
        witness_time: None,
        phase: None,
        residual: None,
        witnesses: Vec::new(),
    };
    if !n.is_multiple_of(4) {
        return Ok(verdict);
    }
    let spectrum = eigenvalues_closed_form(spec);
    let mut witnesses = Vec::new();
    for k in 1..4 {
        match witness(&spectrum, 0, k * n / 4, tol)? {
            Some(w) => witnesses.push(w),
            None => return Ok(verdict),
        }
    }
    verdict.kind = VerdictKind::Mst;
    verdict.m = antipodal_pst_by_valuation(&spectrum)?;
    verdict.witness_time = Some(witnesses[0].time);
    verdict.phase = Some(witnesses[0].phase);
    verdict.residual = witnesses.iter().map(|w| w.residual).reduce(f64::max);
    verdict.witnesses = witnesses;
    Ok(verdict)
}
