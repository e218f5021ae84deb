//! Exhaustive sweeps comparing the divisor-set classifiers against the
//! valuation criteria and numeric verification.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use imcg_core::transfer::feasible_by_grid;
use imcg_core::{
    antipodal_pst_by_valuation, build_connection_set, classify_mst, classify_mst_amended,
    classify_pst, count_specs, eigenvalues_closed_form, eigenvalues_oracle, enumerate_specs,
    mst_by_valuation, pst_feasible_pair, verify_numeric, GraphSpec, Spectrum,
};

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Pst,
    Mst,
}

impl Mode {
    pub fn tag(self) -> &'static str {
        match self {
            Mode::Pst => "pst",
            Mode::Mst => "mst",
        }
    }

    /// Moduli swept by this mode are the multiples of `step`.
    pub fn step(self) -> u64 {
        match self {
            Mode::Pst => 4,
            Mode::Mst => 8,
        }
    }

    fn classify(self, spec: &GraphSpec) -> bool {
        match self {
            Mode::Pst => classify_pst(spec).is_some(),
            Mode::Mst => classify_mst(spec),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "pst" => Ok(Mode::Pst),
            "mst" => Ok(Mode::Mst),
            other => Err(Error::UnknownMode(other.to_string())),
        }
    }
}

/// Per-leg verdicts for a spec on which the legs disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub spec: GraphSpec,
    pub classifier: bool,
    pub valuation: bool,
    pub numeric: bool,
    /// Exact congruence solver; must agree with the grid scan.
    pub solver: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub mode: Mode,
    pub n_range: Vec<u64>,
    pub specs_checked: u64,
    pub mismatches: Vec<Mismatch>,
    /// Specs with antipodal transfer, by the valuation criterion.
    pub pst_positive: u64,
    /// Specs with quarter-vertex transfer, by the valuation criterion.
    pub mst_positive: u64,
    /// MST mode only: specs where the amended MST classifier disagrees with
    /// the valuation criterion.
    pub amended_mismatches: Option<u64>,
    pub wall_time: f64,
}

fn moduli(n_max: u64, mode: Mode) -> Vec<u64> {
    (1..=n_max / mode.step()).map(|k| k * mode.step()).collect()
}

fn check_budget(ns: &[u64], budget: u128) -> Result<()> {
    let count: u128 = ns.iter().map(|&n| count_specs(n)).sum();
    if count > budget {
        return Err(Error::BudgetExceeded { count, budget });
    }
    Ok(())
}

/// Grid scan for a transfer time, with the exact solver run alongside.
fn numeric_pair(spectrum: &Spectrum, a: u64, b: u64, tol: f64) -> Result<(bool, bool)> {
    let grid = feasible_by_grid(spectrum, a, b, tol);
    let solved = pst_feasible_pair(spectrum, a, b)?;
    let verified = solved.is_some_and(|t| verify_numeric(spectrum, a, b, t, tol).passed);
    Ok((grid.is_some(), verified && grid == solved))
}

pub fn crosscheck(n_max: u64, mode: Mode, budget: u128, tol: f64) -> Result<SweepReport> {
    let start = Instant::now();
    let ns = moduli(n_max, mode);
    check_budget(&ns, budget)?;
    let mut report = SweepReport {
        mode,
        n_range: ns.clone(),
        specs_checked: 0,
        mismatches: Vec::new(),
        pst_positive: 0,
        mst_positive: 0,
        amended_mismatches: (mode == Mode::Mst).then_some(0),
        wall_time: 0.0,
    };
    for &n in &ns {
        for spec in enumerate_specs(n) {
            report.specs_checked += 1;
            let oracle = eigenvalues_oracle(&build_connection_set(&spec))?;
            let pst = antipodal_pst_by_valuation(&oracle)?.is_some();
            let mst = mst_by_valuation(&oracle)?;
            report.pst_positive += u64::from(pst);
            report.mst_positive += u64::from(mst);

            let closed = eigenvalues_closed_form(&spec);
            let pairs: &[u64] = match mode {
                Mode::Pst => &[2],
                Mode::Mst => &[1, 2, 3],
            };
            let (mut numeric, mut solver) = (true, true);
            for &k in pairs {
                let (g, s) = numeric_pair(&closed, 0, k * n / 4, tol)?;
                numeric &= g;
                solver &= s;
            }
            let valuation = match mode {
                Mode::Pst => pst,
                Mode::Mst => mst,
            };
            if let Some(count) = report.amended_mismatches.as_mut() {
                *count += u64::from(classify_mst_amended(&spec) != valuation);
            }
            let classifier = mode.classify(&spec);
            if classifier != valuation || valuation != numeric || numeric != solver {
                report.mismatches.push(Mismatch {
                    spec,
                    classifier,
                    valuation,
                    numeric,
                    solver,
                });
            }
        }
    }
    report.wall_time = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Specs accepted by the mode's classifier, in enumeration order.
pub fn search(n: u64, mode: Mode, budget: u128) -> Result<Vec<GraphSpec>> {
    if n == 0 || !n.is_multiple_of(mode.step()) {
        return Err(Error::ModeModulus {
            n,
            step: mode.step(),
            mode: mode.tag(),
        });
    }
    check_budget(&[n], budget)?;
    Ok(enumerate_specs(n)
        .into_iter()
        .filter(|s| mode.classify(s))
        .collect())
}
