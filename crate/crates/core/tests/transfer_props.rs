mod common;

use std::collections::BTreeMap;

use common::{all_specs, spec};
use imcg_core::transfer::{antipodal_time, feasible_by_grid, VERIFY_TOL};
use imcg_core::{
    antipodal_pst_by_valuation, build_connection_set, check_mst, check_pst, classify_mst,
    classify_mst_amended, classify_pst, difference_profile, eigenvalues_closed_form,
    eigenvalues_oracle, minimal_pst_time, mst_by_valuation, pair_restriction_check,
    pst_feasible_pair, sigma_variants, special_case_basic, special_case_oriented, verify_numeric,
    GraphSpec, VerdictKind,
};

fn quarter_pairs_feasible(spec: &GraphSpec) -> bool {
    let n = spec.n();
    let s = eigenvalues_closed_form(spec);
    (1..4).all(|k| pst_feasible_pair(&s, 0, k * n / 4).unwrap().is_some())
}

#[test]
fn pst_classifier_valuation_and_solver_agree() {
    for s in all_specs((4..=32).step_by(4)) {
        let n = s.n();
        let spectrum = eigenvalues_oracle(&build_connection_set(&s)).unwrap();
        let by_class = classify_pst(&s).is_some();
        let by_valuation = antipodal_pst_by_valuation(&spectrum).unwrap();
        let by_solver = pst_feasible_pair(&spectrum, 0, n / 2).unwrap();
        assert_eq!(by_class, by_valuation.is_some(), "{s:?}");
        assert_eq!(by_class, by_solver.is_some(), "{s:?}");
        if let (Some(m), Some(t)) = (by_valuation, by_solver) {
            assert!(m == 1 || m == 2, "{s:?}");
            assert_eq!(t, antipodal_time(m));
            assert_eq!(minimal_pst_time(&spectrum, 0, n / 2), Ok(t));
            let check = verify_numeric(&spectrum, 0, n / 2, t, VERIFY_TOL);
            assert!(check.passed, "{s:?}");
            assert!((check.phase.norm() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn mst_valuation_and_solver_agree_with_amended_classifier() {
    let mut literal_misses = 0;
    for s in all_specs((8..=32).step_by(8)) {
        let spectrum = eigenvalues_oracle(&build_connection_set(&s)).unwrap();
        let by_valuation = mst_by_valuation(&spectrum).unwrap();
        assert_eq!(by_valuation, quarter_pairs_feasible(&s), "{s:?}");
        assert_eq!(by_valuation, classify_mst_amended(&s), "{s:?}");
        if classify_mst(&s) {
            assert!(by_valuation, "{s:?}");
        } else if by_valuation {
            literal_misses += 1;
            assert!(s.has_undirected(s.n() / 8), "{s:?}");
        }
        if by_valuation {
            let v = check_mst(&s, VERIFY_TOL).unwrap();
            assert_eq!(v.kind, VerdictKind::Mst);
            assert!(v.witnesses.iter().all(|w| w.residual < VERIFY_TOL));
        }
    }
    assert_eq!(literal_misses, 46);
}

#[test]
fn amplitudes_depend_only_on_offset() {
    for s in all_specs([8, 12, 16]) {
        let n = s.n();
        let spectrum = eigenvalues_closed_form(&s);
        let Some(t) = pst_feasible_pair(&spectrum, 0, n / 2).unwrap() else {
            continue;
        };
        let base = verify_numeric(&spectrum, 0, n / 2, t, VERIFY_TOL);
        for b in 1..n {
            let moved = verify_numeric(&spectrum, b, (b + n / 2) % n, t, VERIFY_TOL);
            assert_eq!(moved.passed, base.passed);
            assert!((moved.phase - base.phase).norm() < 1e-12);
        }
    }
}

#[test]
fn solver_matches_grid_oracle_on_all_pairs() {
    for s in all_specs(2..=16) {
        let n = s.n();
        let spectrum = eigenvalues_closed_form(&s);
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let exact = pst_feasible_pair(&spectrum, a, b).unwrap();
                let grid = feasible_by_grid(&spectrum, a, b, VERIFY_TOL);
                assert_eq!(exact, grid, "{s:?} {a}->{b}");
            }
        }
    }
}

#[test]
fn transfer_is_confined_to_quarter_offsets() {
    for s in all_specs([8, 12, 16]) {
        let n = s.n();
        let spectrum = eigenvalues_closed_form(&s);
        let feasible = pair_restriction_check(&spectrum).unwrap();
        assert!(feasible.iter().all(|&k| 4 * k % n == 0), "{s:?}");
        assert!(feasible.len() < (n - 1) as usize);
    }
}

#[test]
fn pst_spectra_have_even_gaps() {
    for s in all_specs((4..=32).step_by(4)) {
        if classify_pst(&s).is_some() {
            let p = difference_profile(&eigenvalues_closed_form(&s));
            assert!(p.deltas.iter().all(|d| d % 2 == 0), "{s:?}");
            assert_eq!(p.deltas.iter().sum::<i64>(), 0);
        }
    }
}

#[test]
fn verdicts_ignore_sigma() {
    let mut groups: BTreeMap<(u64, Vec<u64>, Vec<u64>), Vec<GraphSpec>> = BTreeMap::new();
    for s in all_specs(2..=32) {
        let key = (s.n(), s.undirected().to_vec(), s.directed().collect());
        groups.entry(key).or_default().push(s);
    }
    for specs in groups.values() {
        let first = &specs[0];
        assert_eq!(sigma_variants(first).len(), specs.len());
        for s in specs {
            assert_eq!(classify_pst(s), classify_pst(first));
            assert_eq!(classify_mst(s), classify_mst(first));
            if s.n() <= 16 {
                let e = mst_by_valuation(&eigenvalues_closed_form(s)).unwrap_or(false);
                let f = mst_by_valuation(&eigenvalues_closed_form(first)).unwrap_or(false);
                assert_eq!(e, f);
            }
        }
    }
}

#[test]
fn special_cases_recover_classifier() {
    for s in all_specs(4..=24) {
        if s.n() % 4 != 0 {
            continue;
        }
        if s.directed().next().is_none() {
            assert_eq!(
                special_case_basic(&s),
                Ok(classify_pst(&s).is_some()),
                "{s:?}"
            );
        }
        if s.undirected().is_empty() {
            assert_eq!(
                special_case_oriented(&s),
                Ok(classify_pst(&s).is_some()),
                "{s:?}"
            );
        }
    }
}

#[test]
fn two_mod_four_transfer_lies_outside_classifier() {
    let s = spec(6, &[3], &[]);
    assert_eq!(classify_pst(&s), None);
    assert_eq!(
        antipodal_pst_by_valuation(&eigenvalues_closed_form(&s)),
        Ok(Some(1))
    );
    assert_eq!(
        check_pst(&s, 0, 3, VERIFY_TOL).unwrap().kind,
        VerdictKind::AntipodalPst
    );
}

#[test]
fn empty_spec_has_no_transfer() {
    let s = spec(8, &[], &[]);
    let v = check_pst(&s, 0, 4, VERIFY_TOL).unwrap();
    assert_eq!(v.kind, VerdictKind::None);
    assert!(v.witness_time.is_none() && v.residual.is_none());
}
