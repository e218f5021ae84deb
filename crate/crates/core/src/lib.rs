//! Integral mixed circulant graphs: exact spectra through Ramanujan sums and
//! decisions on perfect and multiple state transfer of the continuous-time
//! quantum walk `U(t) = exp(i t H)`.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, the sweep
//! harness and the command line live in the `imcg` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod circulant;
pub mod enumerate;
mod error;
pub mod numthy;
pub mod spectrum;
pub mod transfer;

pub use circulant::{
    build_connection_set, gn_d, gn_rd, hermitian_adjacency, partition_divisors, validate_spec,
    ConnectionSet, DivisorPartition, Entry, GraphSpec, HermitianMatrix, Sign,
};
pub use enumerate::{count_specs, enumerate_specs, sigma_variants};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use spectrum::{
    aux_terms, eigenvalues_by_class, eigenvalues_closed_form, eigenvalues_oracle,
    reduced_eigenvalues, AuxTerms, Spectrum,
};
pub use transfer::{
    antipodal_pst_by_valuation, check_mst, check_pst, classify_mst, classify_mst_amended,
    classify_pst, difference_profile, minimal_pst_time, mst_by_valuation, pair_restriction_check,
    pst_feasible_pair, special_case_basic, special_case_oriented, transition_amplitude,
    verify_numeric, DifferenceProfile, NumericCheck, PairWitness, PstCase, RationalTime,
    TransferVerdict, VerdictKind,
};
