//! The parameters `α_k`, `ρ_k`, their bounds and identities, deleted-subgraph
//! radii, worked studies and corpus scans.

mod complement;
mod kparams;
mod radius;
mod scan;
mod studies;

pub use complement::{bipartite_drg_corollary, complement_identity, COMPLEMENT_TOL};
pub use kparams::{
    inclusion_records, k_params, lew_bounds_check, lew_records, KParamRow, KParamTable, LEW_REL_TOL,
};
pub use radius::{
    deleted_radii, deleted_radii_drg, deleted_radii_drg_unchecked, deleted_radii_unchecked,
    deleted_radius_sandwich, token_radius_bounds, DeletedRadii, WALK_REGULAR_TOL,
};
pub use scan::{
    conjecture_scan, conjecture_scan_with_tol, Candidate, ScanReport, ScanRow, ScanSummary,
    SCAN_REL_TOL,
};
pub use studies::{
    heawood_case_study, johnson_check, johnson_reference_laplacian, johnson_token_laplacian,
    table1, Table1Row, CASE_STUDY_TOL, JOHNSON_TOL, TABLE1_IDENTITY_TOL, TABLE1_REFERENCE,
    TABLE1_REFERENCE_TOL,
};
