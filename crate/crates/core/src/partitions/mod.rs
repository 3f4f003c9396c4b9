//! Equitable partitions and their quotients, distance-regular and strongly
//! regular graphs, and the 2-token quotient of a distance-regular graph.

mod drg;
mod equitable;
mod poly;
mod srg;

pub use drg::{
    conjugate_polynomial_check, distance_pair_partition, distance_polynomials, drg_f2_cell_sizes,
    drg_f2_cross_check, drg_f2_quotient_spectra, drg_f2_quotients, drg_interlacing,
    drg_intersection_array, verify_distance_polynomials, ConjugateCheck, DrgVerdict,
    InterlacingRow, IntersectionArray, CONJUGATE_TOL,
};
pub use equitable::{
    distance_partition, is_equitable, laplacian_quotient, quotient_eigenvalues, quotient_matrices,
    verify_quotient, Equitability, Partition, QuotientCheck, QuotientPair, QUOTIENT_IDENTITY_TOL,
    QUOTIENT_PINV_TOL,
};
pub use poly::Poly;
pub use srg::{srg_parameters, srg_quotients, SrgParams, SrgQuotients, SRG_RADIUS_TOL};
