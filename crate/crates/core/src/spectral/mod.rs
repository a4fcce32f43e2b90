//! Adjacency spectra, exact characteristic polynomials, quotient matrices of
//! vertex partitions and real-root extraction.

mod eigen;
mod poly;
mod quotient;

pub use eigen::{eigenvalues, power_iteration, spectral_radius, symmetric_eigen, SpectralResult, JACOBI_TOLERANCE};
pub use poly::{
    characteristic_polynomial, characteristic_polynomial_rational, largest_real_root, largest_root,
    root_bound, theta, theta_polynomial, Polynomial,
};
pub use quotient::{quotient_matrix, Partition, QuotientMatrix};
