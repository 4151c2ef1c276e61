//! Numerical tolerance policy shared by the exact finite-group modules.
//!
//! The wavelet module is quadrature-approximate and deliberately does not
//! use this policy.

/// Tolerances for equality tests, rank decisions, and certificates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance for scalar/vector equality checks.
    pub eq_rel: f64,
    /// Absolute residual-norm threshold below which a vector is treated as
    /// linearly dependent (orthonormalization rank decisions).
    pub rank_abs: f64,
    /// Singular values below `svd_rel · σ_max` count as zero in null-space
    /// (commutant) computations.
    pub svd_rel: f64,
    /// Maximum invariance residual `‖(I−P)·K_g·P‖` for a subspace to count
    /// as invariant.
    pub invariance: f64,
    /// Eigenvalues within `cluster_rel · spectral radius` of each other are
    /// grouped into one invariant subspace.
    pub cluster_rel: f64,
    /// Relative projection residual below which a function counts as a
    /// member of a subspace.
    pub membership: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eq_rel: 1e-9,
            rank_abs: 1e-10,
            svd_rel: 1e-10,
            invariance: 1e-9,
            cluster_rel: 1e-8,
            membership: 1e-9,
        }
    }
}
