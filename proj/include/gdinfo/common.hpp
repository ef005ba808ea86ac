#pragma once

#include <Eigen/Dense>

namespace gdinfo {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical tolerances shared across the library.  All defaults are chosen
/// to separate genuine modeling violations from floating-point noise at the
/// matrix scales of desk problems.
struct Tolerances {
    /// PSD slack, relative to the largest eigenvalue magnitude (floor 1).
    double psd = 1e-9;
    /// Reduced eigen-decomposition cutoff: eigenvalues below
    /// rank * max(lambda_max, 1) are treated as zero.
    double rank = 1e-10;
    /// H2 residual bound, relative: |a11*gamma - b12| <= h2 * (1 + |b12|).
    double h2 = 1e-8;
    /// H4 residual bound, same convention as h2.
    double h4 = 1e-8;
    /// H5 bound on |alpha_23| and |phi_23|, absolute.
    double h5 = 1e-10;
    /// Symmetry check, relative.
    double sym = 1e-10;
};

}  // namespace gdinfo
