#pragma once

#include <utility>

#include "gdinfo/common.hpp"

namespace gdinfo {

/// Relative asymmetry |m - m'| / max(|m|, 1) in Frobenius norm.
double symmetry_error(const Matrix& m);

bool is_symmetric(const Matrix& m, double tol);

inline Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

/// Clips eigenvalues in [-psd_tol*scale, 0) to zero, scale = max(|lambda|_max, 1).
/// Throws NotPsd if an eigenvalue lies below the clipping window, NotSymmetric
/// if the input is not symmetric within sym_tol.
Matrix project_psd(const Matrix& m, double psd_tol, double sym_tol, const char* label);

double min_eigenvalue(const Matrix& symmetric);

/// Moore-Penrose pseudoinverse of a symmetric PSD matrix via eigendecomposition,
/// dropping eigenvalues below rank_tol * max(lambda_max, 1).
Matrix pinv_psd(const Matrix& m, double rank_tol);

/// log det of a symmetric positive definite matrix.  Falls back from Cholesky
/// to an eigenvalue route with jitter 1e-12 * trace-scale when the smallest
/// eigenvalue is below 1e-10 * scale; throws DegenerateBeyondJitter when the
/// matrix is singular beyond what jitter can repair.
double logdet_spd(const Matrix& m);

/// Exact one-step discretization of the linear SDE dX = bX dt + dM, [M] = a t:
/// returns (A, Q) with A = exp(b dt), Q = int_0^dt exp(b s) a exp(b' s) ds,
/// computed with Van Loan's block-exponential.
std::pair<Matrix, Matrix> exact_discretization(const Matrix& b, const Matrix& a, double dt);

}  // namespace gdinfo
