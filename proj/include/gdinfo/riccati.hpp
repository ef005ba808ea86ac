#pragma once

#include <functional>
#include <vector>

#include "gdinfo/common.hpp"

namespace gdinfo {

/// Matrix Riccati initial value problem dq = F q + q F' + G - q H q, q(t0) = q0.
/// Coefficient maps are piecewise constant: they are evaluated once at the
/// start of each breakpoint segment and frozen across it.
struct RiccatiSpec {
    std::function<Matrix(double)> F;
    std::function<Matrix(double)> G;
    std::function<Matrix(double)> H;
    Matrix q0;
    double t0 = 0.0;
    /// Times where F/G/H jump; the integration grid is aligned to these and
    /// the integrator restarts at each.
    std::vector<double> breakpoints;
};

struct RiccatiTrajectory {
    std::vector<double> grid;    // ascending, grid.front() = t0
    std::vector<Matrix> values;  // one symmetric PSD matrix per grid time

    double t0() const { return grid.front(); }
    double t_end() const { return grid.back(); }
    /// Index of a grid time (within 1e-9 * max(1, |t|)); throws if absent.
    std::size_t index_of(double t) const;
    const Matrix& at_time(double t) const { return values[index_of(t)]; }
};

/// Classical fixed-step RK4 on a grid aligned to all breakpoints.  Each step
/// is followed by symmetrization and PSD repair: eigenvalues in
/// [-psd_tol*scale, 0) are clipped to zero; anything below that window throws
/// PsdLost.  Throws BlowUp when |q| exceeds 1e12 (finite-escape detection).
RiccatiTrajectory integrate(const RiccatiSpec& spec, double t_end, double step,
                            const Tolerances& tol = {});

/// Stationary solution of F q + q F' + G - q H q = 0 (constant coefficients):
/// the stabilizing PSD root, via the matrix sign function of the Hamiltonian
/// (Byers 1987, determinant scaling) polished by Newton steps.  Throws
/// NoStabilizingSolution.
Matrix solve_are(const Matrix& F, const Matrix& G, const Matrix& H);

}  // namespace gdinfo
