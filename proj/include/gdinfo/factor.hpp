#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdinfo/common.hpp"
#include "gdinfo/model.hpp"

namespace gdinfo {

/// Reduced eigen-decomposition m = u diag(lambda) u' keeping only eigenvalues
/// above rank_tol * max(lambda_max, 1).  Deterministic gauge: eigenvalues
/// descending, first nonzero component of each eigenvector positive.
struct ReducedEig {
    Matrix u;       // m x k, orthonormal columns
    Vector lambda;  // k strictly positive eigenvalues, descending
    Index k = 0;
};

ReducedEig reduced_eig(const Matrix& m, double rank_tol = Tolerances{}.rank,
                       double sym_tol = Tolerances{}.sym);

/// Noise factorization a = sigma a^W sigma' at a fixed time, with
/// sigma = [[sigma11, 0], [sigma21, I]], a^W = diag(I_k, alpha),
/// and the H2 solution gamma (minimal-norm: a11 gamma = b12).
struct NoiseFactorization {
    ReducedEig a11;     // u, lambda, k
    Matrix sigma11;     // n1 x k
    Matrix sigma21;     // n2 x k
    Matrix alpha;       // n2 x n2, PSD
    Matrix gamma;       // n1 x n2
    double h2_residual = 0.0;

    /// gamma' a11 gamma, the information-gain kernel of the Riccati equation.
    Matrix gain() const { return gamma.transpose() * (a11.u * a11.lambda.asDiagonal() * a11.u.transpose()) * gamma; }
};

NoiseFactorization noise_factorization(const ValidatedModel& model, const Partition2& p,
                                       double t, const Tolerances& tol = {});

/// Initial-covariance factorization v = psi v^Xi psi', l = rank(v11).
/// psi blocks have zero columns when l = 0, in which case phi = v22.
struct InitialFactorization {
    Matrix psi11;  // n1 x l
    Matrix psi21;  // n2 x l
    Matrix phi;    // n2 x n2, PSD
    Index l = 0;
};

InitialFactorization initial_factorization(const ValidatedModel& model, const Partition2& p,
                                           const Tolerances& tol = {});

/// Three-block refinement: a = tau a^V tau', v = eta v^Theta eta', plus the
/// H4 solution c and the coupling gammatil used by the q3 Riccati equation.
struct ThreeBlockFactorization {
    Matrix tau11, tau21, tau22, tau31, tau32;
    Matrix beta;   // nt3 x nt3, PSD
    Matrix eta11, eta21, eta22, eta31, eta32;
    Matrix theta;  // nt3 x nt3, PSD
    Matrix c;         // nt2 x nt3
    Matrix gammatil;  // (n1 + nt2) x nt3
    Index ktil = 0;
    Index ltil = 0;
    double h4_residual = 0.0;
};

ThreeBlockFactorization three_block_factorization(const ValidatedModel& model,
                                                  const Partition3& p, double t,
                                                  const Tolerances& tol = {});

struct H5Report {
    bool pass = true;
    double worst_alpha23 = 0.0;
    double worst_alpha23_time = 0.0;
    double worst_phi23 = 0.0;
    std::string summary() const;
};

/// Checks phi_23 = 0 and alpha_23(t) = 0 at every grid time (absolute h5 tol).
H5Report check_h5(const ValidatedModel& model, const Partition3& p,
                  const std::vector<double>& grid, const Tolerances& tol = {});

/// Coefficients of dq = F q + q F' + G - q H q.
struct RiccatiCoeffs {
    Matrix F, G, H;
};

/// Per-interval factorizations of a model over [0, horizon], cached by the
/// interval index of the merged breakpoint set.  Construction verifies that
/// the noise rank k is the same in every interval (H1 demands a single k);
/// models whose rank changes across intervals are rejected.
class TwoBlockSchedule {
public:
    TwoBlockSchedule(const ValidatedModel& model, const Partition2& p, double horizon,
                     const Tolerances& tol = {});

    const NoiseFactorization& noise_at(double t) const;
    const InitialFactorization& initial() const { return initial_; }
    Index noise_rank() const { return rank_; }

    /// Coefficients of the q2 equation: F = b22 - a21 gamma, G = alpha,
    /// H = gamma' a11 gamma.
    const RiccatiCoeffs& coeffs_at(double t) const;

    /// Model breakpoints strictly inside (0, horizon).
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    double horizon() const { return horizon_; }
    const Partition2& partition() const { return partition_; }

private:
    Partition2 partition_;
    double horizon_;
    std::vector<double> breakpoints_;  // interior edges
    std::vector<NoiseFactorization> noise_;
    std::vector<RiccatiCoeffs> coeffs_;
    InitialFactorization initial_;
    Index rank_ = 0;

    std::size_t interval_of(double t) const;
};

/// Three-block extension: per-interval tau/beta/c/gammatil plus the q3
/// Riccati coefficients and the alpha_33 embedding used by the W-split.
class ThreeBlockSchedule {
public:
    ThreeBlockSchedule(const ValidatedModel& model, const Partition3& p, double horizon,
                       const Tolerances& tol = {});

    const TwoBlockSchedule& two_block() const { return two_; }
    const ThreeBlockFactorization& factor_at(double t) const;

    /// Coefficients of the q3 equation (F = btil33 - atil3(12) gammatil,
    /// G = beta, H = gammatil' atil(12)(12) gammatil).
    const RiccatiCoeffs& q3_coeffs_at(double t) const;

    /// e2 etil3' alpha33(t) etil3 e2': the pre-switch noise gain of the q2^c
    /// equation (only the (3,3) block of alpha kept).
    const Matrix& alpha33_embedded_at(double t) const;
    /// e2 etil3' phi33 etil3 e2': the q2^c initial value.
    const Matrix& phi33_embedded() const { return phi33_embedded_; }
    /// theta embedded at the (3,3) block of an n2 x n2 matrix: the q2-hat
    /// initial value of the X-split when s = 0 is handled via q3(0) = theta.
    const Matrix& theta() const { return theta_; }

    const Partition3& partition() const { return partition_; }

private:
    Partition3 partition_;
    TwoBlockSchedule two_;
    std::vector<ThreeBlockFactorization> factors_;
    std::vector<RiccatiCoeffs> q3_coeffs_;
    std::vector<Matrix> alpha33_embedded_;
    Matrix phi33_embedded_;
    Matrix theta_;

    std::size_t interval_of(double t) const;
};

/// One line per hypothesis, for the CLI `check` command.
struct HypothesisCheck {
    std::string name;
    bool applicable = false;
    bool pass = false;
    std::string detail;
};

std::vector<HypothesisCheck> check_hypotheses(const ValidatedModel& model,
                                              const std::optional<Partition2>& p2,
                                              const std::optional<Partition3>& p3,
                                              double horizon, const Tolerances& tol = {});

}  // namespace gdinfo
