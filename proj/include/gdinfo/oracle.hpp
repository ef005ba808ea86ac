#pragma once

#include <vector>

#include "gdinfo/common.hpp"
#include "gdinfo/model.hpp"

namespace gdinfo {

/// Exact discretization of the diffusion to a Gauss-Markov chain:
/// X_{k+1} = A_k X_k + w_k, w_k ~ N(0, Q_k), X_0 ~ N(mu, v).
/// A and Q are constant within each coefficient interval; `piece` maps each
/// step to its interval.
struct GaussChain {
    double dt = 0.0;
    Index steps = 0;  // N; grid times are k*dt for k = 0..N
    Index dim = 0;
    std::vector<Matrix> A;  // per piece
    std::vector<Matrix> Q;  // per piece
    std::vector<std::size_t> piece;  // size N
    Vector mu;
    Matrix v;

    const Matrix& A_at(Index k) const { return A[piece[static_cast<std::size_t>(k)]]; }
    const Matrix& Q_at(Index k) const { return Q[piece[static_cast<std::size_t>(k)]]; }
};

/// dt must divide the horizon and every coefficient breakpoint gap
/// (StepMisaligned otherwise).  Uses A = exp(b dt) and the Van Loan integral
/// for Q, so the chain's marginals match the continuous moments exactly.
GaussChain discretize(const ValidatedModel& model, double dt, double horizon);

/// Joint covariance of the stacked states (X_0, ..., X_N), optionally followed
/// by (Xi_2, dW2_0, ..., dW2_{N-1}) when built by path_covariance_with_noise.
struct PathCovariance {
    Matrix sigma;
    Index dim = 0;     // n
    Index points = 0;  // N + 1
    Index xi_dim = 0;
    Index dw_dim = 0;
    Index dw_count = 0;

    std::vector<Index> state_indices(Index k) const;
    std::vector<Index> xi_indices() const;
    std::vector<Index> dw_indices(Index k) const;
};

/// Exact joint Gaussian covariance via forward recursion.  The stacked
/// dimension must not exceed size_cap (SizeCap): the dense oracle is
/// desk-scale by design.
PathCovariance path_covariance(const GaussChain& chain, Index size_cap = 4000);

/// Stacked states plus the noise variables (Xi_2, dW_2 increments) of the
/// directed representation, exactly jointly distributed with the states.
PathCovariance path_covariance_with_noise(const ValidatedModel& model, const Partition2& p,
                                          double dt, double horizon, Index size_cap = 4000);

/// Gaussian conditional mutual information I(U; V | Z) in nats from the joint
/// covariance: 1/2 (logdet S_UZ + logdet S_VZ - logdet S_Z - logdet S_UVZ).
/// Index sets must be disjoint.  Log-determinants are jitter-regularized;
/// throws DegenerateBeyondJitter when unstable.  Result clipped at 0 from
/// below within -1e-9.
double gaussian_cmi(const Matrix& cov, const std::vector<Index>& idx_u,
                    const std::vector<Index>& idx_v, const std::vector<Index>& idx_z,
                    const Tolerances& tol = {});

/// Discrete-time transfer entropy on the chain:
/// I(X2-past(0..s); X1-future(s..t) | X1-past(0..s)), evaluated by exact
/// sequential Gaussian conditioning (equals the block CMI by the chain rule,
/// but runs in O(N)).  Converges to transfer_entropy(s*dt, t*dt) as dt -> 0.
double discrete_transfer_entropy(const GaussChain& chain, const Partition2& p, Index s_idx,
                                 Index t_idx, const Tolerances& tol = {});

/// I(X3-past(0..s); X1-future(s..t) | (X1,X2)-past(0..s)) on the chain.
double discrete_te_split_x(const GaussChain& chain, const Partition3& p, Index s_idx,
                           Index t_idx, const Tolerances& tol = {});

/// I((Xi3, W3-increments(0..s)); X1-future(s..t) | X1-past(0..s), Xi2,
/// W2-increments(0..s)) on the exactly-discretized augmented (X, W2) chain.
double discrete_te_split_w(const ValidatedModel& model, const Partition3& p, double dt,
                           Index s_idx, Index t_idx, const Tolerances& tol = {});

/// I((Xi2, W2-increments(0..t)); X1-path(0..t)) on the augmented chain; the
/// discrete counterpart of the directed information.
double discrete_directed_information(const ValidatedModel& model, const Partition2& p,
                                     double dt, Index t_idx, const Tolerances& tol = {});

}  // namespace gdinfo
