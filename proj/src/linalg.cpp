#include "gdinfo/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "gdinfo/errors.hpp"

namespace gdinfo {

double symmetry_error(const Matrix& m) {
    const double scale = std::max(m.norm(), 1.0);
    return (m - m.transpose()).norm() / scale;
}

bool is_symmetric(const Matrix& m, double tol) {
    return m.rows() == m.cols() && symmetry_error(m) <= tol;
}

Matrix project_psd(const Matrix& m, double psd_tol, double sym_tol, const char* label) {
    if (m.rows() != m.cols()) throw DimensionMismatch(std::string(label) + ": not square");
    if (m.size() == 0) return m;
    if (!is_symmetric(m, sym_tol))
        throw NotSymmetric(std::string(label) + ": asymmetry " + std::to_string(symmetry_error(m)));
    Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(m));
    Vector lambda = es.eigenvalues();
    const double scale = std::max(lambda.cwiseAbs().maxCoeff(), 1.0);
    const double worst = lambda.minCoeff();
    if (worst < -psd_tol * scale)
        throw NotPsd(std::string(label) + ": eigenvalue " + std::to_string(worst), worst);
    if (worst >= 0.0) return symmetrized(m);
    Vector clipped = lambda.cwiseMax(0.0);
    return symmetrized(es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose());
}

double min_eigenvalue(const Matrix& symmetric) {
    if (symmetric.size() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(symmetric), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

Matrix pinv_psd(const Matrix& m, double rank_tol) {
    if (m.size() == 0) return m;
    Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(m));
    const Vector& lambda = es.eigenvalues();
    const double cutoff = rank_tol * std::max(lambda.cwiseAbs().maxCoeff(), 1.0);
    Vector inv = Vector::Zero(lambda.size());
    for (Index i = 0; i < lambda.size(); ++i)
        if (lambda[i] > cutoff) inv[i] = 1.0 / lambda[i];
    return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

double logdet_spd(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::LLT<Matrix> llt(m);
    if (llt.info() == Eigen::Success) {
        double ld = 0.0;
        auto L = llt.matrixL();
        bool tiny = false;
        const double scale = std::max(m.trace() / static_cast<double>(m.rows()), 0.0);
        for (Index i = 0; i < m.rows(); ++i) {
            const double d = L(i, i);
            if (d * d < 1e-10 * std::max(scale, 1e-300)) tiny = true;
            ld += 2.0 * std::log(d);
        }
        if (!tiny) return ld;
    }
    // Near-singular or indefinite from round-off: eigenvalue route with jitter.
    Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(m), Eigen::EigenvaluesOnly);
    Vector lambda = es.eigenvalues();
    const double scale = std::max(lambda.cwiseAbs().maxCoeff(), 0.0);
    double jitter = 0.0;
    if (lambda.minCoeff() < 1e-10 * scale)
        jitter = 1e-12 * std::max(m.trace(), 0.0) / static_cast<double>(m.rows());
    double ld = 0.0;
    for (Index i = 0; i < lambda.size(); ++i) {
        const double x = std::max(lambda[i], 0.0) + jitter;
        if (x <= 0.0)
            throw DegenerateBeyondJitter("logdet: matrix singular beyond jitter; refine or reparameterize");
        ld += std::log(x);
    }
    return ld;
}

std::pair<Matrix, Matrix> exact_discretization(const Matrix& b, const Matrix& a, double dt) {
    const Index n = b.rows();
    // Van Loan block exponential: exp(dt [[-b, a], [0, b']]) has top-right
    // block Y with exp(b dt) Y = int_0^dt exp(b s) a exp(b' s) ds.
    Matrix block = Matrix::Zero(2 * n, 2 * n);
    block.topLeftCorner(n, n) = -b;
    block.topRightCorner(n, n) = a;
    block.bottomRightCorner(n, n) = b.transpose();
    Matrix e = (block * dt).exp();
    Matrix A = e.bottomRightCorner(n, n).transpose();
    Matrix Q = A * e.topRightCorner(n, n);
    return {A, symmetrized(Q)};
}

}  // namespace gdinfo
