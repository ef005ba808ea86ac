#pragma once

#include <vector>

#include "gdinfo/common.hpp"
#include "gdinfo/factor.hpp"
#include "gdinfo/model.hpp"

namespace gdinfo {

struct SolveOptions {
    double step = 1e-3;
    Tolerances tol{};
};

enum class CurveKind { TransferEntropy, Rate, DirectedInformation };

/// Scalar information quantity sampled on a time grid, in nats.
struct InformationCurve {
    std::vector<double> grid;
    std::vector<double> values;
    CurveKind kind = CurveKind::TransferEntropy;
};

enum class SplitKind { X, W };

struct SplitResult {
    double total = 0.0;
    double part_2to1 = 0.0;
    double part_3to1_given2 = 0.0;
    SplitKind kind = SplitKind::X;
};

struct SplitCurve {
    std::vector<double> grid;
    std::vector<double> total;
    std::vector<double> part_2to1;
    std::vector<double> part_3to1_given2;
    SplitKind kind = SplitKind::X;
};

/// Transfer entropy T_{2->1}(s, t) in nats.  Returns exactly 0 when s == t.
double transfer_entropy(const ValidatedModel& model, const Partition2& p, double s, double t,
                        const SolveOptions& opts = {});

/// T(s, r) for every grid time r in [s, t].
InformationCurve transfer_entropy_curve(const ValidatedModel& model, const Partition2& p,
                                        double s, double t, const SolveOptions& opts = {});

/// Instantaneous rate R_{2->1}(t) = 1/2 tr(gamma' a11 gamma q2(t)).
double di_rate(const ValidatedModel& model, const Partition2& p, double t,
               const SolveOptions& opts = {});

/// Directed information D_{2->1}(t), the time integral of the rate.
double directed_information(const ValidatedModel& model, const Partition2& p, double t,
                            const SolveOptions& opts = {});

/// Rate and running integral on a shared grid over [0, t].
struct RateCurve {
    std::vector<double> grid;
    std::vector<double> rate;      // R(r)
    std::vector<double> integral;  // D(r)
};

RateCurve directed_information_curve(const ValidatedModel& model, const Partition2& p, double t,
                                     const SolveOptions& opts = {});

/// X-split of the transfer entropy over [s, t]: conditioning on observed
/// components.  part_3to1_given2 restarts the q2 equation at s from the
/// F_12(s)-conditional covariance assembled from q3(s); part_2to1 is obtained
/// by subtraction from the total.
SplitResult te_split_x(const ValidatedModel& model, const Partition3& p, double s, double t,
                       const SolveOptions& opts = {});
SplitCurve te_split_x_curve(const ValidatedModel& model, const Partition3& p, double s, double t,
                            const SolveOptions& opts = {});

/// W-split: conditioning on driving noises.  Requires H5.
SplitResult te_split_w(const ValidatedModel& model, const Partition3& p, double s, double t,
                       const SolveOptions& opts = {});
SplitCurve te_split_w_curve(const ValidatedModel& model, const Partition3& p, double s, double t,
                            const SolveOptions& opts = {});

/// Directed-information splits on [0, t] (integrals of the split rates).
SplitResult di_split_x(const ValidatedModel& model, const Partition3& p, double t,
                       const SolveOptions& opts = {});
SplitResult di_split_w(const ValidatedModel& model, const Partition3& p, double t,
                       const SolveOptions& opts = {});

}  // namespace gdinfo
