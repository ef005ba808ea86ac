#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdinfo/common.hpp"

namespace gdinfo {

enum class MapKind { Constant, Piecewise };

/// Piecewise-constant matrix-valued map of time, right-continuous.
/// Breakpoints are the interior switch times; value i applies on
/// [breakpoint_{i-1}, breakpoint_i) with breakpoint_{-1} = 0 and the last
/// value extending to infinity.
class CoefficientMap {
public:
    static CoefficientMap constant(Matrix value);
    static CoefficientMap piecewise(std::vector<double> breakpoints, std::vector<Matrix> values);

    /// Right-continuous evaluation; throws NegativeTime for t < 0.
    const Matrix& at(double t) const;
    std::size_t interval_index(double t) const;

    MapKind kind() const { return kind_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<Matrix>& values() const { return values_; }
    Index rows() const { return values_.front().rows(); }
    Index cols() const { return values_.front().cols(); }

private:
    CoefficientMap(MapKind kind, std::vector<double> bps, std::vector<Matrix> values);

    MapKind kind_;
    std::vector<double> breakpoints_;
    std::vector<Matrix> values_;
};

struct Partition2 {
    Index n1 = 0;
    Index n2 = 0;
};

struct Partition3 {
    Index n1 = 0;
    Index nt2 = 0;
    Index nt3 = 0;

    Partition2 merged() const { return Partition2{n1, nt2 + nt3}; }
};

/// Raw model description: initial law N(mu, v), drift map b, diffusion map a.
struct ModelSpec {
    Vector mu;
    Matrix v;
    CoefficientMap b;
    CoefficientMap a;

    Index dim() const { return mu.size(); }
};

/// Model whose invariants have been verified (dimensions, v and a symmetric
/// PSD within tolerance, breakpoints ordered).  Immutable after construction;
/// safe to share across threads.
class ValidatedModel {
public:
    Index dim() const { return spec_.mu.size(); }
    const Vector& mu() const { return spec_.mu; }
    const Matrix& v() const { return spec_.v; }
    const CoefficientMap& b() const { return spec_.b; }
    const CoefficientMap& a() const { return spec_.a; }

    const Matrix& b_at(double t) const { return spec_.b.at(t); }
    const Matrix& a_at(double t) const { return spec_.a.at(t); }
    std::pair<const Matrix&, const Matrix&> coefficients_at(double t) const {
        return {spec_.b.at(t), spec_.a.at(t)};
    }

    /// Union of the b- and a-breakpoints, ascending.
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    /// Index into the merged piecewise intervals (0 = [0, first breakpoint)).
    std::size_t interval_index(double t) const;

    friend ValidatedModel validate_model(ModelSpec spec, const Tolerances& tol);

private:
    explicit ValidatedModel(ModelSpec spec);

    ModelSpec spec_;
    std::vector<double> breakpoints_;
};

/// Checks all ModelSpec invariants and PSD-projects a(t) within tolerance.
/// Throws DimensionMismatch, NotPsd, NotSymmetric, or BreakpointOrder.
ValidatedModel validate_model(ModelSpec spec, const Tolerances& tol = {});

void validate_partition(const Partition2& p, Index n);
void validate_partition(const Partition3& p, Index n);

/// Model file contents: the spec plus whichever partition the file declares.
struct ModelFile {
    ModelSpec spec;
    std::optional<Partition2> partition2;
    std::optional<Partition3> partition3;
};

ModelFile parse_model_json(const std::string& text);
ModelFile load_model_file(const std::string& path);

}  // namespace gdinfo
