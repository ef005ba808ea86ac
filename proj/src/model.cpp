#include "gdinfo/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gdinfo/errors.hpp"
#include "gdinfo/linalg.hpp"

namespace gdinfo {

namespace {

std::size_t interval_lookup(const std::vector<double>& breakpoints, double t) {
    if (t < 0.0) throw NegativeTime("coefficient map queried at t = " + std::to_string(t));
    // right-continuous: at a breakpoint the next interval applies
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t);
    return static_cast<std::size_t>(it - breakpoints.begin());
}

}  // namespace

CoefficientMap::CoefficientMap(MapKind kind, std::vector<double> bps, std::vector<Matrix> values)
    : kind_(kind), breakpoints_(std::move(bps)), values_(std::move(values)) {}

CoefficientMap CoefficientMap::constant(Matrix value) {
    std::vector<Matrix> values;
    values.push_back(std::move(value));
    return CoefficientMap(MapKind::Constant, {}, std::move(values));
}

CoefficientMap CoefficientMap::piecewise(std::vector<double> breakpoints,
                                         std::vector<Matrix> values) {
    if (values.empty()) throw DimensionMismatch("piecewise map needs at least one value");
    if (values.size() != breakpoints.size() + 1)
        throw DimensionMismatch("piecewise map needs one value per interval (breakpoints + 1)");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (breakpoints[i] <= 0.0)
            throw BreakpointOrder("breakpoints must be positive (first interval starts at t = 0)");
        if (i > 0 && breakpoints[i] <= breakpoints[i - 1])
            throw BreakpointOrder("breakpoints must be strictly increasing");
    }
    for (const Matrix& m : values)
        if (m.rows() != values.front().rows() || m.cols() != values.front().cols())
            throw DimensionMismatch("piecewise map values differ in shape");
    return CoefficientMap(MapKind::Piecewise, std::move(breakpoints), std::move(values));
}

const Matrix& CoefficientMap::at(double t) const {
    return values_[interval_lookup(breakpoints_, t)];
}

std::size_t CoefficientMap::interval_index(double t) const {
    return interval_lookup(breakpoints_, t);
}

ValidatedModel::ValidatedModel(ModelSpec spec) : spec_(std::move(spec)) {
    breakpoints_ = spec_.b.breakpoints();
    breakpoints_.insert(breakpoints_.end(), spec_.a.breakpoints().begin(),
                        spec_.a.breakpoints().end());
    std::sort(breakpoints_.begin(), breakpoints_.end());
    auto near = [](double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x)); };
    breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end(), near),
                       breakpoints_.end());
}

std::size_t ValidatedModel::interval_index(double t) const {
    return interval_lookup(breakpoints_, t);
}

ValidatedModel validate_model(ModelSpec spec, const Tolerances& tol) {
    const Index n = spec.mu.size();
    if (n < 2) throw DimensionMismatch("model dimension must be >= 2");
    if (spec.v.rows() != n || spec.v.cols() != n)
        throw DimensionMismatch("v must be n x n");
    if (spec.b.rows() != n || spec.b.cols() != n)
        throw DimensionMismatch("b must be n x n");
    if (spec.a.rows() != n || spec.a.cols() != n)
        throw DimensionMismatch("a must be n x n");

    if (!is_symmetric(spec.v, 1e-12))
        throw NotSymmetric("v: asymmetry " + std::to_string(symmetry_error(spec.v)));
    spec.v = project_psd(spec.v, tol.psd, 1e-12, "v");

    std::vector<Matrix> projected;
    projected.reserve(spec.a.values().size());
    for (const Matrix& av : spec.a.values())
        projected.push_back(project_psd(av, tol.psd, tol.sym, "a"));
    if (spec.a.kind() == MapKind::Constant)
        spec.a = CoefficientMap::constant(std::move(projected.front()));
    else
        spec.a = CoefficientMap::piecewise(spec.a.breakpoints(), std::move(projected));

    return ValidatedModel(std::move(spec));
}

void validate_partition(const Partition2& p, Index n) {
    if (p.n1 < 1 || p.n2 < 1 || p.n1 + p.n2 != n)
        throw DimensionMismatch("partition (n1, n2) must be positive and sum to n");
}

void validate_partition(const Partition3& p, Index n) {
    if (p.n1 < 1 || p.nt2 < 1 || p.nt3 < 1 || p.n1 + p.nt2 + p.nt3 != n)
        throw DimensionMismatch("partition (n1, nt2, nt3) must be positive and sum to n");
}

namespace {

using nlohmann::json;

Matrix matrix_from_json(const json& j, const char* label) {
    if (!j.is_array() || j.empty() || !j.front().is_array())
        throw DimensionMismatch(std::string(label) + ": expected a nested array");
    const std::size_t rows = j.size();
    const std::size_t cols = j.front().size();
    Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols)
            throw DimensionMismatch(std::string(label) + ": ragged rows");
        for (std::size_t k = 0; k < cols; ++k) m(static_cast<Index>(i), static_cast<Index>(k)) = j[i][k].get<double>();
    }
    return m;
}

CoefficientMap map_from_json(const json& j, const char* label) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") return CoefficientMap::constant(matrix_from_json(j.at("value"), label));
    if (kind == "piecewise") {
        std::vector<double> bps = j.at("breakpoints").get<std::vector<double>>();
        std::vector<Matrix> values;
        for (const auto& v : j.at("values")) values.push_back(matrix_from_json(v, label));
        return CoefficientMap::piecewise(std::move(bps), std::move(values));
    }
    throw DimensionMismatch(std::string(label) + ": kind must be 'constant' or 'piecewise'");
}

}  // namespace

ModelFile parse_model_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("model file: ") + e.what());
    }
    try {
        const Index n = j.at("n").get<Index>();
        Vector mu = Vector::Zero(n);
        if (j.contains("mu")) {
            auto v = j.at("mu").get<std::vector<double>>();
            if (static_cast<Index>(v.size()) != n) throw DimensionMismatch("mu: wrong length");
            mu = Eigen::Map<Vector>(v.data(), n);
        }
        Matrix v = j.contains("v") ? matrix_from_json(j.at("v"), "v") : Matrix::Zero(n, n).eval();
        ModelFile out{ModelSpec{std::move(mu), std::move(v), map_from_json(j.at("b"), "b"),
                                map_from_json(j.at("a"), "a")},
                      std::nullopt, std::nullopt};
        if (j.contains("partition")) {
            const json& p = j.at("partition");
            if (p.contains("nt2")) {
                Partition3 p3{p.at("n1").get<Index>(), p.at("nt2").get<Index>(),
                              p.at("nt3").get<Index>()};
                validate_partition(p3, n);
                out.partition3 = p3;
            } else {
                Partition2 p2{p.at("n1").get<Index>(), p.at("n2").get<Index>()};
                validate_partition(p2, n);
                out.partition2 = p2;
            }
        }
        if (out.spec.dim() != n) throw DimensionMismatch("mu length disagrees with n");
        return out;
    } catch (const json::exception& e) {
        throw Error(std::string("model file: ") + e.what());
    }
}

ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model_json(ss.str());
}

}  // namespace gdinfo
