#pragma once

#include <span>
#include <vector>

namespace polytone {

/// Continuous piecewise-linear map written in the absolute-value basis
///
///     f(v) = sum_i a_i * |v - v_i|
///
/// passing through (v_i, f_i) for every node. Immutable once solved.
///
/// Inside [v_1, v_n] the function is the polygonal interpolant of the
/// nodes. Outside it keeps going with slope +sum(a) to the right and
/// -sum(a) to the left, so callers that need a total map over [0, M]
/// clamp the input first (see build_lut).
class PolygonalFunction {
public:
    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] double range_max() const noexcept { return range_max_; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }

    [[nodiscard]] double front() const noexcept { return nodes_.front(); }
    [[nodiscard]] double back() const noexcept { return nodes_.back(); }

    /// Literal sum of a_i * |v - v_i|; no clamping of either v or the result.
    [[nodiscard]] double evaluate(double v) const noexcept;

    /// Slopes of the n-1 segments between consecutive nodes, derived from the
    /// coefficients: slope_k = sum_{j<=k} a_j - sum_{j>k} a_j.
    [[nodiscard]] std::vector<double> segment_slopes() const;

    /// Slope outside the node span on the right (v > v_n). The left side is
    /// the negation.
    [[nodiscard]] double exterior_slope() const noexcept;

private:
    friend PolygonalFunction solve_coefficients(std::span<const double>, std::span<const double>, double);

    PolygonalFunction(std::vector<double> nodes, std::vector<double> values, std::vector<double> coeffs,
                      double range_max)
        : nodes_(std::move(nodes)), values_(std::move(values)), coeffs_(std::move(coeffs)), range_max_(range_max) {}

    std::vector<double> nodes_;
    std::vector<double> values_;
    std::vector<double> coeffs_;
    double range_max_ = 0.0;
};

/// Closed-form coefficients from the interpolation conditions f(v_i) = f_i.
///
/// With s = (f_n + f_1) / (v_n - v_1) and d_k the slope of segment k:
///   a_1 = (s + d_1) / 2
///   a_i = (d_i - d_{i-1}) / 2        for interior nodes
///   a_n = (s - d_{n-1}) / 2
///
/// Errors: LengthMismatch (sizes differ or fewer than two nodes),
/// DegenerateSpan (v_n == v_1), NonIncreasingNodes (some gap below
/// 1e-9 of the span), InvalidArgument (target outside [0, range_max]).
PolygonalFunction solve_coefficients(std::span<const double> nodes, std::span<const double> values,
                                     double range_max);

/// Relative gap below which two nodes count as coincident.
inline constexpr double kNodeGapTolerance = 1e-9;

/// Throws NonIncreasingNodes unless every gap exceeds kNodeGapTolerance * span.
void check_strictly_increasing(std::span<const double> nodes);

}  // namespace polytone
