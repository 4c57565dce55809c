#include "polytone/polycurve.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "polytone/error.hpp"

namespace polytone {

void check_strictly_increasing(std::span<const double> nodes) {
    if (nodes.size() < 2) {
        throw Error(ErrorKind::LengthMismatch, "at least two nodes are required");
    }
    const double min_gap = kNodeGapTolerance * (nodes.back() - nodes.front());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (!(nodes[i + 1] - nodes[i] > min_gap)) {
            throw Error(ErrorKind::NonIncreasingNodes, "nodes " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                                           " are not strictly increasing");
        }
    }
}

PolygonalFunction solve_coefficients(std::span<const double> nodes, std::span<const double> values,
                                     double range_max) {
    if (nodes.size() != values.size()) {
        throw Error(ErrorKind::LengthMismatch, std::to_string(nodes.size()) + " nodes but " +
                                                   std::to_string(values.size()) + " target values");
    }
    if (nodes.size() < 2) {
        throw Error(ErrorKind::LengthMismatch, "at least two nodes are required");
    }
    if (nodes.back() == nodes.front()) {
        throw Error(ErrorKind::DegenerateSpan, "first and last node coincide");
    }
    check_strictly_increasing(nodes);
    for (double f : values) {
        if (!(f >= 0.0 && f <= range_max)) {
            throw Error(ErrorKind::InvalidArgument,
                        "target value " + std::to_string(f) + " outside [0, " + std::to_string(range_max) + "]");
        }
    }

    const std::size_t n = nodes.size();
    std::vector<double> slope(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        slope[k] = (values[k + 1] - values[k]) / (nodes[k + 1] - nodes[k]);
    }
    const double total = (values[n - 1] + values[0]) / (nodes[n - 1] - nodes[0]);

    std::vector<double> a(n);
    a[0] = 0.5 * (total + slope[0]);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        a[i] = 0.5 * (slope[i] - slope[i - 1]);
    }
    a[n - 1] = 0.5 * (total - slope[n - 2]);

    return PolygonalFunction({nodes.begin(), nodes.end()}, {values.begin(), values.end()}, std::move(a), range_max);
}

double PolygonalFunction::evaluate(double v) const noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        sum += coeffs_[i] * std::abs(v - nodes_[i]);
    }
    return sum;
}

std::vector<double> PolygonalFunction::segment_slopes() const {
    // slope_k = left - right, where left sums a_0..a_k and right the rest.
    std::vector<double> slopes;
    slopes.reserve(coeffs_.size() - 1);
    double left = 0.0;
    double right = std::accumulate(coeffs_.begin(), coeffs_.end(), 0.0);
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
        left += coeffs_[k];
        right -= coeffs_[k];
        slopes.push_back(left - right);
    }
    return slopes;
}

double PolygonalFunction::exterior_slope() const noexcept {
    return std::accumulate(coeffs_.begin(), coeffs_.end(), 0.0);
}

}  // namespace polytone
