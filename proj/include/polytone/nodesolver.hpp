#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polytone/gray_image.hpp"

namespace polytone {

// Node placement by fixed-point iteration on image statistics.
//
// The end nodes are pinned to the darkest and brightest occupied levels.
// Each interior node v_i is repeatedly replaced by the mean level of the
// pixels whose level falls in the closed interval [v_{i-1}, v_{i+1}]
// (Jacobi update: every interval uses the previous iterate). Intervals of
// neighbouring nodes overlap, so a pixel may count toward several bins.

struct NodeSolverConfig {
    std::size_t n = 4;
    double epsilon = 0.5;
    std::size_t max_iterations = 100;
    /// n-2 strictly increasing values strictly inside (l_min, l_max).
    /// Equidistant placement is used when absent.
    std::optional<std::vector<double>> initial_interior_nodes;
};

struct SolverWarning {
    std::size_t iteration = 0;  // 1-based index of the update that produced it
    std::size_t node = 0;       // 1-based node index
    std::string message;

    bool operator==(const SolverWarning&) const = default;
};

struct NodeSolverResult {
    /// When converged, the iterate v whose one-step update moved no node by
    /// epsilon or more, i.e. |v_i - mean(D_i(v))| < epsilon for every i.
    /// That update is the last trace entry. Otherwise the last iterate.
    std::vector<double> nodes;
    std::size_t iterations = 0;
    bool converged = false;
    /// trace[0] is the initial iterate, trace[m] the result of update m.
    std::vector<std::vector<double>> trace;
    std::vector<SolverWarning> warnings;
};

struct BinStats {
    std::size_t index = 0;  // 1-based node index, 2..n-1
    double lower = 0.0;
    double upper = 0.0;
    std::uint64_t pixel_count = 0;
    std::uint64_t level_sum = 0;

    [[nodiscard]] double mean() const { return static_cast<double>(level_sum) / static_cast<double>(pixel_count); }

    bool operator==(const BinStats&) const = default;
};

struct IterationStep {
    std::vector<double> nodes;
    std::vector<SolverWarning> warnings;
};

/// Cumulative count and level-sum tables over a histogram. Sums are exact
/// 64-bit integers, so any closed level range is answered in O(1) with the
/// same result as a per-pixel scan.
class LevelStatistics {
public:
    explicit LevelStatistics(const Histogram& h);
    explicit LevelStatistics(const GrayImage& image) : LevelStatistics(histogram(image)) {}

    /// Pixels whose level lies in the closed real interval [lower, upper].
    [[nodiscard]] std::pair<std::uint64_t, std::uint64_t> count_and_sum(double lower, double upper) const;

    [[nodiscard]] std::size_t max_level() const noexcept { return cum_count_.size() - 2; }

private:
    // cum_*[u + 1] = totals over levels 0..u
    std::vector<std::uint64_t> cum_count_;
    std::vector<std::uint64_t> cum_sum_;
};

/// Exact darkest and brightest levels. Throws EmptyImage.
std::pair<double, double> min_max_levels(const GrayImage& image);

/// n equidistant nodes from v_min to v_max. Throws DegenerateRange when
/// v_min >= v_max and InvalidArgument when n < 2.
std::vector<double> init_nodes(double v_min, double v_max, std::size_t n);

/// Statistics of bin i (1-based, 2 <= i <= n-1). Throws IndexOutOfRange.
BinStats bin_stats(const LevelStatistics& stats, std::span<const double> nodes, std::size_t i);
BinStats bin_stats(const GrayImage& image, std::span<const double> nodes, std::size_t i);

/// One Jacobi update. Empty bins keep their node and add a warning tagged
/// with `iteration`. Throws NodeOrderViolation if the update is not strictly
/// increasing.
IterationStep iterate_nodes(const LevelStatistics& stats, std::span<const double> nodes, std::size_t iteration = 1);
IterationStep iterate_nodes(const GrayImage& image, std::span<const double> nodes);

/// Full iteration until the max-norm node change drops below epsilon or
/// max_iterations updates have run. Needs at least n - 1 distinct levels.
///
/// Errors: EmptyImage, ConstantImage (l_min == l_max), TooFewDistinctLevels
/// (fewer occupied levels than nodes), InvalidArgument (bad config),
/// NodeOrderViolation (message names the iteration).
NodeSolverResult solve_nodes(const GrayImage& image, const NodeSolverConfig& config);

}  // namespace polytone
