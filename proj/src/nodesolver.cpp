#include "polytone/nodesolver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polytone/error.hpp"
#include "polytone/polycurve.hpp"

namespace polytone {

LevelStatistics::LevelStatistics(const Histogram& h)
    : cum_count_(h.counts.size() + 1, 0), cum_sum_(h.counts.size() + 1, 0) {
    for (std::size_t u = 0; u < h.counts.size(); ++u) {
        cum_count_[u + 1] = cum_count_[u] + h.counts[u];
        cum_sum_[u + 1] = cum_sum_[u] + h.counts[u] * u;
    }
}

std::pair<std::uint64_t, std::uint64_t> LevelStatistics::count_and_sum(double lower, double upper) const {
    const double top = static_cast<double>(max_level());
    const double lo = std::max(0.0, std::ceil(lower));
    const double hi = std::min(top, std::floor(upper));
    if (!(lo <= hi)) {
        return {0, 0};
    }
    const auto first = static_cast<std::size_t>(lo);
    const auto last = static_cast<std::size_t>(hi) + 1;
    return {cum_count_[last] - cum_count_[first], cum_sum_[last] - cum_sum_[first]};
}

std::pair<double, double> min_max_levels(const GrayImage& image) {
    if (image.empty()) {
        throw Error(ErrorKind::EmptyImage, "image has no pixels");
    }
    auto [lo, hi] = std::minmax_element(image.levels().begin(), image.levels().end());
    return {static_cast<double>(*lo), static_cast<double>(*hi)};
}

std::vector<double> init_nodes(double v_min, double v_max, std::size_t n) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "node count must be at least 2");
    }
    if (!(v_min < v_max)) {
        throw Error(ErrorKind::DegenerateRange, "node range is empty");
    }
    std::vector<double> nodes(n);
    const double span = v_max - v_min;
    for (std::size_t i = 0; i < n; ++i) {
        nodes[i] = v_min + static_cast<double>(i) / static_cast<double>(n - 1) * span;
    }
    nodes.back() = v_max;
    return nodes;
}

BinStats bin_stats(const LevelStatistics& stats, std::span<const double> nodes, std::size_t i) {
    if (i < 2 || i + 1 > nodes.size()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "bin index " + std::to_string(i) + " outside 2.." + std::to_string(nodes.size() - 1));
    }
    BinStats b;
    b.index = i;
    b.lower = nodes[i - 2];
    b.upper = nodes[i];
    std::tie(b.pixel_count, b.level_sum) = stats.count_and_sum(b.lower, b.upper);
    return b;
}

BinStats bin_stats(const GrayImage& image, std::span<const double> nodes, std::size_t i) {
    return bin_stats(LevelStatistics(image), nodes, i);
}

IterationStep iterate_nodes(const LevelStatistics& stats, std::span<const double> nodes, std::size_t iteration) {
    IterationStep step;
    step.nodes.assign(nodes.begin(), nodes.end());
    for (std::size_t i = 2; i < nodes.size(); ++i) {
        const BinStats b = bin_stats(stats, nodes, i);
        if (b.pixel_count == 0) {
            step.warnings.push_back({iteration, i,
                                     "empty bin for node " + std::to_string(i) + " at iteration " +
                                         std::to_string(iteration) + "; node kept"});
            continue;
        }
        step.nodes[i - 1] = b.mean();
    }
    try {
        check_strictly_increasing(step.nodes);
    } catch (const Error&) {
        throw Error(ErrorKind::NodeOrderViolation, "nodes crossed or coincided at iteration " +
                                                       std::to_string(iteration) + "; reduce n");
    }
    return step;
}

IterationStep iterate_nodes(const GrayImage& image, std::span<const double> nodes) {
    return iterate_nodes(LevelStatistics(image), nodes);
}

NodeSolverResult solve_nodes(const GrayImage& image, const NodeSolverConfig& config) {
    if (config.n < 2) {
        throw Error(ErrorKind::InvalidArgument, "node count must be at least 2");
    }
    if (!(config.epsilon > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
    }
    if (config.max_iterations < 1) {
        throw Error(ErrorKind::InvalidArgument, "max_iterations must be at least 1");
    }

    const auto [l_min, l_max] = min_max_levels(image);
    if (l_min == l_max) {
        throw Error(ErrorKind::ConstantImage, "image is constant at level " + std::to_string(static_cast<long>(l_min)));
    }
    const Histogram hist = histogram(image);
    // Interior nodes are means and may fall between occupied levels, so n
    // nodes need only n - 1 distinct levels (two levels carry three nodes).
    if (hist.distinct_levels() + 1 < config.n) {
        throw Error(ErrorKind::TooFewDistinctLevels, "image has " + std::to_string(hist.distinct_levels()) +
                                                         " distinct levels, too few for n = " +
                                                         std::to_string(config.n) + "; reduce n");
    }

    std::vector<double> nodes;
    if (config.initial_interior_nodes) {
        const auto& interior = *config.initial_interior_nodes;
        if (interior.size() + 2 != config.n) {
            throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(config.n - 2) +
                                                        " initial interior nodes, got " +
                                                        std::to_string(interior.size()));
        }
        nodes.push_back(l_min);
        nodes.insert(nodes.end(), interior.begin(), interior.end());
        nodes.push_back(l_max);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            if (!(nodes[i] < nodes[i + 1])) {
                throw Error(ErrorKind::InvalidArgument,
                            "initial interior nodes must be strictly increasing inside (l_min, l_max)");
            }
        }
    } else {
        nodes = init_nodes(l_min, l_max, config.n);
    }

    const LevelStatistics stats(hist);
    NodeSolverResult result;
    result.trace.push_back(nodes);

    while (result.iterations < config.max_iterations) {
        IterationStep step = iterate_nodes(stats, nodes, result.iterations + 1);
        ++result.iterations;

        double change = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            change = std::max(change, std::abs(step.nodes[i] - nodes[i]));
        }
        nodes = std::move(step.nodes);
        result.trace.push_back(nodes);
        result.warnings.insert(result.warnings.end(), step.warnings.begin(), step.warnings.end());

        if (change < config.epsilon) {
            result.converged = true;
            break;
        }
    }
    // On convergence the previous iterate is the one whose bin means are all
    // within epsilon of it; the last update only measured that residual.
    result.nodes = result.converged ? result.trace[result.trace.size() - 2] : std::move(nodes);
    return result;
}

}  // namespace polytone
