#include "polytone/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "polytone/error.hpp"

namespace polytone {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

Level resolve_output_max(const GrayImage& image, const EnhanceConfig& config) {
    return config.output_max.value_or(image.max_level());
}

NodeSolverConfig solver_config(const EnhanceConfig& config) {
    NodeSolverConfig solver;
    solver.n = config.n;
    solver.epsilon = config.epsilon;
    solver.max_iterations = config.max_iterations;
    return solver;
}

}  // namespace

std::uint64_t LookupTable::checksum() const noexcept {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (Level e : entries) {
        for (int shift : {0, 8}) {
            hash ^= static_cast<std::uint8_t>(e >> shift);
            hash *= 0x100000001b3ULL;
        }
    }
    return hash;
}

std::vector<double> equidistant_targets(std::size_t n, double output_max) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "node count must be at least 2");
    }
    if (!(output_max > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "output range maximum must be positive");
    }
    std::vector<double> targets(n);
    for (std::size_t i = 0; i < n; ++i) {
        targets[i] = static_cast<double>(i) / static_cast<double>(n - 1) * output_max;
    }
    targets.back() = output_max;
    return targets;
}

Transform build_transform(const GrayImage& image, const EnhanceConfig& config) {
    NodeSolverResult nodes = solve_nodes(image, solver_config(config));

    const double out_max = resolve_output_max(image, config);
    const std::vector<double> targets = equidistant_targets(config.n, out_max);
    PolygonalFunction function = solve_coefficients(nodes.nodes, targets, out_max);
    return {std::move(function), std::move(nodes)};
}

LookupTable build_lut(const PolygonalFunction& poly, Level max_level) {
    const double out_max = poly.range_max();
    LookupTable lut;
    lut.output_max = static_cast<Level>(out_max);
    lut.entries.resize(std::size_t{max_level} + 1);
    for (std::size_t u = 0; u < lut.entries.size(); ++u) {
        const double v = std::clamp(static_cast<double>(u), poly.front(), poly.back());
        const double f = std::clamp(std::round(poly.evaluate(v)), 0.0, out_max);
        lut.entries[u] = static_cast<Level>(f);
    }
    return lut;
}

GrayImage apply_lut(const GrayImage& image, const LookupTable& lut) {
    std::vector<Level> out(image.size());
    std::transform(image.levels().begin(), image.levels().end(), out.begin(),
                   [&](Level l) { return lut.entries[l]; });
    return GrayImage(image.width(), image.height(), lut.output_max, std::move(out));
}

EnhanceResult enhance(const GrayImage& image, const EnhanceConfig& config) {
    StageTimings timing;

    auto t = Clock::now();
    NodeSolverResult nodes = solve_nodes(image, solver_config(config));
    timing.nodes_ms = elapsed_ms(t);

    t = Clock::now();
    const double out_max = resolve_output_max(image, config);
    PolygonalFunction function = solve_coefficients(nodes.nodes, equidistant_targets(config.n, out_max), out_max);
    timing.coefficients_ms = elapsed_ms(t);

    t = Clock::now();
    const LookupTable lut = build_lut(function, image.max_level());
    timing.lut_ms = elapsed_ms(t);

    t = Clock::now();
    GrayImage out = apply_lut(image, lut);
    timing.apply_ms = elapsed_ms(t);

    return {std::move(out), EnhanceReport{std::move(nodes), std::move(function), lut.checksum(), timing}};
}

}  // namespace polytone
