#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "polytone/gray_image.hpp"
#include "polytone/nodesolver.hpp"
#include "polytone/polycurve.hpp"

namespace polytone {

struct EnhanceConfig {
    std::size_t n = 4;
    double epsilon = 0.5;
    std::size_t max_iterations = 100;
    /// Output range maximum; the input max level when unset.
    std::optional<Level> output_max;
};

/// Output level for every input level 0..max_level.
struct LookupTable {
    std::vector<Level> entries;
    Level output_max = 0;

    [[nodiscard]] Level operator[](std::size_t level) const { return entries[level]; }

    /// FNV-1a over the entries as little-endian 16-bit words.
    [[nodiscard]] std::uint64_t checksum() const noexcept;
};

struct StageTimings {
    double nodes_ms = 0.0;
    double coefficients_ms = 0.0;
    double lut_ms = 0.0;
    double apply_ms = 0.0;
};

struct EnhanceReport {
    NodeSolverResult node_result;
    PolygonalFunction function;
    std::uint64_t lut_checksum = 0;
    StageTimings timing;
};

struct Transform {
    PolygonalFunction function;
    NodeSolverResult node_result;
};

struct EnhanceResult {
    GrayImage image;
    EnhanceReport report;
};

/// (0, M/(n-1), 2M/(n-1), ..., M). Throws InvalidArgument for n < 2 or
/// output_max <= 0.
std::vector<double> equidistant_targets(std::size_t n, double output_max);

/// Nodes from the image statistics, equidistant targets, closed-form
/// coefficients.
Transform build_transform(const GrayImage& image, const EnhanceConfig& config);

/// entry[u] = clamp(round(f(clamp(u, v_1, v_n))), 0, output_max), rounding
/// half away from zero. output_max is taken from the function's range.
LookupTable build_lut(const PolygonalFunction& poly, Level max_level);

GrayImage apply_lut(const GrayImage& image, const LookupTable& lut);

EnhanceResult enhance(const GrayImage& image, const EnhanceConfig& config);

}  // namespace polytone
