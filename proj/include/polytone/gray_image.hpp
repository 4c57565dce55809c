#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace polytone {

using Level = std::uint16_t;

/// Row-major raster of integer gray levels in [0, max_level].
class GrayImage {
public:
    GrayImage() = default;

    /// Throws Error(InvalidArgument) when the level count does not match the
    /// dimensions, and Error(SampleOutOfRange) when a level exceeds max_level.
    GrayImage(std::size_t width, std::size_t height, Level max_level, std::vector<Level> levels);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }
    [[nodiscard]] std::size_t size() const noexcept { return levels_.size(); }
    [[nodiscard]] bool empty() const noexcept { return levels_.empty(); }
    [[nodiscard]] Level max_level() const noexcept { return max_level_; }
    [[nodiscard]] std::span<const Level> levels() const noexcept { return levels_; }

    [[nodiscard]] Level at(std::size_t x, std::size_t y) const { return levels_[y * width_ + x]; }

    bool operator==(const GrayImage&) const = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    Level max_level_ = 0;
    std::vector<Level> levels_;
};

/// Per-level pixel counts over 0..max_level.
struct Histogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    [[nodiscard]] std::size_t max_level() const noexcept { return counts.empty() ? 0 : counts.size() - 1; }
    [[nodiscard]] std::size_t distinct_levels() const noexcept;
};

Histogram histogram(const GrayImage& image);

}  // namespace polytone
