#include "polytone/gray_image.hpp"

#include <algorithm>
#include <string>

#include "polytone/error.hpp"

namespace polytone {

GrayImage::GrayImage(std::size_t width, std::size_t height, Level max_level, std::vector<Level> levels)
    : width_(width), height_(height), max_level_(max_level), levels_(std::move(levels)) {
    if (levels_.size() != width_ * height_) {
        throw Error(ErrorKind::InvalidArgument, "image has " + std::to_string(levels_.size()) + " levels, expected " +
                                                    std::to_string(width_) + "x" + std::to_string(height_));
    }
    auto over = std::find_if(levels_.begin(), levels_.end(), [&](Level l) { return l > max_level_; });
    if (over != levels_.end()) {
        throw Error(ErrorKind::SampleOutOfRange,
                    "level " + std::to_string(*over) + " exceeds max level " + std::to_string(max_level_));
    }
}

std::size_t Histogram::distinct_levels() const noexcept {
    return static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }));
}

Histogram histogram(const GrayImage& image) {
    Histogram h;
    h.counts.assign(std::size_t{image.max_level()} + 1, 0);
    for (Level l : image.levels()) {
        ++h.counts[l];
    }
    h.total = image.size();
    return h;
}

}  // namespace polytone
