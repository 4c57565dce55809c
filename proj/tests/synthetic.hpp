// Deterministic synthetic gray-level images. Only the engine output of
// std::mt19937_64 is used (its sequence is fixed by the standard); the
// shaping is done here so results do not depend on the library's
// distribution implementations.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polytone/gray_image.hpp"

namespace polytone::synthetic {

inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <class Shape>
GrayImage generate(std::size_t w, std::size_t h, std::uint64_t seed, Shape shape) {
    std::mt19937_64 rng(seed);
    std::vector<Level> levels(w * h);
    for (auto& l : levels) {
        l = static_cast<Level>(shape(rng));
    }
    return GrayImage(w, h, 255, std::move(levels));
}

/// Every level 0..255 occurs equally often; w*h must be a multiple of 256.
inline GrayImage uniform(std::size_t w, std::size_t h) {
    std::vector<Level> levels(w * h);
    for (std::size_t k = 0; k < levels.size(); ++k) {
        levels[k] = static_cast<Level>(k % 256);
    }
    return GrayImage(w, h, 255, std::move(levels));
}

/// 0..9, one pixel per level.
inline GrayImage ramp10() {
    return GrayImage(10, 1, 255, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
}

inline GrayImage dark(std::size_t w, std::size_t h, std::uint64_t seed = 1) {
    return generate(w, h, seed, [](auto& rng) { return 12 + std::floor(118.0 * std::pow(unit(rng), 2.5)); });
}

inline GrayImage bright(std::size_t w, std::size_t h, std::uint64_t seed = 2) {
    return generate(w, h, seed, [](auto& rng) { return 254 - std::floor(60.0 * std::pow(unit(rng), 2.5)); });
}

inline GrayImage bimodal(std::size_t w, std::size_t h, std::uint64_t seed = 3) {
    return generate(w, h, seed, [](auto& rng) {
        const double centre = unit(rng) < 0.6 ? 60.0 : 185.0;
        const double tri = (unit(rng) + unit(rng) - 1.0) * 45.0;
        return std::floor(centre + tri);
    });
}

/// 90% of pixels at 0, the rest at 255.
inline GrayImage two_level(std::size_t w, std::size_t h) {
    std::vector<Level> levels(w * h, 0);
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (k % 10 == 9) levels[k] = 255;
    }
    return GrayImage(w, h, 255, std::move(levels));
}

struct Named {
    std::string name;
    GrayImage image;
};

/// The five-image corpus used by the property and acceptance suites.
inline std::vector<Named> corpus(std::size_t w, std::size_t h) {
    return {
        {"dark", dark(w, h)},
        {"bright", bright(w, h)},
        {"bimodal", bimodal(w, h)},
        {"uniform", uniform(w, h)},
        {"two-level", two_level(w, h)},
    };
}

}  // namespace polytone::synthetic
