#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "polytone/gray_image.hpp"
#include "polytone/polycurve.hpp"

namespace polytone {

enum class PgmFormat { Ascii, Binary };  // P2, P5

struct PgmHeader {
    PgmFormat format = PgmFormat::Binary;
    std::size_t width = 0;
    std::size_t height = 0;
    unsigned maxval = 255;
};

/// Parses a P2 or P5 stream. '#' comments are accepted anywhere in the
/// header. P5 samples are one byte for maxval < 256 and two big-endian
/// bytes otherwise. Bytes after the last sample are ignored.
///
/// Errors: MalformedHeader, TruncatedPayload, SampleOutOfRange.
GrayImage read_pgm(std::string_view bytes);

std::string write_pgm(const GrayImage& image, PgmFormat format);

GrayImage read_pgm_file(const std::filesystem::path& path);

/// Writes through a sibling temporary file and renames it over `path`, so a
/// failed run never leaves a partial file behind. Throws Error(Io).
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// "v,f,node" rows: `samples` evenly spaced abscissas over [0, domain_max]
/// plus one row per node (node column 1). f is the clamped evaluation used
/// by the lookup table, before rounding. domain_max defaults to the
/// function's range maximum.
std::string export_function_csv(const PolygonalFunction& poly, std::size_t samples, double domain_max = -1.0);

/// "level,count" with one row per level 0..M.
std::string export_histogram_csv(const Histogram& h);

/// Shortest decimal that round-trips, independent of the C locale.
std::string format_number(double value);

}  // namespace polytone
