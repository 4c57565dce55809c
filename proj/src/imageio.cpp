#include "polytone/imageio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>
#include <system_error>

#include "polytone/error.hpp"

namespace polytone {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class Cursor {
public:
    explicit Cursor(std::string_view data) : data_(data) {}

    void skip_space_and_comments() {
        while (pos_ < data_.size()) {
            if (is_space(data_[pos_])) {
                ++pos_;
            } else if (data_[pos_] == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    /// Next unsigned decimal token; nullopt at end of input.
    std::optional<unsigned long> next_number(ErrorKind on_garbage, const char* what) {
        skip_space_and_comments();
        if (pos_ >= data_.size()) {
            return std::nullopt;
        }
        unsigned long value = 0;
        const char* begin = data_.data() + pos_;
        const char* end = data_.data() + data_.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || (ptr != end && !is_space(*ptr) && *ptr != '#')) {
            throw Error(on_garbage, std::string("invalid ") + what + " in PGM stream");
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    std::size_t pos() const { return pos_; }
    void advance(std::size_t k) { pos_ += k; }
    std::size_t remaining() const { return data_.size() - pos_; }
    std::string_view data() const { return data_; }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

std::size_t header_field(Cursor& cur, const char* what, unsigned long lo, unsigned long hi) {
    auto v = cur.next_number(ErrorKind::MalformedHeader, what);
    if (!v || *v < lo || *v > hi) {
        throw Error(ErrorKind::MalformedHeader, std::string("missing or invalid ") + what + " in PGM header");
    }
    return *v;
}

}  // namespace

GrayImage read_pgm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
        throw Error(ErrorKind::MalformedHeader, "not a P2/P5 graymap");
    }
    if (bytes.size() > 2 && !is_space(bytes[2]) && bytes[2] != '#') {
        throw Error(ErrorKind::MalformedHeader, "not a P2/P5 graymap");
    }
    PgmHeader header;
    header.format = bytes[1] == '2' ? PgmFormat::Ascii : PgmFormat::Binary;

    Cursor cur(bytes);
    cur.advance(2);
    constexpr unsigned long kMaxDim = 1UL << 20;
    header.width = header_field(cur, "width", 1, kMaxDim);
    header.height = header_field(cur, "height", 1, kMaxDim);
    header.maxval = static_cast<unsigned>(header_field(cur, "maxval", 1, 65535));

    const std::size_t count = header.width * header.height;
    std::vector<Level> levels(count);

    if (header.format == PgmFormat::Ascii) {
        for (std::size_t i = 0; i < count; ++i) {
            auto v = cur.next_number(ErrorKind::MalformedHeader, "sample");
            if (!v) {
                throw Error(ErrorKind::TruncatedPayload, "expected " + std::to_string(count) + " samples, found " +
                                                             std::to_string(i));
            }
            if (*v > header.maxval) {
                throw Error(ErrorKind::SampleOutOfRange, "sample " + std::to_string(*v) + " exceeds maxval " +
                                                             std::to_string(header.maxval));
            }
            levels[i] = static_cast<Level>(*v);
        }
    } else {
        // Exactly one whitespace byte separates maxval from the raster.
        if (cur.remaining() == 0 || !is_space(bytes[cur.pos()])) {
            throw Error(ErrorKind::MalformedHeader, "missing separator after maxval");
        }
        cur.advance(1);
        const std::size_t bytes_per_sample = header.maxval > 255 ? 2 : 1;
        if (cur.remaining() < count * bytes_per_sample) {
            throw Error(ErrorKind::TruncatedPayload, "raster needs " + std::to_string(count * bytes_per_sample) +
                                                         " bytes, found " + std::to_string(cur.remaining()));
        }
        const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + cur.pos());
        for (std::size_t i = 0; i < count; ++i) {
            unsigned v = bytes_per_sample == 2 ? (unsigned{p[2 * i]} << 8) | p[2 * i + 1] : p[i];
            if (v > header.maxval) {
                throw Error(ErrorKind::SampleOutOfRange,
                            "sample " + std::to_string(v) + " exceeds maxval " + std::to_string(header.maxval));
            }
            levels[i] = static_cast<Level>(v);
        }
    }
    return GrayImage(header.width, header.height, static_cast<Level>(header.maxval), std::move(levels));
}

std::string write_pgm(const GrayImage& image, PgmFormat format) {
    std::string out;
    out += format == PgmFormat::Ascii ? "P2\n" : "P5\n";
    out += std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n";
    out += std::to_string(image.max_level()) + "\n";

    const auto levels = image.levels();
    if (format == PgmFormat::Ascii) {
        for (std::size_t y = 0; y < image.height(); ++y) {
            for (std::size_t x = 0; x < image.width(); ++x) {
                if (x > 0) {
                    out += ' ';
                }
                out += std::to_string(levels[y * image.width() + x]);
            }
            out += '\n';
        }
    } else if (image.max_level() > 255) {
        out.reserve(out.size() + 2 * levels.size());
        for (Level l : levels) {
            out += static_cast<char>(l >> 8);
            out += static_cast<char>(l & 0xff);
        }
    } else {
        out.reserve(out.size() + levels.size());
        for (Level l : levels) {
            out += static_cast<char>(l);
        }
    }
    return out;
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open " + path.string());
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw Error(ErrorKind::Io, "failed reading " + path.string());
    }
    return read_pgm(bytes);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorKind::Io, "cannot write " + tmp.string());
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw Error(ErrorKind::Io, "failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw Error(ErrorKind::Io, "cannot rename into " + path.string() + ": " + ec.message());
    }
}

std::string format_number(double value) {
    if (value == 0.0) {
        return "0";  // folds -0
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string export_function_csv(const PolygonalFunction& poly, std::size_t samples, double domain_max) {
    if (samples < 2) {
        throw Error(ErrorKind::InvalidArgument, "at least two samples are required");
    }
    if (domain_max < 0.0) {
        domain_max = poly.range_max();
    }
    // Outside the node span the clamped input sits on an end node, whose
    // value is its target.
    auto value_at = [&](double v) {
        if (v <= poly.front()) return poly.values().front();
        if (v >= poly.back()) return poly.values().back();
        return std::clamp(poly.evaluate(v), 0.0, poly.range_max());
    };

    struct Row {
        double v;
        bool node;
    };
    std::vector<Row> rows;
    rows.reserve(samples + poly.size());
    for (std::size_t k = 0; k < samples; ++k) {
        double v = static_cast<double>(k) / static_cast<double>(samples - 1) * domain_max;
        rows.push_back({k + 1 == samples ? domain_max : v, false});
    }
    for (double v : poly.nodes()) {
        rows.push_back({v, true});
    }
    // Sample rows come before node rows at the same abscissa.
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.v < b.v || (a.v == b.v && !a.node && b.node);
    });

    std::string out = "v,f,node\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Row& row = rows[r];
        // At a node the interpolation condition pins f to the target exactly.
        double f = value_at(row.v);
        if (row.node) {
            auto it = std::find(poly.nodes().begin(), poly.nodes().end(), row.v);
            f = poly.values()[static_cast<std::size_t>(it - poly.nodes().begin())];
        }
        out += format_number(row.v);
        out += ',';
        out += format_number(f);
        out += row.node ? ",1\n" : ",0\n";
    }
    return out;
}

std::string export_histogram_csv(const Histogram& h) {
    std::string out = "level,count\n";
    for (std::size_t u = 0; u < h.counts.size(); ++u) {
        out += std::to_string(u);
        out += ',';
        out += std::to_string(h.counts[u]);
        out += '\n';
    }
    return out;
}

}  // namespace polytone
