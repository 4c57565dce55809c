#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "polytone/error.hpp"
#include "polytone/imageio.hpp"
#include "synthetic.hpp"

using namespace polytone;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::Io;
}

const GrayImage kSmall(2, 2, 255, {0, 64, 128, 255});

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST(ReadPgm, Ascii) {
    EXPECT_EQ(read_pgm("P2 2 2 255\n0 64 128 255\n"), kSmall);
    EXPECT_EQ(read_pgm("P2\n# comment\n2 # inline\n2\n255\n0 64\n128 255"), kSmall);
}

TEST(ReadPgm, Binary) {
    std::string bytes = "P5\n2 2\n255\n";
    bytes += std::string("\x00\x40\x80\xff", 4);
    EXPECT_EQ(read_pgm(bytes), kSmall);
}

TEST(ReadPgm, BinarySixteenBitIsBigEndian) {
    std::string bytes = "P5 2 1 65535\n";
    bytes += std::string("\x01\x02\xff\xfe", 4);
    const GrayImage img = read_pgm(bytes);
    EXPECT_EQ(img.levels()[0], 0x0102);
    EXPECT_EQ(img.levels()[1], 0xfffe);
}

TEST(ReadPgm, Errors) {
    EXPECT_EQ(kind_of([] { read_pgm("P2 2 2 255\n0 64 128\n"); }), ErrorKind::TruncatedPayload);
    EXPECT_EQ(kind_of([] { read_pgm(std::string("P5 2 2 255\n\x00\x01\x02", 14)); }), ErrorKind::TruncatedPayload);
    EXPECT_EQ(kind_of([] { read_pgm("P3 2 2 255\n0 0 0 0"); }), ErrorKind::MalformedHeader);
    EXPECT_EQ(kind_of([] { read_pgm("P2 2 x 255\n0 0 0 0"); }), ErrorKind::MalformedHeader);
    EXPECT_EQ(kind_of([] { read_pgm("P2 0 2 255\n"); }), ErrorKind::MalformedHeader);
    EXPECT_EQ(kind_of([] { read_pgm("P2 2 2 0\n0 0 0 0"); }), ErrorKind::MalformedHeader);
    EXPECT_EQ(kind_of([] { read_pgm("P2 2 2 70000\n0 0 0 0"); }), ErrorKind::MalformedHeader);
    EXPECT_EQ(kind_of([] { read_pgm("P2 2 2"); }), ErrorKind::MalformedHeader);
    EXPECT_EQ(kind_of([] { read_pgm(""); }), ErrorKind::MalformedHeader);
    EXPECT_EQ(kind_of([] { read_pgm("P2 2 2 100\n0 64 128 255\n"); }), ErrorKind::SampleOutOfRange);
    EXPECT_EQ(kind_of([] { read_pgm(std::string("P5 2 1 100\n\x00\xff", 13)); }), ErrorKind::SampleOutOfRange);
}

TEST(WritePgm, Layout) {
    EXPECT_EQ(write_pgm(kSmall, PgmFormat::Ascii), "P2\n2 2\n255\n0 64\n128 255\n");
    EXPECT_EQ(write_pgm(kSmall, PgmFormat::Binary), std::string("P5\n2 2\n255\n\x00\x40\x80\xff", 15));
}

TEST(WritePgm, RoundTripProperty) {
    std::mt19937_64 rng(5);
    for (unsigned maxval : {1u, 255u, 65535u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t w = 1 + rng() % 17, h = 1 + rng() % 9;
            std::vector<Level> levels(w * h);
            for (auto& l : levels) l = static_cast<Level>(rng() % (maxval + 1));
            if (trial == 0) levels[0] = static_cast<Level>(maxval);
            const GrayImage img(w, h, static_cast<Level>(maxval), levels);
            for (auto fmt : {PgmFormat::Ascii, PgmFormat::Binary}) {
                ASSERT_EQ(read_pgm(write_pgm(img, fmt)), img) << "maxval " << maxval;
            }
        }
    }
}

TEST(Histogram, Examples) {
    const Histogram h = histogram(kSmall);
    EXPECT_EQ(h.total, 4u);
    ASSERT_EQ(h.counts.size(), 256u);
    for (std::size_t u = 0; u < 256; ++u) {
        EXPECT_EQ(h.counts[u], (u == 0 || u == 64 || u == 128 || u == 255) ? 1u : 0u);
    }

    const Histogram c = histogram(GrayImage(10, 10, 255, std::vector<Level>(100, 42)));
    EXPECT_EQ(c.counts[42], 100u);
    EXPECT_EQ(c.total, 100u);

    const Histogram r = histogram(synthetic::ramp10());
    for (std::size_t u = 0; u < 10; ++u) EXPECT_EQ(r.counts[u], 1u);
    EXPECT_EQ(r.distinct_levels(), 10u);
}

TEST(HistogramCsv, Layout) {
    const auto rows = lines(export_histogram_csv(histogram(kSmall)));
    ASSERT_EQ(rows.size(), 257u);
    EXPECT_EQ(rows[0], "level,count");
    EXPECT_EQ(rows[1], "0,1");
    EXPECT_EQ(rows[2], "1,0");
    EXPECT_EQ(rows[65], "64,1");
    EXPECT_EQ(rows[256], "255,1");

    const auto c = lines(export_histogram_csv(histogram(GrayImage(10, 10, 255, std::vector<Level>(100, 42)))));
    EXPECT_EQ(c[43], "42,100");
    const auto r = lines(export_histogram_csv(histogram(synthetic::ramp10())));
    EXPECT_EQ(r[10], "9,1");
    EXPECT_EQ(r[11], "10,0");
}

TEST(FunctionCsv, Identity) {
    auto id = solve_coefficients(std::vector{0.0, 255.0}, std::vector{0.0, 255.0}, 255.0);
    const auto rows = lines(export_function_csv(id, 3));
    EXPECT_EQ(rows, (std::vector<std::string>{"v,f,node", "0,0,0", "0,0,1", "127.5,127.5,0", "255,255,0",
                                              "255,255,1"}));
}

TEST(FunctionCsv, LandsatNodeRows) {
    auto f3 = solve_coefficients(std::vector{15.0, 53.9, 134.0}, std::vector{0.0, 127.5, 255.0}, 255.0);
    const auto rows = lines(export_function_csv(f3, 2));
    EXPECT_EQ(rows, (std::vector<std::string>{"v,f,node", "0,0,0", "15,0,1", "53.9,127.5,1", "134,255,1",
                                              "255,255,0"}));

    const auto many = lines(export_function_csv(f3, 16));
    EXPECT_EQ(many.size(), 1u + 16u + 3u);
}

TEST(FunctionCsv, RejectsTooFewSamples) {
    auto id = solve_coefficients(std::vector{0.0, 255.0}, std::vector{0.0, 255.0}, 255.0);
    EXPECT_THROW(export_function_csv(id, 1), Error);
}

TEST(FormatNumber, LocaleFree) {
    EXPECT_EQ(format_number(127.5), "127.5");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(2.0), "2");
    EXPECT_EQ(format_number(0.1), "0.1");
}

TEST(Files, AtomicWriteAndRead) {
    const auto dir = std::filesystem::temp_directory_path() / "polytone_imageio_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "small.pgm";
    write_file_atomic(path, write_pgm(kSmall, PgmFormat::Binary));
    EXPECT_EQ(read_pgm_file(path), kSmall);
    EXPECT_FALSE(std::filesystem::exists(dir / "small.pgm.tmp"));
    EXPECT_EQ(kind_of([&] { read_pgm_file(dir / "missing.pgm"); }), ErrorKind::Io);
    EXPECT_EQ(kind_of([&] { write_file_atomic(dir / "no" / "such" / "dir.pgm", "x"); }), ErrorKind::Io);
    std::filesystem::remove_all(dir);
}

TEST(Files, Fixtures) {
    const GrayImage ramp = read_pgm_file(POLYTONE_FIXTURES "/ramp.pgm");
    EXPECT_EQ(ramp.width(), 256u);
    EXPECT_EQ(ramp.height(), 4u);
    const GrayImage c = read_pgm_file(POLYTONE_FIXTURES "/const.pgm");
    EXPECT_EQ(c.size(), 64u);
    EXPECT_EQ(c.levels()[17], 42);
}
