#include "polytone/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <limits>
#include <ostream>

#include "polytone/imageio.hpp"
#include "polytone/pipeline.hpp"

namespace polytone::cli {

namespace {

using nlohmann::ordered_json;

struct Invocation {
    std::string input;
    std::string output;
    std::size_t n = 4;
    double epsilon = 0.5;
    std::size_t max_iterations = 100;
    std::string report;
    std::string function_csv;
    std::string histogram_csv;
    std::size_t samples = 256;
};

ordered_json warnings_json(const std::vector<SolverWarning>& warnings) {
    ordered_json arr = ordered_json::array();
    for (const auto& w : warnings) {
        arr.push_back({{"iteration", w.iteration}, {"node", w.node}, {"message", w.message}});
    }
    return arr;
}

ordered_json node_result_json(const NodeSolverResult& r) {
    ordered_json j;
    j["nodes"] = r.nodes;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["warnings"] = warnings_json(r.warnings);
    j["trace"] = r.trace;
    return j;
}

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

// Timings are left out so repeated runs produce identical reports.
ordered_json report_json(const GrayImage& input, const Invocation& inv, const EnhanceReport& report) {
    ordered_json j;
    j["width"] = input.width();
    j["height"] = input.height();
    j["max_level"] = input.max_level();
    j["output_max"] = report.function.range_max();
    j["n"] = inv.n;
    j["epsilon"] = inv.epsilon;
    j["max_iterations"] = inv.max_iterations;
    j["nodes"] = to_vector(report.function.nodes());
    j["targets"] = to_vector(report.function.values());
    j["coefficients"] = to_vector(report.function.coeffs());
    j["iterations"] = report.node_result.iterations;
    j["converged"] = report.node_result.converged;
    j["warnings"] = warnings_json(report.node_result.warnings);
    j["trace"] = report.node_result.trace;
    j["lut_checksum"] = report.lut_checksum;
    return j;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        write_file_atomic(path, text);
    }
}

EnhanceConfig enhance_config(const Invocation& inv) {
    EnhanceConfig cfg;
    cfg.n = inv.n;
    cfg.epsilon = inv.epsilon;
    cfg.max_iterations = inv.max_iterations;
    return cfg;
}

int run_enhance(const Invocation& inv) {
    const GrayImage input = read_pgm_file(inv.input);
    const EnhanceResult result = enhance(input, enhance_config(inv));

    // Everything is rendered before the first file is touched.
    const std::string image_bytes = write_pgm(result.image, PgmFormat::Binary);
    std::string report_text;
    if (!inv.report.empty()) {
        report_text = report_json(input, inv, result.report).dump(2) + "\n";
    }
    std::string function_text;
    if (!inv.function_csv.empty()) {
        function_text = export_function_csv(result.report.function, inv.samples, input.max_level());
    }
    std::string histogram_text;
    if (!inv.histogram_csv.empty()) {
        histogram_text = export_histogram_csv(histogram(result.image));
    }

    write_file_atomic(inv.output, image_bytes);
    if (!inv.report.empty()) {
        write_file_atomic(inv.report, report_text);
    }
    if (!inv.function_csv.empty()) {
        write_file_atomic(inv.function_csv, function_text);
    }
    if (!inv.histogram_csv.empty()) {
        write_file_atomic(inv.histogram_csv, histogram_text);
    }
    return kExitOk;
}

int run_nodes(const Invocation& inv, std::ostream& out) {
    const GrayImage input = read_pgm_file(inv.input);
    NodeSolverConfig cfg;
    cfg.n = inv.n;
    cfg.epsilon = inv.epsilon;
    cfg.max_iterations = inv.max_iterations;
    const NodeSolverResult r = solve_nodes(input, cfg);
    emit(inv.output, node_result_json(r).dump(2) + "\n", out);
    return kExitOk;
}

int run_function(const Invocation& inv, std::ostream& out) {
    const GrayImage input = read_pgm_file(inv.input);
    const Transform t = build_transform(input, enhance_config(inv));
    emit(inv.output, export_function_csv(t.function, inv.samples, input.max_level()), out);
    return kExitOk;
}

int run_histogram(const Invocation& inv, std::ostream& out) {
    const GrayImage input = read_pgm_file(inv.input);
    emit(inv.output, export_histogram_csv(histogram(input)), out);
    return kExitOk;
}

void add_solver_options(CLI::App* cmd, Invocation& inv) {
    cmd->add_option("--n", inv.n, "Number of interpolation nodes")->check(CLI::Range(std::size_t{2}, std::size_t{65536}));
    cmd->add_option("--epsilon", inv.epsilon, "Stop when no node moves by this much")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iterations", inv.max_iterations, "Iteration cap for the node solver")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
}

}  // namespace

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Io:
        case ErrorKind::MalformedHeader:
        case ErrorKind::TruncatedPayload:
        case ErrorKind::SampleOutOfRange:
            return kExitIo;
        case ErrorKind::EmptyImage:
        case ErrorKind::ConstantImage:
        case ErrorKind::TooFewDistinctLevels:
        case ErrorKind::DegenerateRange:
        case ErrorKind::DegenerateSpan:
            return kExitDegenerate;
        case ErrorKind::NodeOrderViolation:
        case ErrorKind::NonIncreasingNodes:
            return kExitNodeOrder;
        case ErrorKind::InvalidArgument:
        case ErrorKind::LengthMismatch:
        case ErrorKind::IndexOutOfRange:
            return kExitUsage;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gray-level enhancement with histogram-driven polygonal point transforms", "polytone"};
    app.require_subcommand(1);
    Invocation inv;

    auto* enhance_cmd = app.add_subcommand("enhance", "Enhance a PGM image");
    enhance_cmd->add_option("input", inv.input, "Input PGM (P2 or P5)")->required();
    enhance_cmd->add_option("output", inv.output, "Output PGM (written as P5)")->required();
    add_solver_options(enhance_cmd, inv);
    enhance_cmd->add_option("--report", inv.report, "Write a JSON report");
    enhance_cmd->add_option("--function-csv", inv.function_csv, "Write the transform samples as CSV");
    enhance_cmd->add_option("--histogram-csv", inv.histogram_csv, "Write the output histogram as CSV");
    enhance_cmd->add_option("--samples", inv.samples, "CSV sample count")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));

    auto* nodes_cmd = app.add_subcommand("nodes", "Print the solved nodes as JSON");
    nodes_cmd->add_option("input", inv.input, "Input PGM")->required();
    nodes_cmd->add_option("-o,--output", inv.output, "Output file (default stdout)");
    add_solver_options(nodes_cmd, inv);

    auto* function_cmd = app.add_subcommand("function", "Print the transform as CSV");
    function_cmd->add_option("input", inv.input, "Input PGM")->required();
    function_cmd->add_option("-o,--output", inv.output, "Output file (default stdout)");
    add_solver_options(function_cmd, inv);
    function_cmd->add_option("--samples", inv.samples, "CSV sample count")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24));

    auto* histogram_cmd = app.add_subcommand("histogram", "Print the gray-level histogram as CSV");
    histogram_cmd->add_option("input", inv.input, "Input PGM")->required();
    histogram_cmd->add_option("-o,--output", inv.output, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*enhance_cmd) {
            return run_enhance(inv);
        }
        if (*nodes_cmd) {
            return run_nodes(inv, out);
        }
        if (*function_cmd) {
            return run_function(inv, out);
        }
        return run_histogram(inv, out);
    } catch (const Error& e) {
        err << "polytone: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "polytone: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace polytone::cli
