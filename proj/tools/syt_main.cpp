#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "syt/closedform.hpp"
#include "syt/dft_a2.hpp"
#include "syt/errors.hpp"
#include "syt/laurent.hpp"
#include "syt/oracle.hpp"
#include "syt/partition.hpp"
#include "syt/report.hpp"
#include "syt/verify.hpp"
#include "syt/vertexdp.hpp"
#include "syt/young_graph.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

syt::DftOptions::Mode parse_dft_mode(const std::string& mode) {
    if (mode == "derived") return syt::DftOptions::Mode::derived;
    if (mode == "verbatim") return syt::DftOptions::Mode::verbatim;
    throw syt::Error("unknown dft mode '" + mode + "' (expected derived|verbatim)");
}

struct CountArgs {
    std::string shape;
    std::size_t r = 0; // 0 = derive from the shape
    std::string method = "auto";
    bool json_out = false;
    std::string dft_mode = "derived";
    double dft_tolerance = 0.25;
};

int run_count(const CountArgs& args) {
    const syt::Partition shape = syt::Partition::parse(args.shape);
    syt::Method method = args.method == "auto" ? syt::Method::closed
                                               : syt::method_from_name(args.method);
    std::size_t r = args.r ? args.r : std::max<std::size_t>(shape.height(), 1);
    if (r < shape.height())
        throw syt::HeightExceedsR("--r " + std::to_string(r) + " is below the shape height " +
                                  std::to_string(shape.height()));
    if (method == syt::Method::tworow && shape.height() > 2)
        throw syt::Error("method tworow requires height <= 2");
    if (method == syt::Method::dft && shape.height() > 3)
        throw syt::Error("method dft requires height <= 3");

    syt::DftOptions opts;
    opts.mode = parse_dft_mode(args.dft_mode);
    opts.tolerance = args.dft_tolerance;

    const syt::CountReport report = syt::make_count_report(shape, r, method, opts);
    if (args.json_out) {
        std::cout << syt::to_json(report).dump(2) << "\n";
    } else {
        std::cout << "f^(" << report.shape << ") = " << report.count << "  ["
                  << syt::method_name(report.method) << ", " << report.elapsed_us << " us]";
        if (report.residual)
            std::cout << "  raw=(" << *report.raw_re << ", " << *report.raw_im
                      << ") residual=" << *report.residual;
        std::cout << "\n";
    }
    return kExitOk;
}

struct TableArgs {
    long n = 0;
    std::size_t max_height = 0; // 0 = no bound beyond n
    bool json_out = false;
};

int run_table(const TableArgs& args) {
    constexpr long kTableCap = 20;
    if (args.n < 0 || args.n > kTableCap)
        throw syt::CapExceeded("table supports 0 <= n <= " + std::to_string(kTableCap));
    const std::size_t max_h = args.max_height ? args.max_height
                                              : static_cast<std::size_t>(std::max<long>(args.n, 1));
    json rows = json::array();
    for (const syt::Partition& shape : syt::partitions_of(args.n, max_h)) {
        const std::size_t r = std::max<std::size_t>(shape.height(), 1);
        const syt::Int closed = syt::count_closed(shape, r).value;
        bool agree = true;
        // the heavier routes only where they are cheap
        if (shape.height() <= 4)
            agree = syt::count_paths(shape, r).count == closed &&
                    syt::count_via_genfun(shape, r) == closed;
        if (shape.size() <= syt::kOracleCellCap)
            agree = agree && syt::count_oracle(shape) == closed;
        if (shape.height() <= 2)
            agree = agree && syt::count_two_row(shape.part(0), shape.part(1)).value == closed;
        if (shape.height() <= 3 && shape.size() <= 24)
            agree = agree && syt::count_dft(shape).rounded == closed;
        rows.push_back({{"shape", shape.to_string()},
                        {"count", syt::to_decimal(closed)},
                        {"agree", agree}});
    }
    if (args.json_out) {
        std::cout << json{{"n", args.n}, {"max_height", max_h}, {"rows", rows}}.dump(2)
                  << "\n";
    } else {
        for (const auto& row : rows)
            std::cout << row["shape"].get<std::string>() << "\t"
                      << row["count"].get<std::string>() << "\t"
                      << (row["agree"].get<bool>() ? "ok" : "DISAGREE") << "\n";
    }
    return kExitOk;
}

struct GenfunArgs {
    long n = 0;
    std::size_t r = 2;
    std::string format = "text";
};

int run_genfun(const GenfunArgs& args) {
    constexpr long kNCap = 30;
    constexpr std::size_t kRCap = 6;
    if (args.n < 0 || args.n > kNCap)
        throw syt::CapExceeded("genfun supports 0 <= n <= " + std::to_string(kNCap));
    if (args.r < 1 || args.r > kRCap)
        throw syt::CapExceeded("genfun supports 1 <= r <= " + std::to_string(kRCap));
    // support bound r! * C(n+r-1, r-1) doubles as a work estimate
    if (syt::factorial(args.r) * syt::binomial(static_cast<unsigned long>(args.n + args.r - 1),
                                               static_cast<unsigned long>(args.r - 1)) >
        1000000)
        throw syt::CapExceeded("n and r together exceed the term-count cap");
    const syt::LaurentPoly poly = syt::genfun(args.n, args.r);
    if (args.format == "json")
        std::cout << json{{"n", args.n}, {"r", args.r}, {"terms", poly.to_json()}}.dump(2)
                  << "\n";
    else
        std::cout << poly.to_text() << "\n";
    return kExitOk;
}

struct GraphArgs {
    std::size_t r = 2;
    long max_coordinate = 4;
    std::string format = "dot";
};

int run_graph(const GraphArgs& args) {
    if (args.format != "dot")
        throw syt::Error("unknown graph format '" + args.format + "' (expected dot)");
    std::cout << syt::young_graph_dot(args.r, args.max_coordinate);
    return kExitOk;
}

struct VerifyArgs {
    long max_n = 10;
    std::size_t max_r = 4;
    long dft_max_n = 12;
    std::string dft_mode = "derived";
    double dft_tolerance = 0.25;
    bool json_out = false;
};

int run_verify(const VerifyArgs& args) {
    if (args.max_n < 0 || args.max_n > 20)
        throw syt::CapExceeded("verify supports 0 <= max-n <= 20");
    if (args.max_r < 1 || args.max_r > 4)
        throw syt::CapExceeded("verify supports 1 <= max-r <= 4");
    syt::DftOptions opts;
    opts.mode = parse_dft_mode(args.dft_mode);
    opts.tolerance = args.dft_tolerance;
    const syt::VerifyReport report =
        syt::run_verification(args.max_n, args.max_r, args.dft_max_n, opts);

    if (args.json_out) {
        json diffs = json::array();
        for (const auto& [side, diff] : report.start_mode_diffs)
            diffs.push_back({{"side", side}, {"max_abs_diff", diff}});
        json disagreements = json::array();
        for (const auto& d : report.disagreements)
            disagreements.push_back({{"shape", d.shape.to_string()}, {"values", d.detail}});
        std::cout << json{{"max_n", report.max_n},
                          {"max_r", report.max_r},
                          {"dft_max_n", report.dft_max_n},
                          {"dft_mode", args.dft_mode},
                          {"shapes_checked", report.records.size()},
                          {"disagreements", disagreements},
                          {"start_mode_max_diff", diffs},
                          {"ok", report.ok()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "checked " << report.records.size() << " shapes (n <= " << report.max_n
                  << ", height <= " << report.max_r << ", dft n <= " << report.dft_max_n
                  << ", dft mode " << args.dft_mode << ")\n";
        std::cout << "start-spectrum mode diff:";
        for (const auto& [side, diff] : report.start_mode_diffs)
            std::cout << " side" << side << "=" << diff;
        std::cout << "\n";
        if (report.ok()) {
            std::cout << "all methods agree\n";
        } else {
            for (const auto& d : report.disagreements)
                std::cout << "DISAGREEMENT " << d.shape.to_string() << ": " << d.detail << "\n";
        }
    }
    return report.ok() ? kExitOk : kExitDisagreement;
}

struct BenchArgs {
    long max_n = 12;
    std::string methods = "dp,genfun,closed";
};

int run_bench(const BenchArgs& args) {
    if (args.max_n < 1 || args.max_n > 20)
        throw syt::CapExceeded("bench supports 1 <= max-n <= 20");
    std::vector<syt::Method> methods;
    std::stringstream ss(args.methods);
    std::string token;
    while (std::getline(ss, token, ',')) methods.push_back(syt::method_from_name(token));

    std::cout << "n,method,shapes,total_us\n";
    for (long n = 1; n <= args.max_n; ++n) {
        const auto shapes = syt::partitions_of(n, 4);
        for (syt::Method m : methods) {
            if (m == syt::Method::oracle && n > syt::kOracleCellCap) continue; // over its cap
            if (m == syt::Method::dft && n > 24) continue;
            long counted = 0;
            const auto t0 = std::chrono::steady_clock::now();
            for (const syt::Partition& shape : shapes) {
                const std::size_t r = std::max<std::size_t>(shape.height(), 1);
                switch (m) {
                    case syt::Method::dp: syt::count_paths(shape, r); break;
                    case syt::Method::genfun: syt::count_via_genfun(shape, r); break;
                    case syt::Method::closed: syt::count_closed(shape, r); break;
                    case syt::Method::oracle: syt::count_oracle(shape); break;
                    case syt::Method::tworow:
                        if (shape.height() > 2) continue;
                        syt::count_two_row(shape.part(0), shape.part(1));
                        break;
                    case syt::Method::dft:
                        if (shape.height() > 3) continue;
                        syt::count_dft(shape);
                        break;
                }
                ++counted;
            }
            const auto t1 = std::chrono::steady_clock::now();
            std::cout << n << "," << syt::method_name(m) << "," << counted << ","
                      << std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count()
                      << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"standard Young tableaux counting by independent methods"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "count tableaux of one shape");
    count->add_option("--shape", count_args.shape, "shape as comma-separated parts, e.g. 5,2")
        ->required();
    count->add_option("--r", count_args.r, "row count (default: shape height)");
    count->add_option("--method", count_args.method,
                      "auto|dp|genfun|closed|tworow|dft|oracle (auto = closed)");
    count->add_flag("--json", count_args.json_out, "emit JSON");
    count->add_option("--dft-mode", count_args.dft_mode, "derived|verbatim start spectrum");
    count->add_option("--dft-tolerance", count_args.dft_tolerance,
                      "rounding acceptance threshold");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "counts for every shape of a given size");
    table->add_option("--n", table_args.n, "number of cells")->required();
    table->add_option("--max-height", table_args.max_height, "height bound (default: n)");
    table->add_flag("--json", table_args.json_out, "emit JSON");

    GenfunArgs genfun_args;
    auto* gf = app.add_subcommand("genfun", "print the degree-n generating polynomial");
    gf->add_option("--n", genfun_args.n, "degree")->required();
    gf->add_option("--r", genfun_args.r, "number of variables");
    gf->add_option("--format", genfun_args.format, "text|json");

    GraphArgs graph_args;
    auto* graph = app.add_subcommand("graph", "DOT digraph of the partition lattice");
    graph->add_option("--r", graph_args.r, "lattice dimension (<= 3)");
    graph->add_option("--max-coordinate", graph_args.max_coordinate, "coordinate bound (<= 6)");
    graph->add_option("--format", graph_args.format, "dot");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "cross-check every method over a sweep");
    verify->add_option("--max-n", verify_args.max_n, "largest cell count");
    verify->add_option("--max-r", verify_args.max_r, "largest height");
    verify->add_option("--dft-max-n", verify_args.dft_max_n, "largest cell count for dft");
    verify->add_option("--dft-mode", verify_args.dft_mode, "derived|verbatim");
    verify->add_option("--dft-tolerance", verify_args.dft_tolerance,
                       "rounding acceptance threshold");
    verify->add_flag("--json", verify_args.json_out, "emit JSON");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "CSV wall-time table per method per n");
    bench->add_option("--max-n", bench_args.max_n, "largest cell count");
    bench->add_option("--methods", bench_args.methods, "comma-separated method list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(count_args);
        if (table->parsed()) return run_table(table_args);
        if (gf->parsed()) return run_genfun(genfun_args);
        if (graph->parsed()) return run_graph(graph_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const syt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
