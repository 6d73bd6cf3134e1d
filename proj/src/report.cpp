#include "syt/report.hpp"

#include <chrono>

#include "syt/laurent.hpp"
#include "syt/oracle.hpp"
#include "syt/vertexdp.hpp"

namespace syt {

CountReport make_count_report(const Partition& shape, std::size_t r, Method method,
                              const DftOptions& dft_opts) {
    CountReport report;
    report.shape = shape.to_string();
    report.n = shape.size();
    report.r = r;
    report.method = method;

    const auto t0 = std::chrono::steady_clock::now();
    switch (method) {
        case Method::dp:
            report.count = to_decimal(count_paths(shape, r).count);
            break;
        case Method::genfun:
            report.count = to_decimal(count_via_genfun(shape, r));
            break;
        case Method::closed:
            report.count = to_decimal(count_closed(shape, r).value);
            break;
        case Method::tworow:
            report.count = to_decimal(count_two_row(shape.part(0), shape.part(1)).value);
            break;
        case Method::oracle:
            report.count = to_decimal(count_oracle(shape));
            break;
        case Method::dft: {
            const DftCount c = count_dft(shape, dft_opts);
            report.count = to_decimal(c.rounded);
            report.raw_re = c.raw.real();
            report.raw_im = c.raw.imag();
            report.residual = c.residual;
            break;
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_us =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    return report;
}

nlohmann::json to_json(const CountReport& report) {
    nlohmann::json j{{"shape", report.shape},
                     {"n", report.n},
                     {"r", report.r},
                     {"method", std::string(method_name(report.method))},
                     {"count", report.count},
                     {"elapsed_us", report.elapsed_us}};
    if (report.raw_re) {
        j["dft"] = {{"raw_re", *report.raw_re},
                    {"raw_im", *report.raw_im},
                    {"residual", *report.residual}};
    }
    return j;
}

CountReport count_report_from_json(const nlohmann::json& j) {
    CountReport report;
    report.shape = j.at("shape").get<std::string>();
    report.n = j.at("n").get<long>();
    report.r = j.at("r").get<std::size_t>();
    report.method = method_from_name(j.at("method").get<std::string>());
    report.count = j.at("count").get<std::string>();
    report.elapsed_us = j.at("elapsed_us").get<long>();
    if (j.contains("dft")) {
        report.raw_re = j["dft"].at("raw_re").get<double>();
        report.raw_im = j["dft"].at("raw_im").get<double>();
        report.residual = j["dft"].at("residual").get<double>();
    }
    return report;
}

} // namespace syt
