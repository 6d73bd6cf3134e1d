#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "syt/closedform.hpp"
#include "syt/dft_a2.hpp"
#include "syt/partition.hpp"

namespace syt {

/// One counting result as surfaced by the command line: counts travel as
/// decimal strings because they outgrow 64-bit integers quickly.
struct CountReport {
    std::string shape;
    long n = 0;
    std::size_t r = 0;
    Method method = Method::closed;
    std::string count;
    long elapsed_us = 0;
    std::optional<double> raw_re;
    std::optional<double> raw_im;
    std::optional<double> residual;

    bool operator==(const CountReport&) const = default;
};

/// Runs one method on a shape and wraps the timed result. `method` auto is
/// resolved by the caller; `r` is the row count used by the row-bound
/// methods (ignored by tworow/dft/oracle).
CountReport make_count_report(const Partition& shape, std::size_t r, Method method,
                              const DftOptions& dft_opts = {});

nlohmann::json to_json(const CountReport& report);
CountReport count_report_from_json(const nlohmann::json& j);

} // namespace syt
