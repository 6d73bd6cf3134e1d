#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "syt/closedform.hpp"
#include "syt/dft_a2.hpp"
#include "syt/partition.hpp"

namespace syt {

struct MethodValue {
    Method method;
    Int value;
};

struct ShapeRecord {
    Partition shape;
    std::vector<MethodValue> values;
    bool agree = true;
};

struct Disagreement {
    Partition shape;
    std::string detail;
};

/// Outcome of one cross-method sweep. The disagreement list is empty
/// exactly when every applicable method produced the same count for every
/// shape in range.
struct VerifyReport {
    long max_n = 0;
    std::size_t max_r = 0;
    long dft_max_n = 0;
    DftOptions::Mode dft_mode = DftOptions::Mode::derived;
    std::vector<ShapeRecord> records;
    std::vector<Disagreement> disagreements;
    /// max |verbatim - derived| over the start-spectrum grid, per side.
    std::vector<std::pair<long, double>> start_mode_diffs;

    bool ok() const noexcept { return disagreements.empty(); }
};

/// Runs every applicable counting method on every partition with
/// |shape| <= max_n and height <= max_r: the path DP, the generating
/// function, the closed form, brute-force enumeration (within its cell
/// cap), the two-row binomial difference (height <= 2) and the spectral
/// route (height <= 3, |shape| <= dft_max_n). Deterministic record order.
VerifyReport run_verification(long max_n, std::size_t max_r, long dft_max_n,
                              const DftOptions& opts = {});

} // namespace syt
