#pragma once

#include <vector>

#include "syt/bigint.hpp"
#include "syt/partition.hpp"

namespace syt {

/// A standard filling of a Ferrers diagram: labels 1..n placed so that rows
/// increase left to right and columns increase top to bottom.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    /// Checks the strict row/column increase and that the labels are
    /// exactly {1, ..., n}.
    bool valid() const;
};

inline constexpr long kOracleCellCap = 16;

/// Every standard filling of the shape, exactly once, ordered by the row
/// chosen at each insertion step (path-lexicographic). Brute force by
/// backtracking on the vector of row lengths; deliberately shares nothing
/// with the dynamic-programming counter so the two can vouch for each other.
/// Throws ShapeTooLarge beyond cell_cap cells.
std::vector<Tableau> enumerate_tableaux(const Partition& shape, long cell_cap = kOracleCellCap);

/// Backtracking count of the fillings without materializing them.
Int count_oracle(const Partition& shape, long cell_cap = kOracleCellCap);

} // namespace syt
