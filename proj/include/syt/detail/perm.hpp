#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace syt::detail {

// Sorts v into strictly decreasing order in place and returns the sign of
// the permutation that did it (+1/-1), or 0 if v has a repeated entry.
inline int sort_descending_sign(std::vector<long>& v) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = i; j > 0 && v[j] > v[j - 1]; --j) {
            std::swap(v[j], v[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1]) return 0;
    return sign;
}

} // namespace syt::detail
