#pragma once

#include <string_view>

#include "syt/bigint.hpp"
#include "syt/partition.hpp"

namespace syt {

/// Which counting route produced a value.
enum class Method { dp, genfun, closed, tworow, dft, oracle };

std::string_view method_name(Method m);

/// Parses "dp", "genfun", ...; throws std::invalid_argument on unknown names.
Method method_from_name(std::string_view name);

struct ExactCount {
    Int value;
    Method method;
};

/// n!, memoized. Safe to call concurrently.
Int factorial(unsigned long n);

/// Tableau count of the shape in r rows via the shifted-multinomial product
/// formula: n!/(mu_1! ... mu_r!) * prod_{i<j}(mu_i - mu_j) with
/// mu_k = shape_k + r - k. Exact; throws InternalNonInteger if the division
/// is not exact (which would be a bug, not an input condition).
ExactCount count_closed(const Partition& shape, std::size_t r);

/// Two-row count f^(k,l) = C(k+l, k) - C(k+l, k+1). Requires k >= l >= 0.
ExactCount count_two_row(long k, long ell);

} // namespace syt
