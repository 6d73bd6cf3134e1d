#pragma once

#include <gmpxx.h>

#include <string>

namespace syt {

// Exact signed integer of arbitrary size. Tableau counts grow
// super-exponentially, so nothing in this library rounds.
using Int = mpz_class;

inline std::string to_decimal(const Int& v) { return v.get_str(); }

// Throws std::invalid_argument on malformed input.
inline Int from_decimal(const std::string& text) { return Int(text); }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace syt
