#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "syt/bigint.hpp"
#include "syt/partition.hpp"

namespace syt {

/// Display order for exponent vectors: higher total degree first, graded
/// reverse-lexicographic within a degree. Matches the descending layout
/// used for the two-variable expansions.
struct TermOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse Laurent polynomial over the integers: a map from exponent vectors
/// (negative exponents allowed) to nonzero coefficients. All arithmetic is
/// exact; zero coefficients are never stored.
class LaurentPoly {
public:
    using TermMap = std::map<std::vector<int>, Int, TermOrder>;

    explicit LaurentPoly(std::size_t vars) : vars_(vars) {}

    static LaurentPoly constant(std::size_t vars, Int value);
    static LaurentPoly monomial(std::size_t vars, std::vector<int> exponents, Int coeff = 1);

    /// The alternating sum over all permutations of the staircase exponent:
    /// r! signed terms, equal to the expanded product of the pairwise
    /// variable differences. The staircase term itself has coefficient +1.
    static LaurentPoly vandermonde(std::size_t r);

    std::size_t vars() const noexcept { return vars_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const TermMap& terms() const noexcept { return terms_; }

    /// Stored coefficient of x^m, or zero. Throws DimensionMismatch when the
    /// exponent vector has the wrong arity.
    Int coefficient(std::span<const int> m) const;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    bool operator==(const LaurentPoly& other) const;

    /// Multiplies by the monomial x^offset (entries may be negative).
    LaurentPoly shifted(std::span<const int> offset) const;

    /// Renders in descending order with explicit fractions for negative
    /// exponents, e.g. "x1^2 + x1*x2 - x2^2 - x2^3/x1".
    std::string to_text() const;

    /// List of {"exponents": [...], "coefficient": "<decimal>"} records in
    /// display order.
    nlohmann::json to_json() const;

private:
    void add_term(const std::vector<int>& exponents, const Int& coeff);

    std::size_t vars_;
    TermMap terms_;
};

/// The degree-n generating polynomial for tableau counts in r rows: the
/// n-th power of (x1 + ... + xr) times the Vandermonde polynomial, with
/// every exponent vector reduced by the staircase. The coefficient at a
/// legal shape's exponent vector is its tableau count.
LaurentPoly genfun(long n, std::size_t r);

/// Tableau count read off genfun(|shape|, r) at the shape's exponent.
Int count_via_genfun(const Partition& shape, std::size_t r);

} // namespace syt
