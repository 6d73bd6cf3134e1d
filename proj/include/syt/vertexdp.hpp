#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "syt/bigint.hpp"
#include "syt/partition.hpp"

namespace syt {

/// A sign-alternating integer function on the shifted lattice, stored only
/// on its fundamental domain: the strictly decreasing non-negative points
/// with coordinates at most `box`. Values anywhere else follow from the
/// alternating extension — zero on points with a negative or repeated
/// coordinate, and sign-of-sort times the stored value otherwise. Keeping
/// just the fundamental domain saves an r! factor and makes the alternating
/// property hold by construction.
///
/// The box is a computational window: one transition step needs only
/// coordinate-wise smaller points, so every value inside the box stays
/// exact no matter how often the function is advanced; support that would
/// grow past the box is clipped. Queries outside the window return zero.
class VertexFunction {
public:
    /// Zero function.
    VertexFunction(std::size_t dim, long box);

    /// Adopts fundamental-domain values. Keys must be strictly decreasing,
    /// non-negative and bounded by box; zero values are dropped.
    /// Throws BoxOverflow when the box cannot hold the staircase.
    VertexFunction(std::size_t dim, long box, std::map<std::vector<long>, Int> values);

    /// The unit mass at the staircase point (r-1, ..., 1, 0): the length-0
    /// path count and the seed of every iterate.
    static VertexFunction initial(std::size_t dim, long box);

    std::size_t dim() const noexcept { return dim_; }
    long box() const noexcept { return box_; }

    /// Nonzero fundamental-domain values.
    const std::map<std::vector<long>, Int>& support() const noexcept { return values_; }

    /// Value at an arbitrary lattice point through the alternating
    /// extension. Throws DimensionMismatch on wrong arity.
    Int evaluate(std::span<const long> point) const;

    /// One step of the transition operator: the result at x is the sum of
    /// the values at x minus each unit vector. Produces a new function;
    /// this one is left untouched.
    VertexFunction transition() const;

private:
    std::size_t dim_;
    long box_;
    std::map<std::vector<long>, Int> values_;
};

struct LatticePathCount {
    Partition shape;
    Int count;
};

/// Number of standard tableaux of the shape, computed as the number of
/// monotone lattice paths from the origin to the shape inside the legal
/// region: |shape| transition steps applied to the initial mass, read off
/// at the staircase-shifted shape point. Throws HeightExceedsR.
LatticePathCount count_paths(const Partition& shape, std::size_t r);

/// Checks the one-step recursion: the count of the shape equals the sum of
/// the counts of its legal predecessors (shape minus one cell in some row).
/// Requires a non-empty shape.
bool recursion_check(const Partition& shape, std::size_t r);

} // namespace syt
