#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace syt {

/// An integer partition: a weakly decreasing sequence of non-negative
/// integers. Trailing zeros are kept as given, but two partitions compare
/// equal when their positive parts agree, so (3,1) == (3,1,0).
class Partition {
public:
    /// The empty shape.
    Partition() = default;

    /// Validates and adopts the given parts. Throws NotAPartition on an
    /// increasing step or a negative entry.
    explicit Partition(std::vector<long> parts);

    /// Parses a comma-separated list such as "5,2,1". "0" is the empty shape.
    static Partition parse(std::string_view text);

    /// Parts exactly as given, trailing zeros included.
    const std::vector<long>& parts() const noexcept { return parts_; }

    /// i-th part, zero beyond the stored length.
    long part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Number of strictly positive parts.
    std::size_t height() const noexcept { return height_; }

    /// Number of cells (sum of the parts).
    long size() const noexcept { return size_; }

    bool empty() const noexcept { return height_ == 0; }

    /// "5,2,1"; the empty shape renders as "0".
    std::string to_string() const;

    bool operator==(const Partition& other) const noexcept;
    bool operator!=(const Partition& other) const noexcept { return !(*this == other); }

private:
    std::vector<long> parts_;
    std::size_t height_ = 0;
    long size_ = 0;
};

/// All partitions of n with height <= max_height, in reverse-lexicographic
/// order ((4), (3,1), (2,2), (2,1,1), ...), each without trailing zeros.
std::vector<Partition> partitions_of(long n, std::size_t max_height);

/// A strictly decreasing integer vector: either the staircase
/// (r-1, r-2, ..., 1, 0) or a shape shifted by it.
class StaircaseVector {
public:
    /// The staircase (r-1, ..., 1, 0).
    static StaircaseVector staircase(std::size_t r);

    /// The shifted vector mu = shape + staircase, entry-wise
    /// (shape_k + r - k for 1-based k). Throws HeightExceedsR when the
    /// shape has more than r positive parts.
    static StaircaseVector mu(const Partition& shape, std::size_t r);

    const std::vector<long>& entries() const noexcept { return entries_; }

    /// Membership in the shifted lattice: strictly decreasing entries with
    /// the last one non-negative.
    bool in_shifted_lattice() const noexcept;

    bool operator==(const StaircaseVector& other) const noexcept {
        return entries_ == other.entries_;
    }

private:
    explicit StaircaseVector(std::vector<long> entries) : entries_(std::move(entries)) {}
    std::vector<long> entries_;
};

} // namespace syt
