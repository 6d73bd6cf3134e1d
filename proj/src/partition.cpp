#include "syt/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "syt/errors.hpp"

namespace syt {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw NotAPartition("negative part in shape");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw NotAPartition("parts must be weakly decreasing");
    }
    for (long p : parts_) {
        if (p > 0) ++height_;
        size_ += p;
    }
}

Partition Partition::parse(std::string_view text) {
    if (text.empty())
        throw NotAPartition("empty shape string");
    std::vector<long> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw NotAPartition("malformed part '" + std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (height_ == 0) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool Partition::operator==(const Partition& other) const noexcept {
    if (height_ != other.height_) return false;
    for (std::size_t i = 0; i < height_; ++i)
        if (parts_[i] != other.parts_[i]) return false;
    return true;
}

namespace {

void emit_partitions(long remaining, long max_part, std::size_t max_height,
                     std::vector<long>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (acc.size() == max_height) return;
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        emit_partitions(remaining - p, p, max_height, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(long n, std::size_t max_height) {
    if (n < 0) throw NotAPartition("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<long> acc;
    emit_partitions(n, n, max_height, acc, out);
    return out;
}

StaircaseVector StaircaseVector::staircase(std::size_t r) {
    std::vector<long> e(r);
    for (std::size_t i = 0; i < r; ++i) e[i] = static_cast<long>(r - 1 - i);
    return StaircaseVector(std::move(e));
}

StaircaseVector StaircaseVector::mu(const Partition& shape, std::size_t r) {
    if (shape.height() > r)
        throw HeightExceedsR("shape of height " + std::to_string(shape.height()) +
                             " does not fit in " + std::to_string(r) + " rows");
    std::vector<long> e(r);
    for (std::size_t i = 0; i < r; ++i) e[i] = shape.part(i) + static_cast<long>(r - 1 - i);
    return StaircaseVector(std::move(e));
}

bool StaircaseVector::in_shifted_lattice() const noexcept {
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i - 1] <= entries_[i]) return false;
    return entries_.empty() || entries_.back() >= 0;
}

} // namespace syt
