#include "syt/vertexdp.hpp"

#include <iterator>
#include <stdexcept>

#include "syt/detail/perm.hpp"
#include "syt/errors.hpp"

namespace syt {

namespace {

void check_box(std::size_t dim, long box) {
    if (box < static_cast<long>(dim) - 1)
        throw BoxOverflow("box bound " + std::to_string(box) +
                          " cannot hold the staircase for dimension " + std::to_string(dim));
}

bool strictly_decreasing_nonneg(const std::vector<long>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i > 0 && v[i - 1] <= v[i]) return false;
    }
    return true;
}

} // namespace

VertexFunction::VertexFunction(std::size_t dim, long box) : dim_(dim), box_(box) {
    check_box(dim, box);
}

VertexFunction::VertexFunction(std::size_t dim, long box,
                               std::map<std::vector<long>, Int> values)
    : dim_(dim), box_(box), values_(std::move(values)) {
    check_box(dim, box);
    for (auto it = values_.begin(); it != values_.end();) {
        const auto& key = it->first;
        if (key.size() != dim_)
            throw DimensionMismatch("vertex key arity != dimension");
        if (!strictly_decreasing_nonneg(key))
            throw std::invalid_argument("vertex key outside the fundamental domain");
        if (!key.empty() && key.front() > box_)
            throw BoxOverflow("vertex key exceeds the box bound");
        it = (it->second == 0) ? values_.erase(it) : std::next(it);
    }
}

VertexFunction VertexFunction::initial(std::size_t dim, long box) {
    VertexFunction v(dim, box);
    v.values_.emplace(StaircaseVector::staircase(dim).entries(), Int(1));
    return v;
}

Int VertexFunction::evaluate(std::span<const long> point) const {
    if (point.size() != dim_)
        throw DimensionMismatch("point arity != dimension");
    for (long x : point)
        if (x < 0) return 0;
    std::vector<long> sorted(point.begin(), point.end());
    const int sign = detail::sort_descending_sign(sorted);
    if (sign == 0) return 0;
    auto it = values_.find(sorted);
    if (it == values_.end()) return 0;
    return sign > 0 ? it->second : -it->second;
}

VertexFunction VertexFunction::transition() const {
    // Scatter over the stored support: within the fundamental domain the
    // incoming value at x from x - delta_i is nonzero only when x - delta_i
    // is itself strictly decreasing, so no sign bookkeeping is needed here.
    VertexFunction out(dim_, box_);
    for (const auto& [y, value] : values_) {
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i > 0 && y[i - 1] <= y[i] + 1) continue; // would repeat or cross
            if (y[i] + 1 > box_) continue;               // clipped at the window edge
            std::vector<long> x = y;
            ++x[i];
            auto [it, inserted] = out.values_.try_emplace(std::move(x), value);
            if (!inserted) {
                it->second += value;
                if (it->second == 0) out.values_.erase(it);
            }
        }
    }
    return out;
}

LatticePathCount count_paths(const Partition& shape, std::size_t r) {
    if (r == 0) throw HeightExceedsR("dimension r must be positive");
    if (shape.height() > r)
        throw HeightExceedsR("shape of height " + std::to_string(shape.height()) +
                             " does not fit in " + std::to_string(r) + " rows");
    const long box = shape.part(0) + static_cast<long>(r);
    VertexFunction v = VertexFunction::initial(r, box);
    for (long step = 0; step < shape.size(); ++step) v = v.transition();
    const auto target = StaircaseVector::mu(shape, r).entries();
    return {shape, v.evaluate(target)};
}

bool recursion_check(const Partition& shape, std::size_t r) {
    if (shape.size() < 1)
        throw std::invalid_argument("recursion_check requires a non-empty shape");
    if (shape.height() > r)
        throw HeightExceedsR("shape of height " + std::to_string(shape.height()) +
                             " does not fit in " + std::to_string(r) + " rows");
    const Int lhs = count_paths(shape, r).count;
    Int rhs = 0;
    for (std::size_t i = 0; i < shape.height(); ++i) {
        std::vector<long> parts(shape.parts());
        --parts[i];
        try {
            rhs += count_paths(Partition(std::move(parts)), r).count;
        } catch (const NotAPartition&) {
            // illegal predecessor contributes zero
        }
    }
    return lhs == rhs;
}

} // namespace syt
