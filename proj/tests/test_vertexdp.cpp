#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "syt/errors.hpp"
#include "syt/partition.hpp"
#include "syt/vertexdp.hpp"

using syt::Int;
using syt::Partition;
using syt::VertexFunction;

namespace {

std::vector<long> pt(std::initializer_list<long> v) { return std::vector<long>(v); }

// Random function on the fundamental domain: random strictly decreasing
// keys inside the box with nonzero values of both signs.
VertexFunction random_vertex_function(std::mt19937_64& rng, std::size_t dim, long box) {
    std::uniform_int_distribution<long> coord(0, box);
    std::uniform_int_distribution<int> val(-9, 9);
    std::map<std::vector<long>, Int> values;
    for (int tries = 0; tries < 12; ++tries) {
        std::vector<long> key(dim);
        for (auto& k : key) k = coord(rng);
        std::sort(key.rbegin(), key.rend());
        bool distinct = true;
        for (std::size_t i = 1; i < dim; ++i)
            if (key[i - 1] == key[i]) distinct = false;
        if (!distinct) continue;
        int v = val(rng);
        if (v == 0) v = 1;
        values[key] = v;
    }
    return VertexFunction(dim, box, std::move(values));
}

std::vector<long> random_point(std::mt19937_64& rng, std::size_t dim, long box) {
    std::uniform_int_distribution<long> coord(0, box);
    std::vector<long> x(dim);
    for (auto& v : x) v = coord(rng);
    return x;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

} // namespace

TEST_CASE("the seed function and its alternating extension") {
    const auto v0 = VertexFunction::initial(3, 4);
    CHECK(v0.evaluate(pt({2, 1, 0})) == 1);
    CHECK(v0.evaluate(pt({0, 2, 1})) == 1);
    CHECK(v0.evaluate(pt({1, 0, 2})) == 1);
    CHECK(v0.evaluate(pt({0, 1, 2})) == -1);
    CHECK(v0.evaluate(pt({2, 0, 1})) == -1);
    CHECK(v0.evaluate(pt({1, 2, 0})) == -1);
    CHECK(v0.evaluate(pt({1, 1, 0})) == 0);
    CHECK(v0.evaluate(pt({2, 1, -1})) == 0);
    CHECK(v0.evaluate(pt({3, 1, 0})) == 0);
    CHECK_THROWS_AS(v0.evaluate(pt({1, 0})), syt::DimensionMismatch);
}

TEST_CASE("one transition step from the seed") {
    const auto v0 = VertexFunction::initial(3, 4);
    const auto v1 = v0.transition();
    CHECK(v1.evaluate(pt({3, 1, 0})) == 1);
    CHECK(v1.evaluate(pt({2, 1, 0})) == 0);
    CHECK(v1.evaluate(pt({2, 2, 0})) == 0);
    // the seed is untouched
    CHECK(v0.evaluate(pt({2, 1, 0})) == 1);
    CHECK(v0.support().size() == 1);
}

TEST_CASE("box must hold the staircase") {
    CHECK_THROWS_AS(VertexFunction::initial(3, 1), syt::BoxOverflow);
    CHECK_THROWS_AS((VertexFunction(4, 2)), syt::BoxOverflow);
    CHECK_THROWS_AS((VertexFunction(2, 5, {{{7, 1}, Int(1)}})), syt::BoxOverflow);
}

TEST_CASE("path counts on known shapes") {
    CHECK(syt::count_paths(Partition({3, 1}), 2).count == 3);
    CHECK(syt::count_paths(Partition(), 1).count == 1);
    CHECK(syt::count_paths(Partition(), 3).count == 1);
    CHECK(syt::count_paths(Partition({4, 3}), 2).count == 14);
    CHECK(syt::count_paths(Partition({4, 3, 2}), 3).count == 168);
    CHECK_THROWS_AS(syt::count_paths(Partition({1, 1, 1}), 2), syt::HeightExceedsR);
}

TEST_CASE("padding with zero rows never changes the count") {
    for (long n = 0; n <= 8; ++n)
        for (const Partition& shape : syt::partitions_of(n, 3)) {
            const std::size_t h = std::max<std::size_t>(shape.height(), 1);
            const Int base = syt::count_paths(shape, h).count;
            for (std::size_t r = h + 1; r <= h + 2; ++r)
                CHECK(syt::count_paths(shape, r).count == base);
        }
}

TEST_CASE("one-step recursion") {
    CHECK(syt::recursion_check(Partition({2, 1}), 2));
    CHECK(syt::recursion_check(Partition({1}), 1));
    CHECK(syt::recursion_check(Partition({2, 2}), 2));
    for (long n = 1; n <= 10; ++n)
        for (const Partition& shape : syt::partitions_of(n, 4))
            CHECK(syt::recursion_check(shape, std::max<std::size_t>(shape.height(), 1)));
}

TEST_CASE("iterates vanish on repeated entries across the box") {
    auto v = VertexFunction::initial(3, 6);
    for (int step = 0; step < 6; ++step) {
        v = v.transition();
        for (long a = 0; a <= 6; ++a)
            for (long b = 0; b <= 6; ++b) {
                CHECK(v.evaluate(pt({a, a, b})) == 0);
                CHECK(v.evaluate(pt({a, b, b})) == 0);
                CHECK(v.evaluate(pt({a, b, a})) == 0);
            }
    }
}

TEST_CASE("iterates stay non-negative on the fundamental domain") {
    auto v = VertexFunction::initial(4, 9);
    for (int step = 0; step < 9; ++step) {
        v = v.transition();
        for (const auto& [key, value] : v.support()) CHECK(value > 0);
    }
}

TEST_CASE("transition preserves the alternating property") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 3); // 2..4
        const long box = 6;
        const VertexFunction v = random_vertex_function(rng, dim, box);
        const VertexFunction tv = v.transition();

        // transposition check at random points
        std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
        for (int k = 0; k < 100; ++k) {
            auto x = random_point(rng, dim, box);
            std::size_t i = pick(rng), j = pick(rng);
            while (j == i) j = pick(rng);
            auto y = x;
            std::swap(y[i], y[j]);
            if (x[i] == x[j]) {
                CHECK(tv.evaluate(x) == 0);
            } else {
                CHECK(tv.evaluate(y) == -tv.evaluate(x));
            }
        }

        // full permutation action with its sign, on one random point
        std::vector<std::size_t> perm(dim);
        for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto x = random_point(rng, dim, box);
        std::vector<long> px(dim);
        for (std::size_t i = 0; i < dim; ++i) px[i] = x[perm[i]];
        bool repeated = false;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j)
                if (x[i] == x[j]) repeated = true;
        if (!repeated)
            CHECK(tv.evaluate(px) == permutation_sign(perm) * tv.evaluate(x));
    }
}
