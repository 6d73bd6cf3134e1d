#include <doctest.h>

#include "syt/errors.hpp"
#include "syt/oracle.hpp"
#include "syt/partition.hpp"

using syt::Partition;

TEST_CASE("small shapes by hand") {
    CHECK(syt::count_oracle(Partition({3, 1})) == 3);
    CHECK(syt::count_oracle(Partition()) == 1);
    CHECK(syt::count_oracle(Partition({7})) == 1);
    CHECK(syt::count_oracle(Partition({3, 3, 1})) == 21);
    CHECK(syt::count_oracle(Partition({4, 3, 2})) == 168);
    CHECK(syt::count_oracle(Partition({2, 2, 2})) == 5);
}

TEST_CASE("enumeration of (2,2) gives the two known fillings") {
    const auto ts = syt::enumerate_tableaux(Partition({2, 2}));
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].rows == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(ts[1].rows == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
}

TEST_CASE("enumeration of (3,1)") {
    const auto ts = syt::enumerate_tableaux(Partition({3, 1}));
    REQUIRE(ts.size() == 3);
    for (const auto& t : ts) CHECK(t.valid());
}

TEST_CASE("single row is the identity filling") {
    const auto ts = syt::enumerate_tableaux(Partition({5}));
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].rows == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
}

TEST_CASE("cell cap") {
    CHECK_THROWS_AS(syt::count_oracle(Partition({9, 8})), syt::ShapeTooLarge);
    CHECK(syt::count_oracle(Partition({17}), 17) == 1);
}

TEST_CASE("enumeration count equals the direct count") {
    for (long n = 0; n <= 8; ++n)
        for (const Partition& shape : syt::partitions_of(n, 4)) {
            const auto ts = syt::enumerate_tableaux(shape);
            CHECK(syt::Int(static_cast<long>(ts.size())) == syt::count_oracle(shape));
            for (const auto& t : ts) CHECK(t.valid());
        }
}

TEST_CASE("row-of-label path stays weakly decreasing at every prefix") {
    for (const Partition& shape :
         {Partition({3, 2, 1}), Partition({4, 4}), Partition({2, 2, 2, 1})}) {
        for (const auto& t : syt::enumerate_tableaux(shape)) {
            const long n = shape.size();
            std::vector<long> len(shape.height(), 0);
            for (int label = 1; label <= n; ++label) {
                for (std::size_t i = 0; i < t.rows.size(); ++i)
                    for (int v : t.rows[i])
                        if (v == label) ++len[i];
                for (std::size_t i = 1; i < len.size(); ++i) CHECK(len[i - 1] >= len[i]);
            }
        }
    }
}
