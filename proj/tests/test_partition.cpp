#include "partcomb/partition.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace partcomb;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<int> sorted_hooks(const Partition& p, int t) {
    return hooks(p, t).sorted_values();
}

}  // namespace

TEST_CASE("partition construction and validation") {
    Partition p = P({4, 3, 3, 2});
    CHECK(p.weight() == 12);
    CHECK(p.length() == 4);
    CHECK(P({}).empty());
    CHECK(P({}).weight() == 0);
    CHECK_THROWS_AS(P({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(P({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(P({-1}), std::invalid_argument);
}

TEST_CASE("partition string round trip") {
    CHECK(P({5, 5, 2, 2}).str() == "5,5,2,2");
    CHECK(P({}).str() == "");
    CHECK(Partition::parse("5,5,2,2") == P({5, 5, 2, 2}));
    CHECK(Partition::parse("") == P({}));
    CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(P({4, 3, 3, 2})) == P({4, 4, 3, 1}));
    CHECK(conjugate(P({})) == P({}));
    CHECK(conjugate(P({6, 4, 4, 1, 1})) == P({5, 3, 3, 3, 1, 1}));
}

TEST_CASE("durfee and shifted durfee") {
    CHECK(durfee(P({4, 3, 3, 2})) == 3);
    CHECK(durfee(P({})) == 0);
    CHECK(durfee(P({5, 5, 2, 2})) == 2);
    CHECK(shifted_durfee(P({4, 3, 3, 2}), 0) == 3);
    CHECK(shifted_durfee(P({4, 3, 3, 2}), 1) == 2);
    CHECK(shifted_durfee(P({4, 3, 3, 2}), 4) == 0);
}

TEST_CASE("frobenius coordinates") {
    FrobeniusCoords f = frobenius(P({4, 3, 3, 2}));
    CHECK(f.arms == std::vector<int>{3, 1, 0});
    CHECK(f.legs == std::vector<int>{3, 2, 0});
    CHECK(from_frobenius(f) == P({4, 3, 3, 2}));
    CHECK(frobenius(P({})).size() == 0);
    CHECK(from_frobenius({}) == P({}));

    // Hook shape with arm = leg = t': weight 2t'+1.
    for (int tp = 0; tp <= 5; ++tp) {
        Partition h = from_frobenius({{tp}, {tp}});
        CHECK(h.weight() == 2 * tp + 1);
        CHECK(durfee(h) == 1);
    }

    CHECK_THROWS_AS(from_frobenius({{1, 2}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_frobenius({{2}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_frobenius({{-1}, {0}}), std::invalid_argument);
}

TEST_CASE("hook multisets match the worked diagram") {
    std::vector<int> all = sorted_hooks(P({4, 3, 3, 2}), 1);
    std::vector<int> expected = {2, 1, 4, 3, 1, 5, 4, 2, 7, 6, 4, 1};
    std::sort(expected.begin(), expected.end());
    CHECK(all == expected);
    CHECK(sorted_hooks(P({4, 3, 3, 2}), 3) == std::vector<int>{3, 6});
    CHECK(hooks(P({}), 5).empty());
}

TEST_CASE("count_hooks_equal") {
    CHECK(count_hooks_equal(P({4, 3, 3, 2}), 3) == 1);
    CHECK(count_hooks_equal(P({4, 3, 3, 2}), 1) == 3);
    CHECK(count_hooks_equal(P({4, 3, 3, 2}), 8) == 0);
}

TEST_CASE("diagonal hooks") {
    CHECK(diagonal_hooks(P({4, 3, 3, 2})) == std::vector<int>{7, 4, 1});
    CHECK(diagonal_hooks(P({})).empty());
    CHECK(diagonal_hooks(P({2, 1})) == std::vector<int>{3});
}

TEST_CASE("componentwise add") {
    CHECK(componentwise_add(P({1}), P({1})) == P({2}));
    CHECK(componentwise_add(P({3, 1}), P({})) == P({3, 1}));
    CHECK(componentwise_add(P({2}), P({1, 1})) == P({3, 1}));
    CHECK(add_unit_column(P({2, 2}), 3) == P({3, 3, 1}));
}

TEST_CASE("enumeration order and counts") {
    std::vector<Partition> zero = partitions_of(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    const std::vector<Partition>& four = partitions_of(4);
    REQUIRE(four.size() == 5);
    CHECK(four[0] == P({4}));
    CHECK(four[1] == P({3, 1}));
    CHECK(four[2] == P({2, 2}));
    CHECK(four[3] == P({2, 1, 1}));
    CHECK(four[4] == P({1, 1, 1, 1}));

    CHECK(partitions_of(10).size() == 42);
}

TEST_CASE("partition_count against the enumeration oracle") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(10) == 42);
    for (int n = 0; n <= 40; ++n) {
        long seen = 0;
        for_each_partition(n, [&](const std::vector<int>&) { ++seen; });
        CHECK(partition_count(n) == seen);
    }
    // Big values must not overflow.
    CHECK(partition_count(300) == Int("9253082936723602"));
}

TEST_CASE("structural invariants up to weight 25") {
    for (int n = 0; n <= 25; ++n) {
        for (const Partition& p : partitions_of(n)) {
            Partition c = conjugate(p);
            CHECK(conjugate(c) == p);
            CHECK(sorted_hooks(p, 1) == sorted_hooks(c, 1));

            long long diag = 0;
            for (int h : diagonal_hooks(p)) diag += h;
            CHECK(diag == p.weight());

            FrobeniusCoords f = frobenius(p);
            CHECK(from_frobenius(f) == p);
            long long w = f.size();
            for (int i = 0; i < f.size(); ++i) w += f.arms[size_t(i)] + f.legs[size_t(i)];
            CHECK(w == p.weight());

            CHECK(hooks(p, 1).total() == p.weight());

            for (int t : {2, 3, 5}) {
                std::vector<int> sub;
                for (int h : sorted_hooks(p, 1))
                    if (h % t == 0) sub.push_back(h);
                CHECK(sub == sorted_hooks(p, t));
            }
        }
    }
}
