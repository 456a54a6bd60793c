#include "partcomb/littlewood.hpp"
#include "partcomb/classes.hpp"
#include "partcomb/series.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace partcomb;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}

TEST_CASE("worked 3-decomposition of (5,5,2,2)") {
    Decomposition d = decompose(P({5, 5, 2, 2}), 3);
    CHECK(d.core == P({2}));
    REQUIRE(d.quotient.size() == 3);
    CHECK(d.quotient[0] == P({2}));
    CHECK(d.quotient[1] == P({1}));
    CHECK(d.quotient[2] == P({1}));
    CHECK(recompose(d) == P({5, 5, 2, 2}));

    CoreVector v = kappa(d.core, 3);
    CHECK(v.entries == std::vector<long long>{0, 1, -1});
}

TEST_CASE("cores are fixed points, staircases are 2-cores") {
    Decomposition d = decompose(P({3, 2, 1}), 2);
    CHECK(d.core == P({3, 2, 1}));
    CHECK(d.quotient[0].empty());
    CHECK(d.quotient[1].empty());
    CHECK(is_t_core(P({3, 2, 1}), 2));
    CHECK(is_t_core(P({2}), 3));
    CHECK_FALSE(is_t_core(P({3}), 3));
    CHECK_FALSE(is_t_core(P({4}), 4));

    CHECK(recompose({P({3, 2, 1}), {P({}), P({})}, 2}) == P({3, 2, 1}));
    CHECK(recompose({P({}), {P({}), P({}), P({})}, 3}) == P({}));
}

TEST_CASE("recompose rejects a non-core first component") {
    CHECK_THROWS_AS(recompose({P({3}), {P({}), P({}), P({})}, 3}), std::domain_error);
}

TEST_CASE("t = 1 is the degenerate decomposition") {
    Decomposition d = decompose(P({4, 2, 1}), 1);
    CHECK(d.core.empty());
    REQUIRE(d.quotient.size() == 1);
    CHECK(d.quotient[0] == P({4, 2, 1}));
    CHECK(recompose(d) == P({4, 2, 1}));
}

TEST_CASE("kappa bijection") {
    CHECK(kappa(P({}), 4).entries == std::vector<long long>{0, 0, 0, 0});
    CHECK(kappa_inverse({{0, 1, -1}}) == P({2}));
    CHECK_THROWS_AS(kappa(P({3}), 3), std::domain_error);
    CHECK_THROWS_AS(kappa_inverse({{1, 0, 0}}), std::invalid_argument);

    for (int t = 2; t <= 6; ++t)
        for (const Partition& core : t_cores_up_to(t, 20)) {
            CoreVector v = kappa(core, t);
            long long sum = 0;
            for (long long e : v.entries) sum += e;
            CHECK(sum == 0);
            CHECK(kappa_inverse(v) == core);
            CHECK(core_weight(v) == core.weight());
        }
}

TEST_CASE("rim hook stripping agrees with the decomposition core") {
    CHECK(strip_rim_hooks(P({5, 5, 2, 2}), 3) == P({2}));
    CHECK(strip_rim_hooks(P({3, 2, 1}), 2) == P({3, 2, 1}));
    CHECK(strip_rim_hooks(P({3}), 3) == P({}));

    for (int n = 0; n <= 18; ++n)
        for (const Partition& p : partitions_of(n))
            for (int t = 2; t <= 5; ++t)
                CHECK(strip_rim_hooks(p, t) == decompose(p, t).core);
}

TEST_CASE("core enumeration") {
    std::vector<Partition> two = t_cores_up_to(2, 6);
    std::set<Partition> expect = {P({}), P({1}), P({2, 1}), P({3, 2, 1})};
    CHECK(std::set<Partition>(two.begin(), two.end()) == expect);

    CHECK(t_cores_up_to(1, 12) == std::vector<Partition>{P({})});

    // Filter oracle.
    for (int t = 2; t <= 5; ++t) {
        std::vector<Partition> listed = t_cores_up_to(t, 14);
        std::set<Partition> direct(listed.begin(), listed.end());
        CHECK(listed.size() == direct.size());  // no duplicates
        std::set<Partition> filtered;
        for (int n = 0; n <= 14; ++n)
            for (const Partition& p : partitions_of(n))
                if (is_t_core(p, t)) filtered.insert(p);
        CHECK(direct == filtered);
    }
}

TEST_CASE("t-core counts match the classical product (q^t;q^t)^t / (q;q)") {
    const int N = 30;
    for (int t = 2; t <= 6; ++t) {
        Series<Rat> prod = pow_int(pochhammer_inf(Rat(1), t, t, N), t) *
                           inverse(pochhammer_inf(Rat(1), 1, 1, N));
        std::vector<long> counts(size_t(N) + 1, 0);
        for (const Partition& core : t_cores_up_to(t, N)) ++counts[size_t(core.weight())];
        for (int n = 0; n <= N; ++n) CHECK(prod.coeff(n) == Rat(counts[size_t(n)]));
    }
}

TEST_CASE("recompose then decompose is the identity on valid decompositions") {
    for (int t = 2; t <= 4; ++t)
        for (const Partition& core : t_cores_up_to(t, 8))
            for (int m = 0; m <= 3; ++m) {
                // all quotient tuples of total weight m
                std::vector<Partition> quot(static_cast<size_t>(t));
                auto rec = [&](auto&& self, int pos, int remaining) -> void {
                    if (pos == t) {
                        if (remaining == 0) {
                            Decomposition d{core, quot, t};
                            CHECK(decompose(recompose(d), t) == d);
                        }
                        return;
                    }
                    for (int w = 0; w <= remaining; ++w)
                        for (const Partition& nu : partitions_of(w)) {
                            quot[size_t(pos)] = nu;
                            self(self, pos + 1, remaining - w);
                        }
                    quot[size_t(pos)] = Partition();
                };
                rec(rec, 0, m);
            }
}

TEST_CASE("decomposition laws on all partitions up to 18") {
    for (int n = 0; n <= 18; ++n)
        for (const Partition& p : partitions_of(n))
            for (int t = 1; t <= 6; ++t) {
                Decomposition d = decompose(p, t);
                CHECK(is_t_core(d.core, t));
                long long qsum = 0;
                for (const Partition& nu : d.quotient) qsum += nu.weight();
                CHECK(p.weight() == d.core.weight() + (long long)t * qsum);

                HookMultiset scaled;
                for (const Partition& nu : d.quotient) {
                    HookMultiset hs = hooks(nu, 1);
                    for (auto& [v, m] : hs.counts()) scaled.add(t * v, m);
                }
                CHECK(hooks(p, t) == scaled);

                CHECK(recompose(d) == p);
            }
}
