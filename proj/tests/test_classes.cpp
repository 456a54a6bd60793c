#include "partcomb/classes.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace partcomb;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::set<Partition> as_set(const std::vector<Partition>& v) {
    return std::set<Partition>(v.begin(), v.end());
}
}

TEST_CASE("class spec parsing") {
    CHECK(ClassSpec::parse("all") == ClassSpec::all());
    CHECK(ClassSpec::parse("sc") == ClassSpec::sc());
    CHECK(ClassSpec::parse("pz:-2") == ClassSpec::pz(-2));
    CHECK(ClassSpec::parse("bgt:5") == ClassSpec::bgt(5));
    CHECK(ClassSpec::parse("bgzt:1,5") == ClassSpec::bgzt(1, 5));
    CHECK(ClassSpec::bgzt(1, 5).str() == "bgzt:1,5");
    CHECK_THROWS_AS(ClassSpec::parse("nope"), std::invalid_argument);
    CHECK_THROWS_AS(ClassSpec::parse("bgzt:5,5"), std::invalid_argument);
    CHECK_THROWS_AS(ClassSpec::parse("bgt:1"), std::invalid_argument);
}

TEST_CASE("self-conjugate and z-asymmetric predicates") {
    CHECK(is_self_conjugate(P({2, 2})));
    CHECK_FALSE(is_self_conjugate(P({4, 3, 3, 2})));
    CHECK(is_self_conjugate(P({})));

    CHECK(is_z_asymmetric(P({6, 4, 4, 1, 1}), 1));
    CHECK(is_z_asymmetric(P({5, 3, 3, 3, 1, 1}), -1));
    for (int n = 0; n <= 20; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(is_z_asymmetric(p, 0) == is_self_conjugate(p));
}

TEST_CASE("conjugation swaps the asymmetry sign") {
    for (int n = 0; n <= 25; ++n)
        for (const Partition& p : partitions_of(n))
            for (int z = -4; z <= 4; ++z)
                CHECK(is_z_asymmetric(p, z) == is_z_asymmetric(conjugate(p), -z));
}

TEST_CASE("bgt membership") {
    CHECK(in_bg_t(P({}), 3));
    CHECK_FALSE(in_bg_t(P({2, 1}), 3));  // diagonal hook 3
    for (int tp = 1; tp <= 4; ++tp) {
        const int t = 2 * tp + 1;
        Partition hook = from_frobenius({{tp}, {tp}});
        CHECK_FALSE(in_bg_t(hook, t));  // its single diagonal hook equals t
    }
}

TEST_CASE("bgzt membership goldens") {
    CHECK(in_bg_zt(P({5, 5, 2, 2}), 1, 5));
    CHECK_FALSE(in_bg_zt(P({5, 5, 2, 2}), 1, 3));
    CHECK_FALSE(in_bg_zt(P({5, 5, 2, 2}), 1, 4));

    // Only the empty partition survives z = t-1.
    for (int t = 2; t <= 6; ++t) {
        CHECK(in_bg_zt(P({}), t - 1, t));
        for (int n = 1; n <= 16; ++n)
            for (const Partition& p : pz_partitions(t - 1, n))
                CHECK_FALSE(in_bg_zt(p, t - 1, t));
    }

    // z = 0 reduces to sc (even t) and bgt (odd t).
    for (int n = 0; n <= 18; ++n)
        for (const Partition& p : partitions_of(n)) {
            if (!is_self_conjugate(p)) continue;
            CHECK(in_bg_zt(p, 0, 4) == true);
            CHECK(in_bg_zt(p, 0, 3) == in_bg_t(p, 3));
            CHECK(in_bg_zt(p, 0, 5) == in_bg_t(p, 5));
        }
}

TEST_CASE("core vector symmetry class") {
    CHECK(in_C_zt({{0, 0, 0}}, 0));
    CHECK(in_C_zt({{0, 0, 0}}, 1));
    CHECK(in_C_zt({{0, 1, -1}}, 1));
    CHECK_FALSE(in_C_zt({{1, 0, -1}}, 1));
}

TEST_CASE("quotient-side membership matches the direct definition") {
    for (int n = 0; n <= 24; ++n)
        for (int z = 0; z <= 3; ++z)
            for (const Partition& p : pz_partitions(z, n))
                for (int t = std::max(2, z + 1); t <= 6; ++t) {
                    if (z > t - 1) continue;
                    CHECK(in_bg_zt_via_quotient(p, z, t) == in_bg_zt(p, z, t));
                }
    CHECK_THROWS_AS(in_bg_zt_via_quotient(P({2, 1}), 1, 3), std::domain_error);
}

TEST_CASE("quotient structure of z-asymmetric partitions") {
    int skipped = 0;
    CHECK(pz_quotient_structure_check(P({5, 5, 2, 2}), 1, 3, &skipped));
    CHECK(pz_quotient_structure_check(P({}), 2, 4));
    // Exhaustive over the doubled-distinct partitions.
    for (int n = 0; n <= 24; ++n)
        for (const Partition& p : pz_partitions(1, n))
            for (int t = 2; t <= 6; ++t)
                CHECK(pz_quotient_structure_check(p, 1, t));
    CHECK_THROWS_AS(pz_quotient_structure_check(P({3, 1}), 2, 4), std::domain_error);
}

TEST_CASE("direct z-asymmetric enumeration against the filter") {
    for (int n = 0; n <= 22; ++n)
        for (int z = -3; z <= 3; ++z) {
            std::set<Partition> filtered;
            for (const Partition& p : partitions_of(n))
                if (is_z_asymmetric(p, z)) filtered.insert(p);
            CHECK(as_set(pz_partitions(z, n)) == filtered);
        }
}

TEST_CASE("enumerate_class goldens") {
    CHECK(enumerate_class(ClassSpec::sc(), 4) == std::vector<Partition>{P({2, 2})});
    CHECK(enumerate_class(ClassSpec::pz(1), 2) == std::vector<Partition>{P({2})});
    for (int t = 2; t <= 5; ++t) {
        CHECK(enumerate_class(ClassSpec::bgzt(t - 1, t), 0) == std::vector<Partition>{P({})});
        for (int n = 1; n <= 10; ++n)
            CHECK(enumerate_class(ClassSpec::bgzt(t - 1, t), n).empty());
    }
}

TEST_CASE("direct bgzt generation against the filter") {
    for (int t = 2; t <= 5; ++t)
        for (int z = 0; z < t; ++z)
            for (int n = 0; n <= 20; ++n) {
                std::set<Partition> filtered;
                for (const Partition& p : pz_partitions(z, n))
                    if (in_bg_zt(p, z, t)) filtered.insert(p);
                std::vector<Partition> direct = bgzt_partitions(z, t, n);
                CHECK(direct.size() == filtered.size());  // no duplicates
                CHECK(as_set(direct) == filtered);
            }
}

TEST_CASE("z-asymmetric t-cores") {
    for (int t = 2; t <= 5; ++t)
        for (int z = 0; z < t; ++z) {
            std::set<Partition> filtered;
            for (int n = 0; n <= 16; ++n)
                for (const Partition& p : pz_partitions(z, n))
                    if (is_t_core(p, t)) filtered.insert(p);
            std::vector<Partition> direct = pz_t_cores_up_to(z, t, 16);
            CHECK(direct.size() == filtered.size());  // no duplicates
            CHECK(as_set(direct) == filtered);
        }
}

TEST_CASE("core of a bgzt member stays z-asymmetric") {
    for (int t = 2; t <= 5; ++t)
        for (int z = 0; z < t; ++z)
            for (int n = 0; n <= 18; ++n)
                for (const Partition& p : bgzt_partitions(z, t, n)) {
                    Decomposition d = decompose(p, t);
                    CHECK(is_z_asymmetric(d.core, z));
                    // Hooks divisible by t come in even multiplicities.
                    HookMultiset ht = hooks(p, t);
                    for (auto& [v, m] : ht.counts()) CHECK(m % 2 == 0);
                }
}

TEST_CASE("doubled-distinct diagonal description of bgzt at z = 1") {
    for (int n = 0; n <= 24; ++n)
        for (const Partition& p : pz_partitions(1, n))
            for (int t = 2; t <= 6; ++t) {
                bool diag_ok = true;
                for (int h : diagonal_hooks(p))
                    if (h % t == 0) diag_ok = false;
                CHECK(in_bg_zt(p, 1, t) == diag_ok);
            }
}
