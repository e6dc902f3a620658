#include "doctest.h"

#include <numeric>
#include <set>
#include <vector>

#include "rsc/counts.hpp"

using namespace rsc;
using namespace rsc::counts;

namespace {

// Literal element enumeration: builds each cyclic subgroup as an element set
// and counts distinct sets.  Only for tiny groups.
u64 enumerate_cyclic(const std::vector<u64>& inv) {
    u64 order = 1;
    for (u64 ni : inv) order *= ni;
    REQUIRE(order <= 5000);
    std::set<std::set<u64>> subs;
    std::vector<u64> el(inv.size(), 0);
    for (u64 idx = 0; idx < order; ++idx) {
        u64 t = idx;
        for (std::size_t i = 0; i < inv.size(); ++i) {
            el[i] = t % inv[i];
            t /= inv[i];
        }
        std::set<u64> sub;
        std::vector<u64> cur(inv.size(), 0);
        do {
            u64 key = 0;
            for (std::size_t i = 0; i < inv.size(); ++i) key = key * inv[i] + cur[i];
            sub.insert(key);
            for (std::size_t i = 0; i < inv.size(); ++i) cur[i] = (cur[i] + el[i]) % inv[i];
        } while (std::any_of(cur.begin(), cur.end(), [](u64 v) { return v != 0; }));
        subs.insert(sub);
    }
    return subs.size();
}

} // namespace

TEST_CASE("c_pp examples") {
    CHECK(c_pp(2, 1, 1) == 4);
    CHECK(c_pp(2, 1, 2) == 6);
    CHECK(c_pp(2, 2, 1) == 6); // swap normalization
    CHECK(c_pp(5, 0, 3) == 4); // cyclic Z_{p^b}: b+1 subgroups
    CHECK(c_pp(3, 1, 2) == 8);
    CHECK_THROWS_AS(c_pp(4, 1, 1), domain_error);
}

TEST_CASE("s_pp examples") {
    CHECK(s_pp(2, 1, 1) == 5);
    CHECK(s_pp(3, 1, 1) == 6);
    CHECK(s_pp(2, 1, 2) == 8);
    CHECK(s_pp(2, 2, 1) == 8);
    CHECK(s_pp(7, 0, 4) == 5);
    CHECK_THROWS_AS(s_pp(9, 1, 1), domain_error);
}

TEST_CASE("c_rank2 examples and path agreement") {
    CHECK(c_rank2(1, 1) == 1);
    CHECK(c_rank2(2, 2) == 4);
    CHECK(c_rank2(12, 18) == c_pp(2, 2, 1) * c_pp(3, 1, 2));
    for (u64 m = 1; m <= 60; ++m)
        for (u64 n = 1; n <= 60; ++n)
            REQUIRE(c_rank2_divisor_sum(m, n) == c_rank2_euler_product(m, n));
}

TEST_CASE("s_rank2 examples and path agreement") {
    for (u64 n = 1; n <= 30; ++n) {
        auto f = factorize(n);
        CHECK(s_rank2(1, n) == tau_k(f, 2));
    }
    CHECK(s_rank2(2, 2) == 5);
    CHECK(s_rank2(4, 2) == 8);
    for (u64 m = 1; m <= 60; ++m)
        for (u64 n = 1; n <= 60; ++n)
            REQUIRE(s_rank2_divisor_sum(m, n) == s_rank2_euler_product(m, n));
}

TEST_CASE("c_rank3 examples") {
    CHECK(c_rank3(1, 1, 1) == 1);
    CHECK(c_rank3(2, 2, 2) == 8);
    for (u64 m = 1; m <= 20; ++m)
        for (u64 n = 1; n <= 20; ++n)
            REQUIRE(c_rank3(1, m, n) == c_rank2(m, n));
}

TEST_CASE("c_rank3 symmetry under permutations") {
    for (u64 a = 1; a <= 8; ++a)
        for (u64 b = a; b <= 8; ++b)
            for (u64 c = b; c <= 8; ++c) {
                u64 v = c_rank3(a, b, c);
                REQUIRE(c_rank3(a, c, b) == v);
                REQUIRE(c_rank3(b, a, c) == v);
                REQUIRE(c_rank3(b, c, a) == v);
                REQUIRE(c_rank3(c, a, b) == v);
                REQUIRE(c_rank3(c, b, a) == v);
            }
}

TEST_CASE("c_rank3 multiplicativity on coprime pairs") {
    // deterministic pseudo-random sample of 500 coprime pairs
    u64 state = 88172645463325252ull;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    int done = 0;
    while (done < 500) {
        u64 n1 = next() % 30 + 1, n2 = next() % 30 + 1, n3 = next() % 30 + 1;
        u64 a1 = next() % 30 + 1, a2 = next() % 30 + 1, a3 = next() % 30 + 1;
        if (std::gcd(n1 * n2 * n3, a1 * a2 * a3) != 1) continue;
        REQUIRE(c_rank3(n1 * a1, n2 * a2, n3 * a3) == c_rank3(n1, n2, n3) * c_rank3(a1, a2, a3));
        ++done;
    }
}

TEST_CASE("oracle_cyclic_count examples") {
    CHECK(oracle_cyclic_count({{1, 1, 6}}) == 4);
    CHECK(oracle_cyclic_count({{2, 2, 2}}) == 8);
    CHECK(oracle_cyclic_count({{2, 4, 1}}) == 6);
    CHECK(enumerate_cyclic({2, 2, 2}) == 8);
    CHECK(enumerate_cyclic({2, 4, 1}) == 6);
    CHECK_THROWS_AS(oracle_cyclic_count({{2000, 2000, 2000}}), capacity_error);
}

TEST_CASE("oracle_cyclic_count matches literal enumeration on small groups") {
    for (u64 a = 1; a <= 6; ++a)
        for (u64 b = 1; b <= 6; ++b)
            for (u64 c = 1; c <= 6; ++c)
                REQUIRE(oracle_cyclic_count({{a, b, c}}) == enumerate_cyclic({a, b, c}));
}

TEST_CASE("c_rank2 and c_rank3 against the order-statistics oracle") {
    for (u64 m = 1; m <= 16; ++m)
        for (u64 n = 1; n <= 16; ++n)
            REQUIRE(c_rank2(m, n) == oracle_cyclic_count({{1, m, n}}));
    for (u64 a = 1; a <= 6; ++a)
        for (u64 b = 1; b <= 6; ++b)
            for (u64 c = 1; c <= 6; ++c)
                REQUIRE(c_rank3(a, b, c) == oracle_cyclic_count({{a, b, c}}));
}

TEST_CASE("oracle_subgroup_count examples") {
    CHECK(oracle_subgroup_count(1, 1) == 1);
    CHECK(oracle_subgroup_count(2, 2) == 5);
    CHECK(oracle_subgroup_count(6, 6) == s_rank2(6, 6));
    CHECK_THROWS_AS(oracle_subgroup_count(100, 100), capacity_error);
}

TEST_CASE("s_rank2 against subgroup enumeration, mn <= 144") {
    for (u64 m = 1; m <= 36; ++m)
        for (u64 n = 1; m * n <= 144; ++n)
            REQUIRE(s_rank2(m, n) == oracle_subgroup_count(m, n));
}
