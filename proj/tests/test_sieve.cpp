#include "doctest.h"

#include <numeric>
#include <sstream>

#include "rsc/sieve.hpp"
#include "rsc/singular.hpp"

using namespace rsc;
using namespace rsc::sieve;

TEST_CASE("f at prime powers") {
    CHECK(f_prime_power(2, 0) == 1);
    CHECK(f_prime_power(2, 1) == 6);
    CHECK(f_prime_power(97, 1) == 6);
    CHECK(f_prime_power(2, 2) == 21); // 3p + 15 at p = 2
    CHECK(f_prime_power(3, 2) == 24);
    CHECK(f_prime_power(5, 2) == 30);
    CHECK(f_prime_power(2, 3) == 56); // p^2 + 13p + 26 at p = 2
}

TEST_CASE("sieve examples") {
    auto t1 = sieve_f(1);
    CHECK(t1.d(1) == 1);
    auto t4 = sieve_f(4);
    CHECK(t4.f(2) == 6);
    CHECK(t4.d(2) == 7);
    CHECK(t4.f(4) == 21);
    CHECK(t4.d(4) == 34);
    CHECK_THROWS_AS(sieve_f(0), capacity_error);
    CHECK_THROWS_AS(sieve_f(kXMaxCapacity + 1), capacity_error);
}

TEST_CASE("direct_f examples and agreement with the sieve") {
    CHECK(direct_f(1) == 1);
    CHECK(direct_f(6) == 36); // f(2) f(3)
    CHECK(direct_f(8) == f_prime_power(2, 3));
    CHECK_THROWS_AS(direct_f(2000000), capacity_error);
    auto t = sieve_f(600);
    for (u64 k = 1; k <= 600; ++k) REQUIRE(t.f(k) == direct_f(k));
}

TEST_CASE("f is multiplicative and positive") {
    auto t = sieve_f(100000);
    u64 state = 99991;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    int done = 0;
    while (done < 1000) {
        u64 a = next() % 10000 + 1, b = next() % 10 + 1;
        if (a * b > 100000 || std::gcd(a, b) != 1) continue;
        REQUIRE(t.f(a * b) == t.f(a) * t.f(b));
        ++done;
    }
    for (u64 k = 1; k <= 100000; ++k) REQUIRE(t.f(k) >= 1);
}

TEST_CASE("prefix sums are nondecreasing and match a manual scan") {
    auto t = sieve_f(70000);
    u128 acc = 0;
    for (u64 k = 1; k <= 70000; ++k) {
        acc += t.f(k);
        if (k % 9973 == 0) REQUIRE(t.d(k) == acc);
    }
    CHECK(t.d(70000) == acc);
}

TEST_CASE("sieve is identical across thread counts") {
    auto a = sieve_f(300000, 1);
    auto b = sieve_f(300000, 4);
    for (u64 k = 1; k <= 300000; k += 7) REQUIRE(a.f(k) == b.f(k));
    REQUIRE(a.d(300000) == b.d(300000));
}

TEST_CASE("checkpoints: dyadic, decades, user grid, binary round-trip") {
    auto t = sieve_f(1000, 0, {123, 777});
    std::vector<u64> xs;
    for (const auto& cp : t.checkpoints()) xs.push_back(cp.x);
    for (u64 v : {1ull, 2ull, 4ull, 512ull, 10ull, 100ull, 1000ull, 123ull, 777ull})
        CHECK(std::find(xs.begin(), xs.end(), v) != xs.end());
    for (const auto& cp : t.checkpoints()) REQUIRE(cp.d == t.d(cp.x));

    std::stringstream ss;
    write_checkpoints(ss, t);
    auto back = read_checkpoints(ss);
    REQUIRE(back.size() == t.checkpoints().size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].x == t.checkpoints()[i].x);
        CHECK(back[i].d == t.checkpoints()[i].d);
    }
    CHECK_THROWS_AS(sieve_f(100, 0, {101}), input_error);
}

TEST_CASE("csv export") {
    auto t = sieve_f(4);
    std::stringstream ss;
    write_csv(ss, t);
    CHECK(ss.str() == "k,f,D\n1,1,1\n2,6,7\n3,6,13\n4,21,34\n");
}

TEST_CASE("D(x)/x increases along dyadic checkpoints") {
    auto t = sieve_f(1 << 17);
    long double prev = 0;
    for (u64 x = 64; x <= (u64(1) << 17); x *= 2) {
        u128 d = t.d(x);
        long double ratio = (static_cast<long double>(static_cast<u64>(d >> 64)) * 18446744073709551616.0L +
                             static_cast<u64>(d)) /
                            x;
        REQUIRE(ratio > prev);
        prev = ratio;
    }
}

TEST_CASE("dirichlet identity with the generic local factor") {
    auto lfs = singular::generic_local_factor(16);
    auto t_pp = [&](u64 p, int j) { return singular::t_coefficient(lfs, p, j); };
    CHECK(dirichlet_identity_check(1, t_pp));
    CHECK(dirichlet_identity_check(2000, t_pp));
    // breaking t(p) = 0 must break the identity
    auto bad = [&](u64 p, int j) { return j == 1 ? i64(1) : singular::t_coefficient(lfs, p, j); };
    CHECK(!dirichlet_identity_check(100, bad));
}
