#include "doctest.h"

#include "rsc/singular.hpp"
#include "rsc/sieve.hpp"

using namespace rsc;
using namespace rsc::singular;

TEST_CASE("generic local factor: forced low-degree structure") {
    auto lfs = generic_local_factor(16);
    CHECK(lfs.coeff[0].degree() == 0);
    CHECK(lfs.coeff[0].c[0] == 1);
    CHECK(lfs.coeff[1].is_zero());         // t(p) = 0 identically
    CHECK(lfs.coeff[2].degree() == 0);     // t(p^2) = -6
    CHECK(lfs.coeff[2].c[0] == -6);
    CHECK_THROWS_AS(generic_local_factor(3), input_error);
    CHECK_THROWS_AS(generic_local_factor(25), input_error);
}

TEST_CASE("local factor is a polynomial of degree 12 in X") {
    auto lfs = generic_local_factor(24);
    for (int j = 13; j <= 24; ++j) CHECK(lfs.coeff[static_cast<std::size_t>(j)].is_zero());
    CHECK(!lfs.coeff[12].is_zero());
}

TEST_CASE("product of local factor and zeta factors reproduces f(p^e)") {
    // f(p^e) = sum over a+2b+3c+j = e of C(a+5,5) C(b+2,2) p^b p^{2c} t_j(p)
    auto lfs = generic_local_factor(16);
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 101ull}) {
        for (u32 e = 0; e <= 10; ++e) {
            i128 total = 0;
            for (u32 a = 0; a <= e; ++a)
                for (u32 b = 0; a + 2 * b <= e; ++b)
                    for (u32 c = 0; a + 2 * b + 3 * c <= e; ++c) {
                        u32 j = e - a - 2 * b - 3 * c;
                        if (static_cast<int>(j) > lfs.truncation) continue;
                        i128 w = static_cast<i128>(binom(a + 5, 5)) * static_cast<i128>(binom(b + 2, 2));
                        for (u32 i = 0; i < b; ++i) w *= p;
                        for (u32 i = 0; i < 2 * c; ++i) w *= p;
                        total += w * t_coefficient(lfs, p, static_cast<int>(j));
                    }
            REQUIRE(total == static_cast<i128>(sieve::f_prime_power(p, e)));
        }
    }
}

TEST_CASE("t_coefficient examples") {
    auto lfs = generic_local_factor(16);
    for (u64 p : {2ull, 3ull, 5ull}) {
        CHECK(t_coefficient(lfs, p, 0) == 1);
        CHECK(t_coefficient(lfs, p, 1) == 0);
    }
    CHECK(t_coefficient(lfs, 2, 2) == -6); // t(4) = -6
    CHECK_THROWS_AS(t_coefficient(lfs, 2, 17), input_error);
    CHECK_THROWS_AS(t_coefficient(lfs, 4, 2), domain_error);
}

TEST_CASE("local factor values at s=1 stay in (0,1]") {
    PrecisionScope scope(40);
    auto lfs = generic_local_factor(16);
    for (u64 p : primes_up_to(10000)) {
        Real v = local_factor_at_one(lfs, p);
        REQUIRE(v > 0);
        REQUIRE(v <= 1);
    }
}

TEST_CASE("direct Euler product: dyadic-cutoff drift within the tail bound") {
    auto a = t_series_direct(20000, 16, 40);
    auto b = t_series_direct(40000, 16, 40);
    CHECK(abs(b.c[0] - a.c[0]) <= a.tail_bound);
    CHECK(b.c[0] < a.c[0]); // local factors are in (0,1): the product decreases
    CHECK(a.tail_bound > 0);
    CHECK_THROWS_AS(t_series_direct(100, 16, 40), input_error);
    CHECK_THROWS_AS(t_series_direct(20000, 8, 40), input_error);
}

TEST_CASE("cross-method agreement within certified tails") {
    unsigned digits = 50;
    auto acc = t_series_accelerated(16, digits);
    auto dir = t_series_direct(50000, 16, digits);
    CHECK(acc.c[0] > 0);
    CHECK(abs(dir.c[0] - acc.c[0]) <= dir.tail_bound + acc.tail_bound);
    // c1 error carries a log p weight relative to c0's
    CHECK(abs(dir.c[1] - acc.c[1]) <= (dir.tail_bound + acc.tail_bound) * 2 * log(Real(50000)));
    CHECK(acc.method == "accelerated");
    CHECK(dir.method == "direct");
    CHECK(dir.prime_cutoff == 50000);
}

TEST_CASE("accelerated series is stable in E") {
    auto a = t_series_accelerated(16, 40);
    auto b = t_series_accelerated(20, 40);
    CHECK(abs(a.c[0] - b.c[0]) < pow(Real(10), -12));
    CHECK(abs(a.c[1] - b.c[1]) < pow(Real(10), -10));
}

TEST_CASE("exp(log(local factor)) reproduces the coefficients") {
    PrecisionScope scope(50);
    auto lfs = generic_local_factor(16);
    u64 p = 13;
    std::vector<Real> x(17, Real(0));
    for (int m = 0; m <= 16; ++m) x[static_cast<std::size_t>(m)] = Real(t_coefficient(lfs, p, m));
    LaurentSeries series(0, std::move(x));
    LaurentSeries round = series_exp(series_log(series));
    for (int m = 0; m <= 16; ++m)
        REQUIRE(abs(round.coeff(m) - Real(t_coefficient(lfs, p, m))) < pow(Real(10), -40));
}

TEST_CASE("t_value_at supports the finite-difference oracle") {
    PrecisionScope scope(40);
    auto acc = t_series_accelerated(16, 40);
    Real h("1e-4");
    Real fd = (t_value_at(1 + h, 50000, 16) - t_value_at(1 - h, 50000, 16)) / (2 * h);
    CHECK(abs(fd / acc.c[1] - 1) < Real("1e-3"));
}
