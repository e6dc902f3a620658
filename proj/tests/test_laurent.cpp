#include "doctest.h"

#include "rsc/arith.hpp"
#include "rsc/laurent.hpp"

using namespace rsc;

namespace {

Real maxdiff(const LaurentSeries& a, const LaurentSeries& b) {
    int lo = std::min(a.lo(), b.lo());
    int hi = std::min(a.trunc(), b.trunc());
    Real m = 0;
    for (int k = lo; k <= hi; ++k) m = std::max(m, Real(abs(a.coeff(k) - b.coeff(k))));
    return m;
}

// deterministic pseudo-random coefficients in [-1, 1]
LaurentSeries random_series(u64 seed, int lo, int n) {
    u64 s = seed;
    auto next = [&] {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    std::vector<Real> c;
    for (int i = 0; i < n; ++i) c.push_back(Real(static_cast<i64>(next() % 2000001)) / 1000000 - 1);
    return LaurentSeries(lo, std::move(c));
}

} // namespace

TEST_CASE("laurent basics") {
    PrecisionScope scope(50);
    LaurentSeries a(-1, {Real(1), Real(2), Real(3)}); // 1/u + 2 + 3u
    CHECK(a.lo() == -1);
    CHECK(a.trunc() == 1);
    CHECK(a.pole_order() == 1);
    CHECK(a.coeff(-1) == 1);
    CHECK(a.coeff(0) == 2);
    CHECK(a.coeff(-5) == 0);
    CHECK_THROWS_AS(a.coeff(2), input_error);
}

TEST_CASE("laurent multiply: pole orders add") {
    PrecisionScope scope(50);
    // (1/u + 1)(1/u - 1) = 1/u^2 - 1
    LaurentSeries a(-1, {Real(1), Real(1), Real(0), Real(0)});
    LaurentSeries b(-1, {Real(1), Real(-1), Real(0), Real(0)});
    LaurentSeries p = a * b;
    CHECK(p.lo() == -2);
    CHECK(p.coeff(-2) == 1);
    CHECK(p.coeff(-1) == 0);
    CHECK(p.coeff(0) == -1);
    CHECK(p.pole_order() == 2);
}

TEST_CASE("laurent truncation bookkeeping is conservative") {
    PrecisionScope scope(50);
    LaurentSeries a(-1, std::vector<Real>(18, Real(1))); // known to u^16
    LaurentSeries p = a * a;
    CHECK(p.lo() == -2);
    CHECK(p.trunc() == 15); // min(16 + (-1), 16 + (-1))
}

TEST_CASE("associativity of products") {
    PrecisionScope scope(50);
    LaurentSeries a = random_series(11, -2, 16);
    LaurentSeries b = random_series(22, -1, 16);
    LaurentSeries c = random_series(33, 0, 16);
    Real d = maxdiff((a * b) * c, a * (b * c));
    CHECK(d < pow(Real(10), -44));
}

TEST_CASE("inverse: A * inv(A) = 1 + O(u^{N+1})") {
    PrecisionScope scope(50);
    LaurentSeries a = random_series(7, -3, 20);
    REQUIRE(a.coeff(-3) != 0);
    LaurentSeries prod = a * a.inverse();
    CHECK(prod.lo() <= 0);
    CHECK(abs(prod.coeff(0) - 1) < pow(Real(10), -44));
    for (int k = prod.lo(); k <= prod.trunc(); ++k)
        if (k != 0) CHECK(abs(prod.coeff(k)) < pow(Real(10), -44));
}

TEST_CASE("inverse requires nonzero leading coefficient") {
    PrecisionScope scope(50);
    LaurentSeries z(0, {Real(0), Real(1)});
    CHECK_THROWS_AS(z.inverse(), domain_error);
}

TEST_CASE("exp and log round-trip") {
    PrecisionScope scope(50);
    LaurentSeries a = random_series(42, 0, 12);
    LaurentSeries e = series_exp(a);
    LaurentSeries back = series_log(e);
    CHECK(maxdiff(a, back) < pow(Real(10), -43));
    LaurentSeries pole(-1, {Real(1)});
    CHECK_THROWS_AS(series_exp(pole), domain_error);
    LaurentSeries neg(0, {Real(-2), Real(1)});
    CHECK_THROWS_AS(series_log(neg), domain_error);
}

TEST_CASE("series_scale substitutes u -> k u") {
    PrecisionScope scope(50);
    LaurentSeries a(-1, {Real(1), Real(1), Real(1)}); // 1/u + 1 + u
    LaurentSeries s = series_scale(a, Real(2));
    CHECK(abs(s.coeff(-1) - Real(1) / 2) < pow(Real(10), -45));
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 2);
}
