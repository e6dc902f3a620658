#include "doctest.h"

#include "rsc/zeta.hpp"

using namespace rsc;
namespace z = rsc::zeta;

TEST_CASE("bernoulli numbers") {
    auto b = z::bernoulli(12);
    CHECK(b[0] == 1);
    CHECK(b[1] == BigRat(-1, 2));
    CHECK(b[2] == BigRat(1, 6));
    CHECK(b[3] == 0);
    CHECK(b[4] == BigRat(-1, 30));
    CHECK(b[12] == BigRat(-691, 2730));
}

TEST_CASE("zeta at even integers vs pi powers") {
    PrecisionScope scope(60);
    Real pi = acos(Real(-1));
    CHECK(abs(z::zeta_value(Real(2)) / (pi * pi / 6) - 1) < pow(Real(10), -55));
    CHECK(abs(z::zeta_value(Real(4)) / (pow(pi, 4) / 90) - 1) < pow(Real(10), -55));
    CHECK_THROWS_AS(z::zeta_value(Real(1)), domain_error);
}

TEST_CASE("zeta series matches displaced evaluation and finite differences") {
    PrecisionScope scope(60);
    auto zs = z::zeta_series(Real(2), 9);
    // series summed at u0 = 1e-3 vs direct evaluation
    Real u0("1e-3"), acc = 0, upow = 1;
    for (int k = 0; k <= 9; ++k) {
        acc += zs.coeff(k) * upow;
        upow *= u0;
    }
    CHECK(abs(acc / z::zeta_value(Real(2) + u0) - 1) < pow(Real(10), -28));
    // first derivative against a central difference
    Real h("1e-20");
    Real fd = (z::zeta_value(Real(2) + h) - z::zeta_value(Real(2) - h)) / (2 * h);
    CHECK(abs(zs.coeff(1) / fd - 1) < pow(Real(10), -15));
}

TEST_CASE("stieltjes constants") {
    PrecisionScope scope(60);
    auto g = z::stieltjes_table(16);
    // Euler's constant, seven digits
    CHECK(abs(g[0] - Real("0.5772157")) < Real("1e-7"));
    // derived anchor for gamma_1
    CHECK(abs(g[1] - Real("-0.0728158")) < Real("1e-7"));
    // two-method agreement with the limit-formula oracle
    CHECK(std::abs(z::stieltjes_limit_formula(0, 1000000) - 0.5772156649) < 1e-5);
    double g1 = g[1].convert_to<double>();
    CHECK(std::abs(z::stieltjes_limit_formula(1, 10000000) - g1) < 1e-5);
}

TEST_CASE("stieltjes values feed the zeta laurent expansion") {
    // zeta(1+u) - 1/u at u = 1e-4 vs the gamma series
    PrecisionScope scope(60);
    auto g = z::stieltjes_table(12);
    Real u("1e-4");
    Real series = 0, upow = 1, kfact = 1;
    for (int k = 0; k <= 12; ++k) {
        if (k > 0) {
            kfact *= k;
            upow *= u;
        }
        Real term = g[static_cast<std::size_t>(k)] * upow / kfact;
        series += (k % 2 == 0) ? term : -term;
    }
    Real direct = z::zeta_value(1 + u) - 1 / u;
    CHECK(abs(series / direct - 1) < pow(Real(10), -40));
}

TEST_CASE("prime zeta values") {
    PrecisionScope scope(50);
    Real tail;
    Real p2 = z::prime_zeta(Real(2), &tail);
    CHECK(tail < pow(Real(10), -48));

    // direct-sum oracle over p <= 10^7 (tail below 7e-9)
    auto primes = primes_up_to(10000000);
    Real s2 = 0, s4 = 0;
    for (u64 p : primes) {
        Real ip = Real(1) / p;
        s2 += ip * ip;
        s4 += ip * ip * ip * ip;
    }
    CHECK(abs(p2 - s2) < Real("7e-9"));
    CHECK(p2 > s2); // tail is positive
    CHECK(abs(z::prime_zeta(Real(4)) - s4) < Real("1e-22"));

    // spot values
    CHECK(abs(p2 - Real("0.4522474200410654985")) < Real("1e-18"));
    CHECK(abs(z::prime_zeta(Real(4)) - Real("0.0769931397643")) < Real("1e-12"));

    // dominant-term asymptotics: P(20) ~ 2^-20
    CHECK(abs(z::prime_zeta(Real(20)) - pow(Real(2), -20)) < Real("1e-9"));

    CHECK_THROWS_AS(z::prime_zeta(Real("1.01")), domain_error);
}

TEST_CASE("prime zeta series derivative vs central difference") {
    PrecisionScope scope(60);
    auto ps = z::prime_zeta_series(Real(2), 3);
    Real h("1e-15");
    Real fd = (z::prime_zeta(Real(2) + h) - z::prime_zeta(Real(2) - h)) / (2 * h);
    CHECK(abs(ps.coeff(0) / z::prime_zeta(Real(2)) - 1) < pow(Real(10), -50));
    CHECK(abs(ps.coeff(1) / fd - 1) < pow(Real(10), -20));
}
