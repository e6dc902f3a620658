#pragma once

#include <string>
#include <vector>

#include "rsc/arith.hpp"
#include "rsc/laurent.hpp"
#include "rsc/real.hpp"

namespace rsc::singular {

// Polynomial in the symbolic prime p, exact integer coefficients.
struct PPoly {
    std::vector<BigInt> c; // c[d] = coefficient of p^d

    PPoly() = default;
    explicit PPoly(BigInt constant) : c{std::move(constant)} { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();

    PPoly& operator+=(const PPoly& o);
    PPoly& operator-=(const PPoly& o);
    friend PPoly operator*(const PPoly& a, const PPoly& b);

    BigInt eval(u64 p) const;
    Real eval_real(const Real& p) const;
    std::string str() const; // human-readable, for reports
};

// Euler local factor of T as a truncated series in X = p^{-s}:
// coeff[m] is t(p^m) as an exact polynomial in p.
struct LocalFactorSeries {
    int truncation = 0; // E
    std::vector<PPoly> coeff;
};

// Builds the generic local factor
//   [sum over a+b+c <= E of c(p^a, p^b, p^c) X^{a+b+c}] (1-X)^6 (1-pX^2)^3 (1-p^2 X^3)
// truncated at X-degree E.  Checks coeff[0] == 1 and coeff[1] == 0.
LocalFactorSeries generic_local_factor(int E);

// t(p^j), evaluated at a concrete prime.  j beyond truncation -> input_error.
i64 t_coefficient(const LocalFactorSeries& lfs, u64 p, int j);

struct TSeries {
    std::vector<Real> c;     // c[k] = T^{(k)}(1)/k!, k = 0..9
    std::string method;      // "direct" or "accelerated"
    u64 prime_cutoff = 0;    // direct only
    int truncation = 0;      // E
    Real tail_bound;
    unsigned precision_digits = 0;
};

// Taylor series of T at s=1 by the plain Euler product over p <= prime_cutoff,
// each local factor expanded via X^m -> p^{-m} e^{-m u log p}.
TSeries t_series_direct(u64 prime_cutoff, int E, unsigned digits);

// Same target through prime-zeta acceleration: the exact power-series log of
// the local factor turns log T(1+u) into a combination of prime-zeta values
// P(m-j+mu), so no prime cutoff is involved.
TSeries t_series_accelerated(int E, unsigned digits);

// T(s) at a real point s > 1/2 (Euler product over p <= prime_cutoff);
// supports the finite-difference derivative oracle.
Real t_value_at(const Real& s, u64 prime_cutoff, int E);

// Local factor value T_p(1) = sum_j t_j(p) p^{-j}; positivity is checked by
// callers per the truncation-adequacy invariant.
Real local_factor_at_one(const LocalFactorSeries& lfs, u64 p);

} // namespace rsc::singular
