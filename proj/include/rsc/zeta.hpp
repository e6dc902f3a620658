#pragma once

#include <vector>

#include "rsc/arith.hpp"
#include "rsc/laurent.hpp"
#include "rsc/real.hpp"

namespace rsc::zeta {

// B_0, B_1, B_2, ..., B_max as exact rationals (B_1 = -1/2).
std::vector<BigRat> bernoulli(int max_index);

// zeta(s0 + u) as a power series in u to degree deg, for real s0 > 1.
// Euler-Maclaurin with the summation cutoff and correction depth chosen so
// the rigorous remainder bound stays below the working-precision target.
LaurentSeries zeta_series(const Real& s0, int deg);

Real zeta_value(const Real& s0);

// Stieltjes constants gamma_0 .. gamma_kmax at the current working precision.
// Euler-Maclaurin applied to (log n)^k / n with an explicit remainder bound;
// throws precision_error if the bound cannot be pushed below target.
std::vector<Real> stieltjes_table(int kmax);

// Partial-sum limit formula sum_{n<=x} (log n)^k / n - (log x)^{k+1}/(k+1),
// the coarse-precision cross-check oracle (converges like (log x)^k / x).
double stieltjes_limit_formula(int k, u64 x);

// P(w) = sum over primes p of p^{-w} via  sum_k mu(k)/k log zeta(k w).
// Requires w >= 1.05.  If tail_out is non-null it receives the bound on the
// dropped Moebius tail.
Real prime_zeta(const Real& w, Real* tail_out = nullptr);

// P(w0 + u) as a power series in u to degree deg.
LaurentSeries prime_zeta_series(const Real& w0, int deg, Real* tail_out = nullptr);

} // namespace rsc::zeta
