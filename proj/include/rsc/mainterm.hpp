#pragma once

#include <array>
#include <vector>

#include "rsc/laurent.hpp"
#include "rsc/real.hpp"

namespace rsc::mainterm {

struct StieltjesTable {
    std::vector<Real> gamma; // gamma_0 .. gamma_K
    unsigned precision_digits = 0;
};

// gamma_0..gamma_kmax by Euler-Maclaurin (kmax >= 12 for residue work).
// gamma_0 is validated against its first seven digits 0.5772157.
StieltjesTable stieltjes_table(int kmax, unsigned digits);
Real stieltjes(int k, unsigned digits);

// zeta(1 + a u) = 1/(a u) + sum_k (-1)^k gamma_k a^k u^k / k!, a in {1,2,3}.
LaurentSeries zeta_laurent(int a, int N, const StieltjesTable& st);

struct MainTermPolynomial {
    std::array<Real, 10> A; // P_9(u) = sum A[r] u^r
    unsigned precision_digits = 0;
    std::vector<Real> t_series_used;
};

// Residue at s=1 of zeta^6(s) zeta^3(2s-1) zeta(3s-2) T(s) x^s / s as
// x * P_9(log x): builds the pole-order-10 product series
//   G(u) = zl(1)^6 zl(2)^3 zl(3) T(1+u) / (1+u)
// and reads A_r = [u^{-1-r}] G / r!.
// t_taylor holds the Taylor coefficients T^{(k)}(1)/k!, k = 0..9.
// A zeroed Stieltjes table (toy mode for the closed-form cross-check) may be
// passed via `st_override`.
MainTermPolynomial residue_main_term(const std::vector<Real>& t_taylor, unsigned digits,
                                     const StieltjesTable* st_override = nullptr);

// x * P_9(log x), Horner form.
Real eval_main(const MainTermPolynomial& poly, const Real& x);

} // namespace rsc::mainterm
