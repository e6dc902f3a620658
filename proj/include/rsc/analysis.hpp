#pragma once

#include <vector>

#include "rsc/mainterm.hpp"
#include "rsc/sieve.hpp"

namespace rsc::analysis {

using mainterm::MainTermPolynomial;
using sieve::SummatoryTable;

// Delta_3c(x) = D_3c(x) - x P_9(log x) at integer x (right-continuous D).
Real delta(u64 x, const SummatoryTable& table, const MainTermPolynomial& poly);

// long-double evaluator for the bulk scans (coefficients fixed once)
struct MainEvalLd {
    long double a[10];
    explicit MainEvalLd(const MainTermPolynomial& poly);
    long double main(long double x) const; // x * P_9(log x)
};

long double u128_to_ld(u128 v);

// integral_1^T Delta^2 dx: on each unit cell [n, n+1) the summatory side is
// the constant D(n); the cell integral uses fixed-order Gauss-Legendre.
// Cells are processed in fixed-size chunks, partial sums reduced in chunk
// order, so the value is identical for any thread count.
long double mean_square(u64 T, const SummatoryTable& table, const MainTermPolynomial& poly,
                        int quad_order = 8, int threads = 0);

struct FitResult {
    double alpha;
    double r2;
    double intercept;
};

// least-squares slope of log M against log T
FitResult fit_exponent(const std::vector<std::pair<double, double>>& tm_points);

struct OctaveMax {
    int k;              // octave [2^k, 2^{k+1})
    long double max_abs; // sup |Delta| over the octave (both cell endpoints)
};

struct SamplePoint {
    u64 x;
    u128 d;
    Real main;
    Real delta;
};

struct MeanSquarePoint {
    u64 T;
    long double m;
    double alpha_partial; // local slope vs previous point (NaN for first)
};

struct ErrorProfile {
    std::vector<SamplePoint> samples;     // at checkpoints
    std::vector<OctaveMax> dyadic_max;    // per-octave sup |Delta|
    std::vector<MeanSquarePoint> meansq;  // (T, M(T)) on the dyadic grid
    FitResult fit{0, 0, 0};
    double max_rel_error = 0; // max |Delta|/D over samples with x >= 100
};

// Full diagnostic sweep: samples at table checkpoints, octave maxima,
// mean-square values at dyadic T in [2^14, min(2^23, x_max)] (clipped), fit.
ErrorProfile error_profile(const SummatoryTable& table, const MainTermPolynomial& poly,
                           int threads = 0);

// Gauss-Legendre nodes/weights on [0,1] (computed once in extended precision).
void gauss_legendre_01(int order, std::vector<long double>& nodes, std::vector<long double>& weights);

} // namespace rsc::analysis
