#include "rsc/analysis.hpp"

#include <cmath>
#include <limits>
#include <omp.h>

#include "rsc/error.hpp"

namespace rsc::analysis {

Real delta(u64 x, const SummatoryTable& table, const MainTermPolynomial& poly) {
    if (x < 1 || x > table.x_max()) throw input_error("delta: x outside table range");
    u128 d = table.d(x);
    Real dr = Real(static_cast<u64>(d >> 64)) * pow(Real(2), 64) + Real(static_cast<u64>(d));
    return dr - mainterm::eval_main(poly, Real(x));
}

MainEvalLd::MainEvalLd(const MainTermPolynomial& poly) {
    for (int r = 0; r <= 9; ++r) a[r] = poly.A[static_cast<std::size_t>(r)].convert_to<long double>();
}

long double MainEvalLd::main(long double x) const {
    long double l = logl(x);
    long double v = 0;
    for (int r = 9; r >= 0; --r) v = v * l + a[r];
    return x * v;
}

long double u128_to_ld(u128 v) {
    return ldexpl(static_cast<long double>(static_cast<u64>(v >> 64)), 64) +
           static_cast<long double>(static_cast<u64>(v));
}

void gauss_legendre_01(int order, std::vector<long double>& nodes, std::vector<long double>& weights) {
    if (order < 1 || order > 64) throw input_error("gauss_legendre_01: order out of [1, 64]");
    PrecisionScope scope(45);
    nodes.resize(static_cast<std::size_t>(order));
    weights.resize(static_cast<std::size_t>(order));
    const Real pi = acos(Real(-1));
    for (int i = 1; i <= order; ++i) {
        Real x = cos(pi * (Real(i) - Real(1) / 4) / (Real(order) + Real(1) / 2));
        Real dp = 0;
        for (int it = 0; it < 100; ++it) {
            // Legendre recurrence for P_n(x) and P'_n(x)
            Real p0 = 1, p1 = x;
            for (int n = 2; n <= order; ++n) {
                Real p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < pow(Real(10), -40)) break;
        }
        Real w = 2 / ((1 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i - 1)] = ((x + 1) / 2).convert_to<long double>();
        weights[static_cast<std::size_t>(i - 1)] = (w / 2).convert_to<long double>();
    }
}

namespace {

constexpr u64 kChunk = 65536; // aligned with the table's coarse prefix grid

// integral over cells [lo, hi) of (D(n) - main(x))^2, D supplied at lo-1
long double cells_integral(const SummatoryTable& table, const MainEvalLd& me, u64 lo, u64 hi,
                           u128 d_before, const std::vector<long double>& nodes,
                           const std::vector<long double>& weights) {
    long double acc = 0;
    u128 d = d_before;
    for (u64 n = lo; n < hi; ++n) {
        d += table.f(n);
        long double dn = u128_to_ld(d);
        long double cell = 0;
        for (std::size_t q = 0; q < nodes.size(); ++q) {
            long double diff = dn - me.main(static_cast<long double>(n) + nodes[q]);
            cell += weights[q] * diff * diff;
        }
        acc += cell;
    }
    return acc;
}

} // namespace

long double mean_square(u64 T, const SummatoryTable& table, const MainTermPolynomial& poly,
                        int quad_order, int threads) {
    if (T < 1 || T > table.x_max()) throw input_error("mean_square: T outside table range");
    if (T == 1) return 0;
    std::vector<long double> nodes, weights;
    gauss_legendre_01(quad_order, nodes, weights);
    MainEvalLd me(poly);

    // cells n = 1 .. T-1, chunked on the coarse grid so each chunk starts
    // from an O(1) exact prefix value
    u64 ncells = T - 1;
    u64 nchunks = (ncells + kChunk - 1) / kChunk;
    std::vector<long double> partial(nchunks, 0);
    if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 1)
    for (u64 c = 0; c < nchunks; ++c) {
        u64 lo = c * kChunk + 1;
        u64 hi = std::min<u64>(T, (c + 1) * kChunk + 1);
        u128 d_before = (lo == 1) ? u128(0) : table.d(lo - 1);
        partial[c] = cells_integral(table, me, lo, hi, d_before, nodes, weights);
    }
    long double total = 0;
    for (u64 c = 0; c < nchunks; ++c) total += partial[c];
    return total;
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& tm_points) {
    if (tm_points.size() < 6) throw input_error("fit_exponent: need at least 6 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    const double n = static_cast<double>(tm_points.size());
    for (auto [t, m] : tm_points) {
        if (!(m > 0) || !(t > 0)) throw input_error("fit_exponent: nonpositive input point");
        double x = std::log(t), y = std::log(m);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0) throw input_error("fit_exponent: degenerate abscissae");
    FitResult r{};
    r.alpha = (n * sxy - sx * sy) / denom;
    r.intercept = (sy - r.alpha * sx) / n;
    double ss_res = syy - sy * sy / n - r.alpha * (sxy - sx * sy / n);
    double ss_tot = syy - sy * sy / n;
    r.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return r;
}

ErrorProfile error_profile(const SummatoryTable& table, const MainTermPolynomial& poly, int threads) {
    ErrorProfile ep;
    MainEvalLd me(poly);
    const u64 xmax = table.x_max();

    for (const auto& cp : table.checkpoints()) {
        SamplePoint sp;
        sp.x = cp.x;
        sp.d = cp.d;
        sp.main = mainterm::eval_main(poly, Real(cp.x));
        Real dr = Real(static_cast<u64>(cp.d >> 64)) * pow(Real(2), 64) + Real(static_cast<u64>(cp.d));
        sp.delta = dr - sp.main;
        ep.samples.push_back(sp);
        if (cp.x >= 100) {
            double rel = abs(sp.delta / dr).convert_to<double>();
            ep.max_rel_error = std::max(ep.max_rel_error, rel);
        }
    }

    // octave sup of |Delta| in one streaming pass; each cell [n, n+1)
    // contributes both endpoints of the step error D(n) - main(x)
    {
        int kmax_oct = 0;
        while ((u64(1) << (kmax_oct + 2)) - 1 <= xmax) ++kmax_oct; // full octaves only
        u128 d = 0;
        for (int k = 0; k <= kmax_oct; ++k) ep.dyadic_max.push_back({k, 0.0L});
        u64 upper = std::min(xmax, (u64(1) << (kmax_oct + 1)) - 1);
        int k = 0;
        for (u64 n = 1; n <= upper; ++n) {
            d += table.f(n);
            while (n >= (u64(1) << (k + 1))) ++k;
            long double dn = u128_to_ld(d);
            long double e1 = dn - me.main(static_cast<long double>(n));
            long double e2 = dn - me.main(static_cast<long double>(n) + 1.0L);
            long double m = std::max(fabsl(e1), fabsl(e2));
            auto& slot = ep.dyadic_max[static_cast<std::size_t>(k)];
            if (m > slot.max_abs) slot.max_abs = m;
        }
    }

    // mean-square on the dyadic grid, integrated octave by octave
    {
        std::vector<u64> ts;
        for (int k = 14; k <= 23; ++k)
            if ((u64(1) << k) <= xmax) ts.push_back(u64(1) << k);
        if (!ts.empty()) {
            std::vector<long double> nodes, weights;
            gauss_legendre_01(8, nodes, weights);
            long double acc = 0;
            u64 done = 1; // integral over [1, done) accumulated
            double prev_lt = 0, prev_lm = 0;
            for (u64 T : ts) {
                // extend integral from done to T in coarse-aligned chunks
                u64 ncells = T - done;
                u64 nchunks = (ncells + kChunk - 1) / kChunk;
                std::vector<long double> partial(nchunks, 0);
                if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic, 1)
                for (u64 c = 0; c < nchunks; ++c) {
                    u64 lo = done + c * kChunk;
                    u64 hi = std::min<u64>(T, done + (c + 1) * kChunk);
                    u128 d_before = (lo == 1) ? u128(0) : table.d(lo - 1);
                    partial[c] = cells_integral(table, me, lo, hi, d_before, nodes, weights);
                }
                for (u64 c = 0; c < nchunks; ++c) acc += partial[c];
                done = T;
                MeanSquarePoint mp;
                mp.T = T;
                mp.m = acc;
                double lt = std::log(static_cast<double>(T));
                double lm = static_cast<double>(logl(acc));
                mp.alpha_partial = (prev_lt == 0) ? std::numeric_limits<double>::quiet_NaN()
                                                  : (lm - prev_lm) / (lt - prev_lt);
                prev_lt = lt;
                prev_lm = lm;
                ep.meansq.push_back(mp);
            }
            if (ep.meansq.size() >= 6) {
                std::vector<std::pair<double, double>> pts;
                for (const auto& mp : ep.meansq)
                    pts.emplace_back(static_cast<double>(mp.T), static_cast<double>(mp.m));
                ep.fit = fit_exponent(pts);
            }
        }
    }
    return ep;
}

} // namespace rsc::analysis
