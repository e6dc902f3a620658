#include "rsc/zeta.hpp"

#include <cmath>

#include "rsc/arith.hpp"
#include "rsc/error.hpp"

namespace rsc::zeta {

std::vector<BigRat> bernoulli(int max_index) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0  for m >= 1
    std::vector<BigRat> b(static_cast<std::size_t>(max_index) + 1);
    b[0] = 1;
    for (int m = 1; m <= max_index; ++m) {
        BigRat s = 0;
        BigInt binc = 1; // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            s += BigRat(binc) * b[static_cast<std::size_t>(k)];
            binc = binc * (m + 1 - k) / (k + 1);
        }
        b[static_cast<std::size_t>(m)] = -s / BigRat(binc); // binc = C(m+1, m) = m+1
    }
    return b;
}

namespace {

Real target_eps() {
    // one order below the working precision
    return pow(Real(10), -static_cast<int>(Real::default_precision()) - 2);
}

// e^{a u} as a power series to degree deg
LaurentSeries exp_linear(const Real& a, int deg) {
    std::vector<Real> c(static_cast<std::size_t>(deg) + 1);
    c[0] = 1;
    for (int r = 1; r <= deg; ++r) c[static_cast<std::size_t>(r)] = c[static_cast<std::size_t>(r - 1)] * a / r;
    return LaurentSeries(0, std::move(c));
}

Real max_abs_coeff(const LaurentSeries& s) {
    Real m = 0;
    for (int k = s.lo(); k <= s.trunc(); ++k) m = std::max(m, Real(abs(s.coeff(k))));
    return m;
}

} // namespace

LaurentSeries zeta_series(const Real& s0, int deg) {
    if (s0 <= 1) throw domain_error("zeta_series: s0 must exceed 1");
    const Real eps = target_eps();
    // Cutoff large enough that the asymptotic correction terms bottom out
    // below eps well before they start growing again.
    const unsigned digits = Real::default_precision();
    const u64 N = std::max<u64>(24, digits);

    LaurentSeries acc = LaurentSeries::constant(Real(0), deg);
    Real lnn;
    for (u64 n = 1; n < N; ++n) {
        lnn = log(Real(n));
        LaurentSeries term = exp_linear(-lnn, deg); // n^{-u}
        acc += term * LaurentSeries::constant(pow(Real(n), -s0), deg);
    }
    const Real lnN = log(Real(N));
    const Real Npow = pow(Real(N), -s0); // N^{-s0}
    LaurentSeries NtoMinusS = exp_linear(-lnN, deg) * LaurentSeries::constant(Npow, deg);

    // N^{1-s}/(s-1): (s-1) = (s0-1) + u
    {
        std::vector<Real> lin(static_cast<std::size_t>(deg) + 1, Real(0));
        lin[0] = s0 - 1;
        if (deg >= 1) lin[1] = 1;
        acc += NtoMinusS * LaurentSeries::constant(Real(N), deg) * LaurentSeries(0, std::move(lin)).inverse();
    }
    acc += NtoMinusS * LaurentSeries::constant(Real(1) / 2, deg);

    // correction terms: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
    static const int kMaxJ = 240;
    static const std::vector<BigRat> bern = bernoulli(2 * kMaxJ);
    auto linear = [&](const Real& c0) {
        std::vector<Real> lin(static_cast<std::size_t>(deg) + 1, Real(0));
        lin[0] = c0;
        if (deg >= 1) lin[1] = 1;
        return LaurentSeries(0, std::move(lin));
    };
    LaurentSeries Nu = exp_linear(-lnN, deg); // N^{-u}
    LaurentSeries poch = linear(s0);          // j = 1: the single factor s
    Real fact = 2;                            // (2j)!
    Real Nfall = Npow / Real(N);              // N^{-s0-2j+1}
    bool converged = false;
    Real prev_mag = 0;
    for (int j = 1; j <= kMaxJ; ++j) {
        Real bj = Real(boost::multiprecision::numerator(bern[static_cast<std::size_t>(2 * j)])) /
                  Real(boost::multiprecision::denominator(bern[static_cast<std::size_t>(2 * j)]));
        LaurentSeries term = poch * Nu * LaurentSeries::constant(bj / fact * Nfall, deg);
        acc += term;
        Real mag = max_abs_coeff(term);
        if (mag < eps) { converged = true; break; }
        if (j > 4 && prev_mag != 0 && mag > prev_mag)
            throw precision_error("zeta_series: asymptotic tail diverging before target accuracy");
        prev_mag = mag;
        poch *= linear(s0 + (2 * j - 1));
        poch *= linear(s0 + 2 * j);
        fact *= (2 * j + 1) * (2 * j + 2);
        Nfall /= Real(N) * Real(N);
    }
    if (!converged) throw precision_error("zeta_series: correction terms did not converge");
    return acc;
}

Real zeta_value(const Real& s0) { return zeta_series(s0, 0).coeff(0); }

std::vector<Real> stieltjes_table(int kmax) {
    if (kmax < 0) throw input_error("stieltjes_table: kmax < 0");
    const unsigned digits = Real::default_precision();
    // (log N)^{k+1}/(k+1) reaches ~10^{16} at N ~ 10^4, k ~ 20: add guard digits
    // to absorb the cancellation between the partial sum and its main term.
    PrecisionScope guard(digits + 48);
    const Real eps = pow(Real(10), -static_cast<int>(digits) - 12);

    const u64 N = 8192;
    const int J = 48;
    auto bern = bernoulli(2 * J + 2);

    // partial sums  sum_{n<=N} (log n)^k / n  for all k at once
    std::vector<Real> psum(static_cast<std::size_t>(kmax) + 1, Real(0));
    for (u64 n = 1; n <= N; ++n) {
        Real ln = log(Real(n));
        Real inv = Real(1) / n;
        Real pw = inv;
        for (int k = 0; k <= kmax; ++k) {
            psum[static_cast<std::size_t>(k)] += pw;
            pw *= ln;
        }
    }

    const Real lnN = log(Real(N));
    std::vector<Real> out(static_cast<std::size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        Real g = psum[static_cast<std::size_t>(k)];
        g -= pow(lnN, k + 1) / (k + 1);
        g -= pow(lnN, k) / (2 * N);

        // derivative polynomials: f^{(r)}(x) = P_r(log x) / x^{r+1},
        // P_0 = l^k,  P_{r+1} = P_r' - (r+1) P_r   (integer coefficients)
        std::vector<BigInt> P(static_cast<std::size_t>(k) + 1, BigInt(0));
        P[static_cast<std::size_t>(k)] = 1;
        auto eval_P = [&](const std::vector<BigInt>& poly) {
            Real v = 0;
            for (std::size_t i = poly.size(); i-- > 0;) v = v * lnN + Real(poly[i]);
            return v;
        };
        auto advance = [&](std::vector<BigInt>& poly, int r) {
            // P <- P' - (r+1) P
            std::vector<BigInt> next(poly.size(), BigInt(0));
            for (std::size_t i = 0; i + 1 < poly.size(); ++i) next[i] = poly[i + 1] * BigInt(i + 1);
            for (std::size_t i = 0; i < poly.size(); ++i) next[i] -= BigInt(r + 1) * poly[i];
            poly = std::move(next);
        };

        Real fact = 2; // (2j)! for j=1
        std::vector<BigInt> poly = P;
        advance(poly, 0); // P_1
        Real npow = Real(N) * Real(N); // N^{r+1} for r=1
        bool ok = false;
        int jstop = J;
        for (int j = 1; j <= J; ++j) {
            int r = 2 * j - 1;
            Real bj = Real(boost::multiprecision::numerator(bern[static_cast<std::size_t>(2 * j)])) /
                      Real(boost::multiprecision::denominator(bern[static_cast<std::size_t>(2 * j)]));
            Real term = bj / fact * eval_P(poly) / npow;
            g -= term;
            if (abs(term) < eps * eps) { ok = true; jstop = j; break; }
            if (j < J) {
                advance(poly, r);     // P_{r+1}
                advance(poly, r + 1); // P_{r+2}
                fact *= (2 * j + 1) * (2 * j + 2);
                npow *= Real(N) * Real(N);
            }
        }
        (void)ok;
        // remainder bound: |B_{2J}|/(2J)! * (2 + eps) * integral_N^inf |f^{(2J)}|
        {
            int r = 2 * jstop;
            std::vector<BigInt> poly2 = P;
            for (int i = 0; i < r; ++i) advance(poly2, i);
            // integral_N^inf (log t)^i / t^{r+1} dt
            //   = N^{-r} * sum_{q=0}^{i} i!/(i-q)! (log N)^{i-q} / r^{q+1}
            Real bound = 0;
            for (std::size_t i = 0; i < poly2.size(); ++i) {
                if (poly2[i] == 0) continue;
                Real integ = 0;
                Real factq = 1;
                for (std::size_t q = 0; q <= i; ++q) {
                    integ += factq * pow(lnN, static_cast<int>(i - q)) / pow(Real(r), static_cast<int>(q) + 1);
                    factq *= Real(static_cast<long>(i - q));
                }
                integ /= pow(Real(N), r);
                bound += abs(Real(poly2[i])) * integ;
            }
            Real b2j = abs(Real(boost::multiprecision::numerator(bern[static_cast<std::size_t>(2 * jstop)])) /
                           Real(boost::multiprecision::denominator(bern[static_cast<std::size_t>(2 * jstop)])));
            Real factr = 1;
            for (int i = 1; i <= 2 * jstop; ++i) factr *= i;
            bound *= b2j / factr * 3;
            if (bound > pow(Real(10), -static_cast<int>(digits) - 2))
                throw precision_error("stieltjes_table: remainder bound above target precision");
        }
        out[static_cast<std::size_t>(k)] = g;
    }
    // restore caller precision on copy-out
    std::vector<Real> res;
    res.reserve(out.size());
    for (auto& v : out) {
        Real r(v);
        r.precision(digits);
        res.push_back(r);
    }
    return res;
}

double stieltjes_limit_formula(int k, u64 x) {
    long double s = 0;
    for (u64 n = 1; n <= x; ++n) {
        long double ln = std::log(static_cast<long double>(n));
        long double pw = 1;
        for (int i = 0; i < k; ++i) pw *= ln;
        s += pw / n;
    }
    long double lnx = std::log(static_cast<long double>(x));
    long double main = 1;
    for (int i = 0; i <= k; ++i) main *= lnx;
    s -= main / (k + 1);
    return static_cast<double>(s);
}

Real prime_zeta(const Real& w, Real* tail_out) {
    LaurentSeries s = prime_zeta_series(w, 0, tail_out);
    return s.coeff(0);
}

LaurentSeries prime_zeta_series(const Real& w0, int deg, Real* tail_out) {
    if (w0 < Real(105) / 100) throw domain_error("prime_zeta: w too close to 1");
    const unsigned digits = Real::default_precision();
    const Real eps = pow(Real(10), -static_cast<int>(digits) - 4);

    // truncate k once 2^{-k w0} drops below eps (bound on |log zeta(k w0)|)
    const double w0d = w0.convert_to<double>();
    int K = static_cast<int>((static_cast<double>(digits) + 6) * std::log(10.0) / (w0d * std::log(2.0))) + 2;
    K = std::max(K, 4);

    LaurentSeries acc = LaurentSeries::constant(Real(0), deg);
    for (int k = 1; k <= K; ++k) {
        int mu = moebius(factorize(static_cast<u64>(k)));
        if (mu == 0) continue;
        LaurentSeries lz = series_log(zeta_series(w0 * k, deg));
        lz = series_scale(lz, Real(k)); // u -> k u
        acc += lz * LaurentSeries::constant(Real(mu) / k, deg);
    }
    // tail: sum_{k>K} |log zeta(k w0)|/k <= sum_{k>K} 2 * 2^{-k w0}
    Real tail = 2 * pow(Real(2), -w0 * (K + 1)) / (1 - pow(Real(2), -w0));
    if (tail_out) *tail_out = tail;
    if (tail > eps * 100)
        throw precision_error("prime_zeta: Moebius tail above target accuracy");
    return acc;
}

} // namespace rsc::zeta
