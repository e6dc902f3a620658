#include "rsc/singular.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rsc/zeta.hpp"

namespace rsc::singular {

void PPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

PPoly& PPoly::operator+=(const PPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
}

PPoly& PPoly::operator-=(const PPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
}

PPoly operator*(const PPoly& a, const PPoly& b) {
    PPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

BigInt PPoly::eval(u64 p) const {
    BigInt v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

Real PPoly::eval_real(const Real& p) const {
    Real v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + Real(c[i]);
    return v;
}

std::string PPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << (c[i] > 0 ? " + " : " - ");
        else if (c[i] < 0) os << "-";
        BigInt a = abs(c[i]);
        if (a != 1 || i == 0) os << a.str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "p";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// c(p^a, p^b, p^c) as an exact polynomial in p: triple divisor sum of
// phi(p^i)phi(p^j)phi(p^k)/phi(p^max); each term is (p-1)^{s-1} p^{t-s-M+1}.
PPoly c_rank3_local_poly(int a, int b, int c) {
    PPoly total;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j)
            for (int k = 0; k <= c; ++k) {
                int M = std::max({i, j, k});
                int s = (i > 0) + (j > 0) + (k > 0);
                int ex = (M == 0) ? 0 : i + j + k - s - M + 1;
                // (p-1)^{s-1} p^{ex}
                PPoly term;
                term.c.assign(static_cast<std::size_t>(ex) + 1, BigInt(0));
                term.c[static_cast<std::size_t>(ex)] = 1;
                int binomials = (M == 0) ? 0 : s - 1;
                for (int r = 0; r < binomials; ++r) {
                    PPoly pm1;
                    pm1.c = {BigInt(-1), BigInt(1)};
                    term = term * pm1;
                }
                total += term;
            }
    return total;
}

struct Key {
    int a, b, c;
    bool operator<(const Key& o) const {
        return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
    }
};

} // namespace

LocalFactorSeries generic_local_factor(int E) {
    if (E < 4 || E > 24) throw input_error("generic_local_factor: E out of [4, 24]");

    // f(p^e) = sum over a+b+c = e of c(p^a, p^b, p^c)
    std::map<Key, PPoly> cache;
    std::vector<PPoly> fpoly(static_cast<std::size_t>(E) + 1);
    for (int e = 0; e <= E; ++e) {
        PPoly s;
        for (int a = 0; a <= e; ++a)
            for (int b = 0; a + b <= e; ++b) {
                int c = e - a - b;
                int k[3] = {a, b, c};
                std::sort(k, k + 3);
                Key key{k[0], k[1], k[2]};
                auto it = cache.find(key);
                if (it == cache.end()) it = cache.emplace(key, c_rank3_local_poly(k[0], k[1], k[2])).first;
                s += it->second;
            }
        fpoly[static_cast<std::size_t>(e)] = std::move(s);
    }

    // multiply by (1-X)^6 (1-pX^2)^3 (1-p^2X^3), truncating at degree E
    auto mul_factor = [&](std::vector<PPoly>& series, int xdeg, const PPoly& base, int power) {
        // multiply by (1 + base X^{xdeg})^{power} expanded binomially
        std::vector<PPoly> out(series.size());
        PPoly bp(BigInt(1));
        for (int i = 0; i <= power; ++i) {
            u64 bin = binom(static_cast<u64>(power), static_cast<u32>(i));
            PPoly w = bp;
            for (auto& coefv : w.c) coefv *= BigInt(bin);
            int shift = i * xdeg;
            for (std::size_t m = 0; m + static_cast<std::size_t>(shift) < out.size(); ++m)
                out[m + static_cast<std::size_t>(shift)] += w * series[m];
            if (i < power) bp = bp * base;
        }
        series = std::move(out);
    };

    std::vector<PPoly> t = std::move(fpoly);
    PPoly minus_one;
    minus_one.c = {BigInt(-1)};
    PPoly minus_p;
    minus_p.c = {BigInt(0), BigInt(-1)};
    PPoly minus_p2;
    minus_p2.c = {BigInt(0), BigInt(0), BigInt(-1)};
    mul_factor(t, 1, minus_one, 6);
    mul_factor(t, 2, minus_p, 3);
    mul_factor(t, 3, minus_p2, 1);

    LocalFactorSeries lfs;
    lfs.truncation = E;
    lfs.coeff = std::move(t);

    if (lfs.coeff[0].c != std::vector<BigInt>{BigInt(1)})
        throw consistency_error("generic_local_factor: X^0 coefficient is not 1");
    if (!lfs.coeff[1].is_zero())
        throw consistency_error("generic_local_factor: X^1 coefficient is not identically zero");
    return lfs;
}

i64 t_coefficient(const LocalFactorSeries& lfs, u64 p, int j) {
    if (j < 0 || j > lfs.truncation) throw input_error("t_coefficient: j beyond truncation");
    if (!is_prime(p)) throw domain_error("t_coefficient: p is not prime");
    BigInt v = lfs.coeff[static_cast<std::size_t>(j)].eval(p);
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN)) throw width_error("t_coefficient exceeds i64");
    return v.convert_to<i64>();
}

Real local_factor_at_one(const LocalFactorSeries& lfs, u64 p) {
    Real inv = Real(1) / p;
    Real x = 1, v = 0;
    for (int m = 0; m <= lfs.truncation; ++m) {
        if (!lfs.coeff[static_cast<std::size_t>(m)].is_zero())
            v += lfs.coeff[static_cast<std::size_t>(m)].eval_real(Real(p)) * x;
        x *= inv;
    }
    return v;
}

namespace {

constexpr int kTaylorDeg = 9;

void check_local_positive(const Real& v, u64 p) {
    if (v <= 0 || v > 1)
        throw precision_error("local factor T_p(1) outside (0,1] at p=" + std::to_string(p) +
                              "; raise the truncation E");
}

} // namespace

TSeries t_series_direct(u64 prime_cutoff, int E, unsigned digits) {
    if (prime_cutoff < 1000) throw input_error("t_series_direct: prime cutoff below 10^3");
    if (E < 10) throw input_error("t_series_direct: E below 10");
    PrecisionScope scope(digits + 10);

    LocalFactorSeries lfs = generic_local_factor(E);
    auto primes = primes_up_to(prime_cutoff);

    // running product of the per-prime series sum_m t_m(p) p^{-m} e^{-m u log p}
    LaurentSeries prod = LaurentSeries::constant(Real(1), kTaylorDeg);
    Real sum_inv_p2 = 0;
    std::vector<Real> invfact(kTaylorDeg + 1);
    invfact[0] = 1;
    for (int r = 1; r <= kTaylorDeg; ++r) invfact[static_cast<std::size_t>(r)] = invfact[static_cast<std::size_t>(r - 1)] / r;

    for (u64 p : primes) {
        Real lp = log(Real(p));
        Real invp = Real(1) / p;
        std::vector<Real> s(kTaylorDeg + 1, Real(0));
        s[0] = 1; // m = 0 term
        Real pm = 1;
        for (int m = 2; m <= E; ++m) {
            pm = (m == 2) ? invp * invp : pm * invp;
            const PPoly& tm = lfs.coeff[static_cast<std::size_t>(m)];
            if (tm.is_zero()) continue;
            Real base = tm.eval_real(Real(p)) * pm;
            // e^{-m u log p}: coefficient r is (-m log p)^r / r!
            Real mlp = -Real(m) * lp;
            Real powterm = 1;
            for (int r = 0; r <= kTaylorDeg; ++r) {
                s[static_cast<std::size_t>(r)] += base * powterm * invfact[static_cast<std::size_t>(r)];
                powterm *= mlp;
            }
        }
        check_local_positive(s[0], p);
        prod *= LaurentSeries(0, std::move(s));
        sum_inv_p2 += invp * invp;
    }

    TSeries ts;
    ts.method = "direct";
    ts.prime_cutoff = prime_cutoff;
    ts.truncation = E;
    ts.precision_digits = digits;
    ts.c.reserve(kTaylorDeg + 1);
    for (int k = 0; k <= kTaylorDeg; ++k) ts.c.push_back(prod.coeff(k));
    // prime tail on c0: |t(p^2)| = 6 dominates; 7/p^2 leaves margin for the rest
    Real pz2 = zeta::prime_zeta(Real(2));
    ts.tail_bound = 7 * (pz2 - sum_inv_p2);
    return ts;
}

Real t_value_at(const Real& s, u64 prime_cutoff, int E) {
    LocalFactorSeries lfs = generic_local_factor(E);
    auto primes = primes_up_to(prime_cutoff);
    Real prod = 1;
    for (u64 p : primes) {
        Real x = pow(Real(p), -s);
        Real xm = x * x;
        Real v = 1;
        for (int m = 2; m <= E; ++m) {
            const PPoly& tm = lfs.coeff[static_cast<std::size_t>(m)];
            if (!tm.is_zero()) v += tm.eval_real(Real(p)) * xm;
            xm *= x;
        }
        prod *= v;
    }
    return prod;
}

// Primes handled exactly in the accelerated method.  T_p(X) has zeros not
// far outside |X| = 0.4, so the power-series log of the local factor is
// useless at X = 1/p for small p; beyond 37 it decays like (2.45/p)^m and
// the degree-E truncation of the log layer is far below working precision.
constexpr u64 kExactPrimeCutoff = 37;

TSeries t_series_accelerated(int E, unsigned digits) {
    if (E < 10) throw input_error("t_series_accelerated: E below 10");
    PrecisionScope scope(digits + 10);

    LocalFactorSeries lfs = generic_local_factor(E);

    // exact power-series log over Q[p]: l_m = a_m - (1/m) sum_{k=1}^{m-1} k l_k a_{m-k}
    using RPoly = std::vector<BigRat>; // coefficient of p^j
    auto to_rpoly = [](const PPoly& q) {
        RPoly r(q.c.size());
        for (std::size_t i = 0; i < q.c.size(); ++i) r[i] = BigRat(q.c[i]);
        return r;
    };
    auto rmul = [](const RPoly& a, const RPoly& b) {
        RPoly r;
        if (a.empty() || b.empty()) return r;
        r.assign(a.size() + b.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    std::vector<RPoly> lg(static_cast<std::size_t>(E) + 1);
    for (int m = 1; m <= E; ++m) {
        RPoly acc = to_rpoly(lfs.coeff[static_cast<std::size_t>(m)]);
        for (int k = 1; k < m; ++k) {
            RPoly prod = rmul(lg[static_cast<std::size_t>(k)], to_rpoly(lfs.coeff[static_cast<std::size_t>(m - k)]));
            if (prod.empty()) continue;
            if (prod.size() > acc.size()) acc.resize(prod.size(), BigRat(0));
            BigRat w = BigRat(k) / m;
            for (std::size_t i = 0; i < prod.size(); ++i) acc[i] -= w * prod[i];
        }
        while (!acc.empty() && acc.back() == 0) acc.pop_back();
        lg[static_cast<std::size_t>(m)] = std::move(acc);
    }

    auto small_primes = primes_up_to(kExactPrimeCutoff);

    // exact block: sum over p <= 37 of log of the local factor in u
    LaurentSeries logT = LaurentSeries::constant(Real(0), kTaylorDeg);
    std::vector<Real> small_logp;
    for (u64 p : small_primes) {
        Real lp = log(Real(p));
        small_logp.push_back(lp);
        Real invp = Real(1) / p;
        std::vector<Real> s(kTaylorDeg + 1, Real(0));
        s[0] = 1;
        Real pm = 1;
        for (int m = 2; m <= E; ++m) {
            pm = (m == 2) ? invp * invp : pm * invp;
            const PPoly& tm = lfs.coeff[static_cast<std::size_t>(m)];
            if (tm.is_zero()) continue;
            Real base = tm.eval_real(Real(p)) * pm;
            Real mlp = -Real(m) * lp, powterm = 1, rfact = 1;
            for (int r = 0; r <= kTaylorDeg; ++r) {
                if (r > 0) rfact *= r;
                s[static_cast<std::size_t>(r)] += base * powterm / rfact;
                powterm *= mlp;
            }
        }
        check_local_positive(s[0], p);
        logT += series_log(LaurentSeries(0, std::move(s)));
    }

    // tail block: log T(1+u) restricted to p > 37 equals
    // sum_{m,j} a_{m,j} [P(m-j + m u) - sum_{p<=37} p^{-(m-j)-m u}];
    // the restricted prime-zeta series is cached per integer m-j.
    std::map<int, LaurentSeries> pzr_cache;
    Real tail_total = 0;
    Real group_prev = 0, group_last = 0; // |m-group| values for the E-tail estimate
    for (int m = 2; m <= E; ++m) {
        const RPoly& lm = lg[static_cast<std::size_t>(m)];
        LaurentSeries group = LaurentSeries::constant(Real(0), kTaylorDeg);
        bool any = false;
        for (std::size_t j = 0; j < lm.size(); ++j) {
            if (lm[j] == 0) continue;
            int w0 = m - static_cast<int>(j);
            if (w0 < 2)
                throw consistency_error("t_series_accelerated: exponent m-j below 2 (log layer)");
            auto it = pzr_cache.find(w0);
            if (it == pzr_cache.end()) {
                Real tail;
                LaurentSeries pz = zeta::prime_zeta_series(Real(w0), kTaylorDeg, &tail);
                tail_total += tail;
                for (std::size_t pi = 0; pi < small_primes.size(); ++pi) {
                    Real base = pow(Real(small_primes[pi]), -w0);
                    std::vector<Real> e(kTaylorDeg + 1);
                    Real powterm = 1, rfact = 1;
                    for (int r = 0; r <= kTaylorDeg; ++r) {
                        if (r > 0) rfact *= r;
                        e[static_cast<std::size_t>(r)] = base * powterm / rfact;
                        powterm *= -small_logp[pi];
                    }
                    pz -= LaurentSeries(0, std::move(e));
                }
                it = pzr_cache.emplace(w0, std::move(pz)).first;
            }
            LaurentSeries scaled = series_scale(it->second, Real(m));
            // cpp_rational -> mpfr via num/den (the generic conversion crawls)
            Real coef = Real(boost::multiprecision::numerator(lm[j])) /
                        Real(boost::multiprecision::denominator(lm[j]));
            group += scaled * LaurentSeries::constant(coef, kTaylorDeg);
            any = true;
        }
        if (any) {
            logT += group;
            group_prev = group_last;
            group_last = abs(group.coeff(0));
        }
    }

    LaurentSeries T = series_exp(logT);

    TSeries ts;
    ts.method = "accelerated";
    ts.prime_cutoff = 0;
    ts.truncation = E;
    ts.precision_digits = digits;
    ts.c.reserve(kTaylorDeg + 1);
    for (int k = 0; k <= kTaylorDeg; ++k) ts.c.push_back(T.coeff(k));
    // Moebius tails plus a geometric extrapolation of the dropped log-layer
    // degrees (ratio from the last two m-groups, capped at 1/2).
    Real ratio = (group_prev > 0) ? group_last / group_prev : Real(0);
    if (ratio > Real(1) / 2) ratio = Real(1) / 2;
    ts.tail_bound = tail_total * 3 + group_last * ratio / (1 - ratio);
    if (ts.c[0] <= 0)
        throw consistency_error("t_series_accelerated: T(1) not positive");
    return ts;
}

} // namespace rsc::singular
