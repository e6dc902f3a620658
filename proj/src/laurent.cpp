#include "rsc/laurent.hpp"

#include <algorithm>

namespace rsc {

const Real& LaurentSeries::zero() {
    static const Real z(0);
    return z;
}

LaurentSeries LaurentSeries::constant(const Real& v, int trunc) {
    if (trunc < 0) throw input_error("LaurentSeries::constant: trunc < 0");
    std::vector<Real> c(trunc + 1, Real(0));
    c[0] = v;
    return LaurentSeries(0, std::move(c));
}

LaurentSeries LaurentSeries::taylor(std::vector<Real> coeffs) {
    return LaurentSeries(0, std::move(coeffs));
}

const Real& LaurentSeries::coeff(int k) const {
    if (k > trunc()) throw input_error("LaurentSeries::coeff beyond truncation");
    if (k < lo_) return zero();
    return c_[static_cast<std::size_t>(k - lo_)];
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    int lo = std::min(lo_, o.lo_);
    int hi = std::min(trunc(), o.trunc()); // hi >= lo: both inputs are nonempty
    std::vector<Real> c(static_cast<std::size_t>(hi - lo + 1), Real(0));
    for (int k = lo; k <= hi; ++k) {
        Real v = 0;
        if (k >= lo_ && k <= trunc()) v += c_[static_cast<std::size_t>(k - lo_)];
        if (k >= o.lo_ && k <= o.trunc()) v += o.c_[static_cast<std::size_t>(k - o.lo_)];
        c[static_cast<std::size_t>(k - lo)] = v;
    }
    lo_ = lo;
    c_ = std::move(c);
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
    LaurentSeries neg = o;
    for (auto& v : neg.c_) v = -v;
    return *this += neg;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    int lo = a.lo_ + b.lo_;
    // coefficient m is complete iff m <= min(a.trunc + b.lo, b.trunc + a.lo)
    int hi = std::min(a.trunc() + b.lo_, b.trunc() + a.lo_); // always >= lo
    std::vector<Real> c(static_cast<std::size_t>(hi - lo + 1), Real(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        int ka = a.lo_ + static_cast<int>(i);
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            int k = ka + b.lo_ + static_cast<int>(j);
            if (k > hi) break;
            c[static_cast<std::size_t>(k - lo)] += a.c_[i] * b.c_[j];
        }
    }
    return LaurentSeries(lo, std::move(c));
}

LaurentSeries LaurentSeries::inverse() const {
    if (c_[0] == 0) throw domain_error("LaurentSeries::inverse: leading coefficient is zero");
    // A = c0 u^{lo} (1 + r(u)); 1/A = u^{-lo}/c0 * (1 + r)^{-1}
    std::size_t n = c_.size();
    std::vector<Real> inv(n, Real(0));
    inv[0] = Real(1) / c_[0];
    for (std::size_t m = 1; m < n; ++m) {
        Real s = 0;
        for (std::size_t k = 1; k <= m; ++k) s += c_[k] * inv[m - k];
        inv[m] = -s / c_[0];
    }
    return LaurentSeries(-lo_, std::move(inv));
}

LaurentSeries LaurentSeries::normalized(const Real& eps) const {
    std::size_t skip = 0;
    while (skip + 1 < c_.size() && abs(c_[skip]) <= eps) ++skip;
    if (skip == 0) return *this;
    return LaurentSeries(lo_ + static_cast<int>(skip),
                         std::vector<Real>(c_.begin() + static_cast<std::ptrdiff_t>(skip), c_.end()));
}

LaurentSeries series_exp(const LaurentSeries& a) {
    if (a.lo() < 0) throw domain_error("series_exp: argument has a pole");
    int n = a.trunc();
    std::vector<Real> b(static_cast<std::size_t>(n + 1), Real(0));
    b[0] = exp(a.coeff(0));
    // b' = a' b  =>  m b_m = sum_{k=1}^{m} k a_k b_{m-k}
    for (int m = 1; m <= n; ++m) {
        Real s = 0;
        for (int k = 1; k <= m; ++k) s += Real(k) * a.coeff(k) * b[static_cast<std::size_t>(m - k)];
        b[static_cast<std::size_t>(m)] = s / m;
    }
    return LaurentSeries(0, std::move(b));
}

LaurentSeries series_log(const LaurentSeries& a) {
    if (a.lo() < 0) throw domain_error("series_log: argument has a pole");
    if (a.coeff(0) <= 0) throw domain_error("series_log: constant term must be positive");
    int n = a.trunc();
    std::vector<Real> l(static_cast<std::size_t>(n + 1), Real(0));
    l[0] = log(a.coeff(0));
    // (log a)' = a'/a  =>  m a_0 l_m = m a_m - sum_{k=1}^{m-1} k l_k a_{m-k}
    for (int m = 1; m <= n; ++m) {
        Real s = Real(m) * a.coeff(m);
        for (int k = 1; k < m; ++k) s -= Real(k) * l[static_cast<std::size_t>(k)] * a.coeff(m - k);
        l[static_cast<std::size_t>(m)] = s / (Real(m) * a.coeff(0));
    }
    return LaurentSeries(0, std::move(l));
}

LaurentSeries series_scale(const LaurentSeries& a, const Real& k) {
    std::vector<Real> c;
    c.reserve(static_cast<std::size_t>(a.trunc() - a.lo() + 1));
    Real pw = pow(k, a.lo());
    for (int m = a.lo(); m <= a.trunc(); ++m) {
        c.push_back(a.coeff(m) * pw);
        pw *= k;
    }
    return LaurentSeries(a.lo(), std::move(c));
}

} // namespace rsc
