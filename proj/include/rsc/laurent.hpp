#pragma once

#include <vector>

#include "rsc/error.hpp"
#include "rsc/real.hpp"

namespace rsc {

// Truncated Laurent series around u = 0 with Real coefficients.  Exponents
// run from lo() to trunc(); lo() < 0 means a pole of order -lo().  Truncation
// is tracked conservatively through arithmetic: a product only knows the
// coefficients that are fully determined by the known ranges of its factors.
class LaurentSeries {
  public:
    LaurentSeries() : lo_(0), c_(1, Real(0)) {}

    // series c[0] u^{lo} + c[1] u^{lo+1} + ...
    LaurentSeries(int lo, std::vector<Real> coeffs) : lo_(lo), c_(std::move(coeffs)) {
        if (c_.empty()) throw input_error("LaurentSeries: empty coefficient list");
    }

    static LaurentSeries constant(const Real& v, int trunc);
    // ordinary power series from Taylor coefficients, truncation = size-1
    static LaurentSeries taylor(std::vector<Real> coeffs);

    int lo() const { return lo_; }
    int trunc() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    int pole_order() const { return lo_ < 0 ? -lo_ : 0; }

    // coefficient of u^k (0 outside the stored range; throws above trunc)
    const Real& coeff(int k) const;

    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    LaurentSeries inverse() const; // leading coefficient must be nonzero

    // drop known-zero leading coefficients (tightens pole order bookkeeping)
    LaurentSeries normalized(const Real& eps = Real(0)) const;

  private:
    int lo_;
    std::vector<Real> c_; // c_[i] = coefficient of u^{lo_ + i}

    static const Real& zero();
};

// exp(A) for an ordinary power series (lo >= 0 required after normalization)
LaurentSeries series_exp(const LaurentSeries& a);
// log(A) for an ordinary power series with nonzero constant term
LaurentSeries series_log(const LaurentSeries& a);
// substitute u -> k*u
LaurentSeries series_scale(const LaurentSeries& a, const Real& k);

} // namespace rsc
