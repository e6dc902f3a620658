#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <string>

namespace rsc {

// Extended-precision real, variable precision (decimal digits set per scope).
// All Real computation is single-threaded; parallel hot loops use long double.
using Real = boost::multiprecision::mpfr_float;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline constexpr unsigned kDefaultDigits = 60;

// Scoped working-precision override (restores the previous default on exit).
class PrecisionScope {
  public:
    explicit PrecisionScope(unsigned digits)
        : saved_(Real::default_precision()) {
        Real::default_precision(digits);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned saved_;
};

// Deterministic decimal rendering at a fixed digit count.
inline std::string real_str(const Real& x, unsigned digits) {
    return x.str(digits, std::ios_base::scientific);
}

} // namespace rsc
