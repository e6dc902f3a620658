#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rsc/error.hpp"

namespace rsc {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Multiply with overflow detection; throws width_error instead of wrapping.
inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw width_error("u64 multiplication overflow");
    return r;
}

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw width_error("u64 addition overflow");
    return r;
}

u64 checked_pow(u64 p, u32 e);

// Binomial coefficient, exact; width_error if it does not fit u64.
u64 binom(u64 n, u32 k);

struct PrimePower {
    u64 p;
    u32 e;
};

// Canonical prime-power decomposition: value == prod p^e, primes strictly
// increasing, exponents >= 1.  value == 1 has an empty factor list.
struct Factorization {
    u64 value = 1;
    std::vector<PrimePower> factors;

    bool operator==(const Factorization&) const = default;
};

// Smallest-prime-factor table for 2 <= k <= limit.  Immutable after
// construction, safe to share across threads.
class SpfTable {
  public:
    explicit SpfTable(u64 limit);

    u64 limit() const { return limit_; }
    u64 spf(u64 k) const;

  private:
    u64 limit_;
    std::vector<u32> spf_;
};

SpfTable build_spf(u64 limit);

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(u64 n);

// n >= 1; throws domain_error on n == 0.  With a table, requires n <= limit.
Factorization factorize(u64 n, const SpfTable* table = nullptr);

u64 euler_phi(const Factorization& f);

// k-dimensional divisor function: prod C(e + k - 1, k - 1).
u64 tau_k(const Factorization& f, u32 k);

// lcm is overflow-checked.
std::pair<u64, u64> gcd_lcm(u64 a, u64 b);

// All divisors, ascending.
std::vector<u64> divisors(const Factorization& f);

// Moebius mu(d) for d described by a factorization.
int moebius(const Factorization& f);

// Primes <= limit by plain sieve (helper for segmented work and tests).
std::vector<u64> primes_up_to(u64 limit);

} // namespace rsc
