#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rsc/arith.hpp"

namespace rsc::sieve {

inline constexpr u64 kXMaxCapacity = 100000000; // 10^8

struct Checkpoint {
    u64 x;
    u128 d;
};

// f(k) for all k <= x_max plus exact prefix-sum access.  f values are 64-bit;
// the running prefix sum is 128-bit.  Full 128-bit prefix storage is avoided:
// D(x) is reconstructed from a coarse prefix grid plus a short scan.
class SummatoryTable {
  public:
    u64 x_max() const { return x_max_; }
    u64 f(u64 k) const { return f_[k]; }
    u128 d(u64 x) const; // D_3c(x) = sum_{k<=x} f(k)
    const std::vector<Checkpoint>& checkpoints() const { return checkpoints_; }

    // streams (k, f(k), D(k)) in order for k in [1, x_max]
    template <typename Fn>
    void scan(Fn&& fn) const {
        u128 acc = 0;
        for (u64 k = 1; k <= x_max_; ++k) {
            acc += f_[k];
            fn(k, f_[k], acc);
        }
    }

    friend SummatoryTable sieve_f(u64 x_max, int threads, const std::vector<u64>& extra_checkpoints);

  private:
    u64 x_max_ = 0;
    std::vector<u64> f_;       // index k, entry f(k); f_[0] unused
    std::vector<u128> coarse_; // D at multiples of kCoarseStep
    std::vector<Checkpoint> checkpoints_;
    static constexpr u64 kCoarseStep = 65536;
};

// f(p^e) = sum over a+b+c = e of c(p^a, p^b, p^c).
u64 f_prime_power(u64 p, u32 e);

// Multiplicative sieve of f over [1, x_max]; blocks are processed in parallel
// and reduced in block order, so results are identical for any thread count.
// Checkpoints: every 2^j, every 10^j, plus caller-requested x values.
SummatoryTable sieve_f(u64 x_max, int threads = 0, const std::vector<u64>& extra_checkpoints = {});

// Literal triple divisor sum  f(k) = sum_{lmn=k} c(l,m,n); oracle for sieve_f.
u64 direct_f(u64 k);

// Verifies  f(k) = sum_{n1 n2^2 n3^2 n4^2 n5^3 n6 = k} tau_6(n1) n2 n3 n4 n5^2 t(n6)
// for every k <= x, with t supplied on prime powers (extended multiplicatively).
bool dirichlet_identity_check(u64 x, const std::function<i64(u64 p, int j)>& t_pp);

// Binary checkpoint records: little-endian u64 x followed by 16-byte LE D.
void write_checkpoints(std::ostream& os, const SummatoryTable& table);
std::vector<Checkpoint> read_checkpoints(std::istream& is);

// CSV rows "k,f,D" for k <= x_max.
void write_csv(std::ostream& os, const SummatoryTable& table);

std::string u128_str(u128 v);

} // namespace rsc::sieve
