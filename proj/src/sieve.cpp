#include "rsc/sieve.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <omp.h>
#include <ostream>

#include "rsc/counts.hpp"

namespace rsc::sieve {

u128 SummatoryTable::d(u64 x) const {
    if (x < 1 || x > x_max_) throw input_error("SummatoryTable::d: x out of range");
    u64 base = x / kCoarseStep;
    u128 acc = coarse_[base];
    for (u64 k = base * kCoarseStep + 1; k <= x; ++k) acc += f_[k];
    return acc;
}

u64 f_prime_power(u64 p, u32 e) {
    u128 s = 0;
    for (u32 a = 0; a <= e; ++a)
        for (u32 b = 0; a + b <= e; ++b) s += counts::c_rank3_local(p, a, b, e - a - b);
    if (s > static_cast<u128>(UINT64_MAX)) throw width_error("f_prime_power overflow");
    return static_cast<u64>(s);
}

SummatoryTable sieve_f(u64 x_max, int threads, const std::vector<u64>& extra_checkpoints) {
    if (x_max < 1 || x_max > kXMaxCapacity) throw capacity_error("sieve_f: x_max out of [1, 10^8]");

    SummatoryTable t;
    t.x_max_ = x_max;
    t.f_.assign(x_max + 1, 0);

    u64 root = 1;
    while ((root + 1) * (root + 1) <= x_max) ++root;
    auto primes = primes_up_to(root);

    // f(p^e) lookup, prepared up front for every p <= sqrt(x_max), p^e <= x_max
    std::vector<std::vector<u64>> fpp(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) {
        u64 p = primes[i];
        fpp[i].push_back(1);
        u128 pe = p;
        for (u32 e = 1; pe <= x_max; ++e, pe *= p) fpp[i].push_back(f_prime_power(p, e));
    }
    const u64 f_of_prime = 6; // f(p) for any prime

    const u64 block = u64(1) << 22;
    const u64 nblocks = (x_max + block) / block; // block b covers [b*block+1, (b+1)*block]

    if (threads > 0) omp_set_num_threads(threads);

    // Per-block strided factorization; each k's remaining cofactor after all
    // primes <= sqrt(x_max) is either 1 or a single prime > sqrt(x_max).
#pragma omp parallel
    {
        std::vector<u64> rem(block);
#pragma omp for schedule(dynamic, 1)
        for (u64 b = 0; b < nblocks; ++b) {
            u64 lo = b * block + 1;
            u64 hi = std::min(x_max, (b + 1) * block);
            if (lo > hi) continue;
            u64 len = hi - lo + 1;
            u64* f = t.f_.data() + lo;
            for (u64 i = 0; i < len; ++i) {
                f[i] = 1;
                rem[i] = lo + i;
            }
            for (std::size_t pi = 0; pi < primes.size(); ++pi) {
                u64 p = primes[pi];
                if (p * p > hi) break;
                for (u64 m = ((lo + p - 1) / p) * p; m <= hi; m += p) {
                    u64 i = m - lo;
                    u32 e = 0;
                    while (rem[i] % p == 0) {
                        rem[i] /= p;
                        ++e;
                    }
                    f[i] = checked_mul(f[i], fpp[pi][e]);
                }
            }
            for (u64 i = 0; i < len; ++i)
                if (rem[i] > 1) f[i] = checked_mul(f[i], f_of_prime);
        }
    }
    t.f_[0] = 0;
    if (x_max >= 1 && t.f_[1] != 1) throw consistency_error("sieve_f: f(1) != 1");

    // sequential prefix pass over the coarse grid (determinism: block order)
    t.coarse_.assign(x_max / SummatoryTable::kCoarseStep + 1, 0);
    std::vector<u64> cps{1};
    for (u64 v = 2; v <= x_max && v >= 2; v *= 2) cps.push_back(v);
    for (u64 v = 10; v <= x_max && v >= 10; v *= 10) cps.push_back(v);
    for (u64 v : extra_checkpoints) {
        if (v < 1 || v > x_max) throw input_error("sieve_f: checkpoint out of range");
        cps.push_back(v);
    }
    if (cps.empty() || cps.back() != x_max) cps.push_back(x_max);
    std::sort(cps.begin(), cps.end());
    cps.erase(std::unique(cps.begin(), cps.end()), cps.end());

    u128 acc = 0;
    std::size_t ci = 0;
    for (u64 k = 1; k <= x_max; ++k) {
        acc += t.f_[k];
        if (k % SummatoryTable::kCoarseStep == 0) t.coarse_[k / SummatoryTable::kCoarseStep] = acc;
        if (ci < cps.size() && cps[ci] == k) {
            t.checkpoints_.push_back({k, acc});
            ++ci;
        }
    }
    return t;
}

u64 direct_f(u64 k) {
    if (k < 1 || k > 1000000) throw capacity_error("direct_f: k out of [1, 10^6]");
    auto dl = divisors(factorize(k));
    u128 s = 0;
    for (u64 l : dl) {
        u64 q = k / l;
        for (u64 m : divisors(factorize(q))) s += counts::c_rank3(l, m, q / m);
    }
    if (s > static_cast<u128>(UINT64_MAX)) throw width_error("direct_f overflow");
    return static_cast<u64>(s);
}

bool dirichlet_identity_check(u64 x, const std::function<i64(u64 p, int j)>& t_pp) {
    if (x < 1) throw input_error("dirichlet_identity_check: x < 1");
    if (x > 1000000) throw capacity_error("dirichlet_identity_check: x too large");

    SpfTable spf(std::max<u64>(x, 2));

    // tau_6 by multiplicativity
    std::vector<i64> a(x + 1, 0);
    a[1] = 1;
    for (u64 k = 2; k <= x; ++k) {
        u64 p = spf.spf(k), q = k;
        u32 e = 0;
        while (q % p == 0) {
            q /= p;
            ++e;
        }
        a[k] = a[q] * static_cast<i64>(binom(u64(e) + 5, 5));
    }

    // three convolutions with n^2-supported weight n, one with n^3 weight n^2
    auto convolve_power = [&](std::vector<i64>& arr, int power, int weight_exp) {
        std::vector<i64> out(x + 1, 0);
        for (u64 n = 1;; ++n) {
            u128 np = 1;
            for (int i = 0; i < power; ++i) np *= n;
            if (np > x) break;
            u128 w = 1;
            for (int i = 0; i < weight_exp; ++i) w *= n;
            for (u64 d = 1; d * np <= x; ++d) out[d * static_cast<u64>(np)] += static_cast<i64>(w) * arr[d];
        }
        arr = std::move(out);
    };
    convolve_power(a, 2, 1);
    convolve_power(a, 2, 1);
    convolve_power(a, 2, 1);
    convolve_power(a, 3, 2);

    // t(n) multiplicatively from prime powers; t(p) = 0 keeps support sparse
    std::vector<i64> t(x + 1, 0);
    t[1] = 1;
    for (u64 k = 2; k <= x; ++k) {
        u64 p = spf.spf(k), q = k;
        u32 e = 0;
        while (q % p == 0) {
            q /= p;
            ++e;
        }
        if (t[q] == 0) continue;
        i64 tp = t_pp(p, static_cast<int>(e));
        if (tp != 0) t[k] = t[q] * tp;
    }

    std::vector<i64> conv(x + 1, 0);
    for (u64 n = 1; n <= x; ++n) {
        if (t[n] == 0) continue;
        for (u64 d = 1; d * n <= x; ++d) conv[d * n] += t[n] * a[d];
    }

    SummatoryTable tab = sieve_f(x);
    for (u64 k = 1; k <= x; ++k)
        if (conv[k] < 0 || static_cast<u64>(conv[k]) != tab.f(k)) return false;
    return true;
}

namespace {

void put_u64_le(std::ostream& os, u64 v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

void put_u128_le(std::ostream& os, u128 v) {
    unsigned char b[16];
    for (int i = 0; i < 16; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 16);
}

} // namespace

void write_checkpoints(std::ostream& os, const SummatoryTable& table) {
    for (const auto& cp : table.checkpoints()) {
        put_u64_le(os, cp.x);
        put_u128_le(os, cp.d);
    }
}

std::vector<Checkpoint> read_checkpoints(std::istream& is) {
    std::vector<Checkpoint> out;
    unsigned char b[24];
    while (is.read(reinterpret_cast<char*>(b), 24)) {
        Checkpoint cp{0, 0};
        for (int i = 7; i >= 0; --i) cp.x = (cp.x << 8) | b[i];
        for (int i = 15; i >= 0; --i) cp.d = (cp.d << 8) | b[8 + i];
        out.push_back(cp);
    }
    return out;
}

std::string u128_str(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s += static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

void write_csv(std::ostream& os, const SummatoryTable& table) {
    os << "k,f,D\n";
    table.scan([&](u64 k, u64 fk, u128 dk) { os << k << ',' << fk << ',' << u128_str(dk) << '\n'; });
}

} // namespace rsc::sieve
