#include "rsc/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace rsc {

u64 checked_pow(u64 p, u32 e) {
    u64 r = 1;
    for (u32 i = 0; i < e; ++i) r = checked_mul(r, p);
    return r;
}

u64 binom(u64 n, u32 k) {
    if (k > n) return 0;
    if (k > n - k) k = static_cast<u32>(n - k);
    u128 r = 1;
    for (u32 i = 1; i <= k; ++i) {
        r = r * (n - k + i);
        r /= i; // exact: product of i consecutive integers is divisible by i!
        if (r > static_cast<u128>(UINT64_MAX))
            throw width_error("binomial exceeds u64");
    }
    return static_cast<u64>(r);
}

SpfTable::SpfTable(u64 limit) : limit_(limit) {
    if (limit < 2 || limit > (u64(1) << 32))
        throw capacity_error("SpfTable limit out of [2, 2^32]");
    spf_.assign(limit + 1, 0);
    // Linear sieve: each k gets marked exactly once, by its least prime factor.
    std::vector<u32> primes;
    for (u64 i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<u32>(i);
            primes.push_back(static_cast<u32>(i));
        }
        for (u32 p : primes) {
            if (p > spf_[i]) break;
            u64 next = u64(p) * i;
            if (next > limit) break;
            spf_[next] = p;
        }
    }
}

u64 SpfTable::spf(u64 k) const {
    if (k < 2 || k > limit_) throw input_error("spf query out of table range");
    return spf_[k];
}

SpfTable build_spf(u64 limit) { return SpfTable(limit); }

namespace {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic witness set for n < 2^64 (Sinclair / Jaeschke).
constexpr std::array<u64, 7> kWitnesses = {2, 325, 9375, 28178, 450775, 9780504, 1795265022};

// Brent's variant with deterministic increments (no RNG: results must be
// reproducible).  n must be an odd composite with no factor below 100.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        u64 x = 2, y = 2, ys = 2, d = 1, q = 1;
        int r = 1;
        const int batch = 128;
        while (d == 1) {
            x = y;
            for (int i = 0; i < r; ++i) y = step(y);
            for (int k = 0; k < r && d == 1; k += batch) {
                ys = y;
                int lim = std::min(batch, r - k);
                for (int i = 0; i < lim; ++i) {
                    y = step(y);
                    u64 diff = x > y ? x - y : y - x;
                    if (diff != 0) q = mulmod(q, diff, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // batching overshot a factor; redo the last stretch one step at a time
            d = 1;
            while (d == 1) {
                ys = step(ys);
                u64 diff = x > ys ? x - ys : ys - x;
                d = std::gcd(diff == 0 ? n : diff, n);
            }
        }
        if (d != n) return d;
    }
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : kWitnesses) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(u64 n, const SpfTable* table) {
    if (n == 0) throw domain_error("factorize(0)");
    Factorization f;
    f.value = n;
    if (n == 1) return f;

    if (table) {
        if (n > table->limit()) throw input_error("factorize: n exceeds table limit");
        while (n > 1) {
            u64 p = table->spf(n);
            u32 e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.factors.push_back({p, e});
        }
        return f;
    }

    // Trial division by small primes, then Miller-Rabin + Pollard rho.
    for (u64 p = 2; p < 100 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            u32 e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.factors.push_back({p, e});
        }
    }
    std::vector<u64> stack;
    if (n > 1) stack.push_back(n);
    std::vector<PrimePower> rest;
    while (!stack.empty()) {
        u64 m = stack.back();
        stack.pop_back();
        if (is_prime(m)) {
            auto it = std::find_if(rest.begin(), rest.end(), [&](const PrimePower& q) { return q.p == m; });
            if (it != rest.end())
                ++it->e;
            else
                rest.push_back({m, 1});
            continue;
        }
        u64 d = pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    f.factors.insert(f.factors.end(), rest.begin(), rest.end());
    std::sort(f.factors.begin(), f.factors.end(), [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
    return f;
}

u64 euler_phi(const Factorization& f) {
    u64 r = 1;
    for (const auto& [p, e] : f.factors) {
        r = checked_mul(r, checked_pow(p, e - 1));
        r = checked_mul(r, p - 1);
    }
    return r;
}

u64 tau_k(const Factorization& f, u32 k) {
    if (k < 1) throw domain_error("tau_k: k >= 1 required");
    u64 r = 1;
    for (const auto& [p, e] : f.factors) r = checked_mul(r, binom(u64(e) + k - 1, k - 1));
    return r;
}

std::pair<u64, u64> gcd_lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) throw domain_error("gcd_lcm: arguments must be positive");
    u64 g = std::gcd(a, b);
    u64 l = checked_mul(a / g, b);
    return {g, l};
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> ds{1};
    for (const auto& [p, e] : f.factors) {
        std::size_t old = ds.size();
        u64 pw = 1;
        for (u32 i = 1; i <= e; ++i) {
            pw = checked_mul(pw, p);
            for (std::size_t j = 0; j < old; ++j) ds.push_back(checked_mul(ds[j], pw));
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int moebius(const Factorization& f) {
    for (const auto& pp : f.factors)
        if (pp.e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
        }
    }
    return out;
}

} // namespace rsc
