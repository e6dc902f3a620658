#include "rsc/counts.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace rsc::counts {

namespace {

u64 to_u64_checked(u128 v, const char* what) {
    if (v > static_cast<u128>(UINT64_MAX)) throw width_error(what);
    return static_cast<u64>(v);
}

// (mu * phi)(p^k) = phi(p^k) - phi(p^{k-1}).
u64 mu_phi_pp(u64 p, u32 k) {
    if (k == 0) return 1;
    if (k == 1) return p - 2;
    return checked_mul(checked_pow(p, k - 2), (p - 1) * (p - 1));
}

u64 mu_phi(const Factorization& f) {
    u64 r = 1;
    for (const auto& [p, e] : f.factors) r = checked_mul(r, mu_phi_pp(p, e));
    return r;
}

u32 nu_p(u64 n, u64 p) {
    u32 e = 0;
    while (n % p == 0) { n /= p; ++e; }
    return e;
}

} // namespace

u64 c_pp(u64 p, u32 a, u32 b) {
    if (!is_prime(p)) throw domain_error("c_pp: p is not prime");
    if (a > b) std::swap(a, b);
    // 2(1 + p + ... + p^{a-1}) + (b-a+1) p^a
    u128 geo = 0, pw = 1;
    for (u32 i = 0; i < a; ++i) { geo += pw; pw *= p; }
    u128 r = 2 * geo + u128(b - a + 1) * pw;
    return to_u64_checked(r, "c_pp overflow");
}

u64 s_pp(u64 p, u32 a, u32 b) {
    if (!is_prime(p)) throw domain_error("s_pp: p is not prime");
    if (a > b) std::swap(a, b);
    if (a == 0) return b + 1; // cyclic group: b+1 subgroups
    i128 pa1 = 1;
    for (u32 i = 0; i < a + 1u; ++i) pa1 *= p;
    i128 pa2 = pa1 * p;
    i128 num = i128(b - a + 1) * pa2 - (i128(b) - i128(a) - 1) * pa1 -
               i128(a + b + 3) * p + i128(a + b + 1);
    i128 den = i128(p - 1) * (p - 1);
    if (num <= 0 || num % den != 0) throw consistency_error("s_pp: non-exact division");
    return to_u64_checked(static_cast<u128>(num / den), "s_pp overflow");
}

u64 c_rank2_divisor_sum(u64 m, u64 n) {
    if (m == 0 || n == 0) throw domain_error("c_rank2: arguments must be positive");
    u64 g = std::gcd(m, n);
    auto gd = divisors(factorize(g));
    u128 total = 0;
    for (u64 d : gd) {
        u64 w = mu_phi(factorize(d));
        u64 tm = tau_k(factorize(m / d), 2);
        u64 tn = tau_k(factorize(n / d), 2);
        total += u128(w) * tm * tn;
    }
    return to_u64_checked(total, "c_rank2 overflow");
}

u64 c_rank2_euler_product(u64 m, u64 n) {
    if (m == 0 || n == 0) throw domain_error("c_rank2: arguments must be positive");
    auto fm = factorize(m);
    auto fn = factorize(n);
    std::vector<u64> ps;
    for (const auto& pp : fm.factors) ps.push_back(pp.p);
    for (const auto& pp : fn.factors) ps.push_back(pp.p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    u64 r = 1;
    for (u64 p : ps) r = checked_mul(r, c_pp(p, nu_p(m, p), nu_p(n, p)));
    return r;
}

u64 c_rank2(u64 m, u64 n) {
    u64 a = c_rank2_divisor_sum(m, n);
    u64 b = c_rank2_euler_product(m, n);
    if (a != b) throw consistency_error("c_rank2: divisor-sum and Euler-product paths disagree");
    return a;
}

u64 s_rank2_divisor_sum(u64 m, u64 n) {
    if (m == 0 || n == 0) throw domain_error("s_rank2: arguments must be positive");
    u64 g = std::gcd(m, n);
    auto gd = divisors(factorize(g));
    u128 total = 0;
    for (u64 d : gd) {
        u64 w = euler_phi(factorize(d));
        u64 tm = tau_k(factorize(m / d), 2);
        u64 tn = tau_k(factorize(n / d), 2);
        total += u128(w) * tm * tn;
    }
    return to_u64_checked(total, "s_rank2 overflow");
}

u64 s_rank2_euler_product(u64 m, u64 n) {
    if (m == 0 || n == 0) throw domain_error("s_rank2: arguments must be positive");
    auto fm = factorize(m);
    auto fn = factorize(n);
    std::vector<u64> ps;
    for (const auto& pp : fm.factors) ps.push_back(pp.p);
    for (const auto& pp : fn.factors) ps.push_back(pp.p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    u64 r = 1;
    for (u64 p : ps) r = checked_mul(r, s_pp(p, nu_p(m, p), nu_p(n, p)));
    return r;
}

u64 s_rank2(u64 m, u64 n) {
    u64 a = s_rank2_divisor_sum(m, n);
    u64 b = s_rank2_euler_product(m, n);
    if (a != b) throw consistency_error("s_rank2: divisor-sum and Euler-product paths disagree");
    return a;
}

u64 c_rank3_local(u64 p, u32 a, u32 b, u32 c) {
    // sum over (i,j,k) <= (a,b,c) of phi(p^i)phi(p^j)phi(p^k)/phi(p^max).
    // With s nonzero indices summing to t and max M, the term equals
    // (p-1)^{s-1} p^{t - s - M + 1}, an exact integer.
    u128 total = 0;
    for (u32 i = 0; i <= a; ++i)
        for (u32 j = 0; j <= b; ++j)
            for (u32 k = 0; k <= c; ++k) {
                u32 M = std::max({i, j, k});
                if (M == 0) { total += 1; continue; }
                int s = (i > 0) + (j > 0) + (k > 0);
                int ex = int(i + j + k) - s - int(M) + 1;
                if (ex < 0) throw consistency_error("c_rank3_local: negative exponent");
                u128 term = 1;
                for (int r = 1; r < s; ++r) term *= (p - 1);
                for (int r = 0; r < ex; ++r) term *= p;
                total += term;
            }
    return to_u64_checked(total, "c_rank3_local overflow");
}

u64 c_rank3(u64 n1, u64 n2, u64 n3) {
    if (n1 == 0 || n2 == 0 || n3 == 0) throw domain_error("c_rank3: arguments must be positive");
    u64 prod = checked_mul(checked_mul(n1, n2), n3);
    auto f = factorize(prod);
    u64 r = 1;
    for (const auto& [p, e] : f.factors) {
        (void)e;
        r = checked_mul(r, c_rank3_local(p, nu_p(n1, p), nu_p(n2, p), nu_p(n3, p)));
    }
    return r;
}

u64 oracle_cyclic_count(const GroupSpec& g) {
    if (g.invariants.empty() || g.invariants.size() > 3)
        throw domain_error("oracle_cyclic_count: rank must be 1..3");
    u128 order = 1;
    for (u64 ni : g.invariants) {
        if (ni == 0) throw domain_error("oracle_cyclic_count: invariants must be positive");
        order *= ni;
    }
    if (order > 1000000) throw capacity_error("oracle_cyclic_count: order exceeds 10^6");

    u64 L = 1;
    for (u64 ni : g.invariants) L = gcd_lcm(L, ni).second;
    auto ds = divisors(factorize(L));

    // D_e = number of elements whose order divides e = prod gcd(e, n_i)
    auto D = [&](u64 e) {
        u64 r = 1;
        for (u64 ni : g.invariants) r = checked_mul(r, std::gcd(e, ni));
        return r;
    };

    u128 count = 0;
    for (u64 d : ds) {
        auto fd = factorize(d);
        auto dd = divisors(fd);
        i128 Nd = 0; // elements of exact order d, by Moebius inversion over e | d
        for (u64 e : dd) {
            int mu = moebius(factorize(d / e));
            if (mu == 0) continue;
            Nd += static_cast<i128>(mu) * D(e);
        }
        if (Nd < 0) throw consistency_error("oracle_cyclic_count: negative order count");
        u64 phi_d = euler_phi(fd);
        if (static_cast<u128>(Nd) % phi_d != 0)
            throw consistency_error("oracle_cyclic_count: N_d not divisible by phi(d)");
        count += static_cast<u128>(Nd) / phi_d;
    }
    return to_u64_checked(count, "oracle_cyclic_count overflow");
}

namespace {

// Element sets of subgroups of Z_m x Z_n as bitsets over indices i*n + j.
struct Bitset {
    std::vector<u64> w;
    bool operator==(const Bitset&) const = default;
    void set(u64 bit) { w[bit >> 6] |= u64(1) << (bit & 63); }
    std::size_t count() const {
        std::size_t c = 0;
        for (u64 x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const {
        u64 h = 1469598103934665603ull;
        for (u64 x : b.w) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace

u64 oracle_subgroup_count(u64 m, u64 n) {
    if (m == 0 || n == 0) throw domain_error("oracle_subgroup_count: arguments must be positive");
    u64 N = m * n;
    if (N > 2000) throw capacity_error("oracle_subgroup_count: mn exceeds 2000");
    std::size_t words = (N + 63) / 64;

    // Every subgroup of Z_m x Z_n is generated by at most two elements, so
    // closing all <g, h> = <g> + <h> sumsets enumerates the full lattice.
    // Distinct pairs of cyclic subgroups suffice: <g, h> depends only on them.
    std::vector<std::vector<u64>> cyclics; // element lists
    std::unordered_set<Bitset, BitsetHash> seen_cyclic;
    for (u64 a = 0; a < m; ++a)
        for (u64 b = 0; b < n; ++b) {
            Bitset bs;
            bs.w.assign(words, 0);
            std::vector<u64> elems;
            u64 x = 0, y = 0;
            do {
                bs.set(x * n + y);
                elems.push_back(x * n + y);
                x = (x + a) % m;
                y = (y + b) % n;
            } while (x != 0 || y != 0);
            if (seen_cyclic.insert(bs).second) cyclics.push_back(std::move(elems));
        }

    std::unordered_set<Bitset, BitsetHash> subgroups;
    for (std::size_t i = 0; i < cyclics.size(); ++i)
        for (std::size_t j = i; j < cyclics.size(); ++j) {
            Bitset bs;
            bs.w.assign(words, 0);
            for (u64 e1 : cyclics[i]) {
                u64 x1 = e1 / n, y1 = e1 % n;
                for (u64 e2 : cyclics[j]) {
                    u64 x2 = e2 / n, y2 = e2 % n;
                    bs.set(((x1 + x2) % m) * n + (y1 + y2) % n);
                }
            }
            subgroups.insert(std::move(bs));
        }
    return subgroups.size();
}

} // namespace rsc::counts
