#pragma once

#include <vector>

#include "rsc/arith.hpp"

namespace rsc::counts {

// Cyclic-subgroup count of Z_{p^a} x Z_{p^b}:
//   c(p^a, p^b) = 2(1 + p + ... + p^{a-1}) + (b - a + 1) p^a   for a <= b.
// Arguments are normalized by swapping (the count is symmetric).
u64 c_pp(u64 p, u32 a, u32 b);

// Subgroup count of Z_{p^a} x Z_{p^b}:
//   s(p^a, p^b) = [(b-a+1)p^{a+2} - (b-a-1)p^{a+1} - (a+b+3)p + (a+b+1)] / (p-1)^2.
// The division is an exact integer identity; a nonzero remainder throws
// consistency_error.
u64 s_pp(u64 p, u32 a, u32 b);

// c(m, n) by divisor sum: sum over d | gcd(m,n) of (mu*phi)(d) tau(m/d) tau(n/d).
u64 c_rank2_divisor_sum(u64 m, u64 n);
// c(m, n) by Euler product of c_pp over primes of mn.
u64 c_rank2_euler_product(u64 m, u64 n);
// Runs both evaluation paths and checks agreement.
u64 c_rank2(u64 m, u64 n);

// s(m, n) by divisor sum: sum over d | gcd(m,n) of phi(d) tau(m/d) tau(n/d).
u64 s_rank2_divisor_sum(u64 m, u64 n);
u64 s_rank2_euler_product(u64 m, u64 n);
u64 s_rank2(u64 m, u64 n);

// Local cyclic-subgroup count c(p^a, p^b, p^c): triple divisor sum of
// phi(p^i) phi(p^j) phi(p^k) / phi(p^max), every term an exact integer.
u64 c_rank3_local(u64 p, u32 a, u32 b, u32 c);

// c(n1, n2, n3): exact count of cyclic subgroups of Z_{n1} x Z_{n2} x Z_{n3},
// multiplicative over the primes of n1 n2 n3.
u64 c_rank3(u64 n1, u64 n2, u64 n3);

struct GroupSpec {
    std::vector<u64> invariants; // (n_1, ..., n_r), r in {1, 2, 3}
};

// Independent oracle: counts cyclic subgroups by element-order statistics.
// N_d (elements of exact order d) comes from Moebius inversion of
// D_e = prod gcd(e, n_i); the count is sum N_d / phi(d).  Order <= 10^6.
u64 oracle_cyclic_count(const GroupSpec& g);

// Independent oracle: enumerates all subgroups of Z_m x Z_n by closing
// two-element generating sets and deduplicating element sets.  mn <= 2000.
u64 oracle_subgroup_count(u64 m, u64 n);

} // namespace rsc::counts
