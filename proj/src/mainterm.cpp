#include "rsc/mainterm.hpp"

#include "rsc/error.hpp"
#include "rsc/zeta.hpp"

namespace rsc::mainterm {

StieltjesTable stieltjes_table(int kmax, unsigned digits) {
    if (kmax < 0 || kmax > 40) throw input_error("stieltjes_table: kmax out of [0, 40]");
    PrecisionScope scope(digits);
    StieltjesTable st;
    st.gamma = zeta::stieltjes_table(kmax);
    st.precision_digits = digits;
    // Euler's constant to seven digits; a failed anchor means the summation is broken
    if (abs(st.gamma[0] - Real("0.5772157")) > Real("2e-7"))
        throw consistency_error("stieltjes_table: gamma_0 fails its 7-digit anchor");
    return st;
}

Real stieltjes(int k, unsigned digits) {
    if (k < 0 || k > 12) throw input_error("stieltjes: k out of [0, 12]");
    return stieltjes_table(k, digits).gamma[static_cast<std::size_t>(k)];
}

LaurentSeries zeta_laurent(int a, int N, const StieltjesTable& st) {
    if (a < 1 || a > 3) throw input_error("zeta_laurent: scale must be 1, 2 or 3");
    if (N < 0 || static_cast<std::size_t>(N) + 1 > st.gamma.size())
        throw input_error("zeta_laurent: N exceeds Stieltjes table");
    std::vector<Real> c(static_cast<std::size_t>(N) + 2);
    c[0] = Real(1) / a; // coefficient of u^{-1}
    Real ak = 1;        // a^k
    Real kfact = 1;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            ak *= a;
            kfact *= k;
        }
        Real term = st.gamma[static_cast<std::size_t>(k)] * ak / kfact;
        c[static_cast<std::size_t>(k) + 1] = (k % 2 == 0) ? term : -term;
    }
    return LaurentSeries(-1, std::move(c));
}

MainTermPolynomial residue_main_term(const std::vector<Real>& t_taylor, unsigned digits,
                                     const StieltjesTable* st_override) {
    if (t_taylor.empty() || t_taylor.size() > 10)
        throw input_error("residue_main_term: need 1..10 Taylor coefficients");
    if (t_taylor[0] == 0) throw input_error("residue_main_term: T(1) must be nonzero");
    PrecisionScope scope(digits + 10);

    const int N = 16; // truncation beyond the pole; 9 needed, margin for products
    StieltjesTable st;
    if (st_override)
        st = *st_override;
    else
        st = stieltjes_table(N + 1, digits + 10);

    LaurentSeries z1 = zeta_laurent(1, N, st);
    LaurentSeries z2 = zeta_laurent(2, N, st);
    LaurentSeries z3 = zeta_laurent(3, N, st);

    LaurentSeries g = z1 * z1;
    g *= g;          // z1^4
    g *= z1 * z1;    // z1^6
    g *= z2 * z2 * z2;
    g *= z3;

    std::vector<Real> tc(t_taylor);
    tc.resize(10, Real(0));
    g *= LaurentSeries::taylor(tc);

    // 1/s = 1/(1+u) = sum (-1)^m u^m
    std::vector<Real> inv_s(static_cast<std::size_t>(N) + 1);
    for (int m = 0; m <= N; ++m) inv_s[static_cast<std::size_t>(m)] = (m % 2 == 0) ? 1 : -1;
    g *= LaurentSeries(0, std::move(inv_s));

    if (g.lo() != -10 || g.coeff(-10) == 0)
        throw consistency_error("residue_main_term: assembled pole order is not 10");
    if (g.trunc() < -1)
        throw precision_error("residue_main_term: truncation too small to reach u^{-1}");

    MainTermPolynomial poly;
    poly.precision_digits = digits;
    poly.t_series_used = t_taylor;
    Real rfact = 1;
    for (int r = 0; r <= 9; ++r) {
        if (r > 0) rfact *= r;
        poly.A[static_cast<std::size_t>(r)] = g.coeff(-1 - r) / rfact;
    }
    if (poly.A[9] * t_taylor[0] <= 0)
        throw consistency_error("residue_main_term: A9 sign disagrees with T(1)");
    return poly;
}

Real eval_main(const MainTermPolynomial& poly, const Real& x) {
    if (x < 1) throw input_error("eval_main: x >= 1 required");
    Real L = log(x);
    Real v = 0;
    for (int r = 9; r >= 0; --r) v = v * L + poly.A[static_cast<std::size_t>(r)];
    return x * v;
}

} // namespace rsc::mainterm
