#include "rsc/pipeline.hpp"

#include <cmath>
#include <cstdio>

#include "rsc/counts.hpp"
#include "rsc/zeta.hpp"

namespace rsc::pipeline {

namespace {

std::string ld_str(long double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.18Le", v);
    return buf;
}

std::string d_str(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void RunConfig::validate() const {
    if (x_max < 1 || x_max > sieve::kXMaxCapacity) throw input_error("config: x_max out of [1, 10^8]");
    if (precision_digits < 20 || precision_digits > 300) throw input_error("config: precision_digits out of [20, 300]");
    if (prime_cutoff < 1000 || prime_cutoff > 100000000) throw input_error("config: prime_cutoff out of [10^3, 10^8]");
    if (truncation_e < 10 || truncation_e > 24) throw input_error("config: truncation out of [10, 24]");
    if (threads < 0 || threads > 256) throw input_error("config: threads out of [0, 256]");
    if (quad_order < 2 || quad_order > 64) throw input_error("config: quad order out of [2, 64]");
}

// The thread count is an execution knob with no effect on results, so it is
// not part of the embedded config: outputs are byte-identical across runs
// with different --threads.
nlohmann::json config_json(const RunConfig& cfg) {
    return nlohmann::json{{"x_max", cfg.x_max},
                          {"precision_digits", cfg.precision_digits},
                          {"prime_cutoff", cfg.prime_cutoff},
                          {"truncation_E", cfg.truncation_e},
                          {"quad_order", cfg.quad_order}};
}

nlohmann::json tseries_json(const singular::TSeries& ts, unsigned out_digits) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& v : ts.c) c.push_back(real_str(v, out_digits));
    return nlohmann::json{{"c", c},
                          {"method", ts.method},
                          {"E", ts.truncation},
                          {"prime_cutoff", ts.prime_cutoff},
                          {"tail_bound", real_str(ts.tail_bound, 6)},
                          {"precision_digits", ts.precision_digits}};
}

nlohmann::json mainterm_json(const mainterm::MainTermPolynomial& poly, unsigned out_digits) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : poly.A) a.push_back(real_str(v, out_digits));
    nlohmann::json t = nlohmann::json::array();
    for (const auto& v : poly.t_series_used) t.push_back(real_str(v, out_digits));
    return nlohmann::json{{"A", a}, {"precision_digits", poly.precision_digits}, {"t_series", t}};
}

std::string content_hash(const nlohmann::json& payload) {
    std::string s = payload.dump();
    u64 h = 14695981039346656037ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void attach_hash(nlohmann::json& j) {
    j.erase("content_hash");
    j["content_hash"] = content_hash(j);
}

std::string profile_delta_csv(const analysis::ErrorProfile& ep, unsigned out_digits) {
    std::string out = "x,D,main,delta\n";
    for (const auto& sp : ep.samples) {
        out += std::to_string(sp.x);
        out += ',';
        out += sieve::u128_str(sp.d);
        out += ',';
        out += real_str(sp.main, out_digits);
        out += ',';
        out += real_str(sp.delta, out_digits);
        out += '\n';
    }
    return out;
}

std::string profile_meansq_csv(const analysis::ErrorProfile& ep) {
    std::string out = "T,M,alpha_partial\n";
    for (const auto& mp : ep.meansq) {
        out += std::to_string(mp.T);
        out += ',';
        out += ld_str(mp.m);
        out += ',';
        out += std::isnan(mp.alpha_partial) ? std::string() : d_str(mp.alpha_partial);
        out += '\n';
    }
    return out;
}

nlohmann::json run_pipeline(const RunConfig& cfg) {
    cfg.validate();
    const unsigned digits = cfg.precision_digits;
    PrecisionScope scope(digits);

    nlohmann::json report;
    report["config"] = config_json(cfg);
    nlohmann::json gates;

    // ---- sieve ----
    sieve::SummatoryTable table = sieve::sieve_f(cfg.x_max, cfg.threads);
    {
        bool ok = table.f(1) == 1;
        if (cfg.x_max >= 4)
            ok = ok && table.f(2) == 6 && table.f(4) == 21 && table.d(4) == 34;
        u64 upto = std::min<u64>(cfg.x_max, 2000);
        for (u64 k = 1; k <= upto && ok; ++k) ok = table.f(k) == sieve::direct_f(k);
        gates["sieve_matches_direct"] = ok;
    }
    {
        nlohmann::json cps = nlohmann::json::array();
        for (const auto& cp : table.checkpoints())
            cps.push_back({{"x", cp.x}, {"D", sieve::u128_str(cp.d)}});
        report["sieve"] = {{"x_max", cfg.x_max}, {"checkpoints", cps}};
    }

    // ---- singular series ----
    singular::TSeries ts = singular::t_series_accelerated(cfg.truncation_e, digits);
    report["tseries"] = tseries_json(ts, digits);
    {
        // convolution identity against the sieve (certifies the local factor)
        singular::LocalFactorSeries lfs = singular::generic_local_factor(cfg.truncation_e);
        u64 xid = std::min<u64>(cfg.x_max, 10000);
        gates["dirichlet_identity"] = sieve::dirichlet_identity_check(
            xid, [&](u64 p, int j) { return singular::t_coefficient(lfs, p, j); });

        // cross-method agreement within the certified tails
        u64 pcut = std::min<u64>(cfg.prime_cutoff, 100000);
        singular::TSeries td = singular::t_series_direct(pcut, cfg.truncation_e, digits);
        Real tails = td.tail_bound + ts.tail_bound;
        bool ok0 = abs(td.c[0] - ts.c[0]) <= tails;
        bool ok1 = abs(td.c[1] - ts.c[1]) <= tails * 2 * log(Real(pcut));
        gates["tseries_cross_method"] = ok0 && ok1;
        report["tseries_direct_check"] = {{"prime_cutoff", pcut},
                                          {"rel_c0", real_str(abs(td.c[0] / ts.c[0] - 1), 4)},
                                          {"rel_c1", real_str(abs(td.c[1] / ts.c[1] - 1), 4)}};
    }

    // ---- main term ----
    mainterm::MainTermPolynomial poly = mainterm::residue_main_term(ts.c, digits);
    report["mainterm"] = mainterm_json(poly, digits);
    gates["leading_coefficient_positive"] = poly.A[9] > 0;
    {
        // closed-form anchors through the residue engine with T == 1
        mainterm::MainTermPolynomial unit = mainterm::residue_main_term({Real(1)}, digits);
        Real g0 = mainterm::stieltjes(0, digits);
        Real a9_ref = Real(1) / 8709120;
        Real a8_ref = (15 * g0 - 1) / 967680;
        int tol9 = std::min(40u, digits - 15);
        int tol8 = std::min(35u, digits - 20);
        gates["residue_anchor_A9"] = abs(unit.A[9] / a9_ref - 1) < pow(Real(10), -tol9);
        gates["residue_anchor_A8"] = abs(unit.A[8] / a8_ref - 1) < pow(Real(10), -tol8);
    }

    // ---- error analysis ----
    analysis::ErrorProfile ep = analysis::error_profile(table, poly, cfg.threads);
    {
        nlohmann::json oct = nlohmann::json::array();
        for (const auto& om : ep.dyadic_max)
            oct.push_back({{"k", om.k},
                           {"max_abs", ld_str(om.max_abs)},
                           {"over_x", ld_str(om.max_abs / ldexpl(1.0L, om.k))}});
        nlohmann::json ms = nlohmann::json::array();
        for (const auto& mp : ep.meansq) {
            nlohmann::json row = {{"T", mp.T}, {"M", ld_str(mp.m)}};
            if (std::isnan(mp.alpha_partial))
                row["alpha_partial"] = nullptr;
            else
                row["alpha_partial"] = d_str(mp.alpha_partial);
            ms.push_back(row);
        }
        report["analysis"] = {{"max_rel_error", d_str(ep.max_rel_error)},
                              {"octave_max", oct},
                              {"mean_square", ms}};
        if (ep.meansq.size() >= 6) {
            report["analysis"]["alpha"] = d_str(ep.fit.alpha);
            report["analysis"]["r2"] = d_str(ep.fit.r2);
        }

        if (cfg.x_max >= 1000000) {
            Real dl = analysis::delta(cfg.x_max, table, poly);
            u128 dv = table.d(cfg.x_max);
            Real dr = Real(static_cast<u64>(dv >> 64)) * pow(Real(2), 64) + Real(static_cast<u64>(dv));
            gates["relative_error_2pct"] = abs(dl / dr) < Real("0.02");
        }

        // strict decrease of the octave sup relative to the octave base
        bool have16 = false, decreasing = true;
        long double prev = 0;
        for (const auto& om : ep.dyadic_max) {
            if (om.k < 16) continue;
            long double cur = om.max_abs / ldexpl(1.0L, om.k);
            if (have16 && cur >= prev) decreasing = false;
            prev = cur;
            have16 = true;
        }
        if (have16) gates["octave_ratio_decreasing"] = decreasing;

        if (!ep.meansq.empty()) {
            bool monotone = true;
            for (std::size_t i = 1; i < ep.meansq.size(); ++i)
                if (ep.meansq[i].m < ep.meansq[i - 1].m) monotone = false;
            gates["mean_square_monotone"] = monotone;
            if (ep.meansq.back().T == (u64(1) << 23)) gates["alpha_below_2.65"] = ep.fit.alpha <= 2.65;
        }

        // quadrature refinement stability at T = min(10^4, x_max)
        u64 tq = std::min<u64>(cfg.x_max, 10000);
        if (tq >= 16) {
            long double m8 = analysis::mean_square(tq, table, poly, cfg.quad_order, cfg.threads);
            long double m16 = analysis::mean_square(tq, table, poly, cfg.quad_order * 2, cfg.threads);
            long double rel = fabsl(m8 - m16) / fabsl(m16);
            gates["quadrature_stable"] = rel < 1e-6L;
            report["analysis"]["quadrature_rel_diff"] = ld_str(rel);
        }
    }

    bool all = true;
    for (const auto& [k, v] : gates.items())
        if (v.is_boolean() && !v.get<bool>()) all = false;
    gates["all_pass"] = all;
    report["gates"] = gates;
    attach_hash(report);
    return report;
}

} // namespace rsc::pipeline
