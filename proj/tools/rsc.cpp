// rsc: exact cyclic-subgroup counting for Z_l x Z_m x Z_n, the summatory
// function D_3c, the degree-9 main-term polynomial from the residue engine,
// and error-term diagnostics.
//
// Exit codes: 0 success, 1 computation/verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsc/analysis.hpp"
#include "rsc/counts.hpp"
#include "rsc/pipeline.hpp"
#include "rsc/zeta.hpp"

using namespace rsc;

namespace {

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw input_error("cannot open output file: " + path);
        os << text;
    }
}

// CSV outputs carry the run configuration and a content hash as comments.
std::string csv_with_meta(const std::string& body, const pipeline::RunConfig& cfg) {
    nlohmann::json c = pipeline::config_json(cfg);
    std::string out = "# config " + c.dump() + "\n";
    out += "# content_hash " + pipeline::content_hash(nlohmann::json(body)) + "\n";
    out += body;
    return out;
}

std::vector<Real> tseries_from_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw input_error("cannot open t-series file: " + path);
    nlohmann::json j = nlohmann::json::parse(is);
    std::vector<Real> c;
    for (const auto& s : j.at("c")) c.emplace_back(s.get<std::string>());
    return c;
}

int cmd_count(const std::vector<u64>& cyclic, const std::vector<u64>& subgroups, bool verify) {
    if (!cyclic.empty()) {
        u64 n1 = cyclic[0];
        u64 n2 = cyclic.size() > 1 ? cyclic[1] : 1;
        u64 n3 = cyclic.size() > 2 ? cyclic[2] : 1;
        u64 c = counts::c_rank3(n1, n2, n3);
        std::cout << "c(" << n1 << "," << n2 << "," << n3 << ") = " << c << "\n";
        if (verify) {
            u128 order = u128(n1) * n2 * n3;
            if (order <= 1000000) {
                u64 o = counts::oracle_cyclic_count({{n1, n2, n3}});
                std::cout << "oracle = " << o << (o == c ? "  [agrees]" : "  [MISMATCH]") << "\n";
                if (o != c) return 1;
            } else {
                std::cout << "oracle skipped (order exceeds 10^6)\n";
            }
        }
    }
    if (!subgroups.empty()) {
        u64 m = subgroups[0], n = subgroups[1];
        u64 s = counts::s_rank2(m, n);
        std::cout << "s(" << m << "," << n << ") = " << s << "\n";
        if (verify) {
            if (m * n <= 2000) {
                u64 o = counts::oracle_subgroup_count(m, n);
                std::cout << "oracle = " << o << (o == s ? "  [agrees]" : "  [MISMATCH]") << "\n";
                if (o != s) return 1;
            } else {
                std::cout << "oracle skipped (mn exceeds 2000)\n";
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rsc: subgroup counting, summatory sieve and error-term toolkit"};
    app.require_subcommand(1);

    // ---- count ----
    auto* count = app.add_subcommand("count", "evaluate c(n1[,n2[,n3]]) or s(m,n)");
    std::vector<u64> cyc, sub;
    bool count_verify = false;
    count->add_option("--cyclic", cyc, "invariants for the cyclic-subgroup count")
        ->expected(1, 3)
        ->check(CLI::PositiveNumber);
    count->add_option("--subgroups", sub, "m n for the subgroup count")
        ->expected(2)
        ->check(CLI::PositiveNumber);
    count->add_flag("--verify", count_verify, "also run the independent oracle");

    // ---- shared numeric options ----
    pipeline::RunConfig cfg;
    std::string output, format = "json", method = "accelerated", tseries_path, checkpoint_path;
    std::vector<u64> sample_xs;

    auto add_common = [&](CLI::App* c, bool with_xmax) {
        if (with_xmax)
            c->add_option("--x-max", cfg.x_max, "sieve range")->envname("RSC_X_MAX");
        c->add_option("--precision-digits", cfg.precision_digits, "working precision (decimal digits)")
            ->envname("RSC_PRECISION_DIGITS");
        c->add_option("--prime-cutoff", cfg.prime_cutoff, "Euler-product prime cutoff")
            ->envname("RSC_PRIME_CUTOFF");
        c->add_option("--truncation", cfg.truncation_e, "local-factor truncation E")
            ->envname("RSC_TRUNCATION");
        c->add_option("--threads", cfg.threads, "thread count (0 = hardware)")->envname("RSC_THREADS");
        c->add_option("--output", output, "output path (default stdout)")->envname("RSC_OUTPUT");
        c->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->envname("RSC_FORMAT");
    };

    auto* sv = app.add_subcommand("sieve", "sieve f(k) and D_3c up to x-max");
    add_common(sv, true);
    sv->add_option("--checkpoints", checkpoint_path, "write binary checkpoint records (u64 x, u128 D)");

    auto* tc = app.add_subcommand("tconst", "Taylor coefficients of the singular factor T at s=1");
    add_common(tc, false);
    tc->add_option("--method", method, "direct or accelerated")->check(CLI::IsMember({"direct", "accelerated"}));

    auto* mt = app.add_subcommand("mainterm", "main-term polynomial A_0..A_9 by residue computation");
    add_common(mt, false);
    mt->add_option("--tseries", tseries_path, "JSON file from `tconst` (default: computed in-process)");

    auto* dl = app.add_subcommand("delta", "error term Delta_3c at sample points");
    add_common(dl, true);
    dl->add_option("--x", sample_xs, "extra sample points")->check(CLI::PositiveNumber);

    auto* ms = app.add_subcommand("meansquare", "mean-square integral of Delta_3c");
    add_common(ms, true);

    auto* vf = app.add_subcommand("verify", "full pipeline with verification gates");
    add_common(vf, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) {
            if (cyc.empty() && sub.empty()) {
                std::cerr << "count: supply --cyclic or --subgroups\n";
                return 2;
            }
            return cmd_count(cyc, sub, count_verify);
        }

        if (sv->parsed()) {
            cfg.validate();
            auto table = sieve::sieve_f(cfg.x_max, cfg.threads);
            if (!checkpoint_path.empty()) {
                std::ofstream os(checkpoint_path, std::ios::binary);
                if (!os) throw input_error("cannot open checkpoint file: " + checkpoint_path);
                sieve::write_checkpoints(os, table);
            }
            if (format == "csv") {
                std::ostringstream os;
                sieve::write_csv(os, table);
                emit(csv_with_meta(os.str(), cfg), output);
            } else {
                nlohmann::json j;
                j["config"] = pipeline::config_json(cfg);
                nlohmann::json cps = nlohmann::json::array();
                for (const auto& cp : table.checkpoints())
                    cps.push_back({{"x", cp.x}, {"D", sieve::u128_str(cp.d)}});
                j["checkpoints"] = cps;
                pipeline::attach_hash(j);
                emit(j.dump(2), output);
            }
            return 0;
        }

        if (tc->parsed()) {
            cfg.validate();
            singular::TSeries ts = method == "direct"
                                       ? singular::t_series_direct(cfg.prime_cutoff, cfg.truncation_e,
                                                                   cfg.precision_digits)
                                       : singular::t_series_accelerated(cfg.truncation_e, cfg.precision_digits);
            nlohmann::json j = pipeline::tseries_json(ts, cfg.precision_digits);
            j["config"] = pipeline::config_json(cfg);
            pipeline::attach_hash(j);
            emit(j.dump(2), output);
            return 0;
        }

        if (mt->parsed()) {
            cfg.validate();
            std::vector<Real> c;
            PrecisionScope scope(cfg.precision_digits + 10);
            if (!tseries_path.empty())
                c = tseries_from_file(tseries_path);
            else
                c = singular::t_series_accelerated(cfg.truncation_e, cfg.precision_digits).c;
            auto poly = mainterm::residue_main_term(c, cfg.precision_digits);
            nlohmann::json j = pipeline::mainterm_json(poly, cfg.precision_digits);
            j["config"] = pipeline::config_json(cfg);
            pipeline::attach_hash(j);
            emit(j.dump(2), output);
            return 0;
        }

        if (dl->parsed() || ms->parsed()) {
            cfg.validate();
            auto table = sieve::sieve_f(cfg.x_max, cfg.threads, sample_xs);
            auto ts = singular::t_series_accelerated(cfg.truncation_e, cfg.precision_digits);
            auto poly = mainterm::residue_main_term(ts.c, cfg.precision_digits);
            auto ep = analysis::error_profile(table, poly, cfg.threads);
            if (dl->parsed()) {
                if (format == "csv") {
                    emit(csv_with_meta(pipeline::profile_delta_csv(ep, cfg.precision_digits), cfg), output);
                } else {
                    nlohmann::json j;
                    j["config"] = pipeline::config_json(cfg);
                    nlohmann::json rows = nlohmann::json::array();
                    for (const auto& sp : ep.samples)
                        rows.push_back({{"x", sp.x},
                                        {"D", sieve::u128_str(sp.d)},
                                        {"main", real_str(sp.main, cfg.precision_digits)},
                                        {"delta", real_str(sp.delta, cfg.precision_digits)}});
                    j["samples"] = rows;
                    pipeline::attach_hash(j);
                    emit(j.dump(2), output);
                }
            } else {
                if (format == "csv") {
                    emit(csv_with_meta(pipeline::profile_meansq_csv(ep), cfg), output);
                } else {
                    nlohmann::json j;
                    j["config"] = pipeline::config_json(cfg);
                    nlohmann::json rows = nlohmann::json::array();
                    for (const auto& mp : ep.meansq)
                        rows.push_back({{"T", mp.T}, {"M", static_cast<double>(mp.m)}});
                    j["mean_square"] = rows;
                    if (ep.meansq.size() >= 6) {
                        j["alpha"] = ep.fit.alpha;
                        j["r2"] = ep.fit.r2;
                    }
                    j["max_rel_error"] = ep.max_rel_error;
                    pipeline::attach_hash(j);
                    emit(j.dump(2), output);
                }
            }
            return 0;
        }

        if (vf->parsed()) {
            nlohmann::json report = pipeline::run_pipeline(cfg);
            emit(report.dump(2), output);
            return report["gates"]["all_pass"].get<bool>() ? 0 : 1;
        }
    } catch (const input_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
