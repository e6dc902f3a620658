#pragma once

#include <string>

#include "json.hpp"
#include "rsc/analysis.hpp"
#include "rsc/singular.hpp"

namespace rsc::pipeline {

struct RunConfig {
    u64 x_max = 10000;
    unsigned precision_digits = kDefaultDigits;
    u64 prime_cutoff = 100000;
    int truncation_e = 16;
    int threads = 0;
    int quad_order = 8;

    void validate() const; // rejects invalid combinations before any work
};

nlohmann::json config_json(const RunConfig& cfg);
nlohmann::json tseries_json(const singular::TSeries& ts, unsigned out_digits);
nlohmann::json mainterm_json(const mainterm::MainTermPolynomial& poly, unsigned out_digits);

// FNV-1a over the canonical serialization; embedded as "content_hash".
std::string content_hash(const nlohmann::json& payload);
void attach_hash(nlohmann::json& j);

// sieve -> tconst (accelerated) -> mainterm -> delta -> meansquare.
// Returns the full report; report["gates"]["all_pass"] mirrors the exit status.
nlohmann::json run_pipeline(const RunConfig& cfg);

// CSV emitters (analysis external interface)
std::string profile_delta_csv(const analysis::ErrorProfile& ep, unsigned out_digits);
std::string profile_meansq_csv(const analysis::ErrorProfile& ep);

} // namespace rsc::pipeline
