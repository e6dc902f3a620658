#include "doctest.h"

#include "rsc/pipeline.hpp"

using namespace rsc;
using namespace rsc::pipeline;

TEST_CASE("config validation") {
    RunConfig cfg;
    cfg.validate();
    RunConfig bad = cfg;
    bad.x_max = 0;
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = cfg;
    bad.precision_digits = 10;
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = cfg;
    bad.truncation_e = 30;
    CHECK_THROWS_AS(bad.validate(), input_error);
    bad = cfg;
    bad.prime_cutoff = 10;
    CHECK_THROWS_AS(bad.validate(), input_error);
}

TEST_CASE("content hash is stable and sensitive") {
    nlohmann::json a = {{"x", 1}, {"y", "z"}};
    nlohmann::json b = {{"x", 2}, {"y", "z"}};
    CHECK(content_hash(a) == content_hash(a));
    CHECK(content_hash(a) != content_hash(b));
    nlohmann::json j = a;
    attach_hash(j);
    CHECK(j.contains("content_hash"));
}

TEST_CASE("pipeline smoke run passes its gates and is idempotent") {
    RunConfig cfg;
    cfg.x_max = 4000;
    cfg.precision_digits = 60;
    cfg.prime_cutoff = 50000;
    cfg.threads = 1;
    auto r1 = run_pipeline(cfg);
    CHECK(r1["gates"]["all_pass"].get<bool>());
    CHECK(r1["gates"]["sieve_matches_direct"].get<bool>());
    CHECK(r1["gates"]["dirichlet_identity"].get<bool>());
    CHECK(r1["gates"]["tseries_cross_method"].get<bool>());
    CHECK(r1["gates"]["residue_anchor_A9"].get<bool>());
    CHECK(r1["gates"]["residue_anchor_A8"].get<bool>());
    CHECK(r1["mainterm"]["A"].size() == 10);
    CHECK(r1["tseries"]["c"].size() == 10);

    auto r2 = run_pipeline(cfg);
    CHECK(r1.dump() == r2.dump()); // idempotent, identical hash included

    cfg.threads = 2;
    auto r4 = run_pipeline(cfg);
    CHECK(r1.dump() == r4.dump()); // thread count does not reach the output
}

TEST_CASE("csv emitters have the contracted columns") {
    analysis::ErrorProfile ep;
    analysis::SamplePoint sp;
    sp.x = 4;
    sp.d = 34;
    sp.main = Real("33.5");
    sp.delta = Real("0.5");
    ep.samples.push_back(sp);
    ep.meansq.push_back({16384, 1.0e10L, std::numeric_limits<double>::quiet_NaN()});
    ep.meansq.push_back({32768, 8.0e10L, 3.0});
    std::string d = profile_delta_csv(ep, 20);
    CHECK(d.rfind("x,D,main,delta\n", 0) == 0);
    CHECK(d.find("4,34,") != std::string::npos);
    std::string m = profile_meansq_csv(ep);
    CHECK(m.rfind("T,M,alpha_partial\n", 0) == 0);
    CHECK(m.find("16384,") != std::string::npos);
}
