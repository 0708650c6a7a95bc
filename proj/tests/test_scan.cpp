#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hermspec/scan.hpp"

using namespace hermspec;

TEST_CASE("tiny scans are clean and deterministic") {
    ScanConfig cfg;
    cfg.n_min = 1;
    cfg.n_max = 3;
    cfg.omegas = {OmegaSpec::preset(OmegaKind::PresetI),
                  OmegaSpec::preset(OmegaKind::PresetSixth)};
    ScanReport a = run_scan(cfg);
    ScanReport b = run_scan(cfg);
    CHECK(a.digraphs == (4 + 64 + 1) * 2);  // n=1:1, n=2:4, n=3:64, times two omegas
    CHECK(a.ok());
    CHECK(a.summary_json() == b.summary_json());  // byte-identical reports
    // single-digon tight case shows up at n = 2
    bool digon_tight = false;
    for (const auto& t : a.tight)
        if (t.canonical == "1") digon_tight = true;
    CHECK(digon_tight);
}

TEST_CASE("labeled and dedup scans agree on violations") {
    ScanConfig cfg;
    cfg.n_min = 3;
    cfg.n_max = 3;
    cfg.omegas = {OmegaSpec::preset(OmegaKind::PresetNegSixth)};
    ScanReport labeled = run_scan(cfg);
    cfg.dedup = true;
    ScanReport dedup = run_scan(cfg);
    CHECK(labeled.ok());
    CHECK(dedup.ok());
    CHECK(dedup.digraphs < labeled.digraphs);
    // bounds are isomorphism invariant: the tight canonical codes coincide
    CHECK(labeled.tight == dedup.tight);
}

TEST_CASE("conjugate omegas give identical statistics") {
    for (auto [k, kc] : {std::pair{OmegaKind::PresetI, OmegaKind::PresetIConj},
                         std::pair{OmegaKind::PresetSixth, OmegaKind::PresetSixthConj}}) {
        ScanConfig cfg;
        cfg.n_min = 3;
        cfg.n_max = 3;
        cfg.omegas = {OmegaSpec::preset(k)};
        ScanReport a = run_scan(cfg);
        cfg.omegas = {OmegaSpec::preset(kc)};
        ScanReport b = run_scan(cfg);
        CHECK(a.violations.size() == b.violations.size());
        CHECK(a.bounds_evaluated == b.bounds_evaluated);
        CHECK(a.slack_histogram == b.slack_histogram);
        CHECK(a.tight.size() == b.tight.size());
    }
}

TEST_CASE("fail-fast and config validation") {
    ScanConfig cfg;
    cfg.n_min = 0;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);
    cfg.n_min = 1;
    cfg.n_max = 2;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);  // no omegas
}

TEST_CASE("csv output has the documented columns") {
    ScanConfig cfg;
    cfg.n_min = 2;
    cfg.n_max = 2;
    cfg.omegas = {OmegaSpec::preset(OmegaKind::PresetI)};
    cfg.csv_path = "scan_test_rows.csv";
    ScanReport rep = run_scan(cfg);
    CHECK(rep.ok());
    std::ifstream f(cfg.csv_path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "code,omega,lambda,mult,main,d,p,q,bound,value,slack");
    std::remove(cfg.csv_path.c_str());
}

TEST_CASE("anchor checklist passes") {
    std::ostringstream out;
    bool ok = verify_anchors(out);
    INFO(out.str());
    CHECK(ok);
    CHECK(out.str().find("[FAIL]") == std::string::npos);
}
