#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hermspec/bounds.hpp"

namespace hermspec {

struct ScanConfig {
    int n_min = 1, n_max = 4;        // inclusive, within [1,7]
    std::vector<OmegaSpec> omegas;
    bool dedup = false;
    SpectrumMode mode = SpectrumMode::Float;
    std::string csv_path;            // per-(digraph,eigenvalue,bound) rows when set
    int threads = 0;                 // 0 = hardware concurrency
    bool fail_fast = false;
    bool check_constructions = true; // verify shifted rank/PSD wherever a case applies
};

struct TightInstance {
    std::string canonical;
    std::string omega;
    double lambda = 0;
    std::string bound;
    bool operator<(const TightInstance& o) const {
        return std::tie(canonical, omega, bound, lambda) <
               std::tie(o.canonical, o.omega, o.bound, o.lambda);
    }
    bool operator==(const TightInstance& o) const {
        return canonical == o.canonical && omega == o.omega && bound == o.bound &&
               lambda == o.lambda;
    }
};

struct ScanReport {
    uint64_t digraphs = 0;
    uint64_t eigenvalues = 0;
    uint64_t bounds_evaluated = 0;   // applicable entries checked
    std::vector<std::string> violations;  // empty on a correct build
    std::vector<TightInstance> tight;     // sorted, unique
    std::map<long long, uint64_t> slack_histogram;
    uint64_t construction_checks = 0;
    uint64_t construction_failures = 0;
    uint64_t exact_rechecks = 0;     // float diagnostics resolved in exact mode

    bool ok() const { return violations.empty() && construction_failures == 0; }
    std::string summary_json() const;
};

ScanReport run_scan(const ScanConfig& cfg);

// Built-in reference checklist: re-derives the fixed constants and identities
// the library is built around and prints one status line per item.
// Returns true when every item passes.
bool verify_anchors(std::ostream& out);

} // namespace hermspec
