#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hermspec/charpoly.hpp"
#include "hermspec/hermitian.hpp"

namespace hermspec {

// two float eigenvalue clusters closer than 10x the clustering tolerance
struct ClusteringAmbiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigRecord {
    double lambda = 0;
    int mult = 0;
    double main_angle_sq = 0;  // beta_i^2 = |P_i 1|^2 / n
    bool is_main = false;      // beta_i^2 > main-angle threshold
    int codim = 0;             // d_i = n - mult
    int p = 0, q = 0;          // inertia split of the spectrum relative to lambda_i
    bool exact_known = false;
    bool is_integer_eig = false;  // exact mode: rational eigenvalue (hence integer)
    long long integer_value = 0;
};

struct Spectrum {
    int n = 0;
    bool exact_mode = false;
    std::vector<EigRecord> eigs;      // strictly decreasing lambda
    std::vector<long long> charpoly;  // ascending coefficients, exact mode only

    const EigRecord& top() const { return eigs.front(); }
    const EigRecord& bottom() const { return eigs.back(); }
    int s() const { return (int)eigs.size(); }
    double beta_sq_sum() const;
    // exact when available, else |lambda - v| < 1e-9
    bool lambda_is(int idx, long long v) const;
};

inline constexpr double kMainAngleThreshold = 1e-12;
inline constexpr double kClusterTolScale = 1e-8;
inline constexpr double kValueMatchTol = 1e-9;

// Float path: dense selfadjoint eigensolve, clustering at kClusterTolScale *
// spectral radius, diagnostic if two clusters sit closer than 10x tolerance.
Spectrum spectrum_float(const HermitianMatrix& h);

// Exact path: integer charpoly, square-free factorization for multiplicities,
// Sturm-isolated values; main angles still come from the float eigenvectors.
// Preset omega only.
Spectrum spectrum_exact(const HermitianMatrix& h);

// exact distinct (value, multiplicity) pairs, descending; fast root refinement
// (companion-free: float roots of exact square-free factors polished by Newton)
std::vector<std::pair<double, int>> exact_eigenvalues_fast(const HermitianMatrix& h);

std::string spectrum_to_json(const Spectrum& s);

} // namespace hermspec
