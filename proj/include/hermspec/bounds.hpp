#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermspec/digraph.hpp"
#include "hermspec/harmonics.hpp"
#include "hermspec/scheme.hpp"
#include "hermspec/spectrum.hpp"
#include "hermspec/starcomp.hpp"

namespace hermspec {

// ---- closed-form bound values ----

// any non-main eigenvalue of codimension d >= 2, value split on whether omega
// is a primitive cube root of unity
long long bound_nonmain(int d, const OmegaSpec& w);

// largest/smallest eigenvalue; d >= 2 uses the main/non-main split, d = 1
// falls back to the one-dimensional four-point bound
long long bound_extreme(int d, bool is_main);

// interior eigenvalue, bound on n from the inertia pair (the nine-case table)
long long bound_inertia(int p, int q, LambdaClass lc, ReClass rc);
// the doubled (2n) form of the same cell
long long bound_inertia_doubled(int p, int q, LambdaClass lc, ReClass rc);

// generic rank bound: C(d + L, L)
long long bound_bukh(int d, int l_size);

// rank of f[M] for f supported on S: sum of C(r+k-1,k) C(r+l-1,l)
long long rank_bound_entrywise(int r, const LowerSet& S);

// entrywise application of f(z, zbar) = sum c_{k,l} z^k zbar^l
Eigen::MatrixXcd apply_poly_entrywise(const Eigen::MatrixXcd& M,
                                      const std::vector<std::tuple<int, int, double>>& terms);

// ---- gated report entries ----

struct BoundEntry {
    std::string name;
    bool applicable = false;
    std::string reason;   // why not applicable, or "ok"
    long long value = 0;  // bound on n (meaningful even when inapplicable, where defined)
    long long slack = 0;  // value - n (when applicable)
    bool tight = false;
};

struct EigBounds {
    int index = 0;  // position in the descending distinct-eigenvalue list
    double lambda = 0;
    std::vector<BoundEntry> entries;
};

struct BoundReport {
    Spectrum spectrum;
    std::vector<EigBounds> per_eig;
    // applicable entries with value < n; empty for correct inputs
    std::vector<std::string> violations;
};

enum class SpectrumMode { Float, Exact };

BoundReport evaluate_all(const Digraph& g, const OmegaSpec& w,
                         SpectrumMode mode = SpectrumMode::Float);

std::string bound_report_to_json(const BoundReport& r);

// ---- shifted rank-drop constructions ----

enum class ShiftCase {
    BottomNonMain,    // least eigenvalue non-main
    TopNonMain,       // largest eigenvalue non-main
    PenultWithMainBottom,  // second-smallest non-main negative, least eigenvalue main simple
    SecondWithMainTop,     // second-largest non-main positive, largest eigenvalue main simple
};

struct ShiftedConstruction {
    ShiftCase which;
    int eig_index = 0;  // target eigenvalue position
    double c = 0;       // shift constant
    int rank = 0;       // rank of H + cJ - lambda I
    int expected_rank = 0;  // d_j - 1
    double min_eig = 0;     // of I - H/lambda - (c/lambda) J
    bool psd = false;
    bool rank_ok = false;
};

// Applies the requested case after checking its hypotheses (main/non-main
// pattern, sign of the main-angle sum, simple extreme eigenvalue where
// required); throws std::domain_error("construction undefined") otherwise.
ShiftedConstruction shifted_construction(const Spectrum& sp, const HermitianMatrix& h,
                                         ShiftCase which);

// hypothesis check only; empty optional when the case does not apply
std::optional<double> shift_constant(const Spectrum& sp, ShiftCase which);

// ---- generalized Neumaier bound for regular simple graphs ----

struct NeumaierResult {
    bool applicable = false;
    std::string reason;
    long long value = 0;             // d(d-1)/2
    std::optional<double> forbidden; // the excluded eigenvalue value, when defined
};

// g must be simple (digons only) connected k-regular for applicability;
// eig_index selects lambda; exact eigenvalue comparisons when sp is exact
NeumaierResult bound_neumaier_general(const Digraph& g, const Spectrum& sp, int eig_index);

// ---- Krein condition cross-check on strongly regular spectra ----

struct KreinCheck {
    // classical Krein equality and its forbidden-eigenvalue reformulation, for
    // (i,j) = (1,2) and (2,1)
    bool krein_12 = false, krein_21 = false;
    std::optional<bool> gkrein_12, gkrein_21;  // empty when the denominator vanishes
    bool equivalent = false;  // each defined pair agrees
};

// exact over Q(sqrt(t)); rational spectra use t = 0-free values with zero surd part
KreinCheck krein_crosscheck(const BigRat& n, const BigRat& k, const QuadExt& theta1,
                            const QuadExt& theta2);
KreinCheck krein_crosscheck_rational(long long n, long long k, const BigRat& theta1,
                                     const BigRat& theta2);

} // namespace hermspec
