#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hermspec/omega.hpp"
#include "hermspec/rational.hpp"

namespace hermspec {

using Bidegree = std::pair<int, int>;  // (k, l)

// downward-closed finite subset of N^2
struct LowerSet {
    std::vector<Bidegree> pairs;  // sorted, unique
    bool contains(int k, int l) const;
    bool is_downward_closed() const;
    static LowerSet make(std::vector<Bidegree> ps);  // validates closure
    // {(0,0),(1,0),(0,1),(1,1),(2,0)}
    static LowerSet degree_two_mixed();
};

// dim Hom(d,k,l) = C(d+k-1,k) C(d+l-1,l)
long long dim_hom(int d, int k, int l);
// m_{k,l}^d = C(d+k-1,d-1) C(d+l-1,d-1) - C(d+k-2,d-1) C(d+l-2,d-1)
long long dim_harm(int d, int k, int l);

struct HarmonicDims {
    long long hom = 0, harm = 0;
    long long hom_plus = 0, hom_minus = 0;
    long long mu = 0, nu = 0;
};

// dimensions over C^{p,q}: parity-graded pieces and their harmonic parts
HarmonicDims dims_cpq(int p, int q, int k, int l);

long long scode_bound_sphere(const LowerSet& S, int d);

enum class CoeffSign { Positive, Negative, Zero };

// sum of sigma_{k,l} over S with sigma = mu / nu / 0 by coefficient sign
long long scode_bound_cpq(const LowerSet& S, const std::map<Bidegree, CoeffSign>& signs, int p,
                          int q);

enum class LambdaClass { LessThanMinusOne, BetweenMinusOneAndZero, Positive };

// coefficient-sign pattern of the degree-two-mixed annihilator as a function of
// the Re(omega) class and the lambda class (the nine-case table)
std::map<Bidegree, CoeffSign> inertia_sign_pattern(ReClass rc, LambdaClass lc);

// Jacobi polynomial: sum_r coeff[r] * x^{k-r} xbar^{l-r}, exact rational coefficients
struct JacobiPoly {
    int d = 0, k = 0, l = 0;
    std::vector<Rat> coeffs;  // index r = 0..min(k,l)
};

JacobiPoly jacobi(int d, int k, int l);  // requires d >= 2
std::complex<double> jacobi_eval(const JacobiPoly& j, std::complex<double> z);
RatC jacobi_eval_exact(const JacobiPoly& j, const RatC& z);

// gamma_{k,l}^d = (d+k-2)!(d+l-2)! / (m_{k,l}^d (d-2)! k! l! (d+k+l-2)!)
BigRat gamma_coeff(int d, int k, int l);

// Annihilator polynomial over the degree-two-mixed lower set. Exact rational
// coefficients when built from rational data, doubles otherwise.
struct AnnihilatorPoly {
    LowerSet support;
    std::map<Bidegree, double> coeffs;
    std::map<Bidegree, Rat> coeffs_exact;  // empty when float-built
    bool exact = false;
    int d = 0;
    std::vector<std::complex<double>> declared_roots;
    double declared_value_at_one = 0;

    std::complex<double> eval(std::complex<double> z) const;
    RatC eval_exact(const RatC& z) const;  // requires exact
    double max_root_residual() const;
    // expanded coefficients of the monomials z^a zbar^b
    std::map<Bidegree, double> monomials() const;
};

// two-real-plus-conjugate-pair annihilator on the sphere: roots {a, b, x+iy, x-iy},
// F(1) = 2(1-a)(1-b) d y^2. Requires a != b, y != 0, d >= 2. Throws if F(1) <= 0.
AnnihilatorPoly annihilator_two_pair(const Rat& a, const Rat& b, const Rat& x, const Rat& y,
                                     int d);

// annihilator of {0, -1/lambda, -omega/lambda, -conj(omega)/lambda} in C^{p,q}
// with F(1) = 1; lambda outside {0, -1}, d = p + q >= 1
AnnihilatorPoly annihilator_gram_roots(double lambda, const OmegaSpec& w, int d);

struct GramCheck {
    double min_eigenvalue = 0;
    double max_abs_entry = 0;
    int points = 0;
};

// min eigenvalue of [g_{k,l}(x_i^* x_j)] over random unit-sphere points;
// PSD up to roundoff is the testable consequence of the addition theorem
GramCheck gram_psd_check(int d, int k, int l, int sample_count, uint64_t seed);

} // namespace hermspec
