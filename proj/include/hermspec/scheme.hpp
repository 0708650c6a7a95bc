#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hermspec/rational.hpp"

namespace hermspec {

// a + b*sqrt(D) with rational a, b; D a fixed integer (negative allowed, so the
// field can hold purely imaginary surds as well)
struct QuadExt {
    BigRat a = 0, b = 0;
    long long D = 0;

    QuadExt() = default;
    QuadExt(BigRat a_, BigRat b_, long long D_) : a(std::move(a_)), b(std::move(b_)), D(D_) {}
    static QuadExt rational(BigRat v, long long D) { return {std::move(v), 0, D}; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.a + y.a, x.b + y.b, x.D}; }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.a - y.a, x.b - y.b, x.D}; }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        return {x.a * y.a + x.b * y.b * y.D, x.a * y.b + x.b * y.a, x.D};
    }
    QuadExt inverse() const;
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
    QuadExt conj() const { return {a, -b, D}; }
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    bool is_integer() const { return b == 0 && boost::multiprecision::denominator(a) == 1; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }
    std::string str() const;
};

using QuadMatrix = std::vector<std::vector<QuadExt>>;
QuadMatrix quad_inverse(const QuadMatrix& M);

// s+1 zero-one relation matrices on a common point set
struct SchemeRelations {
    int size = 0;
    std::vector<Eigen::MatrixXi> classes;
};

struct SchemeCheck {
    bool is_scheme = false;
    std::vector<std::string> failures;  // axiom violations, identified by index
    // intersection numbers p[i][j][l], filled only when is_scheme
    std::vector<std::vector<std::vector<long long>>> p;
};

// checks the five defining axioms exactly over the integers
SchemeCheck verify_scheme(const SchemeRelations& rel);

// Infeasibility certificate for the hypothetical 5-class scheme carried by a
// code meeting the degree-two-mixed bound with equality. Parameter m drives
// d = (2m^2-5)/3 and the surd field Q(sqrt(-3(m^2-1))).
struct TightS5Verdict {
    int m = 0;
    BigRat d;           // (2m^2-5)/3
    BigRat code_size;   // d(3d+5)/2
    BigRat k1;          // valency on the first nontrivial class
    // A_1 A_1 expansion coefficients: p111 is the one whose 32-multiple is the
    // integer filter polynomial in m; p112 is the complementary coefficient
    // used as the witness when the filter survives
    BigRat p111, p112;
    bool d_integral = false;
    bool mults_integral = false;
    bool k1_integral = false;
    bool filter32_integral = false;  // 32*p111 integral, equivalent to (m-1) | 8
    bool p111_integral = false;
    bool p112_integral = false;
    bool feasible = true;
    std::string reason;
};

TightS5Verdict tight_S5_feasibility(int m);  // m >= 3

// all m in [3, max_m] whose 32*p111 filter value is integral
std::vector<int> integrality_filter(int max_m);

// u + v*sqrt(t) in lowest terms
struct Surd {
    BigRat u, v;
    long long t = 0;
    std::string str() const;
};

struct RowSumParams {
    Surd a_plus, a_minus;  // the two roots (-2 +- sqrt(6d+10)) / (3(d+1))
    Surd y;                // sqrt(2/(d+1))
};

RowSumParams row_sum_parameters(long long d);  // d >= 2

} // namespace hermspec
