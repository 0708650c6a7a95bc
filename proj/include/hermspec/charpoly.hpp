#pragma once

#include <utility>
#include <vector>

#include "hermspec/hermitian.hpp"
#include "hermspec/rational.hpp"

namespace hermspec {

// Integer polynomial, coefficients ascending: c[0] + c[1]x + ... Trailing zeros stripped.
struct IPoly {
    std::vector<BigInt> c;

    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();
    IPoly derivative() const;
    BigInt content() const;
    IPoly primitive() const;
    BigRat eval(const BigRat& x) const;
    int sign_at(const BigRat& x) const;
    double eval_double(double x) const;
};

IPoly ipoly_from_ll(const std::vector<long long>& asc);
IPoly ipoly_mul(const IPoly& a, const IPoly& b);
// exact division, throws if remainder nonzero
IPoly ipoly_div_exact(const IPoly& a, const IPoly& b);
// gcd of primitive parts, primitive monic-sign-normalized result
IPoly ipoly_gcd(IPoly a, IPoly b);

// square-free decomposition: returns list of (factor, multiplicity) with
// product over factors^mult = input up to a rational constant; factors primitive,
// positive leading coefficient, pairwise coprime, each square-free.
std::vector<std::pair<IPoly, int>> square_free_decomposition(const IPoly& f);

// integer roots of a monic integer polynomial (all rational roots of a monic
// integer polynomial are integers)
std::vector<long long> integer_roots(const IPoly& f);

// Sturm-sequence isolation of all real roots of a square-free polynomial.
// Returns disjoint open intervals (lo, hi) each holding exactly one root,
// refined by bisection until hi - lo <= width.
std::vector<std::pair<BigRat, BigRat>> isolate_real_roots(const IPoly& f, const BigRat& width);

int sturm_count_interval(const std::vector<IPoly>& chain, const BigRat& a, const BigRat& b);
std::vector<IPoly> sturm_chain(const IPoly& f);

// Monic characteristic polynomial det(xI - H) with exact integer coefficients,
// ascending order, computed division-free apart from the exact integer steps of
// the Faddeev-LeVerrier recurrence. Requires preset omega (entries in Z[omega]).
std::vector<long long> charpoly_exact(const HermitianMatrix& h);

} // namespace hermspec
