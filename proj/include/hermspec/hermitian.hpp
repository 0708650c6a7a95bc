#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "hermspec/digraph.hpp"
#include "hermspec/omega.hpp"

namespace hermspec {

// Element of Z[omega] for preset omega: a + b*omega with omega^2 = t*omega - 1,
// t = omega + conj(omega) in {0, 1, -1}. Entries of digraph matrices live here.
struct Zw {
    long long a = 0, b = 0;
    friend Zw add(Zw x, Zw y) { return {x.a + y.a, x.b + y.b}; }
    friend Zw sub(Zw x, Zw y) { return {x.a - y.a, x.b - y.b}; }
    static Zw mul(Zw x, Zw y, int t) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + (long long)t * x.b * y.b};
    }
    Zw conj(int t) const { return {a + (long long)t * b, -b}; }
    bool operator==(const Zw&) const = default;
};

struct HermitianMatrix {
    int n = 0;
    Eigen::MatrixXcd mat;
    OmegaSpec omega;                       // construction parameter (Generic for ad hoc matrices)
    std::vector<Zw> exact;                 // row-major n*n, only when exact_valid
    bool exact_valid = false;
    bool zero_diagonal = false;

    Zw exact_at(int r, int c) const { return exact[r * n + c]; }
    bool is_hermitian(double tol = 1e-12) const;
};

// (H)_{xy} = 1 on digons, omega on arcs x->y, conj(omega) on arcs y->x, 0 otherwise.
HermitianMatrix build_hermitian(const Digraph& g, const OmegaSpec& w);

// H + a*J (float path; exact entries dropped since the diagonal leaves the digraph ring)
HermitianMatrix shifted_matrix(const HermitianMatrix& h, double a);

// ad hoc Hermitian matrix wrapper, no exact structure
HermitianMatrix wrap_hermitian(const Eigen::MatrixXcd& m);

} // namespace hermspec
