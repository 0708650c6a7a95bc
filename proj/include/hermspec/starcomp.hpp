#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hermspec/hermitian.hpp"
#include "hermspec/spectrum.hpp"

namespace hermspec {

// Star set X for eigenvalue lambda: |X| = mult(lambda) and lambda is not an
// eigenvalue of the complement principal submatrix C. Blocks refer to the
// permuted matrix (X first, complement after).
struct StarDecomposition {
    double lambda = 0;
    int n = 0, m = 0, d = 0;
    std::vector<int> star_set;    // ascending original indices, |X| = m
    std::vector<int> complement;  // ascending, size d
    std::vector<int> perm;        // perm[pos] = original index, X first
    Eigen::MatrixXcd HX;          // m x m
    Eigen::MatrixXcd B;           // d x m
    Eigen::MatrixXcd C;           // d x d
    Eigen::MatrixXcd lamC_inv;    // (lambda I - C)^{-1}
    double min_sv = 0;            // min singular value of lambda I - C
};

// Columns s_u of S = (B | C - lambda I) and the indefinite inner product
// <x,y> = x^* (lambda I - C)^{-1} y.
struct StarVectors {
    Eigen::MatrixXcd S;  // d x n, permuted column order
    Eigen::MatrixXcd lamC_inv;
    std::complex<double> inner(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const {
        return (x.adjoint() * lamC_inv * y)(0, 0);
    }
    std::complex<double> inner_su_sv(int u, int v) const {
        return (S.col(u).adjoint() * lamC_inv * S.col(v))(0, 0);
    }
};

inline constexpr double kPivotThresholdScale = 1e-7;
inline constexpr double kSingularRejectScale = 1e-9;

// Greedy diagonal-pivoted selection of the star complement with exhaustive
// fallback over d-subsets when the greedy witness fails verification.
StarDecomposition find_star_set(const HermitianMatrix& h, double lambda, int mult);
// convenience: looks lambda up in the float spectrum first
StarDecomposition find_star_set(const HermitianMatrix& h, double lambda);

StarVectors star_vectors(const StarDecomposition& dec);

// max-entry magnitude of lambda I - H_X - B^* (lambda I - C)^{-1} B
double verify_reconstruction(const StarDecomposition& dec);

// n x m basis of the lambda-eigenspace, original index order, columns
// (x | (lambda I - C)^{-1} B x) for standard-basis x; each column checked
// against H within tol
Eigen::MatrixXcd eigenspace_from_star(const StarDecomposition& dec, const HermitianMatrix& h,
                                      double tol = 1e-9);

// max_u |<s_u, q> + w_u| for w in the orthogonal complement of the
// lambda-eigenspace (original index order); q is the complement block of w
double check_split_identity(const StarDecomposition& dec, const HermitianMatrix& h,
                            const Eigen::VectorXcd& w, double orth_tol = 1e-10);

std::string star_to_json(const StarDecomposition& dec);

} // namespace hermspec
