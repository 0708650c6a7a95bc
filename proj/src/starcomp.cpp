#include "hermspec/starcomp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hermspec {

namespace {

double min_singular_value(const Eigen::MatrixXcd& M) {
    if (M.rows() == 0) return std::numeric_limits<double>::infinity();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

StarDecomposition assemble(const HermitianMatrix& h, double lambda, int mult,
                           std::vector<int> complement) {
    const int n = h.n, d = n - mult;
    std::sort(complement.begin(), complement.end());
    std::vector<char> in_comp(n, 0);
    for (int c : complement) in_comp[c] = 1;
    StarDecomposition dec;
    dec.lambda = lambda;
    dec.n = n;
    dec.m = mult;
    dec.d = d;
    dec.complement = complement;
    for (int i = 0; i < n; ++i)
        if (!in_comp[i]) dec.star_set.push_back(i);
    dec.perm = dec.star_set;
    dec.perm.insert(dec.perm.end(), complement.begin(), complement.end());

    dec.HX.resize(mult, mult);
    dec.B.resize(d, mult);
    dec.C.resize(d, d);
    for (int i = 0; i < mult; ++i)
        for (int j = 0; j < mult; ++j) dec.HX(i, j) = h.mat(dec.star_set[i], dec.star_set[j]);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < mult; ++j) dec.B(i, j) = h.mat(dec.complement[i], dec.star_set[j]);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) dec.C(i, j) = h.mat(dec.complement[i], dec.complement[j]);

    Eigen::MatrixXcd lamC = lambda * Eigen::MatrixXcd::Identity(d, d) - dec.C;
    dec.min_sv = min_singular_value(lamC);
    if (d > 0)
        dec.lamC_inv = lamC.fullPivLu().inverse();
    else
        dec.lamC_inv.resize(0, 0);
    return dec;
}

double matrix_scale(const Eigen::MatrixXcd& M) {
    double s = M.size() ? M.cwiseAbs().maxCoeff() : 0.0;
    return std::max(s, 1e-300);
}

// greedy symmetric elimination with diagonal pivoting on A = lambda I - H;
// returns chosen complement indices or empty on failure
std::vector<int> greedy_complement(const Eigen::MatrixXcd& A, int d, double pivot_floor) {
    const int n = (int)A.rows();
    Eigen::MatrixXcd S = A;
    std::vector<char> used(n, 0);
    std::vector<int> picked;
    for (int step = 0; step < d; ++step) {
        int best = -1;
        double bestmag = 0;
        for (int j = 0; j < n; ++j) {
            if (used[j]) continue;
            double mag = std::abs(S(j, j));
            if (mag > bestmag + 1e-15 * bestmag) {
                bestmag = mag;
                best = j;
            }
        }
        if (best < 0 || bestmag < pivot_floor) return {};
        used[best] = 1;
        picked.push_back(best);
        auto col = S.col(best).eval();
        auto row = S.row(best).eval();
        std::complex<double> piv = S(best, best);
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (used[j]) continue;
                S(i, j) -= col(i) * row(j) / piv;
            }
        }
    }
    return picked;
}

} // namespace

StarDecomposition find_star_set(const HermitianMatrix& h, double lambda, int mult) {
    const int n = h.n, d = n - mult;
    Eigen::MatrixXcd A = lambda * Eigen::MatrixXcd::Identity(n, n) - h.mat;
    double scale = matrix_scale(A);
    double pivot_floor = kPivotThresholdScale * scale;

    auto accept = [&](const std::vector<int>& comp, StarDecomposition& out) {
        StarDecomposition dec = assemble(h, lambda, mult, comp);
        Eigen::MatrixXcd lamC =
            lambda * Eigen::MatrixXcd::Identity(d, d) - dec.C;
        double reject = kSingularRejectScale * std::max(matrix_scale(lamC), 1.0);
        if (dec.min_sv < reject) return false;
        out = std::move(dec);
        return true;
    };

    StarDecomposition dec;
    auto picked = greedy_complement(A, d, pivot_floor);
    if (!picked.empty() || d == 0) {
        if (accept(picked, dec)) return dec;
    }

    // exhaustive fallback over d-subsets, best min singular value wins
    if (n > 14) throw std::runtime_error("star set search: exhaustive fallback infeasible for n > 14");
    std::vector<int> comb(d);
    for (int i = 0; i < d; ++i) comb[i] = i;
    double best_sv = -1;
    std::vector<int> best_comb;
    while (true) {
        StarDecomposition cand = assemble(h, lambda, mult, comb);
        if (cand.min_sv > best_sv) {
            best_sv = cand.min_sv;
            best_comb = comb;
        }
        int i = d - 1;
        while (i >= 0 && comb[i] == n - d + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
    }
    StarDecomposition best = assemble(h, lambda, mult, best_comb);
    Eigen::MatrixXcd lamC = lambda * Eigen::MatrixXcd::Identity(d, d) - best.C;
    double reject = kSingularRejectScale * std::max(matrix_scale(lamC), 1.0);
    if (best.min_sv < reject)
        throw std::runtime_error("no star complement found: all principal submatrices near-singular");
    return best;
}

StarDecomposition find_star_set(const HermitianMatrix& h, double lambda) {
    Spectrum sp = spectrum_float(h);
    for (const auto& e : sp.eigs)
        if (std::abs(e.lambda - lambda) < kValueMatchTol)
            return find_star_set(h, e.lambda, e.mult);
    throw std::invalid_argument("lambda is not an eigenvalue of the matrix");
}

StarVectors star_vectors(const StarDecomposition& dec) {
    StarVectors sv;
    sv.S.resize(dec.d, dec.n);
    sv.S.leftCols(dec.m) = dec.B;
    sv.S.rightCols(dec.d) =
        dec.C - dec.lambda * Eigen::MatrixXcd::Identity(dec.d, dec.d);
    sv.lamC_inv = dec.lamC_inv;
    return sv;
}

double verify_reconstruction(const StarDecomposition& dec) {
    Eigen::MatrixXcd lamC =
        dec.lambda * Eigen::MatrixXcd::Identity(dec.d, dec.d) - dec.C;
    double reject = kSingularRejectScale * std::max(matrix_scale(lamC), 1.0);
    if (dec.min_sv < reject)
        throw std::runtime_error("lambda I - C numerically singular");
    Eigen::MatrixXcd R = dec.lambda * Eigen::MatrixXcd::Identity(dec.m, dec.m) - dec.HX -
                         dec.B.adjoint() * dec.lamC_inv * dec.B;
    return dec.m ? R.cwiseAbs().maxCoeff() : 0.0;
}

Eigen::MatrixXcd eigenspace_from_star(const StarDecomposition& dec, const HermitianMatrix& h,
                                      double tol) {
    Eigen::MatrixXcd basis(dec.n, dec.m);
    Eigen::MatrixXcd lower = dec.lamC_inv * dec.B;  // d x m
    for (int j = 0; j < dec.m; ++j) {
        Eigen::VectorXcd v(dec.n);
        for (int i = 0; i < dec.m; ++i) v(dec.star_set[i]) = (i == j) ? 1.0 : 0.0;
        for (int i = 0; i < dec.d; ++i) v(dec.complement[i]) = lower(i, j);
        double res = (h.mat * v - dec.lambda * v).cwiseAbs().maxCoeff();
        if (res > tol * std::max(1.0, v.cwiseAbs().maxCoeff()))
            throw std::runtime_error("eigenspace_from_star: residual above tolerance");
        basis.col(j) = v;
    }
    return basis;
}

double check_split_identity(const StarDecomposition& dec, const HermitianMatrix& h,
                            const Eigen::VectorXcd& w, double orth_tol) {
    Eigen::MatrixXcd E = eigenspace_from_star(dec, h, 1e-8);
    for (int j = 0; j < E.cols(); ++j) {
        double ip = std::abs(E.col(j).dot(w));
        if (ip > orth_tol * std::max(1.0, E.col(j).norm() * w.norm()))
            throw std::invalid_argument("w is not orthogonal to the lambda-eigenspace");
    }
    StarVectors sv = star_vectors(dec);
    Eigen::VectorXcd q(dec.d);
    for (int i = 0; i < dec.d; ++i) q(i) = w(dec.complement[i]);
    double dev = 0;
    for (int u = 0; u < dec.n; ++u) {
        std::complex<double> lhs = sv.inner(sv.S.col(u).eval(), q);
        std::complex<double> wu = w(dec.perm[u]);
        dev = std::max(dev, std::abs(lhs + wu));
    }
    return dev;
}

std::string star_to_json(const StarDecomposition& dec) {
    std::ostringstream o;
    o.precision(15);
    o << "{\"lambda\":" << dec.lambda << ",\"star_set\":[";
    for (size_t i = 0; i < dec.star_set.size(); ++i) {
        if (i) o << ",";
        o << dec.star_set[i];
    }
    o << "],\"residual\":" << verify_reconstruction(dec) << ",\"complement_spectrum\":[";
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dec.C);
    for (int i = 0; i < dec.d; ++i) {
        if (i) o << ",";
        o << es.eigenvalues()(i);
    }
    o << "]}";
    return o.str();
}

} // namespace hermspec
