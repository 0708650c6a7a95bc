#include "hermspec/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace hermspec {

double Spectrum::beta_sq_sum() const {
    double s = 0;
    for (const auto& e : eigs) s += e.main_angle_sq;
    return s;
}

bool Spectrum::lambda_is(int idx, long long v) const {
    const auto& e = eigs[idx];
    if (e.exact_known) return e.is_integer_eig && e.integer_value == v;
    return std::abs(e.lambda - (double)v) < kValueMatchTol;
}

namespace {

void fill_inertia(Spectrum& sp) {
    int s = sp.s();
    for (int i = 0; i < s; ++i) {
        auto& e = sp.eigs[i];
        e.codim = sp.n - e.mult;
        int above = 0, below = 0;
        for (int j = 0; j < i; ++j) above += sp.eigs[j].mult;
        for (int j = i + 1; j < s; ++j) below += sp.eigs[j].mult;
        if (e.lambda < 0 && !(e.exact_known && e.is_integer_eig && e.integer_value == 0)) {
            e.p = above;
            e.q = below;
        } else {
            e.p = below;
            e.q = above;
        }
    }
}

Spectrum cluster_from_dense(const HermitianMatrix& h) {
    const int n = h.n;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.mat);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    const auto& vals = es.eigenvalues();
    const auto& vecs = es.eigenvectors();
    double rho = std::max(std::abs(vals(0)), std::abs(vals(n - 1)));
    double tol = kClusterTolScale * std::max(rho, 1e-300);

    Spectrum sp;
    sp.n = n;
    Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(n);
    int start = 0;
    std::vector<double> means;
    for (int i = 1; i <= n; ++i) {
        if (i == n || vals(i) - vals(i - 1) > tol) {
            EigRecord e;
            e.mult = i - start;
            double lam = 0;
            for (int j = start; j < i; ++j) lam += vals(j);
            e.lambda = lam / e.mult;
            double b2 = 0;
            for (int j = start; j < i; ++j) b2 += std::norm(vecs.col(j).dot(ones));
            e.main_angle_sq = b2 / n;
            e.is_main = e.main_angle_sq > kMainAngleThreshold;
            sp.eigs.push_back(e);
            means.push_back(e.lambda);
            start = i;
        }
    }
    for (size_t i = 1; i < means.size(); ++i)
        if (means[i] - means[i - 1] < 10 * tol)
            throw ClusteringAmbiguity("eigenvalue clusters closer than 10x tolerance near " +
                                      std::to_string(means[i]));
    std::reverse(sp.eigs.begin(), sp.eigs.end());
    return sp;
}

} // namespace

Spectrum spectrum_float(const HermitianMatrix& h) {
    Spectrum sp = cluster_from_dense(h);
    fill_inertia(sp);
    return sp;
}

std::vector<std::pair<double, int>> exact_eigenvalues_fast(const HermitianMatrix& h) {
    auto cp = charpoly_exact(h);
    IPoly f = ipoly_from_ll(cp);
    auto sq = square_free_decomposition(f);
    std::vector<std::pair<double, int>> out;
    for (auto& [fac, mult] : sq) {
        auto iroots = integer_roots(fac);
        for (long long r : iroots) out.emplace_back((double)r, mult);
        if ((int)iroots.size() < fac.deg()) {
            // peel off integer roots, isolate the rest
            IPoly rem = fac;
            for (long long r : iroots) {
                IPoly lin;
                lin.c = {BigInt(-r), BigInt(1)};
                rem = ipoly_div_exact(rem, lin);
            }
            auto ivs = isolate_real_roots(rem, BigRat(1, 1024));
            if ((int)ivs.size() != rem.deg())
                throw std::logic_error("hermitian charpoly factor with non-real roots");
            for (auto& [lo, hi] : ivs) {
                double x = (lo.convert_to<double>() + hi.convert_to<double>()) / 2;
                for (int it = 0; it < 60; ++it) {  // Newton polish
                    double fx = rem.eval_double(x);
                    double dfx = rem.derivative().eval_double(x);
                    if (dfx == 0) break;
                    double nx = x - fx / dfx;
                    if (std::abs(nx - x) < 1e-15 * std::max(1.0, std::abs(x))) { x = nx; break; }
                    x = nx;
                }
                out.emplace_back(x, mult);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first > b.first; });
    return out;
}

Spectrum spectrum_exact(const HermitianMatrix& h) {
    Spectrum sp = cluster_from_dense(h);  // float clusters carry main angles
    sp.exact_mode = true;
    sp.charpoly = charpoly_exact(h);
    auto exact = exact_eigenvalues_fast(h);
    if (exact.size() != sp.eigs.size())
        throw std::logic_error("exact/float cluster count mismatch");
    IPoly f = ipoly_from_ll(sp.charpoly);
    auto iroots = integer_roots(f);
    for (size_t i = 0; i < exact.size(); ++i) {
        auto& e = sp.eigs[i];
        if (std::abs(exact[i].first - e.lambda) > 1e-6 * std::max(1.0, std::abs(e.lambda)))
            throw std::logic_error("exact/float eigenvalue mismatch");
        if (exact[i].second != e.mult) throw std::logic_error("exact/float multiplicity mismatch");
        e.lambda = exact[i].first;
        e.exact_known = true;
        for (long long r : iroots)
            if (std::abs((double)r - e.lambda) < 1e-6) {
                e.is_integer_eig = true;
                e.integer_value = r;
            }
    }
    fill_inertia(sp);
    return sp;
}

std::string spectrum_to_json(const Spectrum& s) {
    std::ostringstream o;
    o.precision(15);
    o << "{\"n\":" << s.n << ",\"exact\":" << (s.exact_mode ? "true" : "false") << ",\"eigs\":[";
    for (size_t i = 0; i < s.eigs.size(); ++i) {
        const auto& e = s.eigs[i];
        if (i) o << ",";
        o << "{\"lambda\":";
        if (e.exact_known && e.is_integer_eig)
            o << "\"" << e.integer_value << "\"";
        else
            o << e.lambda;
        o << ",\"mult\":" << e.mult << ",\"main_angle_sq\":" << e.main_angle_sq
          << ",\"is_main\":" << (e.is_main ? "true" : "false") << ",\"codim\":" << e.codim
          << ",\"p\":" << e.p << ",\"q\":" << e.q << "}";
    }
    o << "]";
    if (!s.charpoly.empty()) {
        o << ",\"charpoly\":[";
        for (size_t i = 0; i < s.charpoly.size(); ++i) {
            if (i) o << ",";
            o << s.charpoly[i];
        }
        o << "]";
    }
    o << "}";
    return o.str();
}

} // namespace hermspec
