#include "hermspec/hermitian.hpp"

#include <stdexcept>

namespace hermspec {

bool HermitianMatrix::is_hermitian(double tol) const {
    return (mat - mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

HermitianMatrix build_hermitian(const Digraph& g, const OmegaSpec& w) {
    HermitianMatrix h;
    h.n = g.n;
    h.omega = w;
    h.zero_diagonal = true;
    h.mat = Eigen::MatrixXcd::Zero(g.n, g.n);
    std::complex<double> wv = w.value, wc = std::conj(w.value);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            switch (g.pair_states[g.pair_index(u, v)]) {
                case PairState::None: break;
                case PairState::Digon: h.mat(u, v) = 1.0; h.mat(v, u) = 1.0; break;
                case PairState::Forward: h.mat(u, v) = wv; h.mat(v, u) = wc; break;
                case PairState::Backward: h.mat(u, v) = wc; h.mat(v, u) = wv; break;
            }
        }
    if (w.is_preset()) {
        int t = w.exact_trace();
        h.exact.assign((size_t)g.n * g.n, Zw{0, 0});
        auto put = [&](int r, int c, Zw z) { h.exact[(size_t)r * g.n + c] = z; };
        const Zw one{1, 0}, om{0, 1};
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v) {
                switch (g.pair_states[g.pair_index(u, v)]) {
                    case PairState::None: break;
                    case PairState::Digon: put(u, v, one); put(v, u, one); break;
                    case PairState::Forward: put(u, v, om); put(v, u, om.conj(t)); break;
                    case PairState::Backward: put(u, v, om.conj(t)); put(v, u, om); break;
                }
            }
        h.exact_valid = true;
    }
    return h;
}

HermitianMatrix shifted_matrix(const HermitianMatrix& h, double a) {
    HermitianMatrix s;
    s.n = h.n;
    s.omega = h.omega;
    s.mat = h.mat + a * Eigen::MatrixXcd::Ones(h.n, h.n);
    s.exact_valid = false;
    s.zero_diagonal = (a == 0.0) && h.zero_diagonal;
    return s;
}

HermitianMatrix wrap_hermitian(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("wrap_hermitian: square matrix required");
    HermitianMatrix h;
    h.n = (int)m.rows();
    h.omega.kind = OmegaKind::Generic;
    h.omega.value = {0.0, 1.0};
    h.mat = 0.5 * (m + m.adjoint());  // symmetrize roundoff
    if ((m - h.mat).cwiseAbs().maxCoeff() > 1e-9)
        throw std::invalid_argument("wrap_hermitian: input is not Hermitian");
    h.exact_valid = false;
    return h;
}

} // namespace hermspec
