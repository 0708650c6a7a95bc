#include "hermspec/scheme.hpp"

#include <sstream>
#include <stdexcept>

namespace hermspec {

QuadExt QuadExt::inverse() const {
    BigRat n = a * a - b * b * D;
    if (n == 0) throw std::domain_error("QuadExt: inverse of zero (or of a zero divisor)");
    return {a / n, -b / n, D};
}

std::string QuadExt::str() const {
    std::ostringstream o;
    o << a;
    if (b != 0) o << (b > 0 ? "+" : "") << b << "*sqrt(" << D << ")";
    return o.str();
}

QuadMatrix quad_inverse(const QuadMatrix& M) {
    const int n = (int)M.size();
    long long D = M[0][0].D;
    QuadMatrix A(n, std::vector<QuadExt>(2 * n, QuadExt::rational(0, D)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) A[i][j] = M[i][j];
        A[i][n + i] = QuadExt::rational(1, D);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!A[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("quad_inverse: singular matrix");
        std::swap(A[col], A[piv]);
        QuadExt ip = A[col][col].inverse();
        for (auto& x : A[col]) x = x * ip;
        for (int r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            QuadExt f = A[r][col];
            for (int j = 0; j < 2 * n; ++j) A[r][j] = A[r][j] - f * A[col][j];
        }
    }
    QuadMatrix inv(n, std::vector<QuadExt>(n, QuadExt::rational(0, D)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = A[i][n + j];
    return inv;
}

SchemeCheck verify_scheme(const SchemeRelations& rel) {
    SchemeCheck out;
    const int nclass = (int)rel.classes.size();
    const int n = rel.size;
    auto fail = [&](const std::string& s) { out.failures.push_back(s); };
    if (nclass == 0 || n == 0) {
        fail("no classes or empty point set");
        return out;
    }
    for (int i = 0; i < nclass; ++i) {
        if (rel.classes[i].rows() != n || rel.classes[i].cols() != n)
            fail("class " + std::to_string(i) + ": wrong shape");
        else {
            bool zero_one = true, empty = true;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    int v = rel.classes[i](r, c);
                    if (v != 0 && v != 1) zero_one = false;
                    if (v == 1) empty = false;
                }
            if (!zero_one) fail("class " + std::to_string(i) + ": entries not 0/1");
            if (empty) fail("class " + std::to_string(i) + ": empty relation");
        }
    }
    if (!out.failures.empty()) return out;

    // (1) A_0 = I
    if (rel.classes[0] != Eigen::MatrixXi::Identity(n, n)) fail("axiom 1: A_0 is not the identity");
    // (2) sum A_i = J
    Eigen::MatrixXi sum = Eigen::MatrixXi::Zero(n, n);
    for (const auto& A : rel.classes) sum += A;
    if (sum != Eigen::MatrixXi::Ones(n, n)) fail("axiom 2: classes do not partition X x X");
    // (3) transpose closure
    for (int i = 0; i < nclass; ++i) {
        bool found = false;
        Eigen::MatrixXi T = rel.classes[i].transpose();
        for (int j = 0; j < nclass && !found; ++j) found = (T == rel.classes[j]);
        if (!found) fail("axiom 3: transpose of class " + std::to_string(i) + " is not a class");
    }
    if (!out.failures.empty()) return out;

    // (4) products expand integrally in the basis, (5) commutativity
    out.p.assign(nclass, std::vector<std::vector<long long>>(
                             nclass, std::vector<long long>(nclass, 0)));
    for (int i = 0; i < nclass; ++i)
        for (int j = 0; j < nclass; ++j) {
            Eigen::MatrixXi M = rel.classes[i] * rel.classes[j];
            if (j < i && M != rel.classes[j] * rel.classes[i])
                fail("axiom 5: classes " + std::to_string(i) + "," + std::to_string(j) +
                     " do not commute");
            for (int l = 0; l < nclass; ++l) {
                long long val = -1;
                bool constant = true;
                for (int r = 0; r < n && constant; ++r)
                    for (int c = 0; c < n; ++c) {
                        if (rel.classes[l](r, c) != 1) continue;
                        if (val < 0) val = M(r, c);
                        else if (val != M(r, c)) { constant = false; break; }
                    }
                if (!constant) {
                    fail("axiom 4: A_" + std::to_string(i) + " A_" + std::to_string(j) +
                         " is not constant on class " + std::to_string(l));
                } else if (val >= 0) {
                    out.p[i][j][l] = val;
                }
            }
        }
    out.is_scheme = out.failures.empty();
    if (!out.is_scheme) out.p.clear();
    return out;
}

namespace {

BigRat br(long long n, long long d = 1) { return BigRat(BigInt(n), BigInt(d)); }

bool is_nonneg_integer(const BigRat& v) {
    return v >= 0 && boost::multiprecision::denominator(v) == 1;
}

} // namespace

TightS5Verdict tight_S5_feasibility(int m) {
    if (m < 3) throw std::invalid_argument("tight_S5_feasibility: m >= 3 required");
    TightS5Verdict v;
    v.m = m;
    const long long M = m;
    const long long D = -3 * (M * M - 1);
    v.d = br(2 * M * M - 5, 3);
    v.code_size = v.d * (3 * v.d + 5) / 2;
    auto Q0 = [&](BigRat x) { return QuadExt::rational(std::move(x), D); };
    // second eigenmatrix of the would-be scheme: rows are the five inner-product
    // classes (diagonal, two real values, conjugate imaginary pair), columns the
    // five harmonic components; the imaginary entries are (2m^2-5)/(3(m^2-1)) * sqrt(D)
    BigRat c = br(2 * M * M - 5, 3 * (M * M - 1));
    QuadExt ci{0, c, D}, cin{0, -c, D};
    QuadMatrix Q = {
        {Q0(1), Q0(v.d), Q0(v.d), Q0(v.d * v.d - 1), Q0(v.d * (v.d + 1) / 2)},
        {Q0(1), Q0(br(2 * M * M - 5, 3 * (M + 1))), Q0(br(2 * M * M - 5, 3 * (M + 1))),
         Q0(br(-2 * (M - 1) * (M * M + 6 * M + 8), 9 * (M + 1))),
         Q0(br((M - 1) * (2 * M * M - 5), 9 * (M + 1)))},
        {Q0(1), Q0(br(5 - 2 * M * M, 3 * (M - 1))), Q0(br(5 - 2 * M * M, 3 * (M - 1))),
         Q0(br(-2 * (M + 1) * (M * M - 6 * M + 8), 9 * (M - 1))),
         Q0(br((M + 1) * (2 * M * M - 5), 9 * (M - 1)))},
        {Q0(1), ci, cin, Q0(br(2 * (M * M - 4), 3)), Q0(br(5 - 2 * M * M, 3))},
        {Q0(1), cin, ci, Q0(br(2 * (M * M - 4), 3)), Q0(br(5 - 2 * M * M, 3))},
    };
    QuadMatrix P = quad_inverse(Q);
    QuadExt X = Q0(v.code_size);
    for (auto& row : P)
        for (auto& e : row) e = e * X;
    // QP = |X| I sanity
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            QuadExt s = Q0(0);
            for (int r = 0; r < 5; ++r) s = s + Q[i][r] * P[r][j];
            if (!(s == (i == j ? X : Q0(0))))
                throw std::logic_error("tight_S5_feasibility: QP != |X| I");
        }
    if (!P[0][1].is_rational()) throw std::logic_error("k1 not rational");
    v.k1 = P[0][1].a;
    // closed form for the first valency, with sqrt(6d+10) = 2m
    BigRat k1_closed = (((3 * v.d - 5) * (2 * M)) + 9 * v.d * v.d + 12 * v.d - 13) / 16;
    if (v.k1 != k1_closed) throw std::logic_error("k1 closed form mismatch");

    auto pij = [&](int i, int j, int l) {
        QuadExt s = Q0(0);
        for (int r = 0; r < 5; ++r) s = s + Q[l][r] * P[r][i] * P[r][j];
        s = s / X;
        if (!s.is_rational()) throw std::logic_error("intersection number not rational");
        return s.a;
    };
    v.p111 = pij(1, 1, 2);  // 32x this value is the integer filter polynomial in m
    v.p112 = pij(1, 1, 1);
    BigRat filter_closed = br((M - 2) * (M + 1) * (M + 1) * (M + 1) * (3 * M - 4), M - 1);
    if (BigRat(32) * v.p111 != filter_closed)
        throw std::logic_error("filter closed form mismatch");

    v.d_integral = is_nonneg_integer(v.d);
    v.mults_integral = true;
    for (int j = 0; j < 5; ++j)
        if (!Q[0][j].is_integer()) v.mults_integral = false;
    v.k1_integral = is_nonneg_integer(v.k1);
    v.filter32_integral = is_nonneg_integer(BigRat(32) * v.p111);
    v.p111_integral = is_nonneg_integer(v.p111);
    v.p112_integral = is_nonneg_integer(v.p112);

    if (!v.filter32_integral) {
        v.feasible = false;
        v.reason = "32*p111 not integral ((m-1) must divide 8)";
    } else if (!v.p111_integral) {
        v.feasible = false;
        v.reason = "p111 = " + v.p111.str() + " not integral";
    } else if (!v.p112_integral) {
        v.feasible = false;
        v.reason = "p112 = " + v.p112.str() + " not integral";
    } else if (!v.d_integral) {
        v.feasible = false;
        v.reason = "d = " + v.d.str() + " not integral";
    } else if (!v.mults_integral || !v.k1_integral) {
        v.feasible = false;
        v.reason = "non-integral multiplicity or valency";
    }
    return v;
}

std::vector<int> integrality_filter(int max_m) {
    if (max_m < 3) throw std::invalid_argument("integrality_filter: max_m >= 3");
    std::vector<int> out;
    for (int m = 3; m <= max_m; ++m) {
        long long M = m;
        BigRat f = br((M - 2) * (M + 1) * (M + 1) * (M + 1) * (3 * M - 4), M - 1);
        bool divides = (8 % (m - 1)) == 0;
        bool integral = boost::multiprecision::denominator(f) == 1;
        if (divides != integral) throw std::logic_error("filter criterion mismatch");
        if (integral) out.push_back(m);
    }
    return out;
}

std::string Surd::str() const {
    std::ostringstream o;
    if (u != 0 || v == 0) o << u;
    if (v != 0) {
        if (u != 0) o << (v > 0 ? "+" : "");
        o << v << "*sqrt(" << t << ")";
    }
    return o.str();
}

RowSumParams row_sum_parameters(long long d) {
    if (d < 2) throw std::invalid_argument("row_sum_parameters: d >= 2");
    RowSumParams r;
    long long t = 6 * d + 10;
    r.a_plus = {br(-2, 3 * (d + 1)), br(1, 3 * (d + 1)), t};
    r.a_minus = {br(-2, 3 * (d + 1)), br(-1, 3 * (d + 1)), t};
    // sqrt(2/(d+1)) = sqrt(2(d+1)) / (d+1)
    r.y = {0, br(1, d + 1), 2 * (d + 1)};
    // exact checks: 3 a^2 (d+1) + 4a - 2 = 0 and (d+1) y^2 = 2
    for (const Surd& s : {r.a_plus, r.a_minus}) {
        QuadExt a{s.u, s.v, s.t};
        QuadExt res = QuadExt::rational(3 * (d + 1), s.t) * a * a +
                      QuadExt::rational(4, s.t) * a - QuadExt::rational(2, s.t);
        if (!res.is_zero()) throw std::logic_error("row sum quadratic failed");
    }
    QuadExt y{r.y.u, r.y.v, r.y.t};
    QuadExt y2 = y * y;
    if (!(y2 == QuadExt::rational(br(2, d + 1), r.y.t)))
        throw std::logic_error("row sum y^2 check failed");
    return r;
}

} // namespace hermspec
