#include "hermspec/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace hermspec {

bool LowerSet::contains(int k, int l) const {
    return std::binary_search(pairs.begin(), pairs.end(), Bidegree{k, l});
}

bool LowerSet::is_downward_closed() const {
    for (auto [k, l] : pairs) {
        if (k > 0 && !contains(k - 1, l)) return false;
        if (l > 0 && !contains(k, l - 1)) return false;
    }
    return true;
}

LowerSet LowerSet::make(std::vector<Bidegree> ps) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    LowerSet s{std::move(ps)};
    for (auto [k, l] : s.pairs)
        if (k < 0 || l < 0) throw std::invalid_argument("lower set: negative bidegree");
    if (!s.is_downward_closed()) throw std::invalid_argument("set is not downward closed");
    return s;
}

LowerSet LowerSet::degree_two_mixed() {
    return make({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}});
}

long long dim_hom(int d, int k, int l) {
    if (d < 1 || k < 0 || l < 0) throw std::invalid_argument("dim_hom: d >= 1, k,l >= 0");
    return checked_binomial(d + k - 1, k) * checked_binomial(d + l - 1, l);
}

long long dim_harm(int d, int k, int l) {
    if (d < 1 || k < 0 || l < 0) throw std::invalid_argument("dim_harm: d >= 1, k,l >= 0");
    // the subtracted term is the full bidegree-(k-1,l-1) space; absent when k or l is 0
    long long sub = (k >= 1 && l >= 1)
                        ? checked_binomial(d + k - 2, d - 1) * checked_binomial(d + l - 2, d - 1)
                        : 0;
    return checked_binomial(d + k - 1, d - 1) * checked_binomial(d + l - 1, d - 1) - sub;
}

namespace {

long long hom_plus(int p, int q, int k, int l) {
    if (k < 0 || l < 0) return 0;
    long long tot = 0;
    for (int i = 0; 2 * i <= k; ++i)
        for (int j = 0; 2 * j <= l; ++j)
            tot += checked_binomial(p + k - 2 * i - 1, k - 2 * i) * checked_binomial(q + 2 * i - 1, 2 * i) *
                   checked_binomial(p + l - 2 * j - 1, l - 2 * j) * checked_binomial(q + 2 * j - 1, 2 * j);
    for (int i = 0; 2 * i + 1 <= k; ++i)
        for (int j = 0; 2 * j + 1 <= l; ++j)
            tot += checked_binomial(p + k - 2 * i - 2, k - 2 * i - 1) * checked_binomial(q + 2 * i, 2 * i + 1) *
                   checked_binomial(q + 2 * j, 2 * j + 1) * checked_binomial(p + l - 2 * j - 2, l - 2 * j - 1);
    return tot;
}

long long hom_minus(int p, int q, int k, int l) {
    if (k < 0 || l < 0) return 0;
    long long tot = 0;
    for (int i = 0; 2 * i <= k; ++i)
        for (int j = 0; 2 * j + 1 <= l; ++j)
            tot += checked_binomial(p + k - 2 * i - 1, k - 2 * i) * checked_binomial(q + 2 * i - 1, 2 * i) *
                   checked_binomial(q + 2 * j, 2 * j + 1) * checked_binomial(p + l - 2 * j - 2, l - 2 * j - 1);
    for (int i = 0; 2 * i + 1 <= k; ++i)
        for (int j = 0; 2 * j <= l; ++j)
            tot += checked_binomial(p + k - 2 * i - 2, k - 2 * i - 1) * checked_binomial(q + 2 * i, 2 * i + 1) *
                   checked_binomial(q + 2 * j - 1, 2 * j) * checked_binomial(p + l - 2 * j - 1, l - 2 * j);
    return tot;
}

} // namespace

HarmonicDims dims_cpq(int p, int q, int k, int l) {
    if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("dims_cpq: p+q >= 1 required");
    HarmonicDims r;
    int d = p + q;
    r.hom = dim_hom(d, k, l);
    r.harm = dim_harm(d, k, l);
    r.hom_plus = hom_plus(p, q, k, l);
    r.hom_minus = hom_minus(p, q, k, l);
    r.mu = r.hom_plus - ((k >= 1 && l >= 1) ? hom_plus(p, q, k - 1, l - 1) : 0);
    r.nu = r.hom_minus - ((k >= 1 && l >= 1) ? hom_minus(p, q, k - 1, l - 1) : 0);
    return r;
}

long long scode_bound_sphere(const LowerSet& S, int d) {
    if (d < 2) throw std::invalid_argument("scode_bound_sphere: d >= 2");
    long long tot = 0;
    for (auto [k, l] : S.pairs) tot += dim_harm(d, k, l);
    return tot;
}

long long scode_bound_cpq(const LowerSet& S, const std::map<Bidegree, CoeffSign>& signs, int p,
                          int q) {
    long long tot = 0;
    for (auto [k, l] : S.pairs) {
        auto it = signs.find({k, l});
        CoeffSign s = it == signs.end() ? CoeffSign::Zero : it->second;
        if (s == CoeffSign::Zero) continue;
        HarmonicDims dd = dims_cpq(p, q, k, l);
        tot += (s == CoeffSign::Positive) ? dd.mu : dd.nu;
    }
    return tot;
}

std::map<Bidegree, CoeffSign> inertia_sign_pattern(ReClass rc, LambdaClass lc) {
    using CS = CoeffSign;
    // lambda/(1+lambda) > 0 off the (-1,0) interval
    bool ratio_pos = (lc != LambdaClass::BetweenMinusOneAndZero);
    bool lam_above_m1 = (lc != LambdaClass::LessThanMinusOne);
    std::map<Bidegree, CoeffSign> m;
    if (rc == ReClass::EqualMinusHalf) {
        m[{0, 0}] = CS::Zero;
        m[{1, 1}] = CS::Zero;
    } else {
        bool re_high = (rc == ReClass::GreaterThanMinusHalf);
        bool pos = (re_high == ratio_pos);  // sign(x + 1/2) * sign(lambda/(1+lambda))
        m[{0, 0}] = pos ? CS::Positive : CS::Negative;
        m[{1, 1}] = m[{0, 0}];
    }
    m[{1, 0}] = lam_above_m1 ? CS::Positive : CS::Negative;
    m[{0, 1}] = m[{1, 0}];
    m[{2, 0}] = ratio_pos ? CS::Positive : CS::Negative;
    return m;
}

JacobiPoly jacobi(int d, int k, int l) {
    if (d < 2) throw std::invalid_argument("jacobi: d >= 2 required");
    if (k < 0 || l < 0) throw std::invalid_argument("jacobi: k,l >= 0");
    JacobiPoly j;
    j.d = d;
    j.k = k;
    j.l = l;
    BigRat pre = BigRat(dim_harm(d, k, l)) * BigRat(big_factorial(d - 2)) *
                 BigRat(big_factorial(k)) * BigRat(big_factorial(l)) /
                 (BigRat(big_factorial(d + k - 2)) * BigRat(big_factorial(d + l - 2)));
    int rmax = std::min(k, l);
    for (int r = 0; r <= rmax; ++r) {
        BigRat term = BigRat(big_factorial(d + k + l - r - 2)) /
                      (BigRat(big_factorial(r)) * BigRat(big_factorial(k - r)) *
                       BigRat(big_factorial(l - r)));
        BigRat c = pre * term;
        if (r % 2) c = -c;
        BigInt num = boost::multiprecision::numerator(c), den = boost::multiprecision::denominator(c);
        j.coeffs.push_back(Rat(to_ll(num), to_ll(den)));
    }
    return j;
}

std::complex<double> jacobi_eval(const JacobiPoly& j, std::complex<double> z) {
    std::complex<double> zb = std::conj(z), acc = 0;
    for (int r = 0; r <= std::min(j.k, j.l); ++r)
        acc += j.coeffs[r].to_double() * std::pow(z, j.k - r) * std::pow(zb, j.l - r);
    return acc;
}

namespace {
RatC ratc_pow(RatC base, int e) {
    RatC r{Rat(1), Rat(0)};
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}
} // namespace

RatC jacobi_eval_exact(const JacobiPoly& j, const RatC& z) {
    RatC zb = z.conj(), acc;
    for (int r = 0; r <= std::min(j.k, j.l); ++r) {
        RatC term = ratc_pow(z, j.k - r) * ratc_pow(zb, j.l - r);
        acc = acc + RatC{j.coeffs[r], Rat(0)} * term;
    }
    return acc;
}

BigRat gamma_coeff(int d, int k, int l) {
    if (d < 2) throw std::invalid_argument("gamma_coeff: d >= 2");
    return BigRat(big_factorial(d + k - 2)) * BigRat(big_factorial(d + l - 2)) /
           (BigRat(dim_harm(d, k, l)) * BigRat(big_factorial(d - 2)) * BigRat(big_factorial(k)) *
            BigRat(big_factorial(l)) * BigRat(big_factorial(d + k + l - 2)));
}

std::complex<double> AnnihilatorPoly::eval(std::complex<double> z) const {
    std::complex<double> acc = 0;
    for (auto& [kl, c] : coeffs) acc += c * jacobi_eval(jacobi(d, kl.first, kl.second), z);
    return acc;
}

RatC AnnihilatorPoly::eval_exact(const RatC& z) const {
    if (!exact) throw std::domain_error("annihilator has no exact coefficients");
    RatC acc;
    for (auto& [kl, c] : coeffs_exact)
        acc = acc + RatC{c, Rat(0)} * jacobi_eval_exact(jacobi(d, kl.first, kl.second), z);
    return acc;
}

double AnnihilatorPoly::max_root_residual() const {
    double m = 0;
    for (auto z : declared_roots) m = std::max(m, std::abs(eval(z)));
    return m;
}

std::map<Bidegree, double> AnnihilatorPoly::monomials() const {
    std::map<Bidegree, double> mono;
    for (auto& [kl, c] : coeffs) {
        JacobiPoly j = jacobi(d, kl.first, kl.second);
        for (int r = 0; r <= std::min(j.k, j.l); ++r)
            mono[{j.k - r, j.l - r}] += c * j.coeffs[r].to_double();
    }
    return mono;
}

AnnihilatorPoly annihilator_two_pair(const Rat& a, const Rat& b, const Rat& x, const Rat& y,
                                     int d) {
    if (a == b) throw std::invalid_argument("annihilator_two_pair: a != b required");
    if (y.num == 0) throw std::invalid_argument("annihilator_two_pair: y != 0 required");
    if (d < 2) throw std::invalid_argument("annihilator_two_pair: d >= 2 required");
    Rat y2 = y * y;
    Rat dd((long long)d), d1((long long)d + 1);
    AnnihilatorPoly F;
    F.support = LowerSet::degree_two_mixed();
    F.d = d;
    F.exact = true;
    F.coeffs_exact[{0, 0}] = y2 * (Rat(2) * a * b * dd + Rat(1)) + (a - x) * (x - b);
    F.coeffs_exact[{1, 0}] = x * (a - x) * (x - b) - y2 * (a + b + x);
    F.coeffs_exact[{0, 1}] = x * (a - x) * (b - x) - y2 * (a + b - x);
    F.coeffs_exact[{1, 1}] = ((a - x) * (x - b) + y2) / d1;
    F.coeffs_exact[{2, 0}] = Rat(2) * ((a - x) * (b - x) + y2) / d1;
    for (auto& [kl, c] : F.coeffs_exact) F.coeffs[kl] = c.to_double();
    F.declared_roots = {std::complex<double>(a.to_double(), 0),
                        std::complex<double>(b.to_double(), 0),
                        std::complex<double>(x.to_double(), y.to_double()),
                        std::complex<double>(x.to_double(), -y.to_double())};
    Rat f1 = (Rat(2) * (Rat(1) - a) * (Rat(1) - b) * dd * y2);
    F.declared_value_at_one = f1.to_double();
    // exact verification at the declared roots
    for (RatC z : {RatC{a, Rat(0)}, RatC{b, Rat(0)}, RatC{x, y}, RatC{x, -y}})
        if (!F.eval_exact(z).is_zero())
            throw std::logic_error("annihilator_two_pair: root verification failed");
    RatC at1 = F.eval_exact(RatC{Rat(1), Rat(0)});
    if (!(at1.im.num == 0 && at1.re == f1))
        throw std::logic_error("annihilator_two_pair: value at 1 mismatch");
    if (!(f1 > Rat(0)))
        throw std::domain_error("annihilator_two_pair: F(1) <= 0 (degenerate coefficients)");
    return F;
}

AnnihilatorPoly annihilator_gram_roots(double lambda, const OmegaSpec& w, int d) {
    if (std::abs(lambda) < 1e-12 || std::abs(lambda + 1) < 1e-12)
        throw std::invalid_argument("annihilator_gram_roots: lambda in {0,-1} excluded");
    if (d < 1) throw std::invalid_argument("annihilator_gram_roots: d >= 1 required");
    double x = w.value.real(), y = w.value.imag();
    // Unique solution of the five root/normalization conditions:
    //   E-layer scale s = 1 / (2(1+x)(1+lambda))
    double s = 1.0 / (2.0 * (1.0 + x) * (1.0 + lambda));
    AnnihilatorPoly F;
    F.support = LowerSet::degree_two_mixed();
    F.d = d;
    F.exact = false;
    F.coeffs[{0, 0}] = lambda * (1 + 2 * x) * s / d;
    F.coeffs[{1, 0}] = (1 + 2 * x) * s / d;
    F.coeffs[{0, 1}] = s / d;
    F.coeffs[{1, 1}] = lambda * (1 + 2 * x) * s / ((double)d * (d + 1));
    F.coeffs[{2, 0}] = 2.0 * lambda * s / ((double)d * (d + 1));
    std::complex<double> wv = w.value;
    F.declared_roots = {0.0, -1.0 / lambda, -wv / lambda, -std::conj(wv) / lambda};
    F.declared_value_at_one = 1.0;
    if (d >= 2) {  // the Jacobi expansion only exists from dimension 2 up
        double scale = std::max({1.0, std::abs(F.coeffs[{0, 0}]), std::abs(F.coeffs[{2, 0}])});
        if (F.max_root_residual() > 1e-10 * scale)
            throw std::logic_error("annihilator_gram_roots: root verification failed");
        if (std::abs(F.eval(1.0).real() - 1.0) > 1e-10 || std::abs(F.eval(1.0).imag()) > 1e-10)
            throw std::logic_error("annihilator_gram_roots: F(1) != 1");
    }
    return F;
}

GramCheck gram_psd_check(int d, int k, int l, int sample_count, uint64_t seed) {
    if (d < 2) throw std::invalid_argument("gram_psd_check: d >= 2");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Eigen::VectorXcd> pts;
    pts.reserve(sample_count);
    for (int i = 0; i < sample_count; ++i) {
        Eigen::VectorXcd v(d);
        for (int j = 0; j < d; ++j) v(j) = std::complex<double>(gauss(rng), gauss(rng));
        v.normalize();
        pts.push_back(v);
    }
    JacobiPoly jp = jacobi(d, k, l);
    Eigen::MatrixXcd G(sample_count, sample_count);
    for (int i = 0; i < sample_count; ++i)
        for (int j = 0; j < sample_count; ++j) G(i, j) = jacobi_eval(jp, pts[i].dot(pts[j]));
    GramCheck res;
    res.points = sample_count;
    res.max_abs_entry = G.cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G);
    res.min_eigenvalue = es.eigenvalues().minCoeff();
    return res;
}

} // namespace hermspec
