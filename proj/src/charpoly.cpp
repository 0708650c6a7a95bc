#include "hermspec/charpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermspec {

void IPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IPoly IPoly::derivative() const {
    IPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * (long long)i);
    d.normalize();
    return d;
}

BigInt IPoly::content() const {
    BigInt g = 0;
    for (const auto& x : c) g = boost::multiprecision::gcd(g, x);
    return g;
}

IPoly IPoly::primitive() const {
    BigInt g = content();
    if (g == 0) return *this;
    if (c.back() < 0) g = -g;
    IPoly r = *this;
    for (auto& x : r.c) x /= g;
    return r;
}

BigRat IPoly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + BigRat(c[i]);
    return acc;
}

int IPoly::sign_at(const BigRat& x) const {
    BigRat v = eval(x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

double IPoly::eval_double(double x) const {
    double acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i].convert_to<double>();
    return acc;
}

IPoly ipoly_from_ll(const std::vector<long long>& asc) {
    IPoly p;
    p.c.assign(asc.begin(), asc.end());
    p.normalize();
    return p;
}

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
}

IPoly ipoly_div_exact(const IPoly& a, const IPoly& b) {
    if (b.is_zero()) throw std::domain_error("ipoly_div_exact: division by zero poly");
    // division over Q, then require integrality of quotient times b == a
    std::vector<BigRat> rem(a.c.begin(), a.c.end());
    int da = a.deg(), db = b.deg();
    if (da < db) {
        if (a.is_zero()) return {};
        throw std::domain_error("ipoly_div_exact: not divisible");
    }
    std::vector<BigRat> q(da - db + 1, BigRat(0));
    BigRat lead(b.c.back());
    for (int k = da - db; k >= 0; --k) {
        BigRat coef = rem[k + db] / lead;
        q[k] = coef;
        for (int j = 0; j <= db; ++j) rem[k + j] -= coef * BigRat(b.c[j]);
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("ipoly_div_exact: nonzero remainder");
    IPoly out;
    out.c.reserve(q.size());
    for (auto& x : q) {
        if (boost::multiprecision::denominator(x) != 1)
            throw std::domain_error("ipoly_div_exact: non-integer quotient");
        out.c.push_back(BigInt(boost::multiprecision::numerator(x)));
    }
    out.normalize();
    return out;
}

namespace {

// pseudo-remainder of a by b (prem), both nonzero, deg a >= deg b
IPoly prem(IPoly a, const IPoly& b) {
    int db = b.deg();
    BigInt lb = b.c.back();
    while (!a.is_zero() && a.deg() >= db) {
        int shift = a.deg() - db;
        BigInt la = a.c.back();
        // a = a*lb - la * x^shift * b
        for (auto& x : a.c) x *= lb;
        for (int j = 0; j <= db; ++j) a.c[j + shift] -= la * b.c[j];
        a.normalize();
    }
    return a;
}

} // namespace

IPoly ipoly_gcd(IPoly a, IPoly b) {
    a = a.primitive();
    b = b.primitive();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.is_zero()) {
        IPoly r = prem(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive();
}

std::vector<std::pair<IPoly, int>> square_free_decomposition(const IPoly& f) {
    std::vector<std::pair<IPoly, int>> out;
    IPoly p = f.primitive();
    if (p.deg() <= 0) return out;
    IPoly g = ipoly_gcd(p, p.derivative());
    IPoly w = ipoly_div_exact(p, g);  // product of distinct irreducible factors
    int i = 1;
    while (w.deg() > 0) {
        IPoly y = ipoly_gcd(w, g);
        IPoly fac = ipoly_div_exact(w, y);  // factors of multiplicity exactly i
        if (fac.deg() > 0) out.emplace_back(fac.primitive(), i);
        g = ipoly_div_exact(g, y);
        w = std::move(y);
        ++i;
        if (i > 64) throw std::logic_error("square_free_decomposition runaway");
    }
    return out;
}

std::vector<long long> integer_roots(const IPoly& f) {
    std::vector<long long> roots;
    IPoly p = f;
    p.normalize();
    if (p.is_zero()) return roots;
    // strip x^k factor
    size_t k = 0;
    while (k < p.c.size() && p.c[k] == 0) ++k;
    if (k > 0) roots.push_back(0);
    BigInt c0 = k < p.c.size() ? p.c[k] : BigInt(1);
    BigInt a = boost::multiprecision::abs(c0);
    for (BigInt dcand = 1; dcand * dcand <= a; ++dcand) {
        if (a % dcand != 0) continue;
        const BigInt divisors[2] = {dcand, BigInt(a / dcand)};
        for (const BigInt& v : divisors) {
            for (int s : {1, -1}) {
                BigInt x = s * v;
                BigRat val = f.eval(BigRat(x));
                if (val == 0) {
                    long long r = to_ll(x);
                    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// divide by positive content, preserving sign (primitive() would force a
// positive leading coefficient, which breaks the Sturm sign property)
IPoly reduce_keep_sign(IPoly p) {
    BigInt g = p.content();
    if (g > 1)
        for (auto& x : p.c) x /= g;
    return p;
}

} // namespace

std::vector<IPoly> sturm_chain(const IPoly& f) {
    std::vector<IPoly> chain;
    chain.push_back(reduce_keep_sign(f));
    chain.push_back(reduce_keep_sign(f.derivative()));
    if (chain.back().is_zero()) { chain.pop_back(); return chain; }
    while (true) {
        const IPoly& a = chain[chain.size() - 2];
        const IPoly& b = chain.back();
        int e = a.deg() - b.deg() + 1;
        IPoly r = prem(a, b);
        if (r.is_zero()) break;
        // prem(a,b) = lb^e * rem(a,b); the Sturm step needs -rem up to a
        // positive factor, so flip once, plus once more if lb^e < 0
        for (auto& x : r.c) x = -x;
        if (b.c.back() < 0 && (e % 2 == 1))
            for (auto& x : r.c) x = -x;
        chain.push_back(reduce_keep_sign(std::move(r)));
        if (chain.size() > 64) throw std::logic_error("sturm chain runaway");
    }
    return chain;
}

namespace {

int sign_changes_at(const std::vector<IPoly>& chain, const BigRat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

int sturm_count_interval(const std::vector<IPoly>& chain, const BigRat& a, const BigRat& b) {
    return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

std::vector<std::pair<BigRat, BigRat>> isolate_real_roots(const IPoly& f, const BigRat& width) {
    std::vector<std::pair<BigRat, BigRat>> out;
    IPoly p = f.primitive();
    if (p.deg() <= 0) return out;
    auto chain = sturm_chain(p);
    // Cauchy bound
    BigRat lead(boost::multiprecision::abs(p.c.back()));
    BigRat maxc = 0;
    for (const auto& x : p.c) {
        BigRat a(boost::multiprecision::abs(x));
        if (a > maxc) maxc = a;
    }
    BigRat bound = 1 + maxc / lead;
    struct Node { BigRat lo, hi; int count; };
    std::vector<Node> stack;
    int total = sturm_count_interval(chain, -bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Node nd = stack.back();
        stack.pop_back();
        if (nd.count == 1 && nd.hi - nd.lo <= width &&
            p.sign_at(nd.lo) != 0 && p.sign_at(nd.hi) != 0) {
            out.emplace_back(nd.lo, nd.hi);
            continue;
        }
        BigRat mid = (nd.lo + nd.hi) / 2;
        while (p.sign_at(mid) == 0) mid = (nd.lo + mid) / 2;  // cut off the root; lo is not a root
        int left = sturm_count_interval(chain, nd.lo, mid);
        int right = nd.count - left;
        if (left > 0) stack.push_back({nd.lo, mid, left});
        if (right > 0) stack.push_back({mid, nd.hi, right});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<long long> charpoly_exact(const HermitianMatrix& h) {
    if (!h.exact_valid)
        throw std::domain_error("exact mode unavailable: omega is not a preset");
    const int n = h.n;
    const int t = h.omega.exact_trace();
    // Faddeev-LeVerrier: M1 = H, c_{n-1} = -tr M1; M_{k+1} = H (M_k + c_{n-k} I)
    std::vector<long long> coeff(n + 1, 0);
    coeff[n] = 1;
    std::vector<Zw> M(h.exact);  // M1 = H
    auto trace = [&](const std::vector<Zw>& A) {
        Zw s{0, 0};
        for (int i = 0; i < n; ++i) s = add(s, A[(size_t)i * n + i]);
        return s;
    };
    for (int k = 1; k <= n; ++k) {
        Zw tr = trace(M);
        if (tr.b != 0) throw std::logic_error("charpoly_exact: trace not real");
        if (tr.a % k != 0) throw std::logic_error("charpoly_exact: inexact trace division");
        long long ck = -(tr.a / k);
        coeff[n - k] = ck;
        if (k == n) break;
        // M <- H * (M + ck I)
        std::vector<Zw> Mc = M;
        for (int i = 0; i < n; ++i) Mc[(size_t)i * n + i].a += ck;
        std::vector<Zw> next((size_t)n * n, Zw{0, 0});
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                Zw hil = h.exact[(size_t)i * n + l];
                if (hil.a == 0 && hil.b == 0) continue;
                for (int j = 0; j < n; ++j)
                    next[(size_t)i * n + j] =
                        add(next[(size_t)i * n + j], Zw::mul(hil, Mc[(size_t)l * n + j], t));
            }
        M = std::move(next);
    }
    return coeff;
}

} // namespace hermspec
