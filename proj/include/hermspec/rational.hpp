#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hermspec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline long long to_ll(const BigInt& v) {
    if (v > (std::numeric_limits<long long>::max)() || v < (std::numeric_limits<long long>::min)())
        throw std::overflow_error("BigInt does not fit in long long");
    return static_cast<long long>(v);
}

// Exact rational on int64 with __int128 intermediates. Throws on overflow;
// callers stay in ranges where that never fires (matrix orders <= 8, small
// combinatorial coefficients).
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rat from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        constexpr __int128 lim = std::numeric_limits<long long>::max();
        if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rat overflow");
        Rat r; r.num = (long long)n; r.den = (long long)d;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return from128((__int128)a.num * b.den - (__int128)b.num * a.den, (__int128)a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return from128((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    bool is_integer() const { return den == 1; }
    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    double to_double() const { return (double)num / (double)den; }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rat rat_pow(Rat base, unsigned e) {
    Rat r(1);
    while (e) { if (e & 1) r *= base; base *= base; e >>= 1; }
    return r;
}

// Exact complex number with rational real/imaginary parts.
struct RatC {
    Rat re, im;
    RatC() = default;
    RatC(Rat r) : re(r) {}
    RatC(Rat r, Rat i) : re(r), im(i) {}
    friend RatC operator+(const RatC& a, const RatC& b) { return {a.re + b.re, a.im + b.im}; }
    friend RatC operator-(const RatC& a, const RatC& b) { return {a.re - b.re, a.im - b.im}; }
    friend RatC operator*(const RatC& a, const RatC& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    RatC conj() const { return {re, -im}; }
    bool is_zero() const { return re.num == 0 && im.num == 0; }
    friend bool operator==(const RatC& a, const RatC& b) { return a.re == b.re && a.im == b.im; }
};

inline long long checked_binomial(long long n, long long r) {
    // combinatorial convention: 0 for r < 0 or (n >= 0 and r > n); C(-1,0) = 1
    if (r < 0) return 0;
    if (r == 0) return 1;
    if (n < 0) throw std::domain_error("binomial: negative n with positive r");
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    __int128 acc = 1;
    for (long long i = 1; i <= r; ++i) {
        acc = acc * (n - r + i);
        acc /= i;
        if (acc > (__int128)4 * std::numeric_limits<long long>::max())
            throw std::overflow_error("binomial overflow");
    }
    if (acc > std::numeric_limits<long long>::max()) throw std::overflow_error("binomial overflow");
    return (long long)acc;
}

inline BigInt big_binomial(long long n, long long r) {
    if (r < 0) return 0;
    if (r == 0) return 1;
    if (n < 0) throw std::domain_error("binomial: negative n with positive r");
    if (r > n) return 0;
    BigInt acc = 1;
    for (long long i = 1; i <= r; ++i) { acc *= (n - r + i); acc /= i; }
    return acc;
}

inline BigInt big_factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial of negative");
    BigInt acc = 1;
    for (long long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

} // namespace hermspec
