#pragma once

// Exact rational arithmetic and the combinatorial primitives built on it:
// factorials, binomials, Pochhammer symbols, Bernoulli numbers/polynomials.
// Everything here is exact; no rounding ever happens in this layer.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgcy {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator; cpp_rational maintains the
// canonical form (gcd = 1, denominator > 0) on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& r) {
    return boost::multiprecision::numerator(r);
}
inline BigInt denominator_of(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Largest integer <= r.
inline BigInt floor_of(const Rational& r) {
    BigInt n = numerator_of(r), d = denominator_of(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

// r - floor(r), in [0, 1).
inline Rational fractional_part(const Rational& r) {
    return r - Rational(floor_of(r));
}

// "num/den" (or plain "num" when the value is an integer).
inline std::string to_fraction_string(const Rational& r) {
    std::string s = numerator_of(r).str();
    if (!is_integer(r)) s += "/" + denominator_of(r).str();
    return s;
}

inline Rational rational_from_string(const std::string& s) {
    return Rational(s);
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step
    }
    return r;
}

// (sum a_i)! / prod a_i!
inline BigInt multinomial(const std::vector<unsigned>& a) {
    unsigned total = 0;
    BigInt r = 1;
    for (unsigned ai : a) {
        for (unsigned j = 1; j <= ai; ++j) {
            ++total;
            r *= total;
            r /= j;
        }
    }
    return r;
}

// Rising factorial [a]_n = a(a+1)...(a+n-1); empty product for n = 0.
inline Rational pochhammer(const Rational& a, unsigned n) {
    Rational r = 1;
    for (unsigned j = 0; j < n; ++j) r *= (a + j);
    return r;
}

// Bernoulli numbers with the B_1 = -1/2 convention, via the defining
// recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1.  Memoized; the
// cache only grows, guarded for concurrent first use.
inline Rational bernoulli_number(unsigned n) {
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        Rational acc = 0;
        for (unsigned k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * cache[k];
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[n];
}

// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
inline Rational bernoulli_polynomial(unsigned n, const Rational& x) {
    Rational acc = 0;
    Rational xpow = 1;  // x^{n-k} accumulated from the k = n end downwards
    for (unsigned k = n + 1; k-- > 0;) {
        acc += Rational(binomial(n, k)) * bernoulli_number(k) * xpow;
        if (k > 0) xpow *= x;
    }
    return acc;
}

// Integer power with rational base and possibly negative exponent.
inline Rational rational_pow(const Rational& base, long long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rational_pow: 0 to negative power");
        return 1 / rational_pow(base, -e);
    }
    Rational r = 1, b = base;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

}  // namespace lgcy
