#pragma once

// Truncated formal power series over a pluggable commutative coefficient
// ring R.  A series knows its truncation order: terms with exponent >= order
// are unknown, absent exponents below the order are exact zeros.  Arithmetic
// never extends knowledge: result orders follow the min-order rules below.
//
// R must provide: default/int construction, +, -, *, /, ==, and unary -.
// Mixing coefficient rings is a compile-time type error.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "lgcy/exact.hpp"

namespace lgcy {

struct NonUnitLeadingTerm : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonzeroConstantInner : std::domain_error {
    using std::domain_error::domain_error;
};
struct BadValuation : std::domain_error {
    using std::domain_error::domain_error;
};

template <class R>
class TruncatedSeries {
  public:
    explicit TruncatedSeries(unsigned order = 0) : order_(order) {}

    static TruncatedSeries monomial(const R& c, unsigned exponent, unsigned order) {
        TruncatedSeries s(order);
        s.set(exponent, c);
        return s;
    }
    static TruncatedSeries constant(const R& c, unsigned order) {
        return monomial(c, 0, order);
    }

    unsigned order() const { return order_; }

    // Smallest exponent carrying a nonzero coefficient; equals order() for a
    // series that is zero as far as it is known.
    unsigned valuation() const {
        return coeffs_.empty() ? order_ : coeffs_.begin()->first;
    }

    bool known_zero() const { return coeffs_.empty(); }

    R coeff(unsigned exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? R(0) : it->second;
    }

    void set(unsigned exponent, const R& c) {
        if (exponent >= order_) return;  // beyond knowledge; drop
        if (c == R(0))
            coeffs_.erase(exponent);
        else
            coeffs_[exponent] = c;
    }

    const std::map<unsigned, R>& coefficients() const { return coeffs_; }

    // Forget terms at exponent >= new_order.
    TruncatedSeries truncated(unsigned new_order) const {
        TruncatedSeries s(std::min(order_, new_order));
        for (const auto& [e, c] : coeffs_)
            if (e < s.order_) s.coeffs_.emplace(e, c);
        return s;
    }

    // Multiply by t^k (k may be negative if the valuation allows it);
    // knowledge shifts with the terms.
    TruncatedSeries shifted(int k) const {
        if (k < 0 && valuation() < static_cast<unsigned>(-k))
            throw BadValuation("shifted: negative exponent would appear");
        TruncatedSeries s(static_cast<unsigned>(static_cast<int>(order_) + k));
        for (const auto& [e, c] : coeffs_) s.coeffs_.emplace(static_cast<unsigned>(static_cast<int>(e) + k), c);
        return s;
    }

    bool operator==(const TruncatedSeries& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    TruncatedSeries operator-() const {
        TruncatedSeries s(order_);
        for (const auto& [e, c] : coeffs_) s.coeffs_.emplace(e, -c);
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.order_, b.order_));
        for (const auto& [e, c] : a.coeffs_)
            if (e < s.order_) s.coeffs_.emplace(e, c);
        for (const auto& [e, c] : b.coeffs_) {
            if (e >= s.order_) continue;
            auto [it, fresh] = s.coeffs_.emplace(e, c);
            if (!fresh) {
                it->second = it->second + c;
                if (it->second == R(0)) s.coeffs_.erase(it);
            }
        }
        return s;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }

    // Cauchy product.  The unknown tail of a starts at a.order, so it first
    // pollutes exponent a.order + val(b); symmetrically for b.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        unsigned ord = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
        TruncatedSeries s(ord);
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) {
                unsigned e = ea + eb;
                if (e >= ord) break;  // eb ascending: later terms only larger
                auto [it, fresh] = s.coeffs_.emplace(e, ca * cb);
                if (!fresh) it->second = it->second + ca * cb;
            }
        s.prune();
        return s;
    }

    TruncatedSeries scaled(const R& c) const {
        TruncatedSeries s(order_);
        if (c == R(0)) return s;
        for (const auto& [e, cc] : coeffs_) {
            R v = cc * c;
            if (!(v == R(0))) s.coeffs_.emplace(e, v);
        }
        return s;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  private:
    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = (it->second == R(0)) ? coeffs_.erase(it) : std::next(it);
    }

    std::map<unsigned, R> coeffs_;
    unsigned order_;
};

// Multiplicative inverse; requires an invertible constant term.
template <class R>
TruncatedSeries<R> reciprocal(const TruncatedSeries<R>& a) {
    R a0 = a.coeff(0);
    if (a.order() == 0 || a0 == R(0))
        throw NonUnitLeadingTerm("reciprocal: constant term is not a unit");
    TruncatedSeries<R> b(a.order());
    R inv0 = R(1) / a0;
    b.set(0, inv0);
    for (unsigned n = 1; n < a.order(); ++n) {
        R acc(0);
        for (const auto& [k, ak] : a.coefficients()) {
            if (k == 0) continue;
            if (k > n) break;
            acc = acc + ak * b.coeff(n - k);
        }
        b.set(n, -acc * inv0);
    }
    return b;
}

// a / b where val(b) <= val(a) and the leading coefficient of b is a unit.
template <class R>
TruncatedSeries<R> divide(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    unsigned v = b.valuation();
    if (v > a.valuation() && !a.known_zero())
        throw BadValuation("divide: denominator valuation exceeds numerator's");
    return a.shifted(-static_cast<int>(v)) * reciprocal(b.shifted(-static_cast<int>(v)));
}

// Substitution outer(inner); inner must have zero constant term.  Horner
// evaluation over descending exponents of outer.
template <class R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
    if (!(inner.coeff(0) == R(0)))
        throw NonzeroConstantInner("compose: inner constant term must vanish");
    unsigned v = std::max(1u, inner.valuation());
    unsigned ord = std::min<unsigned long long>(inner.order(),
                                                static_cast<unsigned long long>(outer.order()) * v);
    TruncatedSeries<R> acc(ord);
    if (outer.coefficients().empty()) return acc;
    unsigned prev = 0;
    bool first = true;
    // walk exponents of outer from largest to smallest
    for (auto it = outer.coefficients().rbegin(); it != outer.coefficients().rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            acc.set(0, c);
            first = false;
        } else {
            for (unsigned j = 0; j < prev - e; ++j) acc *= inner;
            acc.set(0, acc.coeff(0) + c);
        }
        prev = e;
    }
    for (unsigned j = 0; j < prev; ++j) acc *= inner;
    return acc.truncated(ord);
}

// Compositional inverse: g with f(g(t)) = t.  Requires valuation exactly 1
// and an invertible linear coefficient.  Coefficients are produced one order
// at a time; the unknown coefficient enters linearly through f's linear term.
template <class R>
TruncatedSeries<R> revert(const TruncatedSeries<R>& f) {
    if (f.valuation() != 1 || f.coeff(1) == R(0))
        throw BadValuation("revert: series must start with an invertible linear term");
    R inv1 = R(1) / f.coeff(1);
    TruncatedSeries<R> g(f.order());
    g.set(1, inv1);
    for (unsigned n = 2; n < f.order(); ++n) {
        auto h = compose(f.truncated(n + 1), g.truncated(n + 1));
        g.set(n, -h.coeff(n) * inv1);
    }
    return g;
}

// exp of a series with zero constant term (needs division by integers in R).
template <class R>
TruncatedSeries<R> exp_series(const TruncatedSeries<R>& a) {
    if (!(a.coeff(0) == R(0)))
        throw NonzeroConstantInner("exp_series: constant term must vanish");
    TruncatedSeries<R> sum = TruncatedSeries<R>::constant(R(1), a.order());
    TruncatedSeries<R> term = TruncatedSeries<R>::constant(R(1), a.order());
    for (unsigned k = 1; k < a.order(); ++k) {
        term = term * a;
        if (term.known_zero()) break;
        sum += term.scaled(R(1) / R(static_cast<int>(k)));
        // term now holds a^k / (k-1)!; rescale lazily: a^k/k! = (a^{k-1}/(k-1)!)*a/k
        term = term.scaled(R(1) / R(static_cast<int>(k)));
    }
    return sum;
}

// q d/dq (plain Euler operator, no z bookkeeping).
template <class R>
TruncatedSeries<R> theta(const TruncatedSeries<R>& a) {
    TruncatedSeries<R> s(a.order());
    for (const auto& [e, c] : a.coefficients())
        if (e > 0) s.set(e, c * R(static_cast<int>(e)));
    return s;
}

// d/dq.
template <class R>
TruncatedSeries<R> derivative(const TruncatedSeries<R>& a) {
    if (a.order() == 0) return a;
    TruncatedSeries<R> s(a.order() - 1);
    for (const auto& [e, c] : a.coefficients())
        if (e > 0) s.set(e - 1, c * R(static_cast<int>(e)));
    return s;
}

using RationalSeries = TruncatedSeries<Rational>;

}  // namespace lgcy
