#pragma once

// Exact polynomials in the formal grading variable z, with rational
// coefficients.  Used as the coefficient ring of Picard-Fuchs residuals: each
// application of D = z t d/dt multiplies a coefficient by (exponent)·z.

#include <string>
#include <vector>

#include "lgcy/exact.hpp"
#include "lgcy/series.hpp"

namespace lgcy {

class ZPoly {
  public:
    ZPoly() = default;
    ZPoly(int c) : coeffs_{Rational(c)} { trim(); }                // NOLINT: implicit by design
    ZPoly(const Rational& c) : coeffs_{c} { trim(); }              // NOLINT

    static ZPoly z_power(unsigned k, const Rational& c = Rational(1)) {
        ZPoly p;
        p.coeffs_.assign(k + 1, Rational(0));
        p.coeffs_[k] = c;
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

    Rational coeff(unsigned k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    ZPoly operator-() const {
        ZPoly p(*this);
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        ZPoly p;
        p.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < p.coeffs_.size(); ++i)
            p.coeffs_[i] = a.coeff(static_cast<unsigned>(i)) + b.coeff(static_cast<unsigned>(i));
        p.trim();
        return p;
    }
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        ZPoly p;
        p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        p.trim();
        return p;
    }

    ZPoly& operator+=(const ZPoly& o) { return *this = *this + o; }
    ZPoly& operator-=(const ZPoly& o) { return *this = *this - o; }
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }

    std::string to_string(const std::string& var = "z") const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == Rational(0)) continue;
            if (!s.empty()) s += " + ";
            s += to_fraction_string(coeffs_[k]);
            if (k >= 1) s += "*" + var + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return s;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Rational(0)) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies z^k
};

inline ZPoly operator*(const Rational& c, const ZPoly& p) { return ZPoly(c) * p; }

// Series in t (or q) whose coefficients are exact polynomials in z; the home
// of Picard-Fuchs residuals.
using ZSeries = TruncatedSeries<ZPoly>;

// Lift a rational-coefficient series into the z-polynomial ring.
inline ZSeries lift_to_z(const RationalSeries& a) {
    ZSeries s(a.order());
    for (const auto& [e, c] : a.coefficients()) s.set(e, ZPoly(c));
    return s;
}

// D = z t d/dt: the coefficient of t^j picks up a factor j z.
inline ZSeries apply_Dt(const ZSeries& a) {
    ZSeries s(a.order());
    for (const auto& [e, c] : a.coefficients())
        if (e > 0) s.set(e, c * ZPoly::z_power(1, Rational(static_cast<int>(e))));
    return s;
}

}  // namespace lgcy
