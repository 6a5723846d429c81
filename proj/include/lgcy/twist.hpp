#pragma once

// Twisted-theory machinery: the equivariant specialization s_d of the twist
// parameters, the log-coefficients of the Delta symplectomorphism, and the
// modification factor M_k in closed product form together with its
// lambda -> 0 gamma-ratio evaluation.

#include <stdexcept>

#include "lgcy/exact.hpp"
#include "lgcy/gamma.hpp"

namespace lgcy {

struct ZeroLambda : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr unsigned kTwistCutoff = 24;  // highest z-degree carried in series identities

// s_0 = -5 ln(lambda); s_d = 5 (d-1)! / lambda^d for d > 0.
inline Complex specialize_s(Complex lambda, unsigned d) {
    if (lambda == Complex(0.0)) throw ZeroLambda("specialize_s: lambda = 0");
    if (d == 0) return -5.0 * std::log(lambda);
    Complex p = std::pow(lambda, static_cast<double>(d));
    return 5.0 * to_double(Rational(factorial(d - 1))) / p;
}

// Exact form of the d > 0 branch for rational lambda.
inline Rational specialize_s_exact(const Rational& lambda, unsigned d) {
    if (lambda == Rational(0)) throw ZeroLambda("specialize_s_exact: lambda = 0");
    if (d == 0) throw std::invalid_argument("specialize_s_exact: d = 0 needs a logarithm");
    return Rational(5) * Rational(factorial(d - 1)) / rational_pow(lambda, static_cast<int>(d));
}

// Generating function of the specialized s_d: s(x) = sum_d s_d x^d / d! = -5 ln(lambda - x).
inline Complex s_closed_form(Complex lambda, Complex x) {
    if (lambda == Complex(0.0)) throw ZeroLambda("s_closed_form: lambda = 0");
    return -5.0 * std::log(lambda - x);
}

// z^d coefficient of log Delta on sector i: s_d B_{d+1}((i+1)/5) / (d+1)!.
// The Bernoulli factor is exact; the s value multiplies it.
inline Rational delta_log_factor(unsigned i, unsigned d) {
    Rational x(static_cast<int>(i) + 1, 5);
    return bernoulli_polynomial(d + 1, x) / Rational(factorial(d + 1));
}

inline Complex delta_log_coefficients(unsigned i, unsigned d, Complex s_value) {
    return s_value * to_double(delta_log_factor(i, d));
}

inline Rational delta_log_coefficients(unsigned i, unsigned d, const Rational& s_value) {
    return s_value * delta_log_factor(i, d);
}

// The b-grid of the closed product: b ranges over {frac(sum/5), frac(sum/5)+1, ...}
// below sum/5, i.e. floor(sum/5) values.
inline unsigned modification_factor_count(unsigned sum_ik) { return sum_ik / 5; }

// M = prod_b (lambda + z/5 + b z)^5 over that grid.
inline Complex modification_factor(unsigned sum_ik, Complex lambda, Complex z) {
    if (lambda == Complex(0.0)) throw ZeroLambda("modification_factor: lambda = 0");
    Complex out(1.0);
    double frac = (sum_ik % 5) / 5.0;
    for (unsigned m = 0; m < modification_factor_count(sum_ik); ++m) {
        Complex base = lambda + z / 5.0 + (frac + m) * z;
        out *= std::pow(base, 5.0);
    }
    return out;
}

// The same product written through the generating function:
// exp(-sum_m s(-z/5 - frac z - m z)) with s(x) = -5 ln(lambda - x).
inline Complex modification_factor_exp_form(unsigned sum_ik, Complex lambda, Complex z) {
    if (lambda == Complex(0.0)) throw ZeroLambda("modification_factor_exp_form: lambda = 0");
    double frac = (sum_ik % 5) / 5.0;
    Complex acc(0.0);
    for (unsigned m = 0; m < modification_factor_count(sum_ik); ++m)
        acc += s_closed_form(lambda, -z / 5.0 - frac * z - static_cast<double>(m) * z);
    return std::exp(-acc);
}

// lambda -> 0 limit of the product over the same grid, prod_b (-z/5 - b z)^5.
inline Complex step_product_at_zero(unsigned k, Complex z) {
    Complex out(1.0);
    double frac = (k % 5) / 5.0;
    for (unsigned m = 0; m < modification_factor_count(k); ++m) {
        Complex base = -z / 5.0 - (frac + m) * z;
        out *= std::pow(base, 5.0);
    }
    return out;
}

// Closed form of the same limit: (Gamma((k+1)/5) / Gamma((k+1)/5 - floor(k/5)))^5
// (-z)^{5 floor(k/5)}.  The second argument lands in (0,1]; in particular it is
// 1 (not 0) when 5 | k+1, which keeps Gamma off its poles.
inline Complex step_gamma_ratio(unsigned k, Complex z) {
    unsigned fl = k / 5;
    double top = (k + 1) / 5.0;
    double bottom = top - static_cast<double>(fl);
    Complex ratio = gamma_complex(Complex(top)) / gamma_complex(Complex(bottom));
    return std::pow(ratio, 5.0) * std::pow(-z, static_cast<double>(5 * fl));
}

}  // namespace lgcy
