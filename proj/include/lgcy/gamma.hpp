#pragma once

// Complex gamma function (Lanczos approximation) and the handful of
// irrational constants the continuation matrix needs.

#include <cmath>
#include <complex>
#include <stdexcept>

namespace lgcy {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// zeta(3), 20 significant digits.
inline constexpr double kZeta3 = 1.2020569031595942854;

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Lanczos approximation, g = 7 with 9 coefficients; accurate to ~1e-13
// relative over the test range.  Reflection formula handles Re(x) < 0.5.
inline Complex gamma_complex(Complex x) {
    static const double p[] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };

    if (x.imag() == 0.0 && x.real() <= 0.0 && x.real() == std::floor(x.real()))
        throw PoleError("gamma_complex: pole at non-positive integer");

    if (x.real() < 0.5) {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return kPi / (std::sin(kPi * x) * gamma_complex(1.0 - x));
    }

    x -= 1.0;
    Complex a = p[0];
    Complex t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += p[i] / (x + Complex(i, 0));
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

inline double gamma_real(double x) { return gamma_complex(Complex(x, 0)).real(); }

}  // namespace lgcy
