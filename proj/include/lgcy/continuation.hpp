#pragma once

// The symplectic transformation identifying the analytically continued GW
// period basis with the FJRW one.  Column k (k = 1..4) of U packages the
// Taylor expansion to rho^3 of
//
//   (1/5) (-1)^k (2 pi i) Gamma^5(1+rho)/Gamma(1+5 rho)
//         * xi^k / (e^{-2 pi i rho} - xi^k) / Gamma^5((5-k)/5),
//
// with xi = e^{2 pi i / 5}: row r holds the rho^{r-1} coefficient at z-power
// k-r.  Everything here is double-precision complex; the structure checks are
// numeric with explicit tolerances.

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "lgcy/gamma.hpp"

namespace lgcy {

struct SingularGram : std::domain_error {
    using std::domain_error::domain_error;
};

inline const Complex kTwoPiI = Complex(0.0, 2.0 * kPi);

inline Complex xi_power(unsigned k) {
    double a = 2.0 * kPi * static_cast<double>(k % 5) / 5.0;
    return Complex(std::cos(a), std::sin(a));
}

// C and E of the f-expansion: f(rho) = 1 + C (2 pi i)^2 rho^2 - E (2 pi i)^3 rho^3.
inline constexpr double kCConst = 5.0 / 12.0;
// E = -zeta(3) 40 / (2 pi i)^3 = -(5 zeta(3) / pi^3) i
inline const Complex kEConst = Complex(0.0, -5.0 * kZeta3 / (kPi * kPi * kPi));

struct ExpansionPair {
    std::array<Complex, 4> g;  // Taylor coefficients of xi^k/(e^{-2 pi i rho} - xi^k)
    std::array<Complex, 4> f;  // Taylor coefficients of Gamma^5(1+rho)/Gamma(1+5 rho)
};

// Closed-form expansions; the rho^r coefficient of g is a_r (2 pi i)^r with
// a_0 = x/(1-x), a_1 = x/(1-x)^2, a_2 = x(1+x)/(2(1-x)^3),
// a_3 = x(1+4x+x^2)/(6(1-x)^4) at x = xi^k.
inline ExpansionPair fg_expansion(unsigned k) {
    if (k % 5 == 0) throw std::invalid_argument("fg_expansion: k must not be divisible by 5");
    Complex x = xi_power(k);
    Complex om = 1.0 - x;
    std::array<Complex, 4> a = {
        x / om,
        x / (om * om),
        x * (1.0 + x) / (2.0 * om * om * om),
        x * (1.0 + 4.0 * x + x * x) / (6.0 * om * om * om * om),
    };
    ExpansionPair out;
    for (unsigned r = 0; r < 4; ++r) out.g[r] = a[r] * std::pow(kTwoPiI, static_cast<double>(r));
    out.f = {Complex(1.0), Complex(0.0), kCConst * kTwoPiI * kTwoPiI,
             -kEConst * kTwoPiI * kTwoPiI * kTwoPiI};
    return out;
}

struct UEntry {
    Complex coeff;
    int zPower = 0;
};

struct ContinuationMatrix {
    std::array<std::array<UEntry, 4>, 4> entries;  // entries[r-1][k-1]
};

// 1/Gamma^5 at the Ramond directions (k = 0 mod 5) is exactly zero; the
// residues vanish and those columns are omitted by construction.
inline Complex inverse_gamma5(unsigned k) {
    if (k % 5 == 0) return Complex(0.0);
    Complex g = gamma_complex(Complex((5.0 - static_cast<double>(k % 5)) / 5.0));
    return 1.0 / std::pow(g, 5.0);
}

// unitF drops the Gamma-ratio factor f (for ablation studies): rows 3 and 4
// then lose exactly their C and E corrections.
inline ContinuationMatrix build_u_matrix(bool unitF = false) {
    ContinuationMatrix u;
    for (unsigned k = 1; k <= 4; ++k) {
        ExpansionPair fg = fg_expansion(k);
        if (unitF) fg.f = {Complex(1.0), Complex(0.0), Complex(0.0), Complex(0.0)};
        // Cauchy product (g f)_r, then strip the (2 pi i)^r already inside g
        std::array<Complex, 4> prod{};
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; i + j < 4; ++j) prod[i + j] += fg.g[i] * fg.f[j];
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        Complex pref = (1.0 / 5.0) * sign * inverse_gamma5(k);
        for (unsigned r = 1; r <= 4; ++r) {
            // one factor of 2 pi i comes from the residue itself
            u.entries[r - 1][k - 1].coeff = pref * kTwoPiI * prod[r - 1];
            u.entries[r - 1][k - 1].zPower = static_cast<int>(k) - static_cast<int>(r);
        }
    }
    return u;
}

using Gram = std::array<std::array<Complex, 4>, 4>;

inline Gram default_gram_fjrw() {
    Gram g{};
    for (unsigned i = 0; i < 4; ++i) g[i][3 - i] = Complex(1.0 / 5.0);
    return g;
}

inline Gram default_gram_gw() {
    Gram g{};
    for (unsigned i = 0; i < 4; ++i) g[i][3 - i] = Complex(5.0);
    return g;
}

namespace detail {

inline Gram gram_inverse(const Gram& g) {
    std::array<std::array<Complex, 8>, 4> m{};
    for (unsigned i = 0; i < 4; ++i) {
        for (unsigned j = 0; j < 4; ++j) m[i][j] = g[i][j];
        m[i][4 + i] = Complex(1.0);
    }
    for (unsigned c = 0; c < 4; ++c) {
        unsigned p = c;
        for (unsigned i = c + 1; i < 4; ++i)
            if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
        if (std::abs(m[p][c]) < 1e-14) throw SingularGram("Gram matrix is singular");
        std::swap(m[p], m[c]);
        Complex inv = 1.0 / m[c][c];
        for (unsigned j = 0; j < 8; ++j) m[c][j] *= inv;
        for (unsigned i = 0; i < 4; ++i) {
            if (i == c) continue;
            Complex f = m[i][c];
            if (f == Complex(0.0)) continue;
            for (unsigned j = 0; j < 8; ++j) m[i][j] -= f * m[c][j];
        }
    }
    Gram out{};
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) out[i][j] = m[i][4 + j];
    return out;
}

}  // namespace detail

// Evaluates G_F^{-1} U(-z)^T G_GW U(z) as a polynomial identity in z: the
// coefficient matrix at z^0 must be the identity and every other power must
// vanish.  Returns the largest absolute deviation.
inline double check_symplectic(const ContinuationMatrix& u, const Gram& gramFJRW,
                               const Gram& gramGW) {
    Gram ginv = detail::gram_inverse(gramFJRW);
    std::map<int, Gram> byPower;
    for (unsigned k = 0; k < 4; ++k)
        for (unsigned kp = 0; kp < 4; ++kp)
            for (unsigned r = 0; r < 4; ++r)
                for (unsigned rp = 0; rp < 4; ++rp) {
                    const UEntry& left = u.entries[r][k];    // transposed: row k, col r
                    const UEntry& right = u.entries[rp][kp];
                    if (gramGW[r][rp] == Complex(0.0)) continue;
                    // U(-z): each entry picks up (-1)^{zPower}
                    double flip = (left.zPower % 2 == 0) ? 1.0 : -1.0;
                    Complex v = flip * left.coeff * gramGW[r][rp] * right.coeff;
                    int power = left.zPower + right.zPower;
                    if (byPower.find(power) == byPower.end()) byPower[power] = Gram{};
                    byPower[power][k][kp] += v;
                }
    double worst = 0.0;
    for (const auto& [power, mat] : byPower) {
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; j < 4; ++j) {
                Complex acc(0.0);
                for (unsigned l = 0; l < 4; ++l) acc += ginv[i][l] * mat[l][j];
                Complex expect = (power == 0 && i == j) ? Complex(1.0) : Complex(0.0);
                worst = std::max(worst, std::abs(acc - expect));
            }
    }
    return worst;
}

// Collapse z = 1 and measure |det|; U must be invertible as a change of basis.
inline double u_determinant_magnitude(const ContinuationMatrix& u) {
    std::array<std::array<Complex, 4>, 4> m{};
    for (unsigned r = 0; r < 4; ++r)
        for (unsigned k = 0; k < 4; ++k) m[r][k] = u.entries[r][k].coeff;
    Complex det(1.0);
    for (unsigned c = 0; c < 4; ++c) {
        unsigned p = c;
        for (unsigned i = c + 1; i < 4; ++i)
            if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
        if (std::abs(m[p][c]) == 0.0) return 0.0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (unsigned i = c + 1; i < 4; ++i) {
            Complex f = m[i][c] / m[c][c];
            for (unsigned j = c; j < 4; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return std::abs(det);
}

// Independent cross-check of every column: Taylor coefficients of the full
// analytic integrand F_k(rho) = Gamma^5(1+rho)/Gamma(1+5rho) * xi^k /
// (e^{-2 pi i rho} - xi^k) are extracted by discrete Fourier quadrature on a
// small circle (|rho| = 1/20 stays well inside the pole distance 1/5) and
// compared against build_u_matrix.  `order` sets the minimum number of
// quadrature nodes.
inline double continuation_consistency(unsigned order = 64) {
    unsigned nodes = order < 32 ? 32 : order;
    const double radius = 0.05;
    ContinuationMatrix u = build_u_matrix();
    double worst = 0.0;
    for (unsigned k = 1; k <= 4; ++k) {
        std::array<Complex, 4> taylor{};
        for (unsigned s = 0; s < nodes; ++s) {
            double ang = 2.0 * kPi * static_cast<double>(s) / static_cast<double>(nodes);
            Complex rho = radius * Complex(std::cos(ang), std::sin(ang));
            Complex f = std::pow(gamma_complex(1.0 + rho), 5.0) / gamma_complex(1.0 + 5.0 * rho);
            Complex g = xi_power(k) / (std::exp(-kTwoPiI * rho) - xi_power(k));
            Complex val = f * g;
            for (unsigned r = 0; r < 4; ++r)
                taylor[r] += val / std::pow(rho, static_cast<double>(r)) /
                             static_cast<double>(nodes);
        }
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        Complex pref = (1.0 / 5.0) * sign * inverse_gamma5(k) * kTwoPiI;
        for (unsigned r = 1; r <= 4; ++r) {
            Complex expect = pref * taylor[r - 1];
            worst = std::max(worst, std::abs(expect - u.entries[r - 1][k - 1].coeff));
        }
    }
    return worst;
}

}  // namespace lgcy
