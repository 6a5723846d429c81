#include <catch2/catch_amalgamated.hpp>

#include "lgcy/continuation.hpp"

using namespace lgcy;

TEST_CASE("expansion pair: leading coefficients") {
    auto fg = fg_expansion(1);
    Complex xi = xi_power(1);
    CHECK(std::abs(fg.g[0] - xi / (1.0 - xi)) < 1e-14);
    CHECK(std::abs(fg.f[0] - Complex(1.0)) == 0.0);
    CHECK(std::abs(fg.f[1]) == 0.0);
    // f_2 = C (2 pi i)^2 = -5 pi^2 / 3, f_3 = -E (2 pi i)^3 = 40 zeta(3)
    CHECK(std::abs(fg.f[2] - Complex(-5.0 * kPi * kPi / 3.0)) < 1e-12);
    CHECK(std::abs(fg.f[3] - Complex(40.0 * kZeta3)) < 1e-12);
    CHECK_THROWS_AS(fg_expansion(5), std::invalid_argument);
    CHECK_THROWS_AS(fg_expansion(10), std::invalid_argument);
}

TEST_CASE("f coefficients equal the zeta-series expansion") {
    // log f = sum_{j >= 2} (-1)^j zeta(j) (5 - 5^j) rho^j / j; with f_1 = 0 the
    // rho^2 and rho^3 Taylor coefficients are the log ones.
    double zeta2 = kPi * kPi / 6.0;
    Complex L2 = Complex(zeta2 * (5.0 - 25.0) / 2.0);
    Complex L3 = Complex(-kZeta3 * (5.0 - 125.0) / 3.0);
    auto fg = fg_expansion(2);
    CHECK(std::abs(fg.f[2] - L2) < 1e-12);
    CHECK(std::abs(fg.f[3] - L3) < 1e-12);
}

TEST_CASE("g expansion inverts the exponential kernel") {
    // (sum_r g_r rho^r) (e^{-2 pi i rho} - xi^k) = xi^k through rho^3
    for (unsigned k = 1; k <= 4; ++k) {
        auto fg = fg_expansion(k);
        Complex x = xi_power(k);
        std::array<Complex, 4> e = {Complex(1.0) - x, -kTwoPiI,
                                    kTwoPiI * kTwoPiI / 2.0,
                                    -kTwoPiI * kTwoPiI * kTwoPiI / 6.0};
        for (unsigned m = 0; m < 4; ++m) {
            Complex conv(0.0);
            for (unsigned j = 0; j <= m; ++j) conv += e[j] * fg.g[m - j];
            Complex expect = (m == 0) ? x : Complex(0.0);
            CHECK(std::abs(conv - expect) < 1e-12);
        }
    }
}

TEST_CASE("matrix layout: z-powers and first row") {
    auto u = build_u_matrix();
    for (unsigned r = 1; r <= 4; ++r)
        for (unsigned k = 1; k <= 4; ++k)
            CHECK(u.entries[r - 1][k - 1].zPower == static_cast<int>(k) - static_cast<int>(r));

    for (unsigned k = 1; k <= 4; ++k) {
        Complex xi = xi_power(k);
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        Complex expect = (1.0 / 5.0) * sign * kTwoPiI * inverse_gamma5(k) * xi / (1.0 - xi);
        Complex got = u.entries[0][k - 1].coeff;
        CHECK(std::abs(got - expect) < 1e-13 * std::abs(expect));
    }
}

TEST_CASE("ramond directions vanish exactly") {
    CHECK(inverse_gamma5(5) == Complex(0.0));
    CHECK(inverse_gamma5(10) == Complex(0.0));
    CHECK(std::abs(inverse_gamma5(1)) > 0.0);
}

TEST_CASE("symplectic property with the default pairings") {
    auto u = build_u_matrix();
    double dev = check_symplectic(u, default_gram_fjrw(), default_gram_gw());
    CHECK(dev < 1e-10);

    // perturbing a single entry must be detected
    auto bent = u;
    bent.entries[0][0].coeff += Complex(1e-3);
    CHECK(check_symplectic(bent, default_gram_fjrw(), default_gram_gw()) > 1e-4);

    // scaling both Gram forms together changes nothing...
    Gram gf = default_gram_fjrw(), gg = default_gram_gw();
    for (auto& row : gf)
        for (auto& v : row) v *= 2.0;
    for (auto& row : gg)
        for (auto& v : row) v *= 2.0;
    CHECK(check_symplectic(u, gf, gg) < 1e-10);
    // ...while scaling only one breaks the normalization
    CHECK(check_symplectic(u, default_gram_fjrw(), gg) > 0.5);

    Gram zero{};
    CHECK_THROWS_AS(check_symplectic(u, zero, default_gram_gw()), SingularGram);
}

TEST_CASE("identity transformation is symplectic for equal pairings") {
    ContinuationMatrix id;
    for (unsigned r = 0; r < 4; ++r)
        for (unsigned k = 0; k < 4; ++k) {
            id.entries[r][k].coeff = (r == k) ? Complex(1.0) : Complex(0.0);
            id.entries[r][k].zPower = 0;
        }
    Gram g{};
    for (unsigned i = 0; i < 4; ++i) g[i][i] = Complex(1.0);
    CHECK(check_symplectic(id, g, g) < 1e-15);
}

TEST_CASE("gamma-ratio ablation strips exactly the C and E corrections") {
    auto full = build_u_matrix();
    auto unit = build_u_matrix(true);
    for (unsigned k = 1; k <= 4; ++k) {
        auto fg = fg_expansion(k);
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        Complex pref = (1.0 / 5.0) * sign * inverse_gamma5(k) * kTwoPiI;
        // rows 1 and 2 see no change
        for (unsigned r = 1; r <= 2; ++r) {
            Complex d = full.entries[r - 1][k - 1].coeff - unit.entries[r - 1][k - 1].coeff;
            CHECK(std::abs(d) < 1e-13);
        }
        // row 3 loses g_0 f_2, row 4 loses g_1 f_2 + g_0 f_3
        Complex d3 = full.entries[2][k - 1].coeff - unit.entries[2][k - 1].coeff;
        CHECK(std::abs(d3 - pref * fg.g[0] * fg.f[2]) < 1e-12 * std::abs(d3));
        Complex d4 = full.entries[3][k - 1].coeff - unit.entries[3][k - 1].coeff;
        Complex expect4 = pref * (fg.g[1] * fg.f[2] + fg.g[0] * fg.f[3]);
        CHECK(std::abs(d4 - expect4) < 1e-12 * std::abs(d4));
    }
    // the stripped matrix is no longer symplectic for the default pairings
    CHECK(check_symplectic(unit, default_gram_fjrw(), default_gram_gw()) > 1e-4);
}

TEST_CASE("determinant magnitude at z = 1") {
    auto u = build_u_matrix();
    double det = u_determinant_magnitude(u);
    CHECK(det > 1e-12);
    CHECK(std::abs(det - 1.0 / 625.0) < 1e-10);
}

TEST_CASE("quadrature cross-check of every entry") {
    CHECK(continuation_consistency(64) < 1e-10);
    CHECK(continuation_consistency(3) < 1e-10);   // clamps to 32 nodes
    CHECK(continuation_consistency(128) < 1e-10);
}
