#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lgcy/grr.hpp"
#include "lgcy/report.hpp"
#include "lgcy/singularity.hpp"

using namespace lgcy;

TEST_CASE("degree-zero coefficients") {
    std::vector<Rational> thetas(3, Rational(2, 5));
    auto g = grr_coefficients(0, Rational(1, 5), thetas, 5, 5);
    CHECK(g.kappa == Rational(-3, 10));   // B_1(1/5) = 1/5 - 1/2
    REQUIRE(g.psi.size() == 3);
    for (const auto& c : g.psi) CHECK(c == Rational(1, 10));  // -B_1(2/5)
    CHECK(g.boundary.empty());
    CHECK(g.boundaryLabel.empty());
}

TEST_CASE("degree-one coefficients") {
    std::vector<Rational> thetas{Rational(2, 5)};
    auto g = grr_coefficients(1, Rational(1, 5), thetas, 5, 5);
    // B_2(x) = x^2 - x + 1/6; B_2(1/5) = 1/150, B_2(2/5) = -11/150
    CHECK(g.kappa == Rational(1, 300));
    CHECK(g.psi[0] == Rational(11, 300));
    REQUIRE(g.boundary.size() == 5);
    CHECK(g.boundary.at(Rational(0)) == Rational(5, 2) * Rational(1, 6) / Rational(2));
    CHECK(g.boundary.at(Rational(2, 5)) == Rational(5, 2) * Rational(-11, 150) / Rational(2));
    CHECK(g.boundaryLabel == "j_* sum_{a+a'=0} psi^a (-psi')^{a'}");
}

TEST_CASE("psi coefficient at a zero phase uses B at zero") {
    auto g = grr_coefficients(2, Rational(1, 3), {Rational(0)}, 6, 3);
    CHECK(g.psi[0] == -bernoulli_number(3) / Rational(6));
    CHECK(g.psi[0] == Rational(0));  // B_3(0) = 0
}

TEST_CASE("h = 0 coefficients reproduce the Riemann-Roch multiplicity") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> gs(0, 4);
    std::uniform_int_distribution<int> ns(1, 8);
    std::uniform_int_distribution<int> num(0, 11);
    std::uniform_int_distribution<int> den(2, 12);
    for (int trial = 0; trial < 50; ++trial) {
        unsigned g = static_cast<unsigned>(gs(rng));
        unsigned n = static_cast<unsigned>(ns(rng));
        Rational q(num(rng) % den(rng), den(rng));
        std::vector<Rational> thetas;
        for (unsigned i = 0; i < n; ++i) {
            int d = den(rng);
            thetas.emplace_back(num(rng) % d, d);
        }
        auto coeffs = grr_coefficients(0, q, thetas, 5, 5);
        // deg(|L_j|) ~ kappa * (2g-2+n)... at h = 0, kappa multiplies the
        // Euler class contribution and each psi term contributes once:
        int euler = 2 * static_cast<int>(g) - 2 + static_cast<int>(n);
        Rational fromCoeffs = coeffs.kappa * Rational(euler);
        for (const auto& c : coeffs.psi) fromCoeffs += c;
        CHECK(fromCoeffs == riemann_roch_multiplicity(g, n, q, thetas));
    }
}

TEST_CASE("euler characteristic deficit on the quintic") {
    auto p = analyze("x1^5+x2^5+x3^5+x4^5+x5^5");
    CHECK(euler_characteristic_deficit(p, 0, 3, {2, 2, 2}) == Rational(0));
    CHECK(euler_characteristic_deficit(p, 0, 8, {2, 2, 2, 2, 2, 2, 2, 2}) == Rational(5));
    CHECK(euler_characteristic_deficit(p, 1, 1, {2}) == Rational(1));
    CHECK(euler_characteristic_deficit(p, 1, 0, {}) == Rational(0));
    CHECK_THROWS_AS(euler_characteristic_deficit(p, 0, 3, {0, 2, 2}), RamondSector);
    CHECK_THROWS_AS(euler_characteristic_deficit(p, 0, 2, {2, 2, 2}), std::invalid_argument);
}

TEST_CASE("deficit equals the virtual codimension for narrow quintic inputs") {
    auto p = analyze("x1^5+x2^5+x3^5+x4^5+x5^5");
    // iota(J^m) = m - 1 for m in 1..4, central charge 3: the deficit
    // 3(g-1) + sum (m_i - 1) must equal 3g - 3 - n + sum m_i in every case.
    for (unsigned g = 0; g <= 2; ++g) {
        for (unsigned n = 0; n <= 6; ++n) {
            std::vector<unsigned> ms(n, 1);
            while (true) {
                std::vector<BigInt> big(ms.begin(), ms.end());
                Rational deficit = euler_characteristic_deficit(p, g, n, big);
                CHECK(deficit == Rational(virtual_codim(g, n, ms)));
                // odometer over {1,2,3,4}^n
                size_t i = 0;
                while (i < n && ms[i] == 4) ms[i++] = 1;
                if (i == n) break;
                ++ms[i];
            }
        }
    }
}

TEST_CASE("tabulated output") {
    auto g = grr_coefficients(1, Rational(1, 5), {Rational(2, 5), Rational(3, 5)}, 5, 5);
    auto j = grr_to_json(g);
    CHECK(j.at("h").get<unsigned>() == 1);
    CHECK(j.at("psi").size() == 2);
    CHECK(j.at("boundary").size() == 5);
    auto csv = grr_to_csv(g);
    CHECK(csv.find("kappa") != std::string::npos);
}
