#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <vector>

#include "lgcy/mirror.hpp"
#include "lgcy/report.hpp"

using namespace lgcy;

namespace {

// Genus-zero psi intersection numbers on the moduli of pointed rational
// curves by the string-equation recursion alone; independent oracle for the
// multinomial in untwisted_correlator.
Rational psi_integral(std::vector<unsigned> a) {
    unsigned n = static_cast<unsigned>(a.size());
    unsigned long long sum = 0;
    for (unsigned x : a) sum += x;
    if (n < 3 || sum != n - 3) return Rational(0);
    if (n == 3) return Rational(1);
    // some entry is zero (sum < n): strip it with the string equation
    size_t z = 0;
    while (a[z] != 0) ++z;
    std::vector<unsigned> rest;
    for (size_t i = 0; i < a.size(); ++i)
        if (i != z) rest.push_back(a[i]);
    Rational total(0);
    for (size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == 0) continue;
        std::vector<unsigned> next = rest;
        --next[i];
        total += psi_integral(next);
    }
    return total;
}

void enumerate_compositions(unsigned total, unsigned parts,
                            std::vector<unsigned>& cur,
                            const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (parts == 1) {
        cur.push_back(total);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (unsigned first = 0; first <= total; ++first) {
        cur.push_back(first);
        enumerate_compositions(total - first, parts - 1, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("mirror map and its inverse") {
    auto m = fjrw_mirror_map(20);
    CHECK(m.forward.coeff(1) == Rational(1));
    CHECK(m.forward.coeff(6) == Rational(13, 1125000));
    CHECK(m.inverse.coeff(6) == Rational(-13, 1125000));
    CHECK(m.inverse.coeff(11) == Rational(BigInt(-31991), BigInt("97453125000000")));
    CHECK(m.inverse.coeff(16) == Rational(BigInt("-294146129"), BigInt("9976763671875000000000")));
    // supported on exponents = 1 mod 5 only
    for (const auto& [e, c] : m.inverse.coefficients()) CHECK(e % 5 == 1);
}

TEST_CASE("mirror map round trip at order forty") {
    auto m = fjrw_mirror_map(40);
    auto id = RationalSeries::monomial(Rational(1), 1, m.forward.order());
    CHECK(compose(m.forward, m.inverse) == id);
    CHECK(compose(m.inverse, m.forward) == id);
}

TEST_CASE("J-function slots in the flat coordinate") {
    auto slots = fjrw_j_coefficients(20);
    CHECK(slots.zInv.coeff(2) == Rational(1, 2));
    CHECK(slots.zInv.coeff(7) == Rational(1, 393750));
    CHECK(slots.zInv.coeff(12) == Rational(239, 1559250000000));
    CHECK(slots.zInv.coeff(17) == Rational(BigInt("6904357"), BigInt("452279953125000000000")));
    CHECK(slots.zInv2.coeff(3) == Rational(1, 6));
    CHECK(slots.zInv2.coeff(8) == Rational(1, 525000));
    CHECK(slots.zInv2.coeff(13) == Rational(239, 1842750000000));
    CHECK(slots.zInv2.coeff(18) == Rational(BigInt("6904357"), BigInt("508814947265625000000")));
    for (const auto& [e, c] : slots.zInv.coefficients()) CHECK(e % 5 == 2);
    for (const auto& [e, c] : slots.zInv2.coefficients()) CHECK(e % 5 == 3);
}

TEST_CASE("invariant tables") {
    auto [primary, descendant] = fjrw_invariants(3, 20);
    REQUIRE(primary.rows.size() == 4);
    REQUIRE(descendant.rows.size() == 4);

    CHECK(primary.rows[0].n == 3);
    CHECK(primary.rows[0].value == Rational(1, 5));
    CHECK(primary.rows[1].value == Rational(8, 3125));
    CHECK(primary.rows[2].value == Rational(5736, 390625));
    CHECK(primary.rows[3].value == Rational(BigInt("1325636544"), BigInt("1220703125")));

    CHECK(descendant.rows[0].n == 4);
    CHECK(descendant.rows[0].value == Rational(1, 5));
    CHECK(descendant.rows[1].value == Rational(48, 3125));
    CHECK(descendant.rows[2].value == Rational(63096, 390625));
    CHECK(descendant.rows[3].value == Rational(BigInt("21210184704"), BigInt("1220703125")));

    // string equation: descendant at n+1 markings = (n-2) * primary at n
    for (size_t i = 0; i < 4; ++i) {
        CHECK(descendant.rows[i].n == primary.rows[i].n + 1);
        CHECK(descendant.rows[i].value ==
              Rational(primary.rows[i].n - 2) * primary.rows[i].value);
    }

    CHECK_THROWS_AS(fjrw_invariants(3, 15), InsufficientOrder);
}

TEST_CASE("invariant table serialization") {
    auto [primary, descendant] = fjrw_invariants(1, 12);
    auto j = table_to_json(primary);
    auto back = table_from_json(j);
    CHECK(back.kind == primary.kind);
    REQUIRE(back.rows.size() == primary.rows.size());
    for (size_t i = 0; i < back.rows.size(); ++i) {
        CHECK(back.rows[i].n == primary.rows[i].n);
        CHECK(back.rows[i].value == primary.rows[i].value);
    }
    auto csv = table_to_csv(descendant);
    CHECK(csv.find("descendant") != std::string::npos);
}

TEST_CASE("untwisted correlators: examples") {
    CHECK(untwisted_correlator({0, 0, 0}, {1, 1, 1}) == Rational(1));
    CHECK(untwisted_correlator({1, 0, 0, 0}, {1, 1, 1, 0}) == Rational(1));
    CHECK(untwisted_correlator({1, 1, 0, 0, 0}, {2, 2, 2, 1, 1}) == Rational(2));
    // selection rule violated
    CHECK(untwisted_correlator({0, 0, 0}, {1, 1, 0}) == Rational(0));
    // dimension constraint violated
    CHECK(untwisted_correlator({1, 1, 1}, {1, 1, 1}) == Rational(0));
    CHECK_THROWS_AS(untwisted_correlator({0, 0}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(untwisted_correlator({0, 0, 0}, {1, 1}), std::invalid_argument);
}

TEST_CASE("untwisted correlators against the string-equation oracle") {
    for (unsigned n = 3; n <= 7; ++n) {
        std::vector<unsigned> cur;
        enumerate_compositions(n - 3, n, cur, [&](const std::vector<unsigned>& a) {
            Rational psi = psi_integral(a);
            // representative h-lists hitting every residue of 2 + sum h mod 5
            for (unsigned r = 0; r <= 4; ++r) {
                std::vector<unsigned> h(n, 0);
                h[0] = r;
                Rational expect = (2 + r) % 5 == 0 ? psi : Rational(0);
                CHECK(untwisted_correlator(a, h) == expect);
            }
        });
        // off-dimension stays zero for every residue
        std::vector<unsigned> bad(n, 1);
        for (unsigned r = 0; r <= 4; ++r) {
            std::vector<unsigned> h(n, 0);
            h[0] = r;
            CHECK(untwisted_correlator(bad, h) == Rational(0));
        }
    }
    // exhaustive h for small n
    for (unsigned n = 3; n <= 4; ++n) {
        std::vector<unsigned> cur;
        enumerate_compositions(n - 3, n, cur, [&](const std::vector<unsigned>& a) {
            Rational psi = psi_integral(a);
            std::vector<unsigned> h(n, 0);
            while (true) {
                unsigned hsum = 0;
                for (unsigned x : h) hsum += x;
                Rational expect = (2 + hsum) % 5 == 0 ? psi : Rational(0);
                CHECK(untwisted_correlator(a, h) == expect);
                size_t i = 0;
                while (i < n && h[i] == 4) h[i++] = 0;
                if (i == n) break;
                ++h[i];
            }
        });
    }
}

TEST_CASE("flat coordinate on the q side") {
    auto mm = gw_mirror_map(6);
    CHECK(mm.qprime.coeff(1) == Rational(1));
    CHECK(mm.qprime.coeff(2) == Rational(770));
    CHECK(mm.qprime.coeff(3) == Rational(1014275));

    // independent oracle through harmonic sums: rho_{d,1} = rho_{d,0} 5(H_{5d}-H_d)
    std::vector<Rational> rho0{Rational(1)}, rho1{Rational(0)};
    Rational h5d(0), hd(0);
    for (unsigned d = 1; d <= 3; ++d) {
        for (unsigned k = 5 * (d - 1) + 1; k <= 5 * d; ++k) h5d += Rational(1, static_cast<int>(k));
        hd += Rational(1, static_cast<int>(d));
        rho0.push_back(Rational(factorial(5 * d)) / rational_pow(Rational(factorial(d)), 5));
        rho1.push_back(rho0.back() * Rational(5) * (h5d - hd));
    }
    // g = (sum rho1 q^d) / (sum rho0 q^d) expanded by hand to q^3
    Rational A = rho0[1], B = rho0[2], C = rho0[3];
    Rational g1 = rho1[1];
    Rational g2 = rho1[2] - rho1[1] * A;
    Rational g3 = rho1[3] - rho1[2] * A + rho1[1] * (A * A - B);
    (void)C;
    // q' = q exp(g)
    CHECK(mm.qprime.coeff(2) == g1);
    CHECK(mm.qprime.coeff(3) == g2 + g1 * g1 / Rational(2));
    CHECK(mm.qprime.coeff(4) ==
          g3 + g1 * g2 + g1 * g1 * g1 / Rational(6));
}

TEST_CASE("yukawa coupling and instanton numbers") {
    auto inst = gw_instantons(6);
    CHECK(inst.yukawaQ.coeff(0) == Rational(5));
    CHECK(inst.yukawaQPrime.coeff(0) == Rational(5));
    CHECK(inst.yukawaQPrime.coeff(1) == Rational(2875));
    REQUIRE(inst.n.size() >= 3);
    CHECK(inst.n[0] == Rational(2875));
    // N_D = sum_{e | D} e^3 n_e must reassemble the flat-coordinate coupling
    for (unsigned D = 1; D < inst.yukawaQPrime.order(); ++D) {
        Rational nd(0);
        for (unsigned e = 1; e <= D; ++e)
            if (D % e == 0) nd += Rational(BigInt(e) * e * e) * inst.n[e - 1];
        CHECK(nd == inst.yukawaQPrime.coeff(D));
    }
    // every solved n_d is a (positive) integer in this range
    for (const auto& v : inst.n) {
        CHECK(is_integer(v));
        CHECK(v > Rational(0));
    }
}
