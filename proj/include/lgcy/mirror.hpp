#pragma once

// Mirror maps on both sides of the correspondence, J-function slot
// extraction, the FJRW invariant tables, the untwisted correlator formula,
// and (optionally) Gromov-Witten instanton numbers through the Yukawa
// coupling.  All rational computations are exact.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgcy/exact.hpp"
#include "lgcy/ifunction.hpp"
#include "lgcy/series.hpp"

namespace lgcy {

struct InsufficientOrder : std::domain_error {
    using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// FJRW side

struct MirrorMap {
    RationalSeries forward;  // tau(t) = omega_2/omega_1, valuation 1, linear coeff 1
    RationalSeries inverse;  // t(tau), compositional inverse
    unsigned order = 0;
};

inline MirrorMap fjrw_mirror_map(unsigned order) {
    IFunctionFJRW I = build_fjrw_omegas(order);
    MirrorMap m;
    m.forward = divide(I.omega[1], I.omega[0]);
    m.inverse = revert(m.forward);
    m.order = m.forward.order();
    return m;
}

struct JSlots {
    RationalSeries zInv;   // coefficient of z^-1 on phi_2, as a series in tau
    RationalSeries zInv2;  // coefficient of z^-2 on phi_3
    unsigned order = 0;
};

// Normalize I by 1/omega_1 and change coordinates through the inverse mirror
// map; theratios omega_3/omega_1 and omega_4/omega_1 become the two slots.
inline JSlots fjrw_j_coefficients(unsigned order) {
    IFunctionFJRW I = build_fjrw_omegas(order);
    RationalSeries tau = divide(I.omega[1], I.omega[0]);
    RationalSeries inv = revert(tau);
    JSlots out;
    out.zInv = compose(divide(I.omega[2], I.omega[0]), inv);
    out.zInv2 = compose(divide(I.omega[3], I.omega[0]), inv);
    out.order = out.zInv.order();
    return out;
}

struct InvariantRow {
    unsigned n = 0;
    Rational value;
};

struct InvariantTable {
    std::string kind;  // "primary" or "descendant"
    std::vector<InvariantRow> rows;
};

// Primary rows <tau_0(phi_1)^n> at n = 5h+3 read the z^-1 slot; descendant
// rows <tau_0(phi_1)^{n-1} tau_1(phi_0)> at n = 5h+4 read the z^-2 slot.
// The extraction constant 1/5 reconciles the printed series with the printed
// tables (the pairing normalizes phi^h against 5 * phi_{3-h}).
inline std::pair<InvariantTable, InvariantTable> fjrw_invariants(unsigned h_max,
                                                                 unsigned order = 60) {
    JSlots slots = fjrw_j_coefficients(order);
    if (slots.order <= 5 * h_max + 3)
        throw InsufficientOrder("fjrw_invariants: order " + std::to_string(order) +
                                " is too low for h_max " + std::to_string(h_max));
    InvariantTable primary{"primary", {}};
    InvariantTable descendant{"descendant", {}};
    for (unsigned h = 0; h <= h_max; ++h) {
        unsigned n1 = 5 * h + 3;
        Rational v1 = Rational(factorial(n1 - 1)) * Rational(1, 5) * slots.zInv.coeff(n1 - 1);
        primary.rows.push_back({n1, v1});
        unsigned n2 = 5 * h + 4;
        Rational v2 = Rational(factorial(n2 - 1)) * Rational(1, 5) * slots.zInv2.coeff(n2 - 1);
        descendant.rows.push_back({n2, v2});
    }
    return {primary, descendant};
}

// Genus-zero correlator of the untwisted sector: the multinomial count when
// the dimension constraint sum a_i = n-3 and the selection rule
// 2 + sum h_i = 0 mod 5 both hold, zero otherwise.
inline Rational untwisted_correlator(const std::vector<unsigned>& a,
                                     const std::vector<unsigned>& h) {
    if (a.size() != h.size() || a.size() < 3)
        throw std::invalid_argument("untwisted_correlator: need equal-length lists, n >= 3");
    unsigned n = static_cast<unsigned>(a.size());
    unsigned long long asum = 0, hsum = 0;
    for (unsigned x : a) asum += x;
    for (unsigned x : h) hsum += x;
    if (asum != n - 3 || (2 + hsum) % 5 != 0) return Rational(0);
    return Rational(multinomial(a));
}

// ---------------------------------------------------------------------------
// GW side

struct GwMirror {
    RationalSeries g;       // omega_2/omega_1 minus its log part: a q-series, val >= 1
    RationalSeries qprime;  // q' = q exp(g), valuation 1
    unsigned order = 0;
};

inline GwMirror gw_mirror_map(unsigned order) {
    IFunctionGW I = build_gw_omegas(order);
    GwMirror out;
    // omega_2 = L omega_1 + f_0, so omega_2/omega_1 = L + f_0/omega_1
    out.g = I.omega[1].comp[0] * reciprocal(I.omega[0].comp[0]);
    out.qprime = exp_series(out.g).shifted(1);
    out.order = out.g.order();
    return out;
}

struct GwInstantons {
    RationalSeries yukawaQ;       // K(q) = 5 / ((1 - 5^5 q) B^3 omega_1^2)
    RationalSeries yukawaQPrime;  // same, written in the flat coordinate q'
    std::vector<Rational> n;      // n[d-1] = degree-d instanton number
};

// Yukawa coupling transformation.  In the flat coordinate the coupling reads
// 5 + sum_D N_D q'^D with N_D = sum_{e|D} e^3 n_e; the n_e are solved for by
// Moebius-style peeling.
inline GwInstantons gw_instantons(unsigned order) {
    IFunctionGW I = build_gw_omegas(order);
    RationalSeries omega1 = I.omega[0].comp[0];
    GwMirror mm = gw_mirror_map(order);

    RationalSeries one = RationalSeries::constant(Rational(1), order);
    RationalSeries disc = one - RationalSeries::monomial(Rational(3125), 1, order);
    RationalSeries B = derivative(mm.qprime) * reciprocal(mm.qprime.shifted(-1));
    GwInstantons out;
    out.yukawaQ =
        RationalSeries::constant(Rational(5), order) * reciprocal(disc * B * B * B * omega1 * omega1);
    out.yukawaQPrime = compose(out.yukawaQ, revert(mm.qprime));

    unsigned dmax = out.yukawaQPrime.order();
    for (unsigned d = 1; d < dmax; ++d) {
        Rational nd = out.yukawaQPrime.coeff(d);
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0) nd -= Rational(BigInt(e) * e * e) * out.n[e - 1];
        out.n.push_back(nd / Rational(BigInt(d) * d * d));
    }
    return out;
}

}  // namespace lgcy
